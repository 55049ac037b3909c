//! Exact arithmetic over the rings of integers of Q(i) and Q(sqrt(-3)),
//! torsion subgroups of elliptic curves over those fields via the extended
//! Lutz-Nagell method, and the classification of which torsion groups occur.

pub mod classify;
pub mod curves;
pub mod error;
pub mod fields;
pub mod primes;
pub mod reduction;
pub mod rings;
pub mod textio;
pub mod verify;

pub use classify::{GroupLabel, ListName, Rationale, TheoremList};
pub use curves::{CurveLong, CurveShort, IsoMap, Point, TorsionData};
pub use error::{Error, Result};
pub use fields::QRat;
pub use rings::{QInt, QPrime, RingTag, SplitType, SquareClass, Unit};
pub use verify::{DescentCase, ModelCurve, ModelId, ReproReport, SearchHit};
