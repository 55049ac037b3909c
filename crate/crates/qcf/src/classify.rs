//! Admissible torsion groups over Q(i) and Q(sqrt(-3)): the Mazur and
//! Kamienny/Kenku-Momose lists, the field-specific theorem lists, rationale
//! tags naming which result admits or excludes a group, and the
//! Z4 x Z4 family generator.

use crate::error::{Error, Result};
use crate::fields::{self, QRat};
use crate::rings::{QInt, RingTag};

/// Canonical label (n1, n2) with n1 | n2 for Z/n1 x Z/n2; cyclic groups
/// are (1, m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel {
    pub n1: u32,
    pub n2: u32,
}

impl GroupLabel {
    pub fn new(n1: u32, n2: u32) -> Result<GroupLabel> {
        if n1 == 0 || n2 == 0 || n2 % n1 != 0 {
            return Err(Error::DegenerateParameter(format!(
                "non-canonical group label ({}, {})",
                n1, n2
            )));
        }
        Ok(GroupLabel { n1, n2 })
    }

    pub fn order(&self) -> u32 {
        self.n1 * self.n2
    }
}

fn lab(n1: u32, n2: u32) -> GroupLabel {
    GroupLabel { n1, n2 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListName {
    Mazur,
    KkmQuadratic,
    Thm1RationalQi,
    Thm1AnyQi,
    Thm2RationalQw3,
    Thm2AnyQw3,
}

impl ListName {
    pub fn as_str(&self) -> &'static str {
        match self {
            ListName::Mazur => "MAZUR",
            ListName::KkmQuadratic => "KKM_QUADRATIC",
            ListName::Thm1RationalQi => "THM1_RATIONAL_QI",
            ListName::Thm1AnyQi => "THM1_ANY_QI",
            ListName::Thm2RationalQw3 => "THM2_RATIONAL_QW3",
            ListName::Thm2AnyQw3 => "THM2_ANY_QW3",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TheoremList {
    pub name: ListName,
    pub groups: Vec<GroupLabel>,
}

impl TheoremList {
    pub fn contains(&self, label: &GroupLabel) -> bool {
        self.groups.contains(label)
    }
}

/// Mazur's list: Z/m for m <= 10 or m = 12, and Z/2 x Z/2m for m <= 4.
pub fn mazur() -> TheoremList {
    let mut groups: Vec<GroupLabel> = (1..=10).map(|m| lab(1, m)).collect();
    groups.push(lab(1, 12));
    groups.extend((1..=4).map(|m| lab(2, 2 * m)));
    TheoremList { name: ListName::Mazur, groups }
}

/// The 26 groups arising over quadratic fields: Z/m for m <= 16 or m = 18,
/// Z/2 x Z/2m for m <= 6, Z/3 x Z/3m for m <= 2, and Z/4 x Z/4.
pub fn kkm_quadratic() -> TheoremList {
    let mut groups: Vec<GroupLabel> = (1..=16).map(|m| lab(1, m)).collect();
    groups.push(lab(1, 18));
    groups.extend((1..=6).map(|m| lab(2, 2 * m)));
    groups.extend((1..=2).map(|m| lab(3, 3 * m)));
    groups.push(lab(4, 4));
    TheoremList { name: ListName::KkmQuadratic, groups }
}

/// The admissible list for the given field and coefficient class.
pub fn admissible_groups(field: RingTag, rational_coeffs: bool) -> TheoremList {
    let mut base = mazur().groups;
    let (name, extra): (ListName, &[GroupLabel]) = match (field, rational_coeffs) {
        (RingTag::Gaussian, true) => (ListName::Thm1RationalQi, &[lab(4, 4)]),
        (RingTag::Gaussian, false) => (ListName::Thm1AnyQi, &[lab(4, 4), lab(1, 13)]),
        (RingTag::Omega, true) => (ListName::Thm2RationalQw3, &[lab(3, 3), lab(3, 6)]),
        (RingTag::Omega, false) => (
            ListName::Thm2AnyQw3,
            &[lab(3, 3), lab(3, 6), lab(1, 13), lab(1, 18)],
        ),
    };
    base.extend_from_slice(extra);
    TheoremList { name, groups: base }
}

/// Which result admits or excludes a group over a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rationale {
    Mazur,
    Kkm,
    Lemma3,
    Lemma4,
    Lemma6,
    Lemma7,
    Lemma8,
    Lemma9,
    Lemma10,
    Lemma11,
    Lemma12,
    Lemma13,
    Unresolved,
}

impl Rationale {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rationale::Mazur => "MAZUR",
            Rationale::Kkm => "KKM",
            Rationale::Lemma3 => "LEMMA3",
            Rationale::Lemma4 => "LEMMA4",
            Rationale::Lemma6 => "LEMMA6",
            Rationale::Lemma7 => "LEMMA7",
            Rationale::Lemma8 => "LEMMA8",
            Rationale::Lemma9 => "LEMMA9",
            Rationale::Lemma10 => "LEMMA10",
            Rationale::Lemma11 => "LEMMA11",
            Rationale::Lemma12 => "LEMMA12",
            Rationale::Lemma13 => "LEMMA13",
            Rationale::Unresolved => "UNRESOLVED",
        }
    }
}

/// Membership in the admissible list, with the tag naming why.
///
/// For admissible groups the tag is MAZUR, KKM (the quadratic-list groups
/// the theorems keep), or UNRESOLVED for Z13 / Z18 cases left open. For
/// excluded groups it names the strongest specific lemma; exclusions that
/// follow from the ambient quadratic classification (off-list labels,
/// wrong-field Weil pairing cases, and the rational Z18 case over
/// Q(sqrt(-3))) carry KKM.
pub fn is_admissible(
    label: &GroupLabel,
    field: RingTag,
    rational_coeffs: bool,
) -> (bool, Rationale) {
    let admissible = admissible_groups(field, rational_coeffs).contains(label);
    let key = (label.n1, label.n2);
    if admissible {
        let tag = if mazur().contains(label) {
            Rationale::Mazur
        } else if key == (1, 13) || key == (1, 18) {
            Rationale::Unresolved
        } else {
            Rationale::Kkm
        };
        return (true, tag);
    }
    let tag = match field {
        RingTag::Gaussian => match key {
            (1, 11) | (1, 14) if rational_coeffs => Rationale::Lemma3,
            (1, 13) if rational_coeffs => Rationale::Lemma3,
            (1, 11) | (1, 18) | (2, 10) => Rationale::Lemma4,
            (1, 16) => Rationale::Lemma6,
            (1, 15) => Rationale::Lemma7,
            (2, 12) => Rationale::Lemma8,
            (1, 14) => Rationale::Lemma9,
            _ => Rationale::Kkm,
        },
        RingTag::Omega => match key {
            (1, 11) | (1, 13) | (1, 14) if rational_coeffs => Rationale::Lemma3,
            (1, 11) => Rationale::Lemma10,
            (2, 10) => Rationale::Lemma11,
            (1, 14) | (1, 15) | (2, 12) => Rationale::Lemma12,
            (1, 16) => Rationale::Lemma13,
            _ => Rationale::Kkm,
        },
    };
    (false, tag)
}

/// The curve y^2 = x(x + m^2)(x + n^2) over Q(i), returned when
/// m^2 - n^2 is a square in Z[i] (the necessary shape for torsion
/// containing Z4 x Z4), or None when it is not.
pub fn z4z4_curve(m: &QInt, n: &QInt) -> Result<Option<crate::curves::CurveLong>> {
    if m.tag != RingTag::Gaussian || n.tag != RingTag::Gaussian {
        return Err(Error::DegenerateParameter(
            "the Z4 x Z4 family lives over Z[i]".into(),
        ));
    }
    let m2 = m.mul(m);
    let n2 = n.mul(n);
    if m.is_zero() || n.is_zero() || m2 == n2 {
        return Err(Error::SingularCurve);
    }
    let diff = QRat::from_int(m2.sub(&n2));
    if fields::is_square(&diff)?.is_none() {
        return Ok(None);
    }
    // x(x + m^2)(x + n^2) = x^3 + (m^2 + n^2) x^2 + m^2 n^2 x
    let t = RingTag::Gaussian;
    let curve = crate::curves::CurveLong::new(
        QRat::zero(t),
        QRat::from_int(m2.add(&n2)),
        QRat::zero(t),
        QRat::from_int(m2.mul(&n2)),
        QRat::zero(t),
    )?;
    Ok(Some(curve))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_sizes_and_contents() {
        assert_eq!(mazur().groups.len(), 15);
        let kkm = kkm_quadratic();
        assert_eq!(kkm.groups.len(), 26);
        // the exact enumeration
        let mut expected: Vec<GroupLabel> = (1..=16).map(|m| lab(1, m)).collect();
        expected.push(lab(1, 18));
        expected.extend((1..=6).map(|m| lab(2, 2 * m)));
        expected.push(lab(3, 3));
        expected.push(lab(3, 6));
        expected.push(lab(4, 4));
        let mut got = kkm.groups.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert!(!kkm.contains(&lab(1, 17)));
    }

    #[test]
    fn subset_relations() {
        let kkm = kkm_quadratic();
        for field in [RingTag::Gaussian, RingTag::Omega] {
            for rational in [true, false] {
                let list = admissible_groups(field, rational);
                for g in &mazur().groups {
                    assert!(list.contains(g));
                }
                for g in &list.groups {
                    assert!(kkm.contains(g));
                }
            }
        }
    }

    #[test]
    fn theorem_lists() {
        let l = admissible_groups(RingTag::Gaussian, true);
        assert_eq!(l.groups.len(), 16);
        assert!(l.contains(&lab(4, 4)));
        assert!(!l.contains(&lab(1, 13)));

        let l = admissible_groups(RingTag::Gaussian, false);
        assert!(l.contains(&lab(1, 13)));
        assert!(!l.contains(&lab(1, 11)));

        let l = admissible_groups(RingTag::Omega, false);
        assert_eq!(l.groups.len(), 19);
        assert!(l.contains(&lab(1, 18)));
        assert!(l.contains(&lab(3, 6)));
        assert!(!l.contains(&lab(4, 4)));
    }

    #[test]
    fn rationale_tags() {
        let cases = [
            ((1, 16), RingTag::Gaussian, false, false, Rationale::Lemma6),
            ((2, 10), RingTag::Omega, false, false, Rationale::Lemma11),
            ((1, 13), RingTag::Gaussian, false, true, Rationale::Unresolved),
            ((1, 13), RingTag::Gaussian, true, false, Rationale::Lemma3),
            ((1, 11), RingTag::Omega, false, false, Rationale::Lemma10),
            ((1, 11), RingTag::Omega, true, false, Rationale::Lemma3),
            ((1, 18), RingTag::Omega, false, true, Rationale::Unresolved),
            ((1, 18), RingTag::Omega, true, false, Rationale::Kkm),
            ((1, 18), RingTag::Gaussian, false, false, Rationale::Lemma4),
            ((1, 15), RingTag::Gaussian, true, false, Rationale::Lemma7),
            ((1, 14), RingTag::Omega, false, false, Rationale::Lemma12),
            ((2, 12), RingTag::Gaussian, false, false, Rationale::Lemma8),
            ((1, 14), RingTag::Gaussian, false, false, Rationale::Lemma9),
            ((1, 16), RingTag::Omega, true, false, Rationale::Lemma13),
            ((4, 4), RingTag::Gaussian, true, true, Rationale::Kkm),
            ((4, 4), RingTag::Omega, false, false, Rationale::Kkm),
            ((3, 3), RingTag::Omega, true, true, Rationale::Kkm),
            ((3, 3), RingTag::Gaussian, false, false, Rationale::Kkm),
            ((1, 17), RingTag::Gaussian, false, false, Rationale::Kkm),
            ((1, 7), RingTag::Omega, true, true, Rationale::Mazur),
            ((2, 8), RingTag::Gaussian, false, true, Rationale::Mazur),
        ];
        for ((n1, n2), field, rational, want_ok, want_tag) in cases {
            let label = GroupLabel::new(n1, n2).unwrap();
            let (ok, tag) = is_admissible(&label, field, rational);
            assert_eq!(
                (ok, tag),
                (want_ok, want_tag),
                "({}, {}) over {:?}, rational = {}",
                n1,
                n2,
                field,
                rational
            );
        }
    }

    #[test]
    fn label_canonical() {
        assert!(GroupLabel::new(2, 7).is_err());
        assert!(GroupLabel::new(0, 4).is_err());
        assert!(GroupLabel::new(3, 6).is_ok());
    }

    #[test]
    fn z4z4_family() {
        let c = z4z4_curve(&QInt::gauss(5, 0), &QInt::gauss(4, 0))
            .unwrap()
            .unwrap();
        assert_eq!(c.a2, QRat::int(41, RingTag::Gaussian));
        assert_eq!(c.a4, QRat::int(400, RingTag::Gaussian));
        // 1 - i^2 = 2 is not a square in Z[i]
        assert!(z4z4_curve(&QInt::gauss(1, 0), &QInt::gauss(0, 1))
            .unwrap()
            .is_none());
        assert!(matches!(
            z4z4_curve(&QInt::gauss(1, 0), &QInt::gauss(1, 0)),
            Err(Error::SingularCurve)
        ));
        assert!(z4z4_curve(&QInt::omega(5, 0), &QInt::omega(4, 0)).is_err());
    }
}
