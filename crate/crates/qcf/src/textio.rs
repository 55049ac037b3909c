//! Text layer: Display implementations and parsers for ring elements,
//! field elements, points, curves, and group labels, plus the one-line
//! report formats the CLI emits. Every printed form re-parses to an equal
//! value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::classify::{GroupLabel, Rationale};
use crate::curves::{CurveLong, Point, TorsionData};
use crate::error::{Error, Result};
use crate::fields::QRat;
use crate::rings::{Factorization, QInt, RingTag};
use crate::verify::{CurveReport, ReproReport, SearchHit};

pub fn field_str(tag: RingTag) -> &'static str {
    match tag {
        RingTag::Gaussian => "Qi",
        RingTag::Omega => "Qw3",
    }
}

/// Accepts Qi and Qw3 (Qw as a shorthand), case-insensitive.
pub fn parse_field(s: &str) -> Result<RingTag> {
    match s.to_ascii_lowercase().as_str() {
        "qi" => Ok(RingTag::Gaussian),
        "qw3" | "qw" => Ok(RingTag::Omega),
        _ => Err(Error::Parse { pos: 0, expected: "field tag Qi or Qw3".to_string() }),
    }
}

fn unit_char(tag: RingTag) -> char {
    match tag {
        RingTag::Gaussian => 'i',
        RingTag::Omega => 'w',
    }
}

impl fmt::Display for QInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_zero() && self.b.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        if !self.a.is_zero() {
            s.push_str(&self.a.to_string());
        }
        if !self.b.is_zero() {
            if self.b.is_negative() {
                s.push('-');
            } else if !self.a.is_zero() {
                s.push('+');
            }
            let m = self.b.abs();
            if !m.is_one() {
                s.push_str(&m.to_string());
            }
            s.push(unit_char(self.tag));
        }
        f.write_str(&s)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num();
        if self.den().is_one() {
            return write!(f, "{num}");
        }
        if !num.a.is_zero() && !num.b.is_zero() {
            write!(f, "({num})/{}", self.den())
        } else {
            write!(f, "{num}/{}", self.den())
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.xy() {
            None => f.write_str("O"),
            Some((x, y)) => write!(f, "({x},{y})"),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n1 == 1 {
            write!(f, "Z{}", self.n2)
        } else {
            write!(f, "Z{}+Z{}", self.n1, self.n2)
        }
    }
}

fn coeff_term(c: &QRat, var: &str) -> Option<String> {
    if c.is_zero() {
        return None;
    }
    let cs = c.to_string();
    Some(match cs.as_str() {
        "1" => var.to_string(),
        "-1" => format!("-{var}"),
        _ => {
            let num = c.num();
            let two_part = !num.a.is_zero() && !num.b.is_zero();
            if two_part && c.den().is_one() {
                format!("({cs})*{var}")
            } else {
                format!("{cs}*{var}")
            }
        }
    })
}

fn push_term(out: &mut String, term: &str) {
    if let Some(rest) = term.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(term);
    }
}

impl fmt::Display for CurveLong {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::from("y^2");
        if let Some(t) = coeff_term(&self.a1, "x*y") {
            push_term(&mut lhs, &t);
        }
        if let Some(t) = coeff_term(&self.a3, "y") {
            push_term(&mut lhs, &t);
        }
        let mut rhs = String::from("x^3");
        if let Some(t) = coeff_term(&self.a2, "x^2") {
            push_term(&mut rhs, &t);
        }
        if let Some(t) = coeff_term(&self.a4, "x") {
            push_term(&mut rhs, &t);
        }
        if !self.a6.is_zero() {
            push_term(&mut rhs, &self.a6.to_string());
        }
        write!(f, "{lhs} = {rhs}")
    }
}

/// "Z2+Z2; points: O,(0,0),(i,0),(-i,0)"
pub fn torsion_line(tor: &TorsionData) -> String {
    let label = GroupLabel::new(tor.n1, tor.n2).expect("canonical invariant factors");
    let pts: Vec<String> = tor.points.iter().map(|p| p.to_string()).collect();
    format!("{label}; points: {}", pts.join(","))
}

pub fn rationale_short(r: Rationale) -> &'static str {
    match r {
        Rationale::Mazur => "Mazur",
        Rationale::Kkm => "KKM",
        Rationale::Lemma3 => "L3",
        Rationale::Lemma4 => "L4",
        Rationale::Lemma6 => "L6",
        Rationale::Lemma7 => "L7",
        Rationale::Lemma8 => "L8",
        Rationale::Lemma9 => "L9",
        Rationale::Lemma10 => "L10",
        Rationale::Lemma11 => "L11",
        Rationale::Lemma12 => "L12",
        Rationale::Lemma13 => "L13",
        Rationale::Unresolved => "unresolved",
    }
}

/// "Z2+Z2: admissible (Mazur)"
pub fn classify_line(label: &GroupLabel, admissible: bool, r: Rationale) -> String {
    format!(
        "{label}: {} ({})",
        if admissible { "admissible" } else { "not admissible" },
        rationale_short(r)
    )
}

/// "2 = -i * (1+i)^2"
pub fn factorization_line(z: &QInt, f: &Factorization) -> String {
    let mut parts = Vec::new();
    if !f.unit.value().is_one() || f.factors.is_empty() {
        parts.push(f.unit.value().to_string());
    }
    for (p, e) in &f.factors {
        if *e == 1 {
            parts.push(format!("({})", p.value));
        } else {
            parts.push(format!("({})^{}", p.value, e));
        }
    }
    format!("{z} = {}", parts.join(" * "))
}

pub fn group_str(n1: u32, n2: u32) -> String {
    GroupLabel::new(n1, n2).expect("canonical invariant factors").to_string()
}

pub fn torsion_json(curve: &CurveLong, tag: RingTag, tor: &TorsionData) -> Value {
    json!({
        "curve": curve.to_string(),
        "field": field_str(tag),
        "group": group_str(tor.n1, tor.n2),
        "n1": tor.n1,
        "n2": tor.n2,
        "points": tor.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn factor_json(z: &QInt, f: &Factorization) -> Value {
    json!({
        "element": z.to_string(),
        "field": field_str(z.tag),
        "unit": f.unit.value().to_string(),
        "factors": f.factors.iter().map(|(p, e)| json!({
            "prime": p.value.to_string(),
            "exponent": e,
        })).collect::<Vec<_>>(),
    })
}

pub fn classify_json(
    label: &GroupLabel,
    tag: RingTag,
    rational: bool,
    admissible: bool,
    r: Rationale,
) -> Value {
    json!({
        "group": label.to_string(),
        "field": field_str(tag),
        "rational": rational,
        "admissible": admissible,
        "rationale": r.as_str(),
    })
}

pub fn hit_json(h: &SearchHit) -> Value {
    json!({
        "coords": h.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "witness": h.witness.to_string(),
        "nondegenerate": h.nondegenerate,
    })
}

fn curve_report_json(c: &CurveReport) -> Value {
    json!({
        "label": c.label,
        "group": group_str(c.group.0, c.group.1),
        "points": c.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "t_values": c.t_values.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "expected_group": group_str(c.expected_group.0, c.expected_group.1),
        "expected_t": c.expected_t.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "all_degenerate": c.all_degenerate,
        "pass": c.pass,
    })
}

pub fn repro_json(r: &ReproReport) -> Value {
    json!({
        "model": r.model,
        "claim": r.claim,
        "pass": r.pass,
        "curves": r.curves.iter().map(curve_report_json).collect::<Vec<_>>(),
        "hits": r.hits.iter().map(hit_json).collect::<Vec<_>>(),
        "notes": r.notes,
        "assumptions": r.assumptions,
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LPar,
    RPar,
    LBrk,
    RBrk,
    Comma,
    Eq,
    Int(BigInt),
    Ident(String),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LPar,
            b')' => Tok::RPar,
            b'[' => Tok::LBrk,
            b']' => Tok::RBrk,
            b',' => Tok::Comma,
            b'=' => Tok::Eq,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    expected: "operator, number, or identifier".to_string(),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Parser> {
        Ok(Parser { toks: lex(s)?, idx: 0, end: s.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.idx + 1).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), expected: expected.to_string() })
    }

    fn eat(&mut self, tok: &Tok, expected: &str) -> Result<()> {
        if self.peek() == Some(tok) {
            self.idx += 1;
            Ok(())
        } else {
            self.err(expected)
        }
    }

    fn eat_int(&mut self, expected: &str) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.bump() {
                Some(Tok::Int(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => self.err(expected),
        }
    }

    fn done(&self) -> bool {
        self.idx >= self.toks.len()
    }

    fn expect_done(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            self.err("end of input")
        }
    }

    fn is_unit_ident(&self, t: Option<&Tok>, tag: RingTag) -> bool {
        matches!(t, Some(Tok::Ident(u)) if u.len() == 1
            && u.chars().next() == Some(unit_char(tag)))
    }

    /// One summand of a ring element: "3", "i", "4i", "4*i".
    fn simple(&mut self, tag: RingTag) -> Result<QInt> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.is_unit_ident(self.peek(), tag) {
                    self.bump();
                    Ok(QInt::new(0, n, tag))
                } else if self.peek() == Some(&Tok::Star) && self.is_unit_ident(self.peek2(), tag)
                {
                    self.bump();
                    self.bump();
                    Ok(QInt::new(0, n, tag))
                } else {
                    Ok(QInt::new(n, 0, tag))
                }
            }
            Some(Tok::Ident(u)) if u.len() == 1 && u.chars().next() == Some(unit_char(tag)) => {
                Ok(QInt::gen(tag))
            }
            _ => {
                self.idx = self.idx.saturating_sub(1);
                self.err("integer or unit symbol")
            }
        }
    }

    /// Signed sum of summands; returns the value and the summand count.
    fn ring_sum(&mut self, tag: RingTag) -> Result<(QInt, usize)> {
        let mut acc = QInt::int(0, tag);
        let mut count = 0;
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.simple(tag)?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            count += 1;
            negate = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                _ => break,
            };
        }
        Ok((acc, count))
    }

    /// A field element: ring sum (parenthesized if multi-term) with an
    /// optional integer denominator.
    fn rational(&mut self, tag: RingTag) -> Result<QRat> {
        let num = if self.peek() == Some(&Tok::LPar) {
            self.bump();
            let (n, _) = self.ring_sum(tag)?;
            self.eat(&Tok::RPar, "closing parenthesis")?;
            n
        } else {
            let (n, count) = self.ring_sum(tag)?;
            if count > 1 && self.peek() == Some(&Tok::Slash) {
                return self.err("parenthesized numerator before /");
            }
            n
        };
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let den = self.eat_int("denominator")?;
            QRat::new(num, den)
        } else {
            Ok(QRat::from_int(num))
        }
    }
}

pub fn parse_qint(s: &str, tag: RingTag) -> Result<QInt> {
    let mut p = Parser::new(s)?;
    let (z, _) = p.ring_sum(tag)?;
    p.expect_done()?;
    Ok(z)
}

pub fn parse_qrat(s: &str, tag: RingTag) -> Result<QRat> {
    let mut p = Parser::new(s)?;
    let x = p.rational(tag)?;
    p.expect_done()?;
    Ok(x)
}

pub fn parse_point(s: &str, tag: RingTag) -> Result<Point> {
    let mut p = Parser::new(s)?;
    if p.peek() == Some(&Tok::Ident("O".to_string())) {
        p.bump();
        p.expect_done()?;
        return Ok(Point::Infinity);
    }
    p.eat(&Tok::LPar, "point (x,y) or O")?;
    let x = p.rational(tag)?;
    p.eat(&Tok::Comma, "comma")?;
    let y = p.rational(tag)?;
    p.eat(&Tok::RPar, "closing parenthesis")?;
    p.expect_done()?;
    Ok(Point::Affine { x, y })
}

fn parse_z_part(p: &mut Parser) -> Result<u32> {
    match p.bump() {
        Some(Tok::Ident(id)) if id.starts_with('Z') && id.len() > 1 => {
            id[1..].parse().map_err(|_| Error::Parse {
                pos: p.pos(),
                expected: "Z followed by a positive integer".to_string(),
            })
        }
        _ => {
            p.idx = p.idx.saturating_sub(1);
            p.err("group label like Z12 or Z2+Z4")
        }
    }
}

pub fn parse_group(s: &str) -> Result<GroupLabel> {
    let mut p = Parser::new(s)?;
    let first = parse_z_part(&mut p)?;
    let label = if p.peek() == Some(&Tok::Plus) {
        p.bump();
        let second = parse_z_part(&mut p)?;
        GroupLabel::new(first, second)?
    } else {
        GroupLabel::new(1, first)?
    };
    p.expect_done()?;
    Ok(label)
}

enum VarPart {
    Xy,
    Y,
    X2,
    X,
    Const,
}

/// A coefficient followed by an optional variable part. `rhs` selects
/// which variable parts are legal.
fn curve_term(p: &mut Parser, tag: RingTag, rhs: bool) -> Result<(QRat, VarPart)> {
    let (coeff, saw_coeff) = match p.peek() {
        Some(Tok::Ident(id)) if id == "x" || id == "y" => (QRat::int(1, tag), false),
        _ => (p.rational(tag)?, true),
    };
    if saw_coeff {
        match p.peek() {
            Some(Tok::Star) => {
                p.bump();
            }
            // implicit product, as in "4x" or "2y"
            Some(Tok::Ident(id)) if id == "x" || id == "y" => {}
            _ => {
                return if rhs {
                    Ok((coeff, VarPart::Const))
                } else {
                    p.err("* and a variable part")
                };
            }
        }
    }
    match p.bump() {
        Some(Tok::Ident(id)) if id == "x" && !rhs => {
            p.eat(&Tok::Star, "*y")?;
            match p.bump() {
                Some(Tok::Ident(y)) if y == "y" => Ok((coeff, VarPart::Xy)),
                _ => p.err("y after x*"),
            }
        }
        Some(Tok::Ident(id)) if id == "y" && !rhs => Ok((coeff, VarPart::Y)),
        Some(Tok::Ident(id)) if id == "x" && rhs => {
            if p.peek() == Some(&Tok::Caret) {
                p.bump();
                let e = p.eat_int("exponent 2")?;
                if e == BigInt::from(2) {
                    Ok((coeff, VarPart::X2))
                } else {
                    p.err("exponent 2")
                }
            } else {
                Ok((coeff, VarPart::X))
            }
        }
        _ => p.err(if rhs { "x^2, x, or a constant" } else { "x*y or y" }),
    }
}

/// Parses a curve in equation form ("y^2 + x*y = x^3 - x") or bracket
/// form ("[1,1,0,-1,0]"), with an optional " over Qi" / " over Qw3"
/// suffix that overrides the default field.
pub fn parse_curve(s: &str, default_field: Option<RingTag>) -> Result<(CurveLong, RingTag)> {
    let mut p = Parser::new(s)?;
    // the field suffix decides how coefficients parse, so find it first
    let mut field = default_field;
    for k in 0..p.toks.len() {
        if let (_, Tok::Ident(id)) = &p.toks[k] {
            if id == "over" {
                if k + 1 < p.toks.len() {
                    if let (_, Tok::Ident(tagname)) = &p.toks[k + 1] {
                        if k + 2 == p.toks.len() {
                            field = Some(parse_field(tagname)?);
                            p.toks.truncate(k);
                            break;
                        }
                    }
                }
                return Err(Error::Parse {
                    pos: p.toks[k].0,
                    expected: "over followed by a field tag at the end".to_string(),
                });
            }
        }
    }
    let tag = match field {
        Some(t) => t,
        None => {
            return Err(Error::Parse {
                pos: p.end,
                expected: "a field: pass one or append ' over Qi' / ' over Qw3'".to_string(),
            })
        }
    };

    if p.peek() == Some(&Tok::LBrk) {
        p.bump();
        let mut coeffs = Vec::new();
        loop {
            coeffs.push(p.rational(tag)?);
            if p.peek() == Some(&Tok::Comma) {
                p.bump();
            } else {
                break;
            }
        }
        p.eat(&Tok::RBrk, "closing bracket")?;
        p.expect_done()?;
        if coeffs.len() != 5 {
            return Err(Error::Parse {
                pos: p.end,
                expected: "exactly five coefficients [a1,a2,a3,a4,a6]".to_string(),
            });
        }
        let c = CurveLong::new(
            coeffs[0].clone(),
            coeffs[1].clone(),
            coeffs[2].clone(),
            coeffs[3].clone(),
            coeffs[4].clone(),
        )?;
        return Ok((c, tag));
    }

    // y^2 [+- term]* = x^3 [+- term]*
    match p.bump() {
        Some(Tok::Ident(id)) if id == "y" => {}
        _ => {
            p.idx = p.idx.saturating_sub(1);
            return p.err("y^2 on the left side");
        }
    }
    p.eat(&Tok::Caret, "^2 after y")?;
    if p.eat_int("2 after y^")? != BigInt::from(2) {
        return p.err("y^2");
    }
    let zero = QRat::int(0, tag);
    let (mut a1, mut a2, mut a3, mut a4, mut a6) =
        (zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero);
    loop {
        let negate = match p.peek() {
            Some(Tok::Plus) => {
                p.bump();
                false
            }
            Some(Tok::Minus) => {
                p.bump();
                true
            }
            Some(Tok::Eq) => break,
            _ => return p.err("+, -, or = after the left side"),
        };
        let (c, var) = curve_term(&mut p, tag, false)?;
        let c = if negate { c.neg() } else { c };
        match var {
            VarPart::Xy => a1 = a1.add(&c),
            VarPart::Y => a3 = a3.add(&c),
            _ => unreachable!(),
        }
    }
    p.eat(&Tok::Eq, "=")?;
    match p.bump() {
        Some(Tok::Ident(id)) if id == "x" => {}
        _ => {
            p.idx = p.idx.saturating_sub(1);
            return p.err("x^3 on the right side");
        }
    }
    p.eat(&Tok::Caret, "^3 after x")?;
    if p.eat_int("3 after x^")? != BigInt::from(3) {
        return p.err("x^3");
    }
    while !p.done() {
        let negate = match p.bump() {
            Some(Tok::Plus) => false,
            Some(Tok::Minus) => true,
            _ => {
                p.idx = p.idx.saturating_sub(1);
                return p.err("+ or - between terms");
            }
        };
        let (c, var) = curve_term(&mut p, tag, true)?;
        let c = if negate { c.neg() } else { c };
        match var {
            VarPart::X2 => a2 = a2.add(&c),
            VarPart::X => a4 = a4.add(&c),
            VarPart::Const => a6 = a6.add(&c),
            _ => unreachable!(),
        }
    }
    let curve = CurveLong::new(a1, a2, a3, a4, a6)?;
    Ok((curve, tag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::torsion_subgroup;

    #[test]
    fn qint_round_trip() {
        let cases = [
            (QInt::gauss(0, 0), "0"),
            (QInt::gauss(3, 0), "3"),
            (QInt::gauss(0, 1), "i"),
            (QInt::gauss(0, -2), "-2i"),
            (QInt::gauss(-3, 4), "-3+4i"),
            (QInt::gauss(1, -1), "1-i"),
        ];
        for (z, s) in cases {
            assert_eq!(z.to_string(), s);
            assert_eq!(parse_qint(s, RingTag::Gaussian).unwrap(), z);
        }
        let w = QInt::omega(1, -1);
        assert_eq!(w.to_string(), "1-w");
        assert_eq!(parse_qint("1-w", RingTag::Omega).unwrap(), w);
        assert_eq!(parse_qint("2*w", RingTag::Omega).unwrap(), QInt::omega(0, 2));
        assert_eq!(parse_qint(" 3 + 4i ", RingTag::Gaussian).unwrap(), QInt::gauss(3, 4));
    }

    #[test]
    fn qrat_round_trip() {
        let g = RingTag::Gaussian;
        let cases = [
            (QRat::new(QInt::gauss(1, 1), 2).unwrap(), "(1+i)/2"),
            (QRat::new(QInt::gauss(0, 1), 2).unwrap(), "i/2"),
            (QRat::new(QInt::gauss(-1, 0), 2).unwrap(), "-1/2"),
            (QRat::int(7, g), "7"),
        ];
        for (x, s) in cases {
            assert_eq!(x.to_string(), s);
            assert_eq!(parse_qrat(s, g).unwrap(), x);
        }
        assert!(parse_qrat("1+i/2", g).is_err());
    }

    #[test]
    fn point_and_group_round_trip() {
        let g = RingTag::Gaussian;
        assert_eq!(parse_point("O", g).unwrap(), Point::Infinity);
        let p = Point::Affine {
            x: QRat::from_int(QInt::gauss(0, 1)),
            y: QRat::from_int(QInt::gauss(-1, 1)),
        };
        assert_eq!(p.to_string(), "(i,-1+i)");
        assert_eq!(parse_point("(i,-1+i)", g).unwrap(), p);

        assert_eq!(parse_group("Z16").unwrap(), GroupLabel::new(1, 16).unwrap());
        assert_eq!(parse_group("Z2+Z12").unwrap(), GroupLabel::new(2, 12).unwrap());
        assert_eq!(GroupLabel::new(2, 12).unwrap().to_string(), "Z2+Z12");
        assert_eq!(GroupLabel::new(1, 1).unwrap().to_string(), "Z1");
        assert!(parse_group("Z3+Z5").is_err());
    }

    #[test]
    fn curve_display_and_parse() {
        let g = RingTag::Gaussian;
        let (c, tag) = parse_curve("y^2 + x*y + y = x^3 + x^2", Some(g)).unwrap();
        assert_eq!(tag, g);
        assert_eq!(c.to_string(), "y^2 + x*y + y = x^3 + x^2");

        let (c2, _) = parse_curve("y^2 = x^3 - x", Some(g)).unwrap();
        assert_eq!(c2.a4, QRat::int(-1, g));
        assert_eq!(c2.to_string(), "y^2 = x^3 - x");

        let (c3, tag3) = parse_curve("y^2 = x^3 + 2i*x over Qi", None).unwrap();
        assert_eq!(tag3, g);
        assert_eq!(c3.a4, QRat::from_int(QInt::gauss(0, 2)));
        assert_eq!(c3.to_string(), "y^2 = x^3 + 2i*x");

        let (c4, tag4) = parse_curve("[0,2w,0,1-w,0] over Qw3", None).unwrap();
        assert_eq!(tag4, RingTag::Omega);
        assert_eq!(c4.a2, QRat::from_int(QInt::omega(0, 2)));
        assert_eq!(c4.to_string(), "y^2 = x^3 + 2w*x^2 + (1-w)*x");
        let reparsed = parse_curve(&c4.to_string(), Some(RingTag::Omega)).unwrap().0;
        assert_eq!(reparsed, c4);

        // implicit product between a coefficient and its variable
        let (c5, _) = parse_curve("y^2 + 2y = x^3 - 3x over Qi", None).unwrap();
        assert_eq!(c5, parse_curve("[0,0,2,-3,0]", Some(g)).unwrap().0);
        let (c6, _) = parse_curve("y^2 = x^3 + 4x", Some(RingTag::Omega)).unwrap();
        assert_eq!(c6.a4, QRat::int(4, RingTag::Omega));

        // field must come from somewhere
        assert!(parse_curve("y^2 = x^3 - x", None).is_err());
        // parse positions point into the input
        match parse_curve("y^2 = x^3 ? 1", Some(g)) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn half_coefficient_round_trip() {
        let g = RingTag::Gaussian;
        let half = QRat::new(QInt::gauss(1, 1), 2).unwrap();
        let c = CurveLong::new(
            QRat::int(0, g),
            QRat::int(0, g),
            QRat::int(0, g),
            half,
            QRat::int(1, g),
        )
        .unwrap();
        let s = c.to_string();
        assert_eq!(s, "y^2 = x^3 + (1+i)/2*x + 1");
        assert_eq!(parse_curve(&s, Some(g)).unwrap().0, c);
    }

    #[test]
    fn report_lines() {
        let g = RingTag::Gaussian;
        let (c, _) = parse_curve("y^2 = x^3 + x", Some(g)).unwrap();
        let tor = torsion_subgroup(&c).unwrap();
        assert_eq!(torsion_line(&tor), "Z2+Z2; points: O,(0,0),(i,0),(-i,0)");

        let label = GroupLabel::new(2, 2).unwrap();
        assert_eq!(classify_line(&label, true, Rationale::Mazur), "Z2+Z2: admissible (Mazur)");

        let f = crate::rings::factor(&QInt::gauss(2, 0)).unwrap();
        assert_eq!(factorization_line(&QInt::gauss(2, 0), &f), "2 = -i * (1+i)^2");
    }
}
