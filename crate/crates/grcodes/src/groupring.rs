//! Group ring elements over GF(p) and the integers.
//!
//! An element of RG is a coefficient vector indexed by the group listing.
//! GF(2) coefficients are bit-packed, GF(p) coefficients are reduced
//! residues, and integer coefficients are arbitrary precision.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::groups::Group;

/// Coefficient ring: a prime field GF(p) or the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSpec {
    Gf(u16),
    Integers,
}

impl RingSpec {
    /// Prime field of order p; rejects composite or zero p.
    pub fn gf(p: u16) -> Result<RingSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidRingSpec(format!("{p} is not prime")));
        }
        Ok(RingSpec::Gf(p))
    }

    pub fn integers() -> RingSpec {
        RingSpec::Integers
    }

    /// Parses `gf<p>` or `z` (case-insensitive).
    pub fn parse(text: &str) -> Result<RingSpec> {
        let t = text.trim().to_ascii_lowercase();
        if t == "z" {
            return Ok(RingSpec::Integers);
        }
        if let Some(num) = t.strip_prefix("gf") {
            let p: u16 = num
                .parse()
                .map_err(|_| Error::InvalidRingSpec(format!("bad field order in {text:?}")))?;
            return RingSpec::gf(p);
        }
        Err(Error::InvalidRingSpec(format!("expected gf<p> or z, got {text:?}")))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Gf(_))
    }

    /// Field characteristic, if a field.
    pub fn char(&self) -> Option<u16> {
        match self {
            RingSpec::Gf(p) => Some(*p),
            RingSpec::Integers => None,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Gf(p) => write!(f, "gf{p}"),
            RingSpec::Integers => write!(f, "z"),
        }
    }
}

fn is_prime(p: u16) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p as u32 {
        if (p as u32).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Modular inverse in GF(p), p prime.
pub(crate) fn fp_inv(a: u16, p: u16) -> u16 {
    // Extended Euclid on i64; a must be nonzero mod p.
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u16
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    F2(BitVec),
    Fp(Vec<u16>),
    Int(Vec<BigInt>),
}

/// An element of the group ring RG.
#[derive(Debug, Clone)]
pub struct GroupRingElement {
    group: Arc<Group>,
    ring: RingSpec,
    coeffs: Coeffs,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec()
            && self.ring == other.ring
            && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn zero(group: Arc<Group>, ring: RingSpec) -> Self {
        let n = group.order();
        let coeffs = match ring {
            RingSpec::Gf(2) => Coeffs::F2(BitVec::zeros(n)),
            RingSpec::Gf(_) => Coeffs::Fp(vec![0; n]),
            RingSpec::Integers => Coeffs::Int(vec![BigInt::zero(); n]),
        };
        GroupRingElement { group, ring, coeffs }
    }

    pub fn one(group: Arc<Group>, ring: RingSpec) -> Self {
        let mut e = Self::zero(group, ring);
        e.add_term(0, 1);
        e
    }

    /// Builds an element from `(listing index, integer coefficient)` terms.
    pub fn from_terms(group: Arc<Group>, ring: RingSpec, terms: &[(usize, i64)]) -> Result<Self> {
        let mut e = Self::zero(group, ring);
        for &(i, c) in terms {
            if i >= e.group.order() {
                return Err(Error::InvalidArgument(format!("listing index {i} out of range")));
            }
            e.add_term(i, c);
        }
        Ok(e)
    }

    /// GF only: element with coefficient 1 on each listed index.
    pub fn from_support(group: Arc<Group>, ring: RingSpec, support: &[usize]) -> Result<Self> {
        let terms: Vec<(usize, i64)> = support.iter().map(|&i| (i, 1)).collect();
        Self::from_terms(group, ring, &terms)
    }

    /// Like [`Self::from_terms`] but with arbitrary-precision coefficients.
    pub fn from_big_terms(
        group: Arc<Group>,
        ring: RingSpec,
        terms: &[(usize, BigInt)],
    ) -> Result<Self> {
        let mut e = Self::zero(group, ring);
        for (i, c) in terms {
            if *i >= e.group.order() {
                return Err(Error::InvalidArgument(format!("listing index {i} out of range")));
            }
            e.add_term_big(*i, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, i: usize, c: i64) {
        match &mut self.coeffs {
            Coeffs::F2(v) => {
                if c.rem_euclid(2) == 1 {
                    v.flip(i);
                }
            }
            Coeffs::Fp(v) => {
                let p = self.ring.char().unwrap() as i64;
                v[i] = ((v[i] as i64 + c).rem_euclid(p)) as u16;
            }
            Coeffs::Int(v) => v[i] += c,
        }
    }

    fn add_term_big(&mut self, i: usize, c: &BigInt) {
        match &mut self.coeffs {
            Coeffs::Int(v) => v[i] += c,
            _ => {
                let p = BigInt::from(self.ring.char().unwrap());
                let r = c.mod_floor_u16(&p);
                self.add_term(i, r as i64);
            }
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Field coefficient at a listing index (panics over Z).
    pub fn coeff(&self, i: usize) -> u16 {
        match &self.coeffs {
            Coeffs::F2(v) => v.get(i) as u16,
            Coeffs::Fp(v) => v[i],
            Coeffs::Int(_) => panic!("coeff() over Z; use coeff_int()"),
        }
    }

    /// Coefficient lifted to an integer (residue representative over GF(p)).
    pub fn coeff_int(&self, i: usize) -> BigInt {
        match &self.coeffs {
            Coeffs::F2(v) => BigInt::from(v.get(i) as u8),
            Coeffs::Fp(v) => BigInt::from(v[i]),
            Coeffs::Int(v) => v[i].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::F2(v) => v.is_zero(),
            Coeffs::Fp(v) => v.iter().all(|&c| c == 0),
            Coeffs::Int(v) => v.iter().all(|c| c.is_zero()),
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        match &self.coeffs {
            Coeffs::F2(v) => v.weight(),
            Coeffs::Fp(v) => v.iter().filter(|&&c| c != 0).count(),
            Coeffs::Int(v) => v.iter().filter(|c| !c.is_zero()).count(),
        }
    }

    /// Listing indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        match &self.coeffs {
            Coeffs::F2(v) => v.iter_ones().collect(),
            Coeffs::Fp(v) => (0..v.len()).filter(|&i| v[i] != 0).collect(),
            Coeffs::Int(v) => (0..v.len()).filter(|&i| !v[i].is_zero()).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.group.spec() != other.group.spec() {
            return Err(Error::GroupMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        match (&mut out.coeffs, &other.coeffs) {
            (Coeffs::F2(a), Coeffs::F2(b)) => a.xor_assign(b),
            (Coeffs::Fp(a), Coeffs::Fp(b)) => {
                let p = self.ring.char().unwrap() as u32;
                for (x, y) in a.iter_mut().zip(b) {
                    *x = ((*x as u32 + *y as u32) % p) as u16;
                }
            }
            (Coeffs::Int(a), Coeffs::Int(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        match &mut out.coeffs {
            Coeffs::F2(_) => {}
            Coeffs::Fp(v) => {
                let p = self.ring.char().unwrap();
                for x in v.iter_mut() {
                    *x = (p - *x) % p;
                }
            }
            Coeffs::Int(v) => {
                for x in v.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        out
    }

    /// Group ring convolution: (uv)_g = sum over h of u_h * v_{h^-1 g}.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let g = &self.group;
        let mut out = Self::zero(self.group.clone(), self.ring);
        match (&self.coeffs, &other.coeffs, &mut out.coeffs) {
            (Coeffs::F2(a), Coeffs::F2(b), Coeffs::F2(c)) => {
                for i in a.iter_ones() {
                    for j in b.iter_ones() {
                        c.flip(g.mul(i, j));
                    }
                }
            }
            (Coeffs::Fp(a), Coeffs::Fp(b), Coeffs::Fp(c)) => {
                let p = self.ring.char().unwrap() as u32;
                for (i, &ai) in a.iter().enumerate().filter(|(_, &ai)| ai != 0) {
                    for (j, &bj) in b.iter().enumerate().filter(|(_, &bj)| bj != 0) {
                        let k = g.mul(i, j);
                        c[k] = ((c[k] as u32 + ai as u32 * bj as u32) % p) as u16;
                    }
                }
            }
            (Coeffs::Int(a), Coeffs::Int(b), Coeffs::Int(c)) => {
                for (i, ai) in a.iter().enumerate().filter(|(_, ai)| !ai.is_zero()) {
                    for (j, bj) in b.iter().enumerate().filter(|(_, bj)| !bj.is_zero()) {
                        let k = g.mul(i, j);
                        c[k] += ai * bj;
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// Transpose: the coefficient of g becomes the coefficient of g^-1.
    pub fn transpose(&self) -> Self {
        let g = &self.group;
        let mut out = Self::zero(self.group.clone(), self.ring);
        match (&self.coeffs, &mut out.coeffs) {
            (Coeffs::F2(a), Coeffs::F2(b)) => {
                for i in a.iter_ones() {
                    b.set(g.inv(i), true);
                }
            }
            (Coeffs::Fp(a), Coeffs::Fp(b)) => {
                for i in 0..a.len() {
                    b[i] = a[g.inv(i)];
                }
            }
            (Coeffs::Int(a), Coeffs::Int(b)) => {
                for i in 0..a.len() {
                    b[i] = a[g.inv(i)].clone();
                }
            }
            _ => unreachable!(),
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.group.clone(), self.ring)
    }

    /// Canonical text form; `parse_element` round-trips it.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for i in self.support() {
            let name = self.group.element_name(i);
            let c = self.coeff_int(i);
            if c.is_one() {
                parts.push(name);
            } else if i == 0 {
                parts.push(format!("{c}"));
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Text form with no spaces, for one-line file headers.
    pub fn to_compact_text(&self) -> String {
        self.to_text().replace(' ', "")
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

trait ModFloorU16 {
    fn mod_floor_u16(&self, p: &BigInt) -> u16;
}

impl ModFloorU16 for BigInt {
    fn mod_floor_u16(&self, p: &BigInt) -> u16 {
        use num::Integer;
        let r = self.mod_floor(p);
        u16::try_from(r).unwrap()
    }
}

// -------------------------------------------------------------------------
// Element text parsing.
//
// expr = term { "+" term }
// term = [int "*"] atom { "*" atom } | int
// atom = "1" | gen ["^" int] | "<" int ">"
// -------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Caret,
    Star,
    Plus,
    Langle,
    Rangle,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '<' => {
                toks.push((i, Tok::Langle));
                i += 1;
            }
            '>' => {
                toks.push((i, Tok::Rangle));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s = &text[start..i];
                if s == "-" {
                    return Err(Error::ElementSyntax { pos: start, msg: "lone '-'".into() });
                }
                toks.push((start, Tok::Int(s.to_string())));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_ascii_lowercase())));
            }
            _ => {
                return Err(Error::ElementSyntax { pos: i, msg: format!("unexpected {c:?}") });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    group: &'a Arc<Group>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ElementSyntax { pos: self.here(), msg: msg.into() })
    }

    fn parse_int(&mut self) -> Result<i64> {
        match self.bump() {
            Some(Tok::Int(s)) => {
                s.parse::<i64>().map_err(|_| Error::ElementSyntax {
                    pos: self.here(),
                    msg: format!("integer {s} out of range"),
                })
            }
            _ => self.err("expected integer"),
        }
    }

    // One group atom: "1", gen[^int], or <index>.
    fn parse_atom(&mut self) -> Result<usize> {
        match self.bump() {
            Some(Tok::Int(s)) if s == "1" => Ok(0),
            Some(Tok::Langle) => {
                let idx = self.parse_int()?;
                if self.bump() != Some(Tok::Rangle) {
                    return self.err("expected '>'");
                }
                if idx < 0 || idx as usize >= self.group.order() {
                    return self.err(format!("listing index {idx} out of range"));
                }
                Ok(idx as usize)
            }
            Some(Tok::Ident(name)) => {
                let exp = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    self.parse_int()?
                } else {
                    1
                };
                match self.group.symbol_power(&name, exp) {
                    Some(idx) => Ok(idx),
                    None => self.err(format!("unknown generator symbol {name:?}")),
                }
            }
            _ => self.err("expected '1', a generator symbol, or '<index>'"),
        }
    }

    // term = [int "*"] atom {"*" atom} | int
    fn parse_term(&mut self) -> Result<(usize, BigInt)> {
        let mut coeff = BigInt::one();
        if let Some(Tok::Int(s)) = self.peek() {
            if s != "1" || !matches!(self.toks.get(self.pos + 1), Some((_, Tok::Caret))) {
                let s = s.clone();
                // Bare "1" is the identity atom; any other integer (or "1*...")
                // is a coefficient.
                let is_coeff = s != "1" || matches!(self.toks.get(self.pos + 1), Some((_, Tok::Star)));
                if is_coeff {
                    self.bump();
                    coeff = s.parse::<BigInt>().unwrap();
                    if self.peek() == Some(&Tok::Star) {
                        self.bump();
                    } else {
                        return Ok((0, coeff)); // bare integer: coeff * identity
                    }
                }
            }
        }
        let mut index = self.parse_atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let next = self.parse_atom()?;
            index = self.group.mul(index, next);
        }
        Ok((index, coeff))
    }
}

/// Parses element text against the grammar in the module docs.
pub fn parse_element(text: &str, group: &Arc<Group>, ring: RingSpec) -> Result<GroupRingElement> {
    let toks = tokenize(text)?;
    let mut parser = Parser { toks: &toks, pos: 0, group, end: text.len() };
    let mut elem = GroupRingElement::zero(group.clone(), ring);
    if parser.peek().is_none() {
        return parser.err("empty element text");
    }
    // "0" alone denotes the zero element.
    if toks.len() == 1 {
        if let Tok::Int(s) = &toks[0].1 {
            if s == "0" {
                return Ok(elem);
            }
        }
    }
    loop {
        let (index, coeff) = parser.parse_term()?;
        elem.add_term_big(index, &coeff);
        match parser.bump() {
            None => break,
            Some(Tok::Plus) => continue,
            _ => {
                parser.pos -= 1;
                return parser.err("expected '+' or end of input");
            }
        }
    }
    Ok(elem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_group, GroupSpec};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn grp(text: &str) -> Arc<Group> {
        make_group(GroupSpec::parse(text).unwrap()).unwrap()
    }

    fn rand_elem(g: &Arc<Group>, ring: RingSpec, rng: &mut StdRng) -> GroupRingElement {
        let mut e = GroupRingElement::zero(g.clone(), ring);
        for i in 0..g.order() {
            e.add_term(i, rng.gen_range(0..7));
        }
        e
    }

    #[test]
    fn parse_examples() {
        let c7 = grp("C7");
        let u = parse_element("1 + g^2 + g^5", &c7, RingSpec::gf(2).unwrap()).unwrap();
        assert_eq!(u.support(), vec![0, 2, 5]);

        let d6 = grp("D6");
        let v = parse_element("1 + a*b + a*b^2", &d6, RingSpec::gf(2).unwrap()).unwrap();
        assert_eq!(v.support(), vec![0, 4, 5]);

        let c3 = grp("C3");
        let w = parse_element("2*g + 3*g^2", &c3, RingSpec::integers()).unwrap();
        assert_eq!(w.coeff_int(0), BigInt::from(0));
        assert_eq!(w.coeff_int(1), BigInt::from(2));
        assert_eq!(w.coeff_int(2), BigInt::from(3));
    }

    #[test]
    fn parse_reduces_exponents_and_coefficients() {
        let c7 = grp("C7");
        let gf3 = RingSpec::gf(3).unwrap();
        let u = parse_element("4*g^9", &c7, gf3).unwrap();
        assert_eq!(u.support(), vec![2]);
        assert_eq!(u.coeff(2), 1);
        let v = parse_element("g^-2", &c7, gf3).unwrap();
        assert_eq!(v.support(), vec![5]);
    }

    #[test]
    fn parse_errors_carry_position() {
        let c7 = grp("C7");
        let gf2 = RingSpec::gf(2).unwrap();
        match parse_element("1 + q^2", &c7, gf2) {
            Err(Error::ElementSyntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_element("1 + + g", &c7, gf2).is_err());
        assert!(parse_element("", &c7, gf2).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let mut rng = StdRng::seed_from_u64(11);
        for gt in ["C7", "D8", "C4xC2", "E2^3"] {
            let g = grp(gt);
            for ring in [RingSpec::gf(2).unwrap(), RingSpec::gf(5).unwrap(), RingSpec::integers()] {
                for _ in 0..20 {
                    let e = rand_elem(&g, ring, &mut rng);
                    let back = parse_element(&e.to_text(), &g, ring).unwrap();
                    assert_eq!(e, back, "round trip in {gt} over {ring}");
                    let back2 = parse_element(&e.to_compact_text(), &g, ring).unwrap();
                    assert_eq!(e, back2);
                }
            }
        }
    }

    #[test]
    fn add_and_char2() {
        let c2 = grp("C2");
        let gf2 = RingSpec::gf(2).unwrap();
        let u = parse_element("1+g", &c2, gf2).unwrap();
        assert!(u.add(&u).unwrap().is_zero());
        let z = grp("C2");
        let a = parse_element("1 + g", &z, RingSpec::integers()).unwrap();
        let b = parse_element("2 + 3*g", &z, RingSpec::integers()).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.coeff_int(0), BigInt::from(3));
        assert_eq!(s.coeff_int(1), BigInt::from(4));
    }

    #[test]
    fn mul_matches_paper_examples() {
        let gf2 = RingSpec::gf(2).unwrap();
        // (1+g)(1+g+...+g^{n-1}) = 0 over GF(2)
        let c5 = grp("C5");
        let u = parse_element("1+g", &c5, gf2).unwrap();
        let all = GroupRingElement::from_support(c5.clone(), gf2, &[0, 1, 2, 3, 4]).unwrap();
        assert!(u.mul(&all).unwrap().is_zero());

        // u = 1 + h(a+a^2+a^3) in GF(2)(C4xC2) squares to zero
        let g = grp("C4xC2");
        let u = parse_element("1 + h*a + h*a^2 + h*a^3", &g, gf2).unwrap();
        assert!(u.mul(&u).unwrap().is_zero());
        assert!(u.is_symmetric());

        // identity law
        let one = GroupRingElement::one(g.clone(), gf2);
        assert_eq!(u.mul(&one).unwrap(), u);
    }

    #[test]
    fn transpose_props() {
        let gf2 = RingSpec::gf(2).unwrap();
        let c14 = grp("C14");
        let u = parse_element("1+g^2+g^5+g^9+g^12", &c14, gf2).unwrap();
        assert!(u.is_symmetric()); // {2,5,9,12} closed under negation mod 14
        let cn = grp("C6");
        let v = parse_element("g", &cn, gf2).unwrap();
        assert_eq!(v.transpose().support(), vec![5]);
    }

    #[test]
    fn weight_counts() {
        let c7 = grp("C7");
        let gf2 = RingSpec::gf(2).unwrap();
        assert_eq!(GroupRingElement::zero(c7.clone(), gf2).weight(), 0);
        assert_eq!(parse_element("1+g^2+g^5", &c7, gf2).unwrap().weight(), 3);
        let z = parse_element("2*g", &c7, RingSpec::integers()).unwrap();
        assert_eq!(z.weight(), 1);
    }

    #[test]
    fn cyclic_mul_is_polynomial_mul() {
        // For cyclic groups the convolution is multiplication mod x^n - 1.
        let mut rng = StdRng::seed_from_u64(3);
        let c8 = grp("C8");
        let gf5 = RingSpec::gf(5).unwrap();
        for _ in 0..50 {
            let a = rand_elem(&c8, gf5, &mut rng);
            let b = rand_elem(&c8, gf5, &mut rng);
            let c = a.mul(&b).unwrap();
            let mut expect = [0u32; 8];
            for i in 0..8 {
                for j in 0..8 {
                    expect[(i + j) % 8] += a.coeff(i) as u32 * b.coeff(j) as u32;
                }
            }
            for k in 0..8 {
                assert_eq!(c.coeff(k) as u32, expect[k] % 5);
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms_random(seed in 0u64..500) {
            let mut rng = StdRng::seed_from_u64(seed);
            let g = grp("D6");
            let ring = RingSpec::gf(3).unwrap();
            let a = rand_elem(&g, ring, &mut rng);
            let b = rand_elem(&g, ring, &mut rng);
            let c = rand_elem(&g, ring, &mut rng);
            // associativity and distributivity
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(),
                            a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(),
                            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            // transpose is an involutive anti-homomorphism
            prop_assert_eq!(a.transpose().transpose(), a.clone());
            prop_assert_eq!(a.mul(&b).unwrap().transpose(),
                            b.transpose().mul(&a.transpose()).unwrap());
        }
    }
}
