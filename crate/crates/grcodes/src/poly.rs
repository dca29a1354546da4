//! Polynomials over GF(p) with ascending coefficients, for the cyclic
//! group ring RC_n ~ GF(p)[x]/(x^n - 1): gcd, division and extended Euclid.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupring::{fp_inv, GroupRingElement, RingSpec};
use crate::groups::Group;

/// Polynomial over GF(p); coefficient i multiplies x^i, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    p: u16,
    coeffs: Vec<u16>,
}

impl Poly {
    pub fn new(p: u16, mut coeffs: Vec<u16>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn zero(p: u16) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u16) -> Self {
        Poly { p, coeffs: vec![1] }
    }

    /// x^n - 1.
    pub fn x_n_minus_1(p: u16, n: usize) -> Self {
        let mut coeffs = vec![0u16; n + 1];
        coeffs[0] = p - 1;
        coeffs[n] = 1;
        Poly::new(p, coeffs)
    }

    /// Reads a cyclic group ring element as a polynomial of degree < n.
    pub fn from_element(u: &GroupRingElement) -> Self {
        let p = u.ring().char().expect("polynomials live over prime fields");
        Poly::new(p, (0..u.order()).map(|i| u.coeff(i)).collect())
    }

    /// Writes the polynomial back as an element, reducing mod x^n - 1.
    pub fn to_element(&self, group: Arc<Group>, ring: RingSpec) -> Result<GroupRingElement> {
        let n = group.order();
        let terms: Vec<(usize, i64)> =
            self.coeffs.iter().enumerate().map(|(i, &c)| (i % n, c as i64)).collect();
        GroupRingElement::from_terms(group, ring, &terms)
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let p = self.p as u32;
        Poly::new(
            self.p,
            (0..len).map(|i| ((self.coeff(i) as u32 + other.coeff(i) as u32) % p) as u16).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let p = self.p as u32;
        Poly::new(
            self.p,
            (0..len)
                .map(|i| {
                    ((self.coeff(i) as u32 + p - other.coeff(i) as u32 % p) % p) as u16
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Poly::new(self.p, out.into_iter().map(|v| v as u16).collect())
    }

    pub fn scale(&self, f: u16) -> Poly {
        let p = self.p as u32;
        Poly::new(self.p, self.coeffs.iter().map(|&c| (c as u32 * f as u32 % p) as u16).collect())
    }

    /// Monic multiple of itself (leading coefficient scaled to 1).
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => self.scale(fp_inv(lead, self.p)),
        }
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p as u32;
        let dd = divisor.degree().unwrap();
        let lead_inv = fp_inv(*divisor.coeffs.last().unwrap(), self.p) as u32;
        let mut rem: Vec<u16> = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u16; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] as u32;
            if c == 0 {
                continue;
            }
            let q = (c * lead_inv % p) as u16;
            quot[i - dd] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let t = rem[i - dd + j] as u32 + p - (q as u32 * dc as u32 % p);
                rem[i - dd + j] = (t % p) as u16;
            }
        }
        (Poly::new(self.p, quot), Poly::new(self.p, rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
        let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        if let Some(&lead) = r0.coeffs.last() {
            if lead != 1 {
                let f = fp_inv(lead, p);
                return (r0.scale(f), s0.scale(f), t0.scale(f));
            }
        }
        (r0, s0, t0)
    }
}

/// Inverse of u in GF(p)[x]/(x^n - 1) via extended Euclid; the gcd is the
/// zero-divisor certificate when u is not a unit.
pub fn inverse_mod_x_n_minus_1(u: &Poly, n: usize) -> Result<Poly> {
    let modulus = Poly::x_n_minus_1(u.p, n);
    let (g, s, _) = u.ext_gcd(&modulus);
    if g.degree() != Some(0) {
        let text = poly_text(&g);
        return Err(Error::NotAUnit { certificate: Some(text) });
    }
    let (_, reduced) = s.divmod(&modulus);
    Ok(reduced)
}

fn poly_text(p: &Poly) -> String {
    let terms: Vec<String> = p
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
