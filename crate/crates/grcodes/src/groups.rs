//! Finite groups with fixed canonical listings.
//!
//! Supported kinds: cyclic C_n, dihedral D_2n, elementary abelian 2-groups,
//! and direct products. Every group carries one canonical listing so that
//! RG-matrices and exported generator matrices are reproducible:
//!
//! * cyclic:   `1, g, g^2, ..., g^{n-1}`
//! * dihedral: `1, b, ..., b^{n-1}, a, ab, ..., ab^{n-1}` (a^2 = b^n = 1, ab = b^{-1}a)
//! * elementary abelian 2 of rank m: lexicographic bit vectors
//! * product:  lexicographic over the factor listings, first factor slowest
//!
//! Index 0 is always the identity.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported group order.
pub const MAX_ORDER: usize = 1 << 16;
/// Multiplication tables are materialized only up to this order.
const TABLE_LIMIT: usize = 4096;

/// Shape of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order n.
    Cyclic(usize),
    /// Dihedral group of order 2n (n is the rotation subgroup order).
    Dihedral(usize),
    /// Elementary abelian 2-group of rank m, order 2^m.
    ElementaryAbelian2(u32),
    /// Direct product of the listed factors.
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Group order implied by the shape (saturating, so oversized specs
    /// fail validation instead of overflowing).
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => n.saturating_mul(2),
            GroupSpec::ElementaryAbelian2(m) => 1usize.checked_shl(*m).unwrap_or(usize::MAX),
            GroupSpec::Product(fs) => {
                fs.iter().map(|f| f.order()).fold(1usize, |a, b| a.saturating_mul(b))
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::InvalidGroupSpec("cyclic order must be >= 1".into()));
                }
            }
            GroupSpec::Dihedral(n) => {
                if *n == 0 {
                    return Err(Error::InvalidGroupSpec("dihedral requires n >= 1".into()));
                }
            }
            GroupSpec::ElementaryAbelian2(m) => {
                if *m >= 17 {
                    return Err(Error::InvalidGroupSpec(format!("rank {m} exceeds 2^16 order cap")));
                }
            }
            GroupSpec::Product(fs) => {
                if fs.is_empty() {
                    return Err(Error::InvalidGroupSpec("product of zero factors".into()));
                }
                for f in fs {
                    f.validate()?;
                }
            }
        }
        if self.order() > MAX_ORDER {
            return Err(Error::InvalidGroupSpec(format!(
                "order {} exceeds the supported maximum {MAX_ORDER}",
                self.order()
            )));
        }
        Ok(())
    }

    /// Parses the CLI grammar: `C<n>`, `D<2n>` (total order), `E2^<m>` and
    /// products joined by `x`, e.g. `C4xC2`, `C5x(C3xC2)`. Case-insensitive,
    /// whitespace ignored.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let upper = compact.to_ascii_uppercase();
        let bytes = upper.as_bytes();
        let mut pos = 0usize;
        let spec = parse_product(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::InvalidGroupSpec(format!(
                "unexpected trailing input at position {pos} in {text:?}"
            )));
        }
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_product(b: &[u8], pos: &mut usize) -> Result<GroupSpec> {
    let mut factors = vec![parse_atom(b, pos)?];
    while *pos < b.len() && b[*pos] == b'X' {
        *pos += 1;
        factors.push(parse_atom(b, pos)?);
    }
    Ok(if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        GroupSpec::Product(factors)
    })
}

fn parse_atom(b: &[u8], pos: &mut usize) -> Result<GroupSpec> {
    let bad = |p: usize, msg: &str| Error::InvalidGroupSpec(format!("{msg} at position {p}"));
    match b.get(*pos) {
        Some(b'(') => {
            *pos += 1;
            let inner = parse_product(b, pos)?;
            if b.get(*pos) != Some(&b')') {
                return Err(bad(*pos, "expected ')'"));
            }
            *pos += 1;
            Ok(inner)
        }
        Some(b'C') => {
            *pos += 1;
            Ok(GroupSpec::Cyclic(parse_int(b, pos)?))
        }
        Some(b'D') => {
            *pos += 1;
            let total = parse_int(b, pos)?;
            if total % 2 != 0 || total == 0 {
                return Err(bad(*pos, "dihedral order must be even and positive"));
            }
            Ok(GroupSpec::Dihedral(total / 2))
        }
        Some(b'E') => {
            // E2^<m>
            *pos += 1;
            if b.get(*pos) != Some(&b'2') || b.get(*pos + 1) != Some(&b'^') {
                return Err(bad(*pos, "expected E2^<m>"));
            }
            *pos += 2;
            Ok(GroupSpec::ElementaryAbelian2(parse_int(b, pos)? as u32))
        }
        _ => Err(bad(*pos, "expected C<n>, D<2n>, E2^<m> or '('")),
    }
}

fn parse_int(b: &[u8], pos: &mut usize) -> Result<usize> {
    let start = *pos;
    while *pos < b.len() && b[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::InvalidGroupSpec(format!("expected integer at position {start}")));
    }
    std::str::from_utf8(&b[start..*pos])
        .unwrap()
        .parse::<usize>()
        .map_err(|_| Error::InvalidGroupSpec("integer overflow".into()))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{}", 2 * n),
            GroupSpec::ElementaryAbelian2(m) => write!(f, "E2^{m}"),
            GroupSpec::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    if matches!(g, GroupSpec::Product(_)) {
                        write!(f, "({g})")?;
                    } else {
                        write!(f, "{g}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A named generator usable in element text (`g`, `a`, `b`, `h`, `e1`, ...).
#[derive(Debug, Clone)]
pub struct Generator {
    pub symbol: String,
    /// Listing index of the generator itself.
    pub index: usize,
    /// Order of the generator (exponents are reduced modulo this).
    pub order: usize,
}

/// A finite group under its canonical listing.
///
/// Immutable after construction; share via [`Arc`].
#[derive(Debug)]
pub struct Group {
    spec: GroupSpec,
    order: usize,
    inv_table: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    generators: Vec<Generator>,
}

/// Builds the group for a spec, materializing tables as size permits.
pub fn make_group(spec: GroupSpec) -> Result<Arc<Group>> {
    spec.validate()?;
    let order = spec.order();
    let inv_table = (0..order).map(|i| inv_structural(&spec, i) as u32).collect();
    let mul_table = if order <= TABLE_LIMIT {
        let mut t = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                t[i * order + j] = mul_structural(&spec, i, j) as u32;
            }
        }
        Some(t)
    } else {
        None
    };
    let generators = make_generators(&spec);
    Ok(Arc::new(Group { spec, order, inv_table, mul_table, generators }))
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Group product of listing indices.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        assert!(g < self.order && h < self.order, "element index out of range");
        match &self.mul_table {
            Some(t) => t[g * self.order + h] as usize,
            None => mul_structural(&self.spec, g, h),
        }
    }

    /// Inverse of a listing index.
    pub fn inv(&self, g: usize) -> usize {
        assert!(g < self.order, "element index out of range");
        self.inv_table[g] as usize
    }

    /// g raised to an integer power (negative exponents use the inverse).
    pub fn pow(&self, g: usize, e: i64) -> usize {
        let (mut base, mut e) = if e < 0 { (self.inv(g), (-e) as u64) } else { (g, e as u64) };
        let mut acc = 0usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Named generators available for element text in this group.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn generator(&self, symbol: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.symbol == symbol)
    }

    /// Listing index for `symbol^exp`; exponents reduce modulo the generator order.
    pub fn symbol_power(&self, symbol: &str, exp: i64) -> Option<usize> {
        let gen = self.generator(symbol)?;
        let e = exp.rem_euclid(gen.order as i64);
        Some(self.pow(gen.index, e))
    }

    /// Canonical display name of a listing element (`1`, `g^2`, `a*b^3`, ...).
    pub fn element_name(&self, index: usize) -> String {
        assert!(index < self.order, "element index out of range");
        if index == 0 {
            return "1".to_string();
        }
        match &self.spec {
            GroupSpec::Cyclic(_) => power_name("g", index),
            GroupSpec::Dihedral(n) => {
                let (refl, rot) = (index / n, index % n);
                match (refl, rot) {
                    (0, r) => power_name("b", r),
                    (1, 0) => "a".to_string(),
                    (1, r) => format!("a*{}", power_name("b", r)),
                    _ => unreachable!(),
                }
            }
            GroupSpec::ElementaryAbelian2(m) => {
                let parts: Vec<String> = (0..*m)
                    .filter(|k| index >> (m - 1 - k) & 1 == 1)
                    .map(|k| format!("e{}", k + 1))
                    .collect();
                parts.join("*")
            }
            GroupSpec::Product(fs) => {
                if let Some(parts) = product_name(fs, index) {
                    parts
                } else {
                    format!("<{index}>")
                }
            }
        }
    }
}

fn power_name(sym: &str, e: usize) -> String {
    if e == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{e}")
    }
}

fn product_name(factors: &[GroupSpec], index: usize) -> Option<String> {
    let mut idx = index;
    let mut exps = vec![0usize; factors.len()];
    for (k, f) in factors.iter().enumerate().rev() {
        let o = f.order();
        exps[k] = idx % o;
        idx /= o;
    }
    let mut parts = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        if !matches!(f, GroupSpec::Cyclic(_)) {
            return None;
        }
        if exps[k] != 0 {
            let sym = (b'a' + k as u8) as char;
            parts.push(power_name(&sym.to_string(), exps[k]));
        }
    }
    Some(parts.join("*"))
}

fn make_generators(spec: &GroupSpec) -> Vec<Generator> {
    let mut gens = Vec::new();
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n >= 2 {
                gens.push(Generator { symbol: "g".into(), index: 1, order: *n });
            }
        }
        GroupSpec::Dihedral(n) => {
            if *n >= 2 {
                gens.push(Generator { symbol: "b".into(), index: 1, order: *n });
            }
            gens.push(Generator { symbol: "a".into(), index: *n, order: 2 });
        }
        GroupSpec::ElementaryAbelian2(m) => {
            for k in 0..*m {
                gens.push(Generator {
                    symbol: format!("e{}", k + 1),
                    index: 1usize << (m - 1 - k),
                    order: 2,
                });
            }
        }
        GroupSpec::Product(fs) => {
            if fs.iter().all(|f| matches!(f, GroupSpec::Cyclic(_))) && fs.len() <= 8 {
                let mut stride = 1usize;
                let mut strides = vec![0usize; fs.len()];
                for (k, f) in fs.iter().enumerate().rev() {
                    strides[k] = stride;
                    stride *= f.order();
                }
                let mut h_assigned = false;
                for (k, f) in fs.iter().enumerate() {
                    let o = f.order();
                    if o < 2 {
                        continue;
                    }
                    let sym = (b'a' + k as u8) as char;
                    gens.push(Generator { symbol: sym.to_string(), index: strides[k], order: o });
                    // `h` aliases the first C2 factor, the customary name
                    // for the order-2 generator in product examples.
                    if o == 2 && !h_assigned {
                        gens.push(Generator { symbol: "h".into(), index: strides[k], order: 2 });
                        h_assigned = true;
                    }
                }
            }
        }
    }
    gens
}

fn mul_structural(spec: &GroupSpec, g: usize, h: usize) -> usize {
    match spec {
        GroupSpec::Cyclic(n) => (g + h) % n,
        GroupSpec::Dihedral(n) => {
            let (s, i) = (g / n, g % n);
            let (t, j) = (h / n, h % n);
            // a^s b^i * a^t b^j = a^(s xor t) b^(j + (-1)^t i)
            let i_signed = if t == 1 { (n - i) % n } else { i };
            ((s ^ t) * n) + (i_signed + j) % n
        }
        GroupSpec::ElementaryAbelian2(_) => g ^ h,
        GroupSpec::Product(fs) => {
            let mut result = 0usize;
            let mut g = g;
            let mut h = h;
            // Decompose both indices mixed-radix (first factor slowest),
            // multiply componentwise, recompose.
            let mut components = Vec::with_capacity(fs.len());
            for f in fs.iter().rev() {
                let o = f.order();
                components.push((f, g % o, h % o));
                g /= o;
                h /= o;
            }
            for (f, gi, hi) in components.into_iter().rev() {
                result = result * f.order() + mul_structural(f, gi, hi);
            }
            result
        }
    }
}

fn inv_structural(spec: &GroupSpec, g: usize) -> usize {
    match spec {
        GroupSpec::Cyclic(n) => (n - g % n) % n,
        GroupSpec::Dihedral(n) => {
            let (s, i) = (g / n, g % n);
            if s == 1 {
                g // reflections are involutions
            } else {
                (n - i) % n
            }
        }
        GroupSpec::ElementaryAbelian2(_) => g,
        GroupSpec::Product(fs) => {
            let mut result = 0usize;
            let mut g = g;
            let mut components = Vec::with_capacity(fs.len());
            for f in fs.iter().rev() {
                let o = f.order();
                components.push((f, g % o));
                g /= o;
            }
            for (f, gi) in components.into_iter().rev() {
                result = result * f.order() + inv_structural(f, gi);
            }
            result
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn group(text: &str) -> Arc<Group> {
        make_group(GroupSpec::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_listing() {
        let g = group("C4");
        assert_eq!(g.order(), 4);
        assert_eq!(g.mul(1, 2), 3);
        assert_eq!(g.mul(3, 2), 1);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.element_name(2), "g^2");
    }

    #[test]
    fn dihedral_presentation() {
        // D6: mul(a, b) = ab, mul(b, a) = ab^2 since ba = ab^-1.
        let g = group("D6");
        assert_eq!(g.order(), 6);
        let a = 3;
        let b = 1;
        assert_eq!(g.mul(a, b), 4); // ab
        assert_eq!(g.mul(b, a), 5); // ab^2
        assert_eq!(g.mul(b, g.mul(b, b)), 0); // b^3 = 1
        // reflections are involutions
        for i in 3..6 {
            assert_eq!(g.inv(i), i);
            assert_eq!(g.mul(i, i), 0);
        }
        assert_eq!(g.element_name(5), "a*b^2");
    }

    #[test]
    fn product_listing_first_factor_slowest() {
        let g = group("C4xC2");
        assert_eq!(g.order(), 8);
        // index = 2*exp_a + exp_h with a the C4 generator
        let a = g.symbol_power("a", 1).unwrap();
        let h = g.symbol_power("h", 1).unwrap();
        assert_eq!(a, 2);
        assert_eq!(h, 1);
        // (h,a) * (h,a^3) = identity componentwise
        let ha = g.mul(h, a);
        let ha3 = g.mul(h, g.pow(a, 3));
        assert_eq!(g.mul(ha, ha3), 0);
        assert_eq!(g.element_name(3), "a*b"); // a^1 h^1, h aliases b here
    }

    #[test]
    fn elementary_abelian_is_xor() {
        let g = group("E2^3");
        assert_eq!(g.order(), 8);
        assert_eq!(g.mul(5, 3), 6);
        assert_eq!(g.inv(6), 6);
        assert_eq!(g.element_name(5), "e1*e3");
        assert_eq!(g.symbol_power("e2", 1), Some(2));
    }

    #[test]
    fn nested_product_parse() {
        let g = group("C5x(C3xC2)");
        assert_eq!(g.order(), 30);
        assert_eq!(GroupSpec::parse("c5 X (c3 x c2)").unwrap().order(), 30);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GroupSpec::parse("C0").is_err());
        assert!(GroupSpec::parse("D7").is_err());
        assert!(GroupSpec::parse("Q8").is_err());
        assert!(GroupSpec::parse("C4x").is_err());
        assert!(make_group(GroupSpec::Product(vec![])).is_err());
    }

    #[test]
    fn group_axioms_random() {
        let mut rng = StdRng::seed_from_u64(7);
        for text in ["C7", "C16", "D6", "D16", "E2^4", "C4xC2", "C3x(C2xC2)", "D8xC2"] {
            let g = group(text);
            let n = g.order();
            for _ in 0..200 {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)), "assoc in {text}");
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
                assert_eq!(g.inv(g.inv(x)), x);
            }
            // Latin square property: rows and columns are permutations.
            for i in 0..n.min(12) {
                let mut row: Vec<usize> = (0..n).map(|j| g.mul(i, j)).collect();
                let mut col: Vec<usize> = (0..n).map(|j| g.mul(j, i)).collect();
                row.sort_unstable();
                col.sort_unstable();
                assert!(row.iter().enumerate().all(|(k, &v)| k == v));
                assert!(col.iter().enumerate().all(|(k, &v)| k == v));
            }
        }
    }

    #[test]
    fn large_group_lazy_tables() {
        let g = group("C5000");
        assert_eq!(g.order(), 5000);
        assert_eq!(g.mul(4999, 2), 1);
        assert_eq!(g.inv(1), 4999);
    }
}
