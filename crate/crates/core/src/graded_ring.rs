//! Truncated graded-commutative algebras over the rationals.
//!
//! A [`Ring`] is presented by an ordered list of [`Generator`]s, each with a
//! degree and a truncation exponent (the smallest power that vanishes). The
//! declaration order is the normal order of monomials: a [`Monomial`] is
//! simply its exponent vector, and the product of two monomials picks up the
//! Koszul sign of the odd-odd transpositions needed to merge them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub};

use num_traits::{One, Zero};

use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
    truncation: u32,
}

impl Generator {
    /// A generator `g` of the given degree with `g^truncation = 0`.
    ///
    /// A truncation of 1 is admitted and makes the generator zero; this is
    /// what `α^n` degenerates to when `n = 1`.
    pub fn new(name: impl Into<String>, degree: u32, truncation: u32) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::InvalidGenerator { name, reason: "empty name" });
        }
        if truncation == 0 {
            return Err(Error::InvalidGenerator {
                name,
                reason: "truncation must be at least 1",
            });
        }
        if degree % 2 == 1 && truncation > 2 {
            return Err(Error::InvalidGenerator {
                name,
                reason: "odd generators square to zero, truncation must be at most 2",
            });
        }
        Ok(Generator { name, degree, truncation })
    }

    /// Exterior generator, `g^2 = 0`.
    pub fn exterior(name: impl Into<String>, degree: u32) -> Result<Self> {
        Self::new(name, degree, 2)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Exponent vector, indexed by generator position in its ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// Wraps an exponent vector without checking it against a ring; see
    /// [`Ring::monomial`] for the checked constructor.
    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, position: usize) -> u32 {
        self.0[position]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `other / self` if `self` divides `other` exponent-wise.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| b.checked_sub(a))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

struct RingInner {
    label: String,
    generators: Vec<Generator>,
}

/// Truncated graded-commutative algebra `Q[g_1, ..., g_r] / (g_i^{t_i})`.
///
/// Cloning is cheap; the generator table is shared.
#[derive(Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.generators == other.inner.generators
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.inner.label)
            .field("generators", &self.inner.generators)
            .finish()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.label)
    }
}

impl Ring {
    pub fn new(label: impl Into<String>, generators: Vec<Generator>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Ring {
            inner: Arc::new(RingInner { label: label.into(), generators }),
        })
    }

    /// The ground field `Q`, concentrated in degree 0.
    pub fn rationals() -> Self {
        Ring::new("Q", Vec::new()).expect("no generators")
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn generators(&self) -> &[Generator] {
        &self.inner.generators
    }

    pub fn rank(&self) -> usize {
        self.inner.generators.len()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.inner.generators.iter().position(|g| g.name == name)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.label().to_string(),
                right: other.label().to_string(),
            })
        }
    }

    /// Checked monomial constructor.
    pub fn monomial(&self, exponents: Vec<u32>) -> Result<Monomial> {
        if exponents.len() != self.rank() {
            return Err(Error::OutOfRange {
                what: "exponent vector length",
                value: exponents.len() as i64,
                bound: format!("ring {} has {} generators", self.label(), self.rank()),
            });
        }
        for (g, &e) in self.generators().iter().zip(&exponents) {
            if e >= g.truncation {
                return Err(Error::OutOfRange {
                    what: "exponent",
                    value: e as i64,
                    bound: format!("{}^{} = 0", g.name, g.truncation),
                });
            }
        }
        Ok(Monomial(exponents))
    }

    /// Monomial from `(name, exponent)` pairs; unnamed generators get 0.
    pub fn monomial_of(&self, factors: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.rank()];
        for &(name, e) in factors {
            let pos = self.position(name).ok_or_else(|| Error::InvalidGenerator {
                name: name.to_string(),
                reason: "not a generator of this ring",
            })?;
            exps[pos] += e;
        }
        self.monomial(exps)
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        self.generators()
            .iter()
            .zip(m.exponents())
            .map(|(g, &e)| g.degree * e)
            .sum()
    }

    pub fn top_monomial(&self) -> Monomial {
        Monomial(self.generators().iter().map(|g| g.truncation - 1).collect())
    }

    pub fn top_degree(&self) -> u32 {
        self.generators()
            .iter()
            .map(|g| g.degree * (g.truncation - 1))
            .sum()
    }

    /// Total dimension over `Q`.
    pub fn dimension(&self) -> usize {
        self.generators().iter().map(|g| g.truncation as usize).product()
    }

    /// Product of two basis monomials in normal form, with its sign.
    /// `None` when some exponent reaches its truncation.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let mut out = Vec::with_capacity(self.rank());
        for ((g, &ea), &eb) in self.generators().iter().zip(a.exponents()).zip(b.exponents()) {
            let e = ea + eb;
            if e >= g.truncation {
                return None;
            }
            out.push(e);
        }
        Some((Monomial(out), self.koszul_negative(a, b)))
    }

    /// Parity of `Σ deg(g)·deg(h)·a_g·b_h` over generator pairs with
    /// `position(g) > position(h)`: the sign of moving every factor of `b`
    /// left past the later factors of `a`.
    pub fn koszul_negative(&self, a: &Monomial, b: &Monomial) -> bool {
        let mut odd_in_b_before = 0u32;
        let mut parity = 0u32;
        for ((g, &ea), &eb) in self.generators().iter().zip(a.exponents()).zip(b.exponents()) {
            if g.is_odd() {
                parity ^= (ea & 1) & (odd_in_b_before & 1);
                odd_in_b_before += eb;
            }
        }
        parity == 1
    }

    /// All monomials of degree exactly `d`, in lexicographic exponent order.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0; self.rank()];
        self.enumerate(0, d, &mut exps, &mut out);
        out
    }

    fn enumerate(&self, pos: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == self.rank() {
            if remaining == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let g = &self.generators()[pos];
        for e in 0..g.truncation {
            let used = g.degree * e;
            if used > remaining {
                break;
            }
            exps[pos] = e;
            self.enumerate(pos + 1, remaining - used, exps, out);
        }
        exps[pos] = 0;
    }

    /// Every basis monomial, grouped by increasing degree.
    pub fn full_basis(&self) -> Vec<Monomial> {
        (0..=self.top_degree()).flat_map(|d| self.basis(d)).collect()
    }

    /// `(degree, dimension)` for every degree in `0..=max_d`.
    pub fn poincare_series(&self, max_d: u32) -> Vec<(u32, usize)> {
        let len = max_d as usize + 1;
        let mut dims = vec![0usize; len];
        dims[0] = 1;
        for g in self.generators() {
            let mut next = vec![0usize; len];
            for (d, &c) in dims.iter().enumerate().filter(|(_, &c)| c > 0) {
                for e in 0..g.truncation as usize {
                    let shifted = d + e * g.degree as usize;
                    if shifted >= len {
                        break;
                    }
                    next[shifted] += c;
                }
            }
            dims = next;
        }
        dims.into_iter().enumerate().map(|(d, c)| (d as u32, c)).collect()
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> RingElement {
        self.monomial_element(Monomial::unit(self.rank()), Scalar::one())
    }

    pub fn monomial_element(&self, m: Monomial, coeff: Scalar) -> RingElement {
        let mut e = self.zero();
        add_term(&mut e.terms, m, coeff);
        e
    }

    /// The generator with the given name, as an element (zero if its
    /// truncation is 1).
    pub fn generator(&self, name: &str) -> Result<RingElement> {
        let pos = self.position(name).ok_or_else(|| Error::InvalidGenerator {
            name: name.to_string(),
            reason: "not a generator of this ring",
        })?;
        Ok(self.generator_at(pos))
    }

    pub fn generator_at(&self, pos: usize) -> RingElement {
        let g = &self.generators()[pos];
        if g.truncation < 2 {
            return self.zero();
        }
        let mut exps = vec![0; self.rank()];
        exps[pos] = 1;
        self.monomial_element(Monomial(exps), Scalar::one())
    }

    pub(crate) fn format_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if m.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, &e) in self.generators().iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&g.name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Adds `coeff · m` to a sparse coefficient map, dropping zeros.
pub(crate) fn add_term<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn signed(coeff: Scalar, negative: bool) -> Scalar {
    if negative {
        -coeff
    } else {
        coeff
    }
}

pub(crate) fn fmt_terms<'a>(
    ring: &Ring,
    terms: impl Iterator<Item = (&'a Monomial, &'a Scalar)>,
    wrap: (&str, &str),
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if !abs.is_one() {
            write!(f, "{abs}*")?;
        }
        f.write_str(wrap.0)?;
        ring.format_monomial(m, f)?;
        f.write_str(wrap.1)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Sparse rational combination of basis monomials of a [`Ring`].
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        homogeneous_degree(&self.ring, self.terms.keys())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &Scalar) -> RingElement {
        let mut out = self.ring.zero();
        for (m, v) in &self.terms {
            add_term(&mut out.terms, m.clone(), v * c);
        }
        out
    }

    pub fn cup(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = self.ring.multiply_monomials(ma, mb) {
                    add_term(&mut out.terms, m, signed(ca * cb, neg));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.cup(self).expect("same ring");
        }
        acc
    }

    fn combine(mut self, other: &RingElement, sign: bool) -> RingElement {
        assert!(self.ring == other.ring, "adding elements of different rings");
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), signed(c.clone(), sign));
        }
        self
    }
}

pub(crate) fn homogeneous_degree<'a>(
    ring: &Ring,
    mut monomials: impl Iterator<Item = &'a Monomial>,
) -> Option<u32> {
    let d = ring.degree_of(monomials.next()?);
    monomials.all(|m| ring.degree_of(m) == d).then_some(d)
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.ring, self.terms.iter(), ("", ""), f)
    }
}

impl Add<&RingElement> for RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.combine(rhs, false)
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        self.combine(&rhs, false)
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        let lhs = core::mem::replace(&mut self.terms, BTreeMap::new());
        let tmp = RingElement { ring: self.ring.clone(), terms: lhs };
        *self = tmp.combine(rhs, false);
    }
}

impl Sub<&RingElement> for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.combine(rhs, true)
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        self.combine(&rhs, true)
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&-Scalar::one())
    }
}

/// `x ⊗ y`, with the generators of `x` followed by those of `y`.
///
/// Cross products embed as product monomials without sign, so
/// `(a×b)∪(c×d) = (−1)^{deg b·deg c} (a∪c)×(b∪d)` falls out of the cup
/// sign rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorRing {
    ring: Ring,
    left: Ring,
    right: Ring,
}

/// Shorthand for [`TensorRing::new`].
pub fn tensor_ring(x: &Ring, y: &Ring) -> TensorRing {
    TensorRing::new(x, y)
}

impl TensorRing {
    pub fn new(left: &Ring, right: &Ring) -> Self {
        let mut gens: Vec<Generator> = left.generators().to_vec();
        for g in right.generators() {
            let mut g = g.clone();
            while gens.iter().any(|h| h.name == g.name) {
                g.name = format!("r.{}", g.name);
            }
            gens.push(g);
        }
        let ring = Ring::new(format!("{} ⊗ {}", left.label(), right.label()), gens)
            .expect("prefixing removes collisions");
        TensorRing { ring, left: left.clone(), right: right.clone() }
    }

    pub fn square(ring: &Ring) -> Self {
        Self::new(ring, ring)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn left(&self) -> &Ring {
        &self.left
    }

    pub fn right(&self) -> &Ring {
        &self.right
    }

    pub fn cross_monomial(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut exps = a.exponents().to_vec();
        exps.extend_from_slice(b.exponents());
        Monomial(exps)
    }

    pub fn split(&self, m: &Monomial) -> (Monomial, Monomial) {
        let (a, b) = m.exponents().split_at(self.left.rank());
        (Monomial(a.to_vec()), Monomial(b.to_vec()))
    }

    /// Cross product `a × b`.
    pub fn cross(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.left.check_same(&a.ring)?;
        self.right.check_same(&b.ring)?;
        let mut out = self.ring.zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                add_term(&mut out.terms, self.cross_monomial(ma, mb), ca * cb);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, scalar};

    /// `H*(Γ_2)` for `CP^2`: α:2, β:5, ξ1:1, ξ2:3, ξ3:1.
    fn gamma2_cp2() -> Ring {
        Ring::new(
            "Γ_2",
            vec![
                Generator::new("a", 2, 2).unwrap(),
                Generator::exterior("b", 5).unwrap(),
                Generator::exterior("x1", 1).unwrap(),
                Generator::exterior("x2", 3).unwrap(),
                Generator::exterior("x3", 1).unwrap(),
            ],
        )
        .unwrap()
    }

    fn sm_cp2() -> Ring {
        Ring::new(
            "SM",
            vec![Generator::new("a~", 2, 2).unwrap(), Generator::exterior("b~", 5).unwrap()],
        )
        .unwrap()
    }

    fn g(r: &Ring, name: &str) -> RingElement {
        r.generator(name).unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let r = gamma2_cp2();
        let x1x3 = r.monomial_element(r.monomial_of(&[("x1", 1), ("x3", 1)]).unwrap(), scalar(1));
        assert_eq!(g(&r, "x3").cup(&g(&r, "x1")).unwrap(), -x1x3.clone());
        assert_eq!(g(&r, "x1").cup(&g(&r, "x3")).unwrap(), x1x3);
    }

    #[test]
    fn alpha_squared_vanishes_for_n_2() {
        let r = gamma2_cp2();
        assert!(g(&r, "a").cup(&g(&r, "a")).unwrap().is_zero());
    }

    #[test]
    fn odd_sum_squares_to_zero() {
        let r = gamma2_cp2();
        let s = g(&r, "x1") + g(&r, "x3");
        assert!(s.cup(&s).unwrap().is_zero());
    }

    #[test]
    fn basis_in_low_and_top_degree() {
        let r = gamma2_cp2();
        let names = |ms: Vec<Monomial>| -> Vec<Vec<u32>> {
            ms.into_iter().map(|m| m.exponents().to_vec()).collect()
        };
        assert_eq!(
            names(r.basis(1)),
            vec![vec![0, 0, 0, 0, 1], vec![0, 0, 1, 0, 0]]
        );
        assert_eq!(r.basis(0), vec![Monomial::unit(5)]);
        assert_eq!(r.top_degree(), 12);
        assert_eq!(r.basis(12), vec![r.top_monomial()]);
        assert_eq!(r.top_monomial().exponents(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn tensor_square_of_sm() {
        let sm = sm_cp2();
        let t = tensor_ring(&sm, &sm);
        assert_eq!(t.ring().dimension(), 16);
        assert_eq!(t.ring().full_basis().len(), 16);
        let names: Vec<&str> = t.ring().generators().iter().map(|g| g.name()).collect();
        assert_eq!(names, ["a~", "b~", "r.a~", "r.b~"]);
        assert_eq!(t.cross(&sm.one(), &sm.one()).unwrap(), t.ring().one());
    }

    #[test]
    fn cross_product_sign_rule() {
        let sm = sm_cp2();
        let t = tensor_ring(&sm, &sm);
        let a = g(&sm, "a~");
        let b = g(&sm, "b~");
        let lhs = t.cross(&a, &b).unwrap().cup(&t.cross(&b, &sm.one()).unwrap()).unwrap();
        let ab = a.cup(&b).unwrap();
        assert_eq!(lhs, -t.cross(&ab, &b).unwrap());
    }

    #[test]
    fn poincare_series_of_sm() {
        let dims: Vec<usize> = sm_cp2().poincare_series(7).into_iter().map(|(_, c)| c).collect();
        assert_eq!(dims, [1, 0, 1, 0, 0, 1, 0, 1]);
        assert_eq!(Ring::rationals().poincare_series(3), [(0, 1), (1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn series_matches_enumeration() {
        let r = gamma2_cp2();
        for (d, c) in r.poincare_series(14) {
            assert_eq!(r.basis(d).len(), c, "degree {d}");
        }
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = gamma2_cp2().one();
        let b = sm_cp2().one();
        assert!(matches!(a.cup(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn generator_validation() {
        assert!(Generator::new("x", 3, 3).is_err());
        assert!(Generator::new("x", 2, 0).is_err());
        assert!(Generator::new("", 2, 2).is_err());
        assert!(Generator::new("a", 2, 1).is_ok());
        let dup = Ring::new("r", vec![Generator::exterior("x", 1).unwrap(); 2]);
        assert!(matches!(dup, Err(Error::DuplicateGenerator(_))));
    }

    #[test]
    fn truncation_one_generator_is_zero() {
        let r = Ring::new("r", vec![Generator::new("a", 4, 1).unwrap()]).unwrap();
        assert!(r.generator("a").unwrap().is_zero());
        assert_eq!(r.dimension(), 1);
        assert_eq!(r.top_degree(), 0);
    }

    #[test]
    fn homogeneous_degree_query() {
        let r = gamma2_cp2();
        let mixed = g(&r, "a") + g(&r, "x1");
        assert_eq!(mixed.degree(), None);
        assert_eq!((g(&r, "x1") + g(&r, "x3")).degree(), Some(1));
        assert_eq!(r.zero().degree(), None);
        assert!(r.zero().is_homogeneous());
        assert_eq!(g(&r, "a").scale(&ratio(2, 3)).coefficient(&r.monomial_of(&[("a", 1)]).unwrap()), ratio(2, 3));
    }
}
