//! Homology as the dual of a cup ring.
//!
//! A [`HomologyElement`] is written in the basis dual to the monomial basis of
//! its [`Ring`]; `dual(m)` has the same degree as `m`. The cap product is
//! fixed by `⟨b, a ∩ x⟩ = ⟨b ∪ a, x⟩` and every oriented space has the dual
//! of its top monomial, with coefficient +1, as fundamental class. With
//! these two conventions Poincaré duality permutes signed basis elements, so
//! everything below is coordinate transport.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::graded_ring::{
    add_term, fmt_terms, homogeneous_degree, signed, Monomial, Ring, RingElement, TensorRing,
};
use crate::{Error, Result, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct HomologyElement {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomologyElement {
    pub fn zero(ring: &Ring) -> Self {
        HomologyElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    /// `coeff · dual(m)`.
    pub fn dual(ring: &Ring, m: Monomial, coeff: Scalar) -> Self {
        let mut x = Self::zero(ring);
        add_term(&mut x.terms, m, coeff);
        x
    }

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

    pub fn degree(&self) -> Option<u32> {
        homogeneous_degree(&self.ring, self.terms.keys())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The single `(monomial, coefficient)` pair of a one-term element.
    pub fn as_single(&self) -> Option<(&Monomial, &Scalar)> {
        let mut it = self.terms.iter();
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, v) in &self.terms {
            add_term(&mut out.terms, m.clone(), v * c);
        }
        out
    }

    pub(crate) fn add_dual(&mut self, m: Monomial, coeff: Scalar) {
        add_term(&mut self.terms, m, coeff);
    }

    fn combine(mut self, other: &HomologyElement, sign: bool) -> Self {
        assert!(self.ring == other.ring, "adding homology classes of different spaces");
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), signed(c.clone(), sign));
        }
        self
    }
}

impl fmt::Display for HomologyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.ring, self.terms.iter(), ("[", "]"), f)
    }
}

impl fmt::Debug for HomologyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in H_*({})", self.ring)
    }
}

impl Add for HomologyElement {
    type Output = HomologyElement;
    fn add(self, rhs: HomologyElement) -> HomologyElement {
        self.combine(&rhs, false)
    }
}

impl Sub for HomologyElement {
    type Output = HomologyElement;
    fn sub(self, rhs: HomologyElement) -> HomologyElement {
        self.combine(&rhs, true)
    }
}

impl Neg for HomologyElement {
    type Output = HomologyElement;
    fn neg(self) -> HomologyElement {
        self.scale(&-Scalar::one())
    }
}

/// Kronecker pairing `⟨c, x⟩ = Σ_m c(m)·x(m)`.
pub fn pairing(c: &RingElement, x: &HomologyElement) -> Result<Scalar> {
    c.ring().check_same(&x.ring)?;
    let mut acc = Scalar::zero();
    for (m, v) in c.terms() {
        if let Some(w) = x.terms.get(m) {
            acc += v * w;
        }
    }
    Ok(acc)
}

/// Cap product, determined by `⟨b, c ∩ x⟩ = ⟨b ∪ c, x⟩` for all `b`.
pub fn cap(c: &RingElement, x: &HomologyElement) -> Result<HomologyElement> {
    c.ring().check_same(&x.ring)?;
    let ring = &x.ring;
    let mut out = HomologyElement::zero(ring);
    for (u, cu) in c.terms() {
        for (v, xv) in &x.terms {
            // b ∪ u hits v only for b = v / u.
            if let Some(b) = u.quotient_of(v) {
                let neg = ring.koszul_negative(&b, u);
                out.add_dual(b, signed(cu * xv, neg));
            }
        }
    }
    Ok(out)
}

/// Ring homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<RingElement>,
}

impl RingMap {
    /// Checks that each image is homogeneous of its generator's degree and
    /// respects the generator's truncation.
    pub fn new(source: &Ring, target: &Ring, images: Vec<RingElement>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::InvalidRingMap(format!(
                "{} images for {} generators",
                images.len(),
                source.rank()
            )));
        }
        for (g, img) in source.generators().iter().zip(&images) {
            target.check_same(img.ring())?;
            if !img.is_zero() && img.degree() != Some(g.degree()) {
                return Err(Error::InvalidRingMap(format!(
                    "image of {} is not homogeneous of degree {}",
                    g.name(),
                    g.degree()
                )));
            }
            if !img.pow(g.truncation()).is_zero() {
                return Err(Error::InvalidRingMap(format!(
                    "image of {} does not satisfy {}^{} = 0",
                    g.name(),
                    g.name(),
                    g.truncation()
                )));
            }
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    /// Map sending each named source generator to the named target generator.
    pub fn by_names(source: &Ring, target: &Ring, assignment: &[(&str, &str)]) -> Result<Self> {
        let images = source
            .generators()
            .iter()
            .map(|g| {
                let (_, to) = assignment.iter().find(|(from, _)| *from == g.name()).ok_or_else(
                    || Error::InvalidRingMap(format!("no image given for {}", g.name())),
                )?;
                target.generator(to)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn apply_monomial(&self, m: &Monomial) -> RingElement {
        let mut acc = self.target.one();
        for (img, &e) in self.images.iter().zip(m.exponents()) {
            for _ in 0..e {
                acc = acc.cup(img).expect("images live in the target");
            }
        }
        acc
    }

    pub fn apply(&self, c: &RingElement) -> Result<RingElement> {
        self.source.check_same(c.ring())?;
        let mut out = self.target.zero();
        for (m, v) in c.terms() {
            out += &self.apply_monomial(m).scale(v);
        }
        Ok(out)
    }

    /// Induced map on homology, dual to the pullback:
    /// `⟨c, f_* x⟩ = ⟨f^* c, x⟩`.
    pub fn pushforward(&self, x: &HomologyElement) -> Result<HomologyElement> {
        self.target.check_same(&x.ring)?;
        let mut out = HomologyElement::zero(&self.source);
        for (v, xv) in &x.terms {
            for c in self.source.basis(self.target.degree_of(v)) {
                let coeff = self.apply_monomial(&c).coefficient(v);
                out.add_dual(c, coeff * xv);
            }
        }
        Ok(out)
    }
}

/// Closed oriented manifold, seen through its cohomology ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedSpace {
    ring: Ring,
    dimension: u32,
    fundamental: HomologyElement,
}

impl OrientedSpace {
    /// Orients by coefficient +1 on the dual of the top monomial.
    pub fn new(ring: Ring) -> Self {
        let fundamental = HomologyElement::dual(&ring, ring.top_monomial(), Scalar::one());
        OrientedSpace { dimension: ring.top_degree(), ring, fundamental }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn fundamental(&self) -> &HomologyElement {
        &self.fundamental
    }

    /// `c ∩ [M]`.
    pub fn pd(&self, c: &RingElement) -> Result<HomologyElement> {
        if !c.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        cap(c, &self.fundamental)
    }

    /// Inverse of [`pd`](Self::pd). `pd(u) = ±dual(top/u)`, so each term is
    /// transported to its complementary monomial.
    pub fn pd_inverse(&self, x: &HomologyElement) -> Result<RingElement> {
        self.ring.check_same(&x.ring)?;
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let top = self.ring.top_monomial();
        let mut out = self.ring.zero();
        for (v, xv) in &x.terms {
            let u = v.quotient_of(&top).expect("basis monomials divide the top monomial");
            let neg = self.ring.koszul_negative(v, &u);
            out += &self.ring.monomial_element(u, signed(xv.clone(), neg));
        }
        Ok(out)
    }
}

/// Gysin map `f_! = PD_E ∘ f^* ∘ PD_B^{-1}` for `f: E → B` with pullback
/// `f^*: H^*(B) → H^*(E)`. Raises degree by `dim E − dim B`.
pub fn gysin(
    pullback: &RingMap,
    base: &OrientedSpace,
    total: &OrientedSpace,
    x: &HomologyElement,
) -> Result<HomologyElement> {
    base.ring.check_same(&pullback.source)?;
    total.ring.check_same(&pullback.target)?;
    let c = base.pd_inverse(x)?;
    total.pd(&pullback.apply(&c)?)
}

/// Homology cross product `x × y`, written in the dual basis of the tensor
/// ring: `dual(a) × dual(b) = dual(a ⊗ b)`.
pub fn cross(t: &TensorRing, x: &HomologyElement, y: &HomologyElement) -> Result<HomologyElement> {
    t.left().check_same(&x.ring)?;
    t.right().check_same(&y.ring)?;
    let mut out = HomologyElement::zero(t.ring());
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            out.add_dual(t.cross_monomial(a, b), ca * cb);
        }
    }
    Ok(out)
}

/// `d_*` for the diagonal `M → M × M`, from `⟨a × b, d_* x⟩ = ⟨a ∪ b, x⟩`.
///
/// `square` must be the tensor square of `x`'s ring. Each dual monomial
/// `dual(v)` spreads over all exponent splits `v = a·b`.
pub fn diagonal_pushforward(square: &TensorRing, x: &HomologyElement) -> Result<HomologyElement> {
    square.left().check_same(&x.ring)?;
    square.right().check_same(&x.ring)?;
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = &x.ring;
    let mut out = HomologyElement::zero(square.ring());
    for (v, xv) in &x.terms {
        for a in divisors(v) {
            let b = a.quotient_of(v).expect("a divides v");
            let neg = ring.koszul_negative(&a, &b);
            out.add_dual(square.cross_monomial(&a, &b), signed(xv.clone(), neg));
        }
    }
    Ok(out)
}

fn divisors(v: &Monomial) -> Vec<Monomial> {
    let mut out = alloc::vec![Vec::new()];
    for &e in v.exponents() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=e).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::Generator;
    use crate::{ratio, scalar};
    use alloc::vec;

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

    fn sm(n: u32) -> Ring {
        Ring::new(
            "SM",
            vec![Generator::new("a~", 2, n).unwrap(), Generator::exterior("b~", 2 * n + 1).unwrap()],
        )
        .unwrap()
    }

    fn d(r: &Ring, f: &[(&str, u32)], c: Scalar) -> HomologyElement {
        HomologyElement::dual(r, r.monomial_of(f).unwrap(), c)
    }

    fn e(r: &Ring, f: &[(&str, u32)], c: Scalar) -> RingElement {
        r.monomial_element(r.monomial_of(f).unwrap(), c)
    }

    #[test]
    fn pairing_examples() {
        let r = gamma2_cp2();
        let ax1 = [("a", 1), ("x1", 1)];
        assert_eq!(pairing(&e(&r, &ax1, scalar(1)), &d(&r, &ax1, scalar(1))).unwrap(), scalar(1));
        let ax3 = [("a", 1), ("x3", 1)];
        assert_eq!(pairing(&e(&r, &ax1, scalar(1)), &d(&r, &ax3, scalar(1))).unwrap(), scalar(0));
        let a = [("a", 1)];
        assert_eq!(pairing(&e(&r, &a, ratio(2, 3)), &d(&r, &a, scalar(1))).unwrap(), ratio(2, 3));
    }

    #[test]
    fn cap_with_xi2_on_top_classes() {
        let r = gamma2_cp2();
        let xi2 = r.generator("x2").unwrap();
        let x = d(&r, &[("x1", 1), ("x2", 1), ("x3", 1)], scalar(-1));
        assert_eq!(cap(&xi2, &x).unwrap(), d(&r, &[("x1", 1), ("x3", 1)], scalar(1)));
        let y = d(&r, &[("b", 1), ("x1", 1), ("x2", 1), ("x3", 1)], scalar(1));
        assert_eq!(cap(&xi2, &y).unwrap(), d(&r, &[("b", 1), ("x1", 1), ("x3", 1)], scalar(-1)));
        assert_eq!(cap(&r.one(), &y).unwrap(), y);
    }

    #[test]
    fn pd_on_sm() {
        let r = sm(2);
        let s = OrientedSpace::new(r.clone());
        assert_eq!(s.dimension(), 7);
        // pd(α^{n-1-i} β) = ã_i
        for i in 0..2 {
            let c = e(&r, &[("a~", 1 - i), ("b~", 1)], scalar(1));
            assert_eq!(s.pd(&c).unwrap(), d(&r, &[("a~", i)], scalar(1)));
        }
        assert_eq!(s.pd(&r.one()).unwrap(), *s.fundamental());
        let top = r.monomial_element(r.top_monomial(), scalar(1));
        assert_eq!(s.pd(&top).unwrap(), HomologyElement::dual(&r, Monomial::unit(2), scalar(1)));
    }

    #[test]
    fn pd_rejects_mixed_degrees() {
        let s = OrientedSpace::new(sm(2));
        let mixed = s.ring().one() + s.ring().generator("a~").unwrap();
        assert_eq!(s.pd(&mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn pd_inverse_round_trip_on_gamma() {
        let s = OrientedSpace::new(gamma2_cp2());
        for m in s.ring().full_basis() {
            let c = s.ring().monomial_element(m, ratio(-3, 7));
            let x = s.pd(&c).unwrap();
            assert_eq!(x.degree(), Some(s.dimension() - c.degree().unwrap()));
            assert_eq!(s.pd_inverse(&x).unwrap(), c);
        }
    }

    #[test]
    fn diagonal_of_sm_classes() {
        let r = sm(3);
        let t = TensorRing::square(&r);
        // d_*[ã_2] = Σ_j ã_j × ã_{2-j}
        let x = d(&r, &[("a~", 2)], scalar(1));
        let mut want = HomologyElement::zero(t.ring());
        for j in 0..=2 {
            want = want
                + cross(&t, &d(&r, &[("a~", j)], scalar(1)), &d(&r, &[("a~", 2 - j)], scalar(1)))
                    .unwrap();
        }
        assert_eq!(diagonal_pushforward(&t, &x).unwrap(), want);

        let x = d(&r, &[("a~", 1), ("b~", 1)], scalar(1));
        let mut want = HomologyElement::zero(t.ring());
        for j in 0..=1 {
            let aj = d(&r, &[("a~", j)], scalar(1));
            let ajb = d(&r, &[("a~", j), ("b~", 1)], scalar(1));
            let ak = d(&r, &[("a~", 1 - j)], scalar(1));
            let akb = d(&r, &[("a~", 1 - j), ("b~", 1)], scalar(1));
            want = want + cross(&t, &aj, &akb).unwrap() + cross(&t, &ajb, &ak).unwrap();
        }
        assert_eq!(diagonal_pushforward(&t, &x).unwrap(), want);

        let a0 = d(&r, &[], scalar(1));
        assert_eq!(diagonal_pushforward(&t, &a0).unwrap(), cross(&t, &a0, &a0).unwrap());
    }

    #[test]
    fn ring_map_checks_degree_and_truncation() {
        let small = Ring::new("s", vec![Generator::new("a", 2, 2).unwrap()]).unwrap();
        let big = Ring::new("t", vec![Generator::new("a", 2, 3).unwrap()]).unwrap();
        // a^2 = 0 in the source but not in the target.
        assert!(RingMap::by_names(&small, &big, &[("a", "a")]).is_err());
        assert!(RingMap::by_names(&big, &small, &[("a", "a")]).is_ok());
        let odd = Ring::new("o", vec![Generator::exterior("y", 3).unwrap()]).unwrap();
        assert!(RingMap::by_names(&small, &odd, &[("a", "y")]).is_err());
    }

    #[test]
    fn pushforward_is_dual_to_pullback() {
        let g = gamma2_cp2();
        let s = sm(2);
        // SM ⊂ Γ_2 section: α ↦ α̃, β ↦ β̃, ξ_i ↦ 0.
        let zero = s.zero();
        let f = RingMap::new(
            &g,
            &s,
            vec![
                s.generator("a~").unwrap(),
                s.generator("b~").unwrap(),
                zero.clone(),
                zero.clone(),
                zero,
            ],
        )
        .unwrap();
        let x = d(&s, &[("a~", 1), ("b~", 1)], scalar(2));
        assert_eq!(f.pushforward(&x).unwrap(), d(&g, &[("a", 1), ("b", 1)], scalar(2)));
    }
}
