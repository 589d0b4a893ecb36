//! The algebraic laws the kernel must satisfy, checked on given elements
//! and exhaustively on basis classes.
//!
//! * graded commutativity `a ∪ b = (−1)^{|a||b|} b ∪ a`
//! * associativity of `∪`
//! * cap module `(a ∪ b) ∩ x = a ∩ (b ∩ x)`
//! * `pd` is a bijection with inverse `pd_inverse`
//! * adjunction `⟨a × b, d_* x⟩ = ⟨a ∪ b, x⟩`

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::duality::{cap, diagonal_pushforward, pairing, HomologyElement, OrientedSpace};
use crate::graded_ring::{RingElement, TensorRing};
use crate::{Report, Result, Scalar};

/// Splits `a` into its homogeneous components.
pub fn homogeneous_parts(a: &RingElement) -> Vec<RingElement> {
    let ring = a.ring();
    let mut parts: BTreeMap<u32, RingElement> = BTreeMap::new();
    for (m, c) in a.terms() {
        let d = ring.degree_of(m);
        let part = parts.entry(d).or_insert_with(|| ring.zero());
        *part += &ring.monomial_element(m.clone(), c.clone());
    }
    parts.into_values().collect()
}

pub fn graded_commutativity_holds(a: &RingElement, b: &RingElement) -> Result<bool> {
    for x in homogeneous_parts(a) {
        for y in homogeneous_parts(b) {
            let (dx, dy) = (x.degree().unwrap_or(0), y.degree().unwrap_or(0));
            let mut yx = y.cup(&x)?;
            if dx % 2 == 1 && dy % 2 == 1 {
                yx = -yx;
            }
            if x.cup(&y)? != yx {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn associativity_holds(a: &RingElement, b: &RingElement, c: &RingElement) -> Result<bool> {
    Ok(a.cup(b)?.cup(c)? == a.cup(&b.cup(c)?)?)
}

pub fn cap_module_holds(a: &RingElement, b: &RingElement, x: &HomologyElement) -> Result<bool> {
    Ok(cap(&a.cup(b)?, x)? == cap(a, &cap(b, x)?)?)
}

/// Splits `x` into its homogeneous components.
pub fn homology_parts(x: &HomologyElement) -> Vec<HomologyElement> {
    let ring = x.ring();
    let mut parts: BTreeMap<u32, HomologyElement> = BTreeMap::new();
    for (m, c) in x.terms() {
        let part = parts.entry(ring.degree_of(m)).or_insert_with(|| HomologyElement::zero(ring));
        *part = part.clone() + HomologyElement::dual(ring, m.clone(), c.clone());
    }
    parts.into_values().collect()
}

/// `pd_inverse(pd(c)) = c` and `pd(pd_inverse(x)) = x`, componentwise.
pub fn pd_round_trip_holds(space: &OrientedSpace, c: &RingElement, x: &HomologyElement) -> Result<bool> {
    for c in homogeneous_parts(c) {
        if space.pd_inverse(&space.pd(&c)?)? != c {
            return Ok(false);
        }
    }
    for x in homology_parts(x) {
        if space.pd(&space.pd_inverse(&x)?)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn diagonal_adjunction_holds(
    square: &TensorRing,
    a: &RingElement,
    b: &RingElement,
    x: &HomologyElement,
) -> Result<bool> {
    let cross = square.cross(a, b)?;
    let ab = a.cup(b)?;
    for x in homology_parts(x) {
        if pairing(&cross, &diagonal_pushforward(square, &x)?)? != pairing(&ab, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every law on every tuple of basis classes of `space`, plus bijectivity
/// of `pd` on the basis.
pub fn exhaustive_kernel_report(name: &str, space: &OrientedSpace) -> Report {
    let mut report = Report::new(name);
    if let Err(e) = exhaustive(space, &mut report) {
        report.error("kernel sweep", &e);
    }
    report
}

fn exhaustive(space: &OrientedSpace, report: &mut Report) -> Result<()> {
    let ring = space.ring();
    let one = || Scalar::from_integer(1.into());
    let basis = ring.full_basis();
    let elems: Vec<RingElement> = basis.iter().map(|m| ring.monomial_element(m.clone(), one())).collect();
    let duals: Vec<HomologyElement> = basis.iter().map(|m| HomologyElement::dual(ring, m.clone(), one())).collect();
    let square = TensorRing::square(ring);
    let pushed: Vec<HomologyElement> =
        duals.iter().map(|x| diagonal_pushforward(&square, x)).collect::<Result<_>>()?;

    for a in &elems {
        for b in &elems {
            report.check(graded_commutativity_holds(a, b)?, || format!("{a} and {b} do not graded-commute"));
            let ab = a.cup(b)?;
            for c in &elems {
                let ok = ab.cup(c)? == a.cup(&b.cup(c)?)?;
                report.check(ok, || format!("({a} {b}) {c} != {a} ({b} {c})"));
            }
            let cross = square.cross(a, b)?;
            for (x, dx) in duals.iter().zip(&pushed) {
                let ok = cap(&ab, x)? == cap(a, &cap(b, x)?)?;
                report.check(ok, || format!("({a} {b}) cap {x} != {a} cap ({b} cap {x})"));
                let (l, r) = (pairing(&cross, dx)?, pairing(&ab, x)?);
                report.check(l == r, || format!("<{a} x {b}, d_*{x}> = {l} but <{a} {b}, {x}> = {r}"));
            }
        }
    }

    // pd sends the basis bijectively onto signed dual basis classes.
    let mut hit = BTreeMap::new();
    for (c, x) in elems.iter().zip(&duals) {
        let image = space.pd(c)?;
        let single = image.as_single().map(|(m, s)| (m.clone(), s.clone()));
        report.check(matches!(&single, Some((_, s)) if *s == one() || *s == -one()), || {
            format!("pd({c}) = {image} is not a signed basis class")
        });
        if let Some((m, _)) = single {
            report.check(hit.insert(m, c.clone()).is_none(), || format!("pd is not injective at {c}"));
        }
        report.check(pd_round_trip_holds(space, c, x)?, || format!("pd round trip fails at {c} / {x}"));
    }
    report.check(hit.len() == basis.len(), || format!("pd hits {} of {} classes", hit.len(), basis.len()));
    Ok(())
}
