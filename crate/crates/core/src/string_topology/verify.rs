//! Exhaustive sweeps comparing the independent routes. Each returns a
//! [`Report`] counting checks and keeping the first few counterexamples.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use super::classes::{
    coh_basis, kronecker, kronecker_tensor, loop_basis, tensor_class_degree, LinComb, LoopClass, LoopGen, LoopKind,
    TensorLoopClass,
};
use super::coproduct::{cap_with_thom, coproduct_of_generator, loop_representative, CoproductPipeline};
use super::product::gh_product;
use crate::duality::{cap, gysin, HomologyElement};
use crate::graded_ring::Monomial;
use crate::spaces::{gamma_monomial, SpaceCatalog, SpaceParams};
use crate::{Report, Scalar};

/// Triple cross terms `a × b × c`.
pub type TripleLoopClass = LinComb<(LoopGen, LoopGen, LoopGen)>;

/// Pipeline route equals the closed formula on every generator with
/// `k ≤ max_k`, and every term obeys the degree law `deg x + 1 − N`.
pub fn verify_pipeline(p: &SpaceParams, max_k: u32) -> Report {
    let mut report = Report::new("pipeline");
    let pipeline = match CoproductPipeline::new(*p, max_k) {
        Ok(pl) => pl,
        Err(e) => {
            report.error("building Gysin tables", &e);
            return report;
        }
    };
    for g in loop_basis(p, max_k) {
        let closed = coproduct_of_generator(g);
        match pipeline.coproduct_of_generator(g) {
            Ok(piped) => report.check(piped == closed, || {
                format!("{}: pipeline gives {piped}, closed form gives {closed}", LoopClass::basis(g))
            }),
            Err(e) => report.error(&format!("pipeline on {}", LoopClass::basis(g)), &e),
        }
        check_degree_law(p, &mut report, g, &closed);
    }
    report
}

fn check_degree_law(p: &SpaceParams, report: &mut Report, g: LoopGen, image: &TensorLoopClass) {
    if image.is_zero() {
        return;
    }
    let want = g.degree(p).ok().map(|d| (d + 1) as i64 - p.real_dim() as i64);
    let got = tensor_class_degree(p, image).ok().flatten().map(i64::from);
    report.check(got.is_some() && got == want, || {
        format!("{}: terms of degree {got:?}, expected {want:?}", LoopClass::basis(g))
    });
}

fn split_left(t: &TensorLoopClass) -> TripleLoopClass {
    let mut out = TripleLoopClass::zero();
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in coproduct_of_generator(*a).iter() {
            out.add_term((*a1, *a2, *b), c * d);
        }
    }
    out
}

fn split_right(t: &TensorLoopClass) -> TripleLoopClass {
    let mut out = TripleLoopClass::zero();
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in coproduct_of_generator(*b).iter() {
            out.add_term((*a, *b1, *b2), c * d);
        }
    }
    out
}

/// `Σ_{m₁+m₂+m₃=k} Σ_{j₁+j₂+j₃=i}` of triples of `A`s, with one `B` in each
/// position for `B_k^i`.
pub fn triple_split(g: LoopGen) -> TripleLoopClass {
    let mut out = TripleLoopClass::zero();
    let (k, i) = (g.level, g.index);
    for m1 in 1..k {
        for m2 in 1..k - m1 {
            let m3 = k - m1 - m2;
            for j1 in 0..=i {
                for j2 in 0..=i - j1 {
                    let j3 = i - j1 - j2;
                    let a = [LoopGen::a(m1, j1), LoopGen::a(m2, j2), LoopGen::a(m3, j3)];
                    match g.kind {
                        LoopKind::A => out.add_term((a[0], a[1], a[2]), Scalar::one()),
                        LoopKind::B => {
                            let b = [LoopGen::b(m1, j1), LoopGen::b(m2, j2), LoopGen::b(m3, j3)];
                            out.add_term((b[0], a[1], a[2]), Scalar::one());
                            out.add_term((a[0], b[1], a[2]), Scalar::one());
                            out.add_term((a[0], a[1], b[2]), Scalar::one());
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(∨ ⊗ id)∨ = (id ⊗ ∨)∨` on generators with `k ≤ max_k`, both sides also
/// compared with [`triple_split`].
pub fn verify_coassoc(p: &SpaceParams, max_k: u32) -> Report {
    let mut report = Report::new("coassoc");
    for g in loop_basis(p, max_k) {
        let v = coproduct_of_generator(g);
        let left = split_left(&v);
        let right = split_right(&v);
        let oracle = triple_split(g);
        let name = LoopClass::basis(g);
        report.check(left == right, || format!("{name}: (v x id)v = {left} but (id x v)v = {right}"));
        report.check(left == oracle, || format!("{name}: (v x id)v = {left} but triple split is {oracle}"));
    }
    report
}

/// `⟨α ⊛ β, X⟩ = ⟨α × β, ∨X⟩` for basis classes with levels `≤ max_k`.
pub fn verify_duality(p: &SpaceParams, max_k: u32) -> Report {
    let mut report = Report::new("duality");
    let coh = coh_basis(p, max_k);
    let coproducts: Vec<(LoopClass, TensorLoopClass)> = loop_basis(p, max_k)
        .into_iter()
        .map(|g| (LoopClass::basis(g), coproduct_of_generator(g)))
        .collect();
    for &a in &coh {
        for &b in coh.iter().filter(|b| a.level + b.level <= max_k) {
            let a = LinComb::basis(a);
            let b = LinComb::basis(b);
            let ab = match gh_product(p, &a, &b) {
                Ok(ab) => ab,
                Err(e) => {
                    report.error(&format!("{a} * {b}"), &e);
                    continue;
                }
            };
            for (x, vx) in &coproducts {
                let lhs = kronecker(&ab, x);
                let rhs = kronecker_tensor(&a, &b, vx);
                report.check(lhs == rhs, || format!("<{a} * {b}, {x}> = {lhs} but <{a} x {b}, v{x}> = {rhs}"));
            }
        }
    }
    report
}

/// The printed cap and Gysin values, for every `i`, `m` and `k ≤ max_k`.
pub fn verify_gysin(p: &SpaceParams, max_k: u32) -> Report {
    let mut report = Report::new("gysin");
    let cat = SpaceCatalog::new(*p, max_k);
    for k in 1..=max_k {
        if let Err(e) = gysin_level(&cat, k, &mut report) {
            report.error(&format!("level {k}"), &e);
        }
    }
    report
}

fn gysin_level(cat: &SpaceCatalog, k: u32, report: &mut Report) -> crate::Result<()> {
    let p = cat.params();
    let gamma = cat.gamma(k)?;
    let gr = gamma.ring();
    let sm = cat.sm();
    let fiber = cat.fiber();
    let pl = cat.pullback_pl(k)?;
    let one = Scalar::one();
    let all = || 1..2 * k;
    let without = |m: u32| (1..2 * k).filter(move |&l| l != 2 * m);
    let dual = |with_b: bool, i: u32, xs: &mut dyn Iterator<Item = u32>, c: Scalar| {
        HomologyElement::dual(gr, gamma_monomial(k, i, with_b, xs), c)
    };
    let mut compare = |what: String, got: HomologyElement, want: HomologyElement| {
        report.check(got == want, || format!("{what}: got {got}, expected {want}"));
    };

    for i in 0..p.n() {
        let a_sm = sm.ring().monomial_of(&[("a~", i)])?;
        let ab_sm = sm.ring().monomial_of(&[("a~", i), ("b~", 1)])?;
        let got = gysin(&pl, sm, &gamma, &HomologyElement::dual(sm.ring(), a_sm, one.clone()))?;
        compare(format!("k={k}: (pL)!(a~_{i})"), got, dual(false, i, &mut all(), -one.clone()));
        let got = gysin(&pl, sm, &gamma, &HomologyElement::dual(sm.ring(), ab_sm, one.clone()))?;
        compare(format!("k={k}: (pL)!(a~_{i} b~)"), got, dual(true, i, &mut all(), one.clone()));

        for m in 1..k {
            let xi = gr.generator(&format!("x{}", 2 * m))?;
            let got = cap(&xi, &dual(false, i, &mut all(), -one.clone()))?;
            compare(format!("k={k}, m={m}: cap(x{}, -[a_{i} x])", 2 * m), got, dual(false, i, &mut without(m), one.clone()));
            let got = cap(&xi, &dual(true, i, &mut all(), one.clone()))?;
            compare(format!("k={k}, m={m}: cap(x{}, [a_{i} b x])", 2 * m), got, dual(true, i, &mut without(m), -one.clone()));

            let pv = cat.pullback_pv(k, m)?;
            let a_f: Monomial = fiber.ring().monomial_of(&[("a^", i)])?;
            let ab_f: Monomial = fiber.ring().monomial_of(&[("a^", i), ("b^", 1)])?;
            let got = gysin(&pv, fiber, &gamma, &HomologyElement::dual(fiber.ring(), a_f, one.clone()))?;
            compare(format!("k={k}, m={m}: (pV)!(a^_{i})"), got, dual(false, i, &mut without(m), -one.clone()));
            let got = gysin(&pv, fiber, &gamma, &HomologyElement::dual(fiber.ring(), ab_f, one.clone()))?;
            compare(format!("k={k}, m={m}: (pV)!(a^_{i} b^)"), got, dual(true, i, &mut without(m), -one.clone()));
        }
    }

    // The cap step of the pipeline uses the same values, sign included.
    for i in 0..p.n() {
        for g in [LoopGen::a(k, i), LoopGen::b(k, i)] {
            let rep = loop_representative(cat, g)?;
            for (m, capped) in cap_with_thom(cat, k, &rep)? {
                let want = dual(g.kind == LoopKind::B, i, &mut without(m), -one.clone());
                compare(format!("k={k}, m={m}: thom cap of {}", LoopClass::basis(g)), capped, want);
            }
        }
    }
    Ok(())
}

/// Dimension, top degree, a single top class and degree parity of `Γ_k`.
pub fn verify_rings(p: &SpaceParams, max_k: u32) -> Report {
    let mut report = Report::new("rings");
    let (lambda, big_n) = (p.lambda(), p.real_dim());
    for k in 1..=max_k {
        let ring = match p.gamma_ring(k) {
            Ok(r) => r,
            Err(e) => {
                report.error(&format!("gamma ring k={k}"), &e);
                continue;
            }
        };
        let dim = 2 * p.n() as usize * (1usize << (2 * k - 1));
        let lambda_k = k * lambda + (k - 1) * (big_n - 1);
        let top = lambda_k + 2 * big_n - 1;
        // Counted from the Poincaré series, past the top degree.
        let series = ring.poincare_series(top + 1);
        let total: usize = series.iter().map(|(_, c)| c).sum();
        report.check(ring.dimension() == dim && total == dim, || {
            format!("k={k}: dimension {} (series total {total}), expected {dim}", ring.dimension())
        });
        report.check(ring.top_degree() == top, || format!("k={k}: top degree {}, expected {top}", ring.top_degree()));
        let at = |d: u32| series.get(d as usize).map_or(0, |&(_, c)| c);
        report.check(at(top) == 1 && at(top + 1) == 0, || {
            format!("k={k}: {} classes in degree {top}, {} above", at(top), at(top + 1))
        });
        if dim <= 1 << 12 {
            let n = ring.full_basis().len();
            report.check(n == dim, || format!("k={k}: {n} basis monomials, expected {dim}"));
        }
        for i in 0..p.n() {
            let (a, b) = (p.deg_a(k, i), p.deg_b(k, i));
            report.check(matches!(a, Ok(d) if d % 2 == 1), || format!("deg A[{k},{i}] = {a:?} is not odd"));
            report.check(matches!(b, Ok(d) if d % 2 == 0), || format!("deg B[{k},{i}] = {b:?} is not even"));
        }
    }
    report
}
