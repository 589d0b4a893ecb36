//! Worked examples through the public API.

use loopalg_core::duality::{gysin, pairing, HomologyElement, OrientedSpace};
use loopalg_core::graded_ring::Monomial;
use loopalg_core::spaces::{gamma_monomial, Family, SpaceCatalog, SpaceParams};
use loopalg_core::string_topology::{
    betti, coproduct_closed, kronecker, CohClass, CohGen, CoproductPipeline, LoopClass, LoopGen, TensorLoopClass,
};
use loopalg_core::{ratio, scalar};

fn cp2() -> SpaceParams {
    SpaceParams::new(Family::Complex, 2).unwrap()
}

fn pairs(terms: &[(LoopGen, LoopGen)]) -> TensorLoopClass {
    terms.iter().map(|&t| (t, scalar(1))).collect()
}

#[test]
fn coproduct_of_a31_has_four_terms_in_degree_eight() {
    let p = cp2();
    let x = LoopClass::basis(LoopGen::a(3, 1));
    let v = coproduct_closed(&p, &x).unwrap();
    let want = pairs(&[
        (LoopGen::a(1, 0), LoopGen::a(2, 1)),
        (LoopGen::a(1, 1), LoopGen::a(2, 0)),
        (LoopGen::a(2, 0), LoopGen::a(1, 1)),
        (LoopGen::a(2, 1), LoopGen::a(1, 0)),
    ]);
    assert_eq!(v, want);
    // λ_3 = 3 + 2·3 = 9, so deg A_3^1 = 9 + 2 = 11 and the terms sit in 11 + 1 − 4.
    assert_eq!(LoopGen::a(3, 1).degree(&p).unwrap(), 11);
    assert_eq!(LoopGen::a(2, 1).degree(&p).unwrap(), 7);
    for ((l, r), _) in v.iter() {
        assert_eq!(l.degree(&p).unwrap() + r.degree(&p).unwrap(), 8);
    }
    let pipeline = CoproductPipeline::new(p, 3).unwrap();
    assert_eq!(pipeline.coproduct(&x).unwrap(), v);
}

#[test]
fn pipeline_is_linear() {
    let p = SpaceParams::new(Family::Quaternionic, 3).unwrap();
    let pipeline = CoproductPipeline::new(p, 4).unwrap();
    let x = LoopClass::term(LoopGen::a(4, 2), ratio(-3, 2)) + LoopClass::term(LoopGen::b(3, 1), scalar(5));
    assert_eq!(pipeline.coproduct(&x).unwrap(), coproduct_closed(&p, &x).unwrap());
}

#[test]
fn invalid_generators_are_rejected() {
    let p = cp2();
    assert!(coproduct_closed(&p, &LoopClass::basis(LoopGen::a(0, 0))).is_err());
    assert!(coproduct_closed(&p, &LoopClass::basis(LoopGen::b(1, 2))).is_err());
}

#[test]
fn degrees_and_betti_numbers() {
    let p = cp2();
    assert_eq!(LoopGen::a(1, 0).degree(&p).unwrap(), 1);
    assert_eq!(LoopGen::b(1, 0).degree(&p).unwrap(), 6);
    assert_eq!(betti(&p, 5), 1);
    assert_eq!(betti(&p, 2), 0);
    assert_eq!(betti(&p, 0), 0);
}

#[test]
fn kronecker_pairing_is_the_dual_basis() {
    let s20 = CohClass::basis(CohGen::sigma(2, 0));
    assert_eq!(kronecker(&s20, &LoopClass::basis(LoopGen::a(2, 0))), scalar(1));
    assert_eq!(kronecker(&s20, &LoopClass::basis(LoopGen::b(2, 0))), scalar(0));
}

#[test]
fn poincare_duality_on_the_unit_tangent_bundle() {
    let p = cp2();
    let sm = OrientedSpace::new(p.sm_ring());
    let ring = sm.ring();
    // pd(β̃) = ã_0, the dual of α̃^{n-1}
    let b = ring.generator("b~").unwrap();
    let want = HomologyElement::dual(ring, ring.monomial_of(&[("a~", 1)]).unwrap(), scalar(1));
    assert_eq!(sm.pd(&b).unwrap(), want);
    assert_eq!(sm.pd(&ring.one()).unwrap(), *sm.fundamental());
    let top = ring.monomial_element(ring.top_monomial(), scalar(1));
    assert_eq!(sm.pd(&top).unwrap(), HomologyElement::dual(ring, Monomial::unit(2), scalar(1)));
    let a = ring.generator("a~").unwrap().scale(&ratio(2, 3));
    let a_dual = HomologyElement::dual(ring, ring.monomial_of(&[("a~", 1)]).unwrap(), scalar(1));
    assert_eq!(pairing(&a, &a_dual).unwrap(), ratio(2, 3));
}

#[test]
fn pullbacks_and_gysin_maps() {
    let cat = SpaceCatalog::new(cp2(), 3);
    let pl = cat.pullback_pl(3).unwrap();
    let sm = cat.sm().ring();
    let g3 = cat.gamma(3).unwrap();
    let ab = sm.generator("a~").unwrap().cup(&sm.generator("b~").unwrap()).unwrap();
    let want = g3.ring().generator("a").unwrap().cup(&g3.ring().generator("b").unwrap()).unwrap();
    assert_eq!(pl.apply(&ab).unwrap(), want);
    assert_eq!(pl.apply(&sm.one()).unwrap(), g3.ring().one());

    let g2 = cat.gamma(2).unwrap();
    let fiber = cat.fiber();
    let pv = cat.pullback_pv(2, 1).unwrap();
    let bh = HomologyElement::dual(fiber.ring(), fiber.ring().monomial_of(&[("b^", 1)]).unwrap(), scalar(1));
    let want = HomologyElement::dual(g2.ring(), gamma_monomial(2, 0, true, [1, 3]), scalar(-1));
    assert_eq!(gysin(&pv, fiber, &g2, &bh).unwrap(), want);
    assert!(cat.pullback_pv(2, 2).is_err());
}
