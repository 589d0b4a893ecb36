//! parse ∘ format is the identity on canonical output.

use loopalg::parse::parse_class;
use loopalg_core::spaces::{Family, SpaceParams};
use loopalg_core::string_topology::{CohGen, LinComb, LoopGen, Term};
use loopalg_core::Scalar;
use proptest::prelude::*;

const N: u32 = 3;

fn params() -> SpaceParams {
    SpaceParams::new(Family::Quaternionic, N).unwrap()
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| Scalar::new(p.into(), q.into()))
}

fn loop_gen() -> impl Strategy<Value = LoopGen> {
    (any::<bool>(), 1u32..=9, 0..N).prop_map(|(a, k, i)| if a { LoopGen::a(k, i) } else { LoopGen::b(k, i) })
}

fn coh_gen() -> impl Strategy<Value = CohGen> {
    loop_gen().prop_map(|g| g.dual())
}

fn comb<K: Term + std::fmt::Debug>(key: impl Strategy<Value = K>) -> impl Strategy<Value = LinComb<K>> {
    proptest::collection::vec((key, coeff()), 0..6).prop_map(|ts| ts.into_iter().collect())
}

proptest! {
    #[test]
    fn loop_classes(x in comb(loop_gen())) {
        let back: LinComb<LoopGen> = parse_class(&params(), &x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn loop_cross_terms(x in comb((loop_gen(), loop_gen()))) {
        let back: LinComb<(LoopGen, LoopGen)> = parse_class(&params(), &x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn cohomology_classes(x in comb(coh_gen())) {
        let back: LinComb<CohGen> = parse_class(&params(), &x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn cohomology_cross_terms(x in comb((coh_gen(), coh_gen()))) {
        let s = x.to_string();
        let back: LinComb<(CohGen, CohGen)> = parse_class(&params(), &s).unwrap();
        prop_assert_eq!(&back, &x);
        // Formatting is canonical: a second pass changes nothing.
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn whitespace_is_ignored(x in comb(loop_gen())) {
        let squeezed: String = x.to_string().chars().filter(|c| !c.is_whitespace()).collect();
        let back: LinComb<LoopGen> = parse_class(&params(), &squeezed).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn garbage_never_panics(s in "[ABsmx0-9\\[\\],+*/ -]{0,24}") {
        let _ = parse_class::<LoopGen>(&params(), &s);
    }
}
