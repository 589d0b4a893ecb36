//! The rings and maps attached to `M = KP^n`, `K ∈ {C, H}`.
//!
//! * `H*(SM) = Q[ã, b̃]/(ã^n, b̃^2)`, the unit tangent bundle (one critical
//!   manifold of the energy functional).
//! * `H*(SM ×_M SM) = Q[â, b̂, x̂]/(â^n, b̂^2, x̂^2)`.
//! * `H*(Γ_k) = Q[a, b, x_1, ..., x_{2k-1}]/(a^n, b^2, x_i^2)`, the completing
//!   manifold of the `k`-fold iterated geodesics.
//!
//! with `deg a = λ+1`, `deg b = N+λ`, `deg x_odd = λ`, `deg x_even = N-1`.
//! Generator names in the rings are ASCII: `a~ b~`, `a^ b^ x^`, `a b x1 ...`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::duality::{OrientedSpace, RingMap};
use crate::graded_ring::{Generator, Monomial, Ring, TensorRing};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `CP^n`
    Complex,
    /// `HP^n`
    Quaternionic,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Complex, Family::Quaternionic];

    /// Index of the prime closed geodesic (`λ`).
    pub fn lambda(self) -> u32 {
        match self {
            Family::Complex => 1,
            Family::Quaternionic => 3,
        }
    }

    /// Short name as used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            Family::Complex => "cp",
            Family::Quaternionic => "hp",
        }
    }
}

/// `KP^n`. Fixes `λ`, `N` and every degree formula.
///
/// `n = 1` is admitted: `a^1 = 0` then kills the even generator and the
/// formulas degenerate gracefully, but that case has no independent
/// reference values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceParams {
    family: Family,
    n: u32,
}

impl SpaceParams {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange { what: "n", value: 0, bound: "n >= 1".into() });
        }
        Ok(SpaceParams { family, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lambda(&self) -> u32 {
        self.family.lambda()
    }

    /// Real dimension `N` of `M`.
    pub fn real_dim(&self) -> u32 {
        match self.family {
            Family::Complex => 2 * self.n,
            Family::Quaternionic => 4 * self.n,
        }
    }

    pub fn check_level(&self, k: u32) -> Result<()> {
        if k == 0 {
            return Err(Error::OutOfRange { what: "k", value: 0, bound: "k must be ≥ 1".into() });
        }
        Ok(())
    }

    pub fn check_index(&self, i: u32) -> Result<()> {
        if i >= self.n {
            return Err(Error::OutOfRange {
                what: "i",
                value: i as i64,
                bound: format!("index out of range for n={}", self.n),
            });
        }
        Ok(())
    }

    /// `λ_k = kλ + (k−1)(N−1)`, the index of the `k`-fold iterated geodesics.
    pub fn index(&self, k: u32) -> Result<u32> {
        self.check_level(k)?;
        Ok(k * self.lambda() + (k - 1) * (self.real_dim() - 1))
    }

    /// `deg A_k^i = λ_k + i(λ+1)`.
    pub fn deg_a(&self, k: u32, i: u32) -> Result<u32> {
        self.check_index(i)?;
        Ok(self.index(k)? + i * (self.lambda() + 1))
    }

    /// `deg B_k^i = λ_k + (i+1)(λ+1) + N − 1`.
    pub fn deg_b(&self, k: u32, i: u32) -> Result<u32> {
        self.check_index(i)?;
        Ok(self.index(k)? + (i + 1) * (self.lambda() + 1) + self.real_dim() - 1)
    }

    fn alpha(&self, name: &str) -> Generator {
        Generator::new(name, self.lambda() + 1, self.n).expect("even degree")
    }

    fn beta(&self, name: &str) -> Generator {
        Generator::exterior(name, self.real_dim() + self.lambda()).expect("valid")
    }

    fn space_name(&self) -> String {
        format!("{}P^{}", if self.family == Family::Complex { "C" } else { "H" }, self.n)
    }

    /// `H*(SM)` with generators `a~`, `b~`.
    pub fn sm_ring(&self) -> Ring {
        Ring::new(format!("H*(S{})", self.space_name()), alloc::vec![self.alpha("a~"), self.beta("b~")])
            .expect("distinct names")
    }

    /// `H*(SM ×_M SM)` with generators `a^`, `b^`, `x^`.
    pub fn fiber_ring(&self) -> Ring {
        let xi = Generator::exterior("x^", self.real_dim() - 1).expect("N-1 is odd");
        Ring::new(
            format!("H*(S{0} x_M S{0})", self.space_name()),
            alloc::vec![self.alpha("a^"), self.beta("b^"), xi],
        )
        .expect("distinct names")
    }

    /// `H*(Γ_k)` with generators `a`, `b`, `x1`, ..., `x{2k-1}` in that order.
    pub fn gamma_ring(&self, k: u32) -> Result<Ring> {
        self.check_level(k)?;
        let mut gens = alloc::vec![self.alpha("a"), self.beta("b")];
        for l in 1..2 * k {
            let degree = if l % 2 == 1 { self.lambda() } else { self.real_dim() - 1 };
            gens.push(Generator::exterior(format!("x{l}"), degree).expect("odd degree"));
        }
        Ring::new(format!("H*(Gamma_{k}; {})", self.space_name()), gens)
    }

    /// Dimension of `Γ_k`: `λ_k + 2N − 1`.
    pub fn gamma_dimension(&self, k: u32) -> Result<u32> {
        Ok(self.index(k)? + 2 * self.real_dim() - 1)
    }
}

/// Position of `x_l` in the generator list of `H*(Γ_k)`.
pub fn xi_position(l: u32) -> usize {
    1 + l as usize
}

/// Monomial `a^i b^j x_{l_1} ... x_{l_p}` of `H*(Γ_k)`.
pub fn gamma_monomial(k: u32, i: u32, with_b: bool, xs: impl IntoIterator<Item = u32>) -> Monomial {
    let mut exps = alloc::vec![0; 2 * k as usize + 1];
    exps[0] = i;
    exps[1] = with_b as u32;
    for l in xs {
        exps[xi_position(l)] = 1;
    }
    Monomial::from_exponents(exps)
}

/// `[a_i b x_{l_1 ... l_p}]`-style label of a dual basis class of `H_*(Γ_k)`.
pub fn gamma_label(m: &Monomial) -> String {
    let e = m.exponents();
    let mut s = format!("[a_{}", e[0]);
    if e[1] == 1 {
        s.push_str(" b");
    }
    let xs: Vec<String> = (2..e.len()).filter(|&p| e[p] == 1).map(|p| format!("{}", p - 1)).collect();
    if !xs.is_empty() {
        s.push_str(&format!(" x_{{{}}}", xs.join(",")));
    }
    s.push(']');
    s
}

/// Label of a dual basis class of `H_*(SM)` (`ã_i`, `ã_i b̃`) or of
/// `H_*(SM ×_M SM)` (`â_i`, `â_i b̂`, `... x̂`), with `~` or `^` as marker.
pub fn sphere_bundle_label(m: &Monomial, marker: char) -> String {
    let e = m.exponents();
    let mut s = format!("[a{marker}_{}", e[0]);
    if e[1] == 1 {
        s.push_str(&format!(" b{marker}"));
    }
    if e.len() > 2 && e[2] == 1 {
        s.push_str(&format!(" x{marker}"));
    }
    s.push(']');
    s
}

/// Oriented spaces for one `KP^n`, built once and shared by every
/// computation. `Γ_k` is prebuilt for `k ≤ max_k`; larger levels are built
/// on demand.
#[derive(Debug, Clone)]
pub struct SpaceCatalog {
    params: SpaceParams,
    sm: OrientedSpace,
    fiber: OrientedSpace,
    sm_square: TensorRing,
    gammas: Vec<OrientedSpace>,
}

impl SpaceCatalog {
    pub fn new(params: SpaceParams, max_k: u32) -> Self {
        let sm_ring = params.sm_ring();
        let gammas = (1..=max_k)
            .map(|k| OrientedSpace::new(params.gamma_ring(k).expect("k >= 1")))
            .collect();
        SpaceCatalog {
            params,
            sm_square: TensorRing::square(&sm_ring),
            sm: OrientedSpace::new(sm_ring),
            fiber: OrientedSpace::new(params.fiber_ring()),
            gammas,
        }
    }

    pub fn params(&self) -> &SpaceParams {
        &self.params
    }

    pub fn sm(&self) -> &OrientedSpace {
        &self.sm
    }

    pub fn fiber(&self) -> &OrientedSpace {
        &self.fiber
    }

    /// `H*(SM) ⊗ H*(SM)`.
    pub fn sm_square(&self) -> &TensorRing {
        &self.sm_square
    }

    pub fn gamma(&self, k: u32) -> Result<OrientedSpace> {
        self.params.check_level(k)?;
        match self.gammas.get(k as usize - 1) {
            Some(s) => Ok(s.clone()),
            None => Ok(OrientedSpace::new(self.params.gamma_ring(k)?)),
        }
    }

    /// `p_L^*: H*(SM) → H*(Γ_k)`, `ã ↦ a`, `b̃ ↦ b`.
    pub fn pullback_pl(&self, k: u32) -> Result<RingMap> {
        let gamma = self.gamma(k)?;
        RingMap::by_names(self.sm.ring(), gamma.ring(), &[("a~", "a"), ("b~", "b")])
    }

    /// `p_V^*: H*(SM ×_M SM) → H*(Γ_k)`, `â ↦ a`, `b̂ ↦ b`, `x̂ ↦ x_{2m}`.
    pub fn pullback_pv(&self, k: u32, m: u32) -> Result<RingMap> {
        if m == 0 || m >= k {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                bound: format!("1 <= m <= k-1 = {}", k as i64 - 1),
            });
        }
        let gamma = self.gamma(k)?;
        let x2m = format!("x{}", 2 * m);
        RingMap::by_names(
            self.fiber.ring(),
            gamma.ring(),
            &[("a^", "a"), ("b^", "b"), ("x^", x2m.as_str())],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{gysin, HomologyElement};
    use crate::scalar;
    use alloc::vec;

    fn cp(n: u32) -> SpaceParams {
        SpaceParams::new(Family::Complex, n).unwrap()
    }

    fn hp(n: u32) -> SpaceParams {
        SpaceParams::new(Family::Quaternionic, n).unwrap()
    }

    #[test]
    fn gamma_2_for_cp2() {
        let p = cp(2);
        let r = p.gamma_ring(2).unwrap();
        let degs: Vec<u32> = r.generators().iter().map(|g| g.degree()).collect();
        assert_eq!(degs, [2, 5, 1, 3, 1]);
        assert_eq!(p.index(2).unwrap(), 5);
        assert_eq!(p.gamma_dimension(2).unwrap(), 12);
        assert_eq!(r.top_degree(), 12);
        assert_eq!(r.dimension(), 32);
        assert_eq!(r.full_basis().len(), 32);
    }

    #[test]
    fn hp1_level_one_kills_alpha() {
        let r = hp(1).gamma_ring(1).unwrap();
        assert_eq!(r.generators()[0].truncation(), 1);
        assert!(r.generator("a").unwrap().is_zero());
        assert_eq!(r.dimension(), 4);
    }

    #[test]
    fn level_zero_is_rejected() {
        assert!(cp(2).gamma_ring(0).is_err());
        assert!(cp(2).deg_a(0, 0).is_err());
        assert!(cp(2).deg_b(1, 2).is_err());
        assert!(SpaceParams::new(Family::Complex, 0).is_err());
    }

    #[test]
    fn generator_degrees() {
        let p = cp(2);
        assert_eq!(p.deg_a(1, 0).unwrap(), 1);
        assert_eq!(p.deg_a(2, 1).unwrap(), 7);
        assert_eq!(p.deg_b(1, 0).unwrap(), 6);
        for p in [cp(1), cp(2), cp(3), hp(1), hp(2), hp(3)] {
            for k in 1..=12 {
                for i in 0..p.n() {
                    assert_eq!(p.deg_a(k, i).unwrap() % 2, 1);
                    assert_eq!(p.deg_b(k, i).unwrap() % 2, 0);
                }
            }
        }
    }

    #[test]
    fn coproduct_degree_compatibility() {
        for p in [cp(2), cp(3), hp(2), hp(3)] {
            for k in 2..=8 {
                for i in 0..p.n() {
                    for m in 1..k {
                        for j in 0..=i {
                            let a = p.deg_a(m, j).unwrap() + p.deg_a(k - m, i - j).unwrap();
                            // deg ∨x = deg x + 1 − N
                            assert_eq!(p.deg_a(k, i).unwrap() + 1, a + p.real_dim());
                            let b = p.deg_a(m, j).unwrap() + p.deg_b(k - m, i - j).unwrap();
                            assert_eq!(p.deg_b(k, i).unwrap() + 1, b + p.real_dim());
                            let b2 = p.deg_b(m, j).unwrap() + p.deg_a(k - m, i - j).unwrap();
                            assert_eq!(b, b2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_series_factorizes() {
        for p in [cp(2), hp(2), cp(3)] {
            for k in 1..=4 {
                let r = p.gamma_ring(k).unwrap();
                let top = r.top_degree();
                assert_eq!(top, p.gamma_dimension(k).unwrap());
                let mut want = p.sm_ring().poincare_series(top).into_iter().map(|(_, c)| c).collect::<Vec<_>>();
                let mut mul = |shift: u32| {
                    let mut next = want.clone();
                    for d in shift as usize..next.len() {
                        next[d] += want[d - shift as usize];
                    }
                    want = next;
                };
                for _ in 0..k {
                    mul(p.lambda());
                }
                for _ in 1..k {
                    mul(p.real_dim() - 1);
                }
                let got: Vec<usize> = r.poincare_series(top).into_iter().map(|(_, c)| c).collect();
                assert_eq!(got, want);
                assert_eq!(r.basis(top).len(), 1);
            }
        }
    }

    #[test]
    fn pullbacks() {
        let cat = SpaceCatalog::new(cp(2), 3);
        let pl = cat.pullback_pl(3).unwrap();
        let sm = cat.sm().ring();
        let ab = sm.monomial_element(sm.monomial_of(&[("a~", 1), ("b~", 1)]).unwrap(), scalar(1));
        let g3 = cat.gamma(3).unwrap();
        let want = g3.ring().monomial_element(g3.ring().monomial_of(&[("a", 1), ("b", 1)]).unwrap(), scalar(1));
        assert_eq!(pl.apply(&ab).unwrap(), want);
        assert_eq!(pl.apply(&sm.one()).unwrap(), g3.ring().one());
        let pv = cat.pullback_pv(2, 1).unwrap();
        assert_eq!(pv.apply(&cat.fiber().ring().one()).unwrap(), cat.gamma(2).unwrap().ring().one());
        assert!(cat.pullback_pv(2, 2).is_err());
        assert!(cat.pullback_pv(2, 0).is_err());
    }

    #[test]
    fn gysin_along_pl_and_pv() {
        let cat = SpaceCatalog::new(cp(2), 2);
        let g2 = cat.gamma(2).unwrap();
        let sm = cat.sm();
        // (p_L)_!(ã_1) = −[a_1 x_{123}]
        let a1 = HomologyElement::dual(sm.ring(), sm.ring().monomial_of(&[("a~", 1)]).unwrap(), scalar(1));
        let got = gysin(&cat.pullback_pl(2).unwrap(), sm, &g2, &a1).unwrap();
        let want = HomologyElement::dual(g2.ring(), gamma_monomial(2, 1, false, [1, 2, 3]), scalar(-1));
        assert_eq!(got, want);
        assert_eq!(got.degree(), Some(a1.degree().unwrap() + g2.dimension() - sm.dimension()));

        let fiber = cat.fiber();
        let pv = cat.pullback_pv(2, 1).unwrap();
        let ah0 = HomologyElement::dual(fiber.ring(), Monomial::unit(3), scalar(1));
        let want = HomologyElement::dual(g2.ring(), gamma_monomial(2, 0, false, [1, 3]), scalar(-1));
        assert_eq!(gysin(&pv, fiber, &g2, &ah0).unwrap(), want);
        let ah0b = HomologyElement::dual(fiber.ring(), fiber.ring().monomial_of(&[("b^", 1)]).unwrap(), scalar(1));
        let want = HomologyElement::dual(g2.ring(), gamma_monomial(2, 0, true, [1, 3]), scalar(-1));
        assert_eq!(gysin(&pv, fiber, &g2, &ah0b).unwrap(), want);
    }

    #[test]
    fn labels() {
        assert_eq!(gamma_label(&gamma_monomial(3, 1, true, [1, 3, 4])), "[a_1 b x_{1,3,4}]");
        assert_eq!(gamma_label(&gamma_monomial(1, 0, false, [])), "[a_0]");
        assert_eq!(sphere_bundle_label(&Monomial::from_exponents(vec![2, 1]), '~'), "[a~_2 b~]");
    }
}
