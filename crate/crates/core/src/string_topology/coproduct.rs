//! The string topology coproduct `∨`, by two independent routes.
//!
//! [`coproduct_closed`] applies the closed formula
//!
//! ```text
//! ∨A_k^i = Σ_{m=1}^{k-1} Σ_{j=0}^{i} A_m^j × A_{k-m}^{i-j}
//! ∨B_k^i = Σ_{m=1}^{k-1} Σ_{j=0}^{i} (A_m^j × B_{k-m}^{i-j} + B_m^j × A_{k-m}^{i-j})
//! ```
//!
//! [`CoproductPipeline`] recomputes it through the completing manifolds:
//! cap the `Γ_k` representative with the pulled-back Thom class, recognise
//! each piece as a Gysin image along `p_V`, push the resulting `SM ×_M SM`
//! class through the diagonal of `SM`, and read the factors back as loop
//! generators through `(p_L)_!`.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::classes::{LoopClass, LoopGen, LoopKind, TensorLoopClass};
use crate::duality::{cap, diagonal_pushforward, gysin, HomologyElement, RingMap};
use crate::graded_ring::{Monomial, RingElement};
use crate::spaces::{gamma_monomial, SpaceCatalog, SpaceParams};
use crate::{Error, Result, Scalar};

/// `∨` of a single generator, by the closed formula.
pub fn coproduct_of_generator(g: LoopGen) -> TensorLoopClass {
    let mut out = TensorLoopClass::zero();
    let k = g.level;
    let i = g.index;
    for m in 1..k {
        for j in 0..=i {
            match g.kind {
                LoopKind::A => out.add_term((LoopGen::a(m, j), LoopGen::a(k - m, i - j)), Scalar::one()),
                LoopKind::B => {
                    out.add_term((LoopGen::a(m, j), LoopGen::b(k - m, i - j)), Scalar::one());
                    out.add_term((LoopGen::b(m, j), LoopGen::a(k - m, i - j)), Scalar::one());
                }
            }
        }
    }
    out
}

/// Linear extension of [`coproduct_of_generator`].
pub fn coproduct_closed(p: &SpaceParams, x: &LoopClass) -> Result<TensorLoopClass> {
    for (g, _) in x.iter() {
        g.validate(p)?;
    }
    Ok(x.flat_map(|g| coproduct_of_generator(*g)))
}

/// Representative of a loop generator in `H_•(Γ_k)`:
/// `A_k^i ↦ −[a_i x_{1…2k−1}]`, `B_k^i ↦ [a_i b x_{1…2k−1}]`.
pub fn loop_representative(cat: &SpaceCatalog, g: LoopGen) -> Result<HomologyElement> {
    g.validate(cat.params())?;
    let gamma = cat.gamma(g.level)?;
    let xs = 1..2 * g.level;
    let (with_b, sign) = match g.kind {
        LoopKind::A => (false, -Scalar::one()),
        LoopKind::B => (true, Scalar::one()),
    };
    Ok(HomologyElement::dual(
        gamma.ring(),
        gamma_monomial(g.level, g.index, with_b, xs),
        sign,
    ))
}

/// One summand `ξ_{2m} × η_m` of the pulled-back Thom class. The interval
/// class `η_m` is carried implicitly by `m`; it satisfies `η_m ∩ I = [t_m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomTerm {
    pub m: u32,
    pub xi: RingElement,
}

/// `τ_k = Σ_{m=1}^{k-1} ξ_{2m} × η_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomPullback {
    pub k: u32,
    pub terms: Vec<ThomTerm>,
}

pub fn thom_pullback(cat: &SpaceCatalog, k: u32) -> Result<ThomPullback> {
    let gamma = cat.gamma(k)?;
    let terms = (1..k)
        .map(|m| {
            Ok(ThomTerm { m, xi: gamma.ring().generator(&format!("x{}", 2 * m))? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ThomPullback { k, terms })
}

/// `(ξ_{2m} × η_m) ∩ (X × I) = (−1)^{deg X} (ξ_{2m} ∩ X) × [t_m]`, one entry
/// per `m`, with the `[t_m]` factor left implicit.
pub fn cap_with_thom(cat: &SpaceCatalog, k: u32, x: &HomologyElement) -> Result<Vec<(u32, HomologyElement)>> {
    let thom = thom_pullback(cat, k)?;
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let sign = match x.degree() {
        Some(d) if d % 2 == 1 => -Scalar::one(),
        _ => Scalar::one(),
    };
    thom.terms
        .iter()
        .map(|t| Ok((t.m, cap(&t.xi, x)?.scale(&sign))))
        .collect()
}

/// Intermediate classes of the pipeline for one cut position `m`.
#[derive(Debug, Clone)]
pub struct PipelineStep {
    pub m: u32,
    /// `X_m`, in `H_•(Γ_k)`.
    pub capped: HomologyElement,
    /// `Y_m` with `(p_V)_! Y_m = X_m`, in `H_•(SM ×_M SM)`.
    pub fiber_class: HomologyElement,
    /// The `SM` class whose image under the diagonal section is `Y_m`.
    pub sm_class: HomologyElement,
    /// `d_*` of `sm_class`, in `H_•(SM × SM)`.
    pub diagonal: HomologyElement,
    /// Contribution to `∨x`.
    pub contribution: TensorLoopClass,
}

/// Lookup table inverting a map that sends basis classes to signed basis
/// classes: target monomial ↦ (source key, coefficient of the image).
type InverseTable<K> = BTreeMap<Monomial, (K, Scalar)>;

type PlTable = BTreeMap<Monomial, (LoopGen, Scalar)>;

fn insert_unique<K: Clone>(table: &mut InverseTable<K>, image: &HomologyElement, key: K) -> Result<()> {
    let (m, c) = image
        .as_single()
        .ok_or_else(|| Error::Internal(format!("image {image} is not a signed basis class")))?;
    if table.insert(m.clone(), (key, c.clone())).is_some() {
        return Err(Error::Internal(format!("two basis classes map to {image}")));
    }
    Ok(())
}

/// Coproduct through the completing manifolds, with precomputed Gysin
/// tables for `k ≤ max_k` (higher levels are computed on demand).
#[derive(Debug, Clone)]
pub struct CoproductPipeline {
    cat: SpaceCatalog,
    /// `(p_L)_!` at level `l`: `SM` monomial `u` ↦ `(g, c)` with
    /// `(p_L)_! dual(u) = c · rep(g)`.
    pl_tables: BTreeMap<u32, PlTable>,
    /// `(p_V)_!` for `(k, m)`, inverted: `Γ_k` monomial ↦ fiber monomial.
    pv_tables: BTreeMap<(u32, u32), InverseTable<Monomial>>,
    /// Diagonal section `SM → SM ×_M SM` on homology, inverted.
    section: InverseTable<Monomial>,
}

impl CoproductPipeline {
    pub fn new(params: SpaceParams, max_k: u32) -> Result<Self> {
        let cat = SpaceCatalog::new(params, max_k);
        let mut pl_tables = BTreeMap::new();
        let mut pv_tables = BTreeMap::new();
        for k in 1..=max_k {
            pl_tables.insert(k, build_pl_table(&cat, k)?);
            for m in 1..k {
                pv_tables.insert((k, m), build_pv_table(&cat, k, m)?);
            }
        }
        let section = build_section_table(&cat)?;
        Ok(CoproductPipeline { cat, pl_tables, pv_tables, section })
    }

    pub fn catalog(&self) -> &SpaceCatalog {
        &self.cat
    }

    pub fn params(&self) -> &SpaceParams {
        self.cat.params()
    }

    fn pl_table(&self, level: u32) -> Result<Cow<'_, PlTable>> {
        match self.pl_tables.get(&level) {
            Some(t) => Ok(Cow::Borrowed(t)),
            None => Ok(Cow::Owned(build_pl_table(&self.cat, level)?)),
        }
    }

    fn pv_table(&self, k: u32, m: u32) -> Result<Cow<'_, InverseTable<Monomial>>> {
        match self.pv_tables.get(&(k, m)) {
            Some(t) => Ok(Cow::Borrowed(t)),
            None => Ok(Cow::Owned(build_pv_table(&self.cat, k, m)?)),
        }
    }

    pub fn coproduct(&self, x: &LoopClass) -> Result<TensorLoopClass> {
        x.try_flat_map(|g| self.coproduct_of_generator(*g))
    }

    pub fn coproduct_of_generator(&self, g: LoopGen) -> Result<TensorLoopClass> {
        Ok(self
            .trace(g)?
            .into_iter()
            .fold(TensorLoopClass::zero(), |acc, step| acc + step.contribution))
    }

    /// Runs the pipeline on one generator and returns every intermediate.
    pub fn trace(&self, g: LoopGen) -> Result<Vec<PipelineStep>> {
        let k = g.level;
        let x = loop_representative(&self.cat, g)?;
        let fiber_ring = self.cat.fiber().ring();
        let sm_ring = self.cat.sm().ring();
        let square = self.cat.sm_square();

        let mut steps = Vec::new();
        for (m, capped) in cap_with_thom(&self.cat, k, &x)? {
            // (p_V)_! Y_m = X_m
            let pv = self.pv_table(k, m)?;
            let mut fiber_class = HomologyElement::zero(fiber_ring);
            for (v, c) in capped.terms() {
                let (f, img) = pv.get(v).ok_or_else(|| {
                    Error::Internal(format!(
                        "cap term {} at k={k}, m={m} is not a Gysin image along p_V",
                        crate::spaces::gamma_label(v)
                    ))
                })?;
                fiber_class = fiber_class + HomologyElement::dual(fiber_ring, f.clone(), c / img);
            }

            // Y_m = s_* Z_m for the diagonal section s: SM → SM ×_M SM
            let mut sm_class = HomologyElement::zero(sm_ring);
            for (f, c) in fiber_class.terms() {
                let (u, img) = self.section.get(f).ok_or_else(|| {
                    Error::Internal(format!(
                        "{} is not in the image of the diagonal section",
                        crate::spaces::sphere_bundle_label(f, '^')
                    ))
                })?;
                sm_class = sm_class + HomologyElement::dual(sm_ring, u.clone(), c / img);
            }

            let diagonal = diagonal_pushforward(square, &sm_class)?;

            // (p_L, p_L)_! and read off loop generators at levels (m, k−m).
            let left = self.pl_table(m)?;
            let right = self.pl_table(k - m)?;
            let mut contribution = TensorLoopClass::zero();
            for (w, c) in diagonal.terms() {
                let (u1, u2) = square.split(w);
                let (g1, c1) = left.get(&u1).ok_or_else(|| missing_sm(&u1, m))?;
                let (g2, c2) = right.get(&u2).ok_or_else(|| missing_sm(&u2, k - m))?;
                contribution.add_term((*g1, *g2), c * c1 * c2);
            }

            steps.push(PipelineStep { m, capped, fiber_class, sm_class, diagonal, contribution });
        }
        Ok(steps)
    }
}

fn missing_sm(u: &Monomial, level: u32) -> Error {
    Error::Internal(format!(
        "no loop generator at level {level} for {}",
        crate::spaces::sphere_bundle_label(u, '~')
    ))
}

/// For every basis class `u` of `H_•(SM)`: `(p_L)_! u = c · rep(g)` for a
/// unique loop generator `g` at this level.
fn build_pl_table(cat: &SpaceCatalog, level: u32) -> Result<PlTable> {
    let sm = cat.sm();
    let gamma = cat.gamma(level)?;
    let pl = cat.pullback_pl(level)?;
    let mut reps: BTreeMap<Monomial, (LoopGen, Scalar)> = BTreeMap::new();
    for i in 0..cat.params().n() {
        for g in [LoopGen::a(level, i), LoopGen::b(level, i)] {
            let rep = loop_representative(cat, g)?;
            let (m, c) = rep.as_single().expect("representatives are basis classes");
            reps.insert(m.clone(), (g, c.clone()));
        }
    }
    let mut table = PlTable::new();
    for u in sm.ring().full_basis() {
        let image = gysin(&pl, sm, &gamma, &HomologyElement::dual(sm.ring(), u.clone(), Scalar::one()))?;
        let (v, c) = image
            .as_single()
            .ok_or_else(|| Error::Internal(format!("(p_L)_! image {image} is not a basis class")))?;
        let (g, rep_coeff) = reps
            .get(v)
            .ok_or_else(|| Error::Internal(format!("(p_L)_! image {image} is no loop representative")))?;
        table.insert(u, (*g, c / rep_coeff));
    }
    Ok(table)
}

fn build_pv_table(cat: &SpaceCatalog, k: u32, m: u32) -> Result<InverseTable<Monomial>> {
    let fiber = cat.fiber();
    let gamma = cat.gamma(k)?;
    let pv = cat.pullback_pv(k, m)?;
    let mut table = InverseTable::new();
    for f in fiber.ring().full_basis() {
        let image = gysin(&pv, fiber, &gamma, &HomologyElement::dual(fiber.ring(), f.clone(), Scalar::one()))?;
        insert_unique(&mut table, &image, f)?;
    }
    Ok(table)
}

/// `s_*` for `s: SM → SM ×_M SM`, `u ↦ (u, u)`. On cohomology
/// `s^*: â ↦ ã, b̂ ↦ b̃, x̂ ↦ 0` (the fiber class restricts to zero on the
/// section).
fn build_section_table(cat: &SpaceCatalog) -> Result<InverseTable<Monomial>> {
    let sm = cat.sm().ring();
    let fiber = cat.fiber().ring();
    let s = RingMap::new(
        fiber,
        sm,
        alloc::vec![sm.generator("a~")?, sm.generator("b~")?, sm.zero()],
    )?;
    let mut table = InverseTable::new();
    for u in sm.full_basis() {
        let image = s.pushforward(&HomologyElement::dual(sm, u.clone(), Scalar::one()))?;
        insert_unique(&mut table, &image, u)?;
    }
    if table.values().any(|(_, c)| c.is_zero()) {
        return Err(Error::Internal("degenerate section".into()));
    }
    Ok(table)
}
