use super::classes::{CohClass, CohGen, CohKind, TensorCohClass};
use crate::spaces::SpaceParams;
use crate::Result;

/// `⊛` on basis classes:
///
/// * `σ_k^i ⊛ σ_l^j = σ_{k+l}^{i+j}` if `i + j ≤ n − 1`, else 0
/// * `σ_k^i ⊛ μ_l^j = μ_k^i ⊛ σ_l^j = μ_{k+l}^{i+j}` if `i + j ≤ n − 1`, else 0
/// * `μ_k^i ⊛ μ_l^j = 0`
pub fn gh_product_of_generators(p: &SpaceParams, a: CohGen, b: CohGen) -> Option<CohGen> {
    let index = a.index + b.index;
    if index > p.n() - 1 {
        return None;
    }
    let level = a.level + b.level;
    match (a.kind, b.kind) {
        (CohKind::Sigma, CohKind::Sigma) => Some(CohGen::sigma(level, index)),
        (CohKind::Sigma, CohKind::Mu) | (CohKind::Mu, CohKind::Sigma) => Some(CohGen::mu(level, index)),
        (CohKind::Mu, CohKind::Mu) => None,
    }
}

/// Bilinear extension of [`gh_product_of_generators`].
pub fn gh_product(p: &SpaceParams, a: &CohClass, b: &CohClass) -> Result<CohClass> {
    for (g, _) in a.iter().chain(b.iter()) {
        g.validate(p)?;
    }
    let mut out = CohClass::zero();
    for (g, x) in a.iter() {
        for (h, y) in b.iter() {
            if let Some(gh) = gh_product_of_generators(p, *g, *h) {
                out.add_term(gh, x * y);
            }
        }
    }
    Ok(out)
}

/// `⊛` applied to a sum of cross terms `Σ c · (a × b)`.
pub fn gh_product_tensor(p: &SpaceParams, t: &TensorCohClass) -> Result<CohClass> {
    let mut out = CohClass::zero();
    for ((g, h), c) in t.iter() {
        let prod = gh_product(p, &CohClass::basis(*g), &CohClass::basis(*h))?;
        out = out + prod.scale(c);
    }
    Ok(out)
}
