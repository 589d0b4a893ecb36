//! The `⊛`-ring as a quotient `R′/I` of a polynomial ring.
//!
//! `R = Q[ω, α_1, …, α_{n−1}, β_0, …, β_{n−1}]`, `R′` its polynomials
//! without constant term, and `I` generated by
//!
//! * `α_i α_j = α_i β_j = 0` for `i + j > n − 1`, `β_i β_j = 0`,
//! * `α_i α_j = α_k α_l` and `α_i β_j = α_k β_l` for `i + j = k + l ≤ n − 1`,
//!
//! where `α_0` stands for `ω`. The generators correspond to `ω = σ_1^0`,
//! `α_i = σ_1^i`, `β_i = μ_1^i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::classes::{coh_basis, CohClass, CohGen};
use super::product::gh_product;
use crate::Report;
use crate::spaces::SpaceParams;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PresGen {
    Omega,
    /// `α_i`, `1 ≤ i ≤ n − 1`
    Alpha(u32),
    /// `β_i`, `0 ≤ i ≤ n − 1`
    Beta(u32),
}

/// `ω^e · Π α_i^{a_i} · Π β_i^{b_i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PresMonomial {
    omega: u32,
    /// `alpha[i - 1]` is the exponent of `α_i`.
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl PresMonomial {
    /// `alpha` has length `n − 1` (exponents of `α_1 … α_{n−1}`), `beta`
    /// length `n`.
    pub fn new(p: &SpaceParams, omega: u32, alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        let n = p.n() as usize;
        if alpha.len() != n - 1 || beta.len() != n {
            return Err(Error::OutOfRange {
                what: "exponent vector length",
                value: (alpha.len() + beta.len()) as i64,
                bound: format!("{} alpha and {} beta exponents for n={}", n - 1, n, n),
            });
        }
        Ok(PresMonomial { omega, alpha, beta })
    }

    /// The empty product (not an element of `R′`).
    pub fn one(p: &SpaceParams) -> Self {
        let n = p.n() as usize;
        PresMonomial { omega: 0, alpha: vec![0; n - 1], beta: vec![0; n] }
    }

    pub fn generator(p: &SpaceParams, g: PresGen) -> Result<Self> {
        let mut m = Self::one(p);
        match g {
            PresGen::Omega => m.omega = 1,
            PresGen::Alpha(i) => {
                if i == 0 || i >= p.n() {
                    return Err(Error::OutOfRange {
                        what: "alpha index",
                        value: i as i64,
                        bound: format!("1 <= i <= {}", p.n() - 1),
                    });
                }
                m.alpha[i as usize - 1] = 1;
            }
            PresGen::Beta(i) => {
                p.check_index(i)?;
                m.beta[i as usize] = 1;
            }
        }
        Ok(m)
    }

    pub fn omega_power(p: &SpaceParams, k: u32) -> Self {
        let mut m = Self::one(p);
        m.omega = k;
        m
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn alpha_exponents(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta_exponents(&self) -> &[u32] {
        &self.beta
    }

    /// Number of factors; also the loop level of the image.
    pub fn level(&self) -> u32 {
        self.omega + self.alpha.iter().sum::<u32>() + self.beta.iter().sum::<u32>()
    }

    /// `Σ i·a_i + Σ i·b_i`.
    pub fn weight(&self) -> u32 {
        let a: u32 = self.alpha.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum();
        let b: u32 = self.beta.iter().enumerate().map(|(i, &e)| i as u32 * e).sum();
        a + b
    }

    pub fn beta_count(&self) -> u32 {
        self.beta.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let add = |x: &[u32], y: &[u32]| x.iter().zip(y).map(|(a, b)| a + b).collect();
        PresMonomial {
            omega: self.omega + other.omega,
            alpha: add(&self.alpha, &other.alpha),
            beta: add(&self.beta, &other.beta),
        }
    }

    /// Factor `α_i` with `α_0 = ω`.
    fn alpha_or_omega(p: &SpaceParams, i: u32) -> Self {
        if i == 0 {
            Self::omega_power(p, 1)
        } else {
            Self::generator(p, PresGen::Alpha(i)).expect("index checked by caller")
        }
    }
}

impl fmt::Display for PresMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |name: String, e: u32| match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("w".into(), self.omega);
        for (i, &e) in self.alpha.iter().enumerate() {
            push(format!("a{}", i + 1), e);
        }
        for (i, &e) in self.beta.iter().enumerate() {
            push(format!("b{i}"), e);
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Image of a monomial in `(H^•(ΛM, M), ⊛)`: with `k` the factor count,
/// `s` the weight and `c` the number of `β` factors, `σ_k^s` if `c = 0`,
/// `μ_k^s` if `c = 1` (both only for `s ≤ n − 1`), and 0 otherwise.
pub fn presentation_normalize(p: &SpaceParams, m: &PresMonomial) -> Result<CohClass> {
    let k = m.level();
    if k == 0 {
        return Err(Error::ZeroMonomial);
    }
    let s = m.weight();
    if s > p.n() - 1 {
        return Ok(CohClass::zero());
    }
    Ok(match m.beta_count() {
        0 => CohClass::basis(CohGen::sigma(k, s)),
        1 => CohClass::basis(CohGen::mu(k, s)),
        _ => CohClass::zero(),
    })
}

/// Rewrites `m` with the generating relations of `I` alone until it reads
/// `ω^e`, `ω^e α_s` or `ω^e β_s`; `None` if it lies in `I`.
pub fn reduce_modulo_relations(p: &SpaceParams, m: &PresMonomial) -> Option<PresMonomial> {
    let n = p.n();
    let mut m = m.clone();
    loop {
        // β_i β_j = 0
        if m.beta_count() >= 2 {
            return None;
        }
        let alphas: Vec<u32> = m
            .alpha
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| core::iter::repeat(i as u32 + 1).take(e as usize))
            .collect();
        let beta = m.beta.iter().position(|&e| e == 1).map(|i| i as u32);
        match (alphas.as_slice(), beta) {
            // α_i α_j = 0 for i + j > n − 1, else α_i α_j = ω α_{i+j}
            ([i, j, ..], _) => {
                let (i, j) = (*i, *j);
                if i + j > n - 1 {
                    return None;
                }
                m.alpha[i as usize - 1] -= 1;
                m.alpha[j as usize - 1] -= 1;
                m.omega += 1;
                m.alpha[(i + j) as usize - 1] += 1;
            }
            // α_i β_j = 0 for i + j > n − 1, else α_i β_j = ω β_{i+j}
            ([i], Some(j)) => {
                let i = *i;
                if i + j > n - 1 {
                    return None;
                }
                m.alpha[i as usize - 1] -= 1;
                m.beta[j as usize] -= 1;
                m.omega += 1;
                m.beta[(i + j) as usize] += 1;
            }
            _ => return Some(m),
        }
    }
}

/// Generating relations of `I` as `(lhs, rhs)`, `rhs = None` meaning 0.
pub fn relation_generators(p: &SpaceParams) -> Vec<(PresMonomial, Option<PresMonomial>)> {
    let n = p.n();
    let alpha = |i| PresMonomial::alpha_or_omega(p, i);
    let beta = |i| PresMonomial::generator(p, PresGen::Beta(i)).expect("i < n");
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i + j > n - 1 {
                out.push((alpha(i).mul(&alpha(j)), None));
            }
        }
        for j in 0..n {
            if i + j > n - 1 {
                out.push((alpha(i).mul(&beta(j)), None));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            out.push((beta(i).mul(&beta(j)), None));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i + j > n - 1 || k > i + j {
                    continue;
                }
                let l = i + j - k;
                if l < n {
                    out.push((alpha(i).mul(&alpha(j)), Some(alpha(k).mul(&alpha(l)))));
                    out.push((alpha(i).mul(&beta(j)), Some(alpha(k).mul(&beta(l)))));
                }
            }
        }
    }
    out
}

/// All monomials with `1 ≤ level ≤ max_level`.
pub fn monomials_up_to(p: &SpaceParams, max_level: u32) -> Vec<PresMonomial> {
    let slots = 2 * p.n() as usize;
    let mut out = Vec::new();
    let mut exps = vec![0u32; slots];
    fn rec(pos: usize, budget: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == exps.len() {
            out.push(exps.clone());
            return;
        }
        for e in 0..=budget {
            exps[pos] = e;
            rec(pos + 1, budget - e, exps, out);
        }
        exps[pos] = 0;
    }
    let mut raw = Vec::new();
    rec(0, max_level, &mut exps, &mut raw);
    let n = p.n() as usize;
    for e in raw {
        let m = PresMonomial { omega: e[0], alpha: e[1..n].to_vec(), beta: e[n..].to_vec() };
        if m.level() > 0 {
            out.push(m);
        }
    }
    out.sort_by_key(|m| m.level());
    out
}

/// Checks that normalization is a well-defined ring map `R′/I → (H^•, ⊛)`
/// that is bijective onto the basis classes of level `≤ max_level`, and
/// that `ω^k ≠ 0` for `k ≤ 2·max_level`.
pub fn verify_presentation(p: &SpaceParams, max_level: u32) -> Report {
    let mut report = Report::new("presentation");
    let monomials = monomials_up_to(p, max_level);
    let norm = |m: &PresMonomial| presentation_normalize(p, m).expect("level >= 1");

    // I maps to zero: every generating relation, times every multiplier.
    let one = PresMonomial::one(p);
    for (lhs, rhs) in relation_generators(p) {
        let budget = max_level.saturating_sub(lhs.level());
        for r in core::iter::once(&one).chain(monomials.iter().filter(|m| m.level() <= budget)) {
            let l = norm(&r.mul(&lhs));
            let rr = rhs.as_ref().map(|x| norm(&r.mul(x))).unwrap_or_default();
            report.check(l == rr, || {
                let rhs = rhs.as_ref().map(|x| format!("{}", r.mul(x))).unwrap_or_else(|| "0".into());
                format!("{} = {rhs} but images are {l} and {rr}", r.mul(&lhs))
            });
        }
    }

    // Ring map: normalize(pq) = normalize(p) ⊛ normalize(q).
    for a in &monomials {
        for b in monomials.iter().take_while(|b| a.level() + b.level() <= max_level) {
            let lhs = norm(&a.mul(b));
            let rhs = gh_product(p, &norm(a), &norm(b)).expect("valid classes");
            report.check(lhs == rhs, || format!("normalize({a} * {b}) = {lhs} but product is {rhs}"));
        }
    }

    // Kernel is exactly I, and the map is onto: canonical forms modulo I
    // biject with the nonzero basis classes.
    let mut canonical: BTreeMap<PresMonomial, CohClass> = BTreeMap::new();
    for m in &monomials {
        let image = norm(m);
        match reduce_modulo_relations(p, m) {
            None => report.check(image.is_zero(), || format!("{m} lies in I but maps to {image}")),
            Some(c) => {
                let ci = norm(&c);
                report.check(ci == image && !image.is_zero(), || {
                    format!("{m} reduces to {c} with image {ci}, but maps to {image}")
                });
                canonical.insert(c, ci);
            }
        }
    }
    let mut hit: BTreeMap<CohGen, PresMonomial> = BTreeMap::new();
    for (c, image) in &canonical {
        for (g, _) in image.iter() {
            if let Some(prev) = hit.insert(*g, c.clone()) {
                report.check(false, || format!("{prev} and {c} both map to {g:?} but differ modulo I"));
            }
        }
    }
    for g in coh_basis(p, max_level) {
        report.check(hit.contains_key(&g), || format!("basis class {} not hit", CohClass::basis(g)));
    }

    for k in 1..=2 * max_level {
        let image = norm(&PresMonomial::omega_power(p, k));
        report.check(image == CohClass::basis(CohGen::sigma(k, 0)), || format!("w^{k} maps to {image}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::Family;

    fn cp(n: u32) -> SpaceParams {
        SpaceParams::new(Family::Complex, n).unwrap()
    }

    #[test]
    fn normal_forms() {
        let p = cp(2);
        let w = PresMonomial::generator(&p, PresGen::Omega).unwrap();
        let a1 = PresMonomial::generator(&p, PresGen::Alpha(1)).unwrap();
        let b0 = PresMonomial::generator(&p, PresGen::Beta(0)).unwrap();
        let b1 = PresMonomial::generator(&p, PresGen::Beta(1)).unwrap();
        assert_eq!(presentation_normalize(&p, &w.mul(&a1)).unwrap(), CohClass::basis(CohGen::sigma(2, 1)));
        let direct = gh_product(&p, &CohClass::basis(CohGen::sigma(1, 0)), &CohClass::basis(CohGen::sigma(1, 1)));
        assert_eq!(presentation_normalize(&p, &w.mul(&a1)).unwrap(), direct.unwrap());
        assert!(presentation_normalize(&p, &b0.mul(&b1)).unwrap().is_zero());
        for k in 1..=12 {
            let img = presentation_normalize(&p, &PresMonomial::omega_power(&p, k)).unwrap();
            assert_eq!(img, CohClass::basis(CohGen::sigma(k, 0)));
        }
        assert_eq!(presentation_normalize(&p, &PresMonomial::one(&p)), Err(Error::ZeroMonomial));
    }

    #[test]
    fn generator_ranges() {
        let p = cp(2);
        assert!(PresMonomial::generator(&p, PresGen::Alpha(0)).is_err());
        assert!(PresMonomial::generator(&p, PresGen::Alpha(2)).is_err());
        assert!(PresMonomial::generator(&p, PresGen::Beta(2)).is_err());
        assert!(PresMonomial::new(&p, 1, vec![], vec![0, 0]).is_err());
    }

    #[test]
    fn reduction_examples() {
        let p = cp(3);
        let a1 = PresMonomial::generator(&p, PresGen::Alpha(1)).unwrap();
        let a2 = PresMonomial::generator(&p, PresGen::Alpha(2)).unwrap();
        let w = PresMonomial::omega_power(&p, 1);
        // α_1^2 = ω α_2
        assert_eq!(reduce_modulo_relations(&p, &a1.mul(&a1)), Some(w.mul(&a2)));
        // α_1^3 = ω α_1 α_2 = 0
        assert_eq!(reduce_modulo_relations(&p, &a1.mul(&a1).mul(&a1)), None);
        assert_eq!(format!("{}", a1.mul(&a1).mul(&w)), "w*a1^2");
    }

    #[test]
    fn monomial_enumeration_counts() {
        // 2n generators, level ≤ L: C(L + 2n, 2n) − 1 monomials.
        assert_eq!(monomials_up_to(&cp(2), 3).len(), 35 - 1);
        assert_eq!(monomials_up_to(&cp(3), 2).len(), 28 - 1);
    }

    #[test]
    fn verify_small() {
        for fam in Family::ALL {
            for n in 1..=3 {
                let p = SpaceParams::new(fam, n).unwrap();
                let r = verify_presentation(&p, 4);
                assert!(r.passed(), "{r}");
            }
        }
    }
}
