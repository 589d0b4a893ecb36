use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::graded_ring::add_term;
use crate::spaces::SpaceParams;
use crate::{Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoopKind {
    A,
    B,
}

/// `A_k^i` or `B_k^i`, a basis class of `H_•(ΛM, M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopGen {
    pub kind: LoopKind,
    pub level: u32,
    pub index: u32,
}

impl LoopGen {
    pub fn a(level: u32, index: u32) -> Self {
        LoopGen { kind: LoopKind::A, level, index }
    }

    pub fn b(level: u32, index: u32) -> Self {
        LoopGen { kind: LoopKind::B, level, index }
    }

    pub fn validate(&self, p: &SpaceParams) -> Result<()> {
        p.check_level(self.level)?;
        p.check_index(self.index)
    }

    pub fn degree(&self, p: &SpaceParams) -> Result<u32> {
        match self.kind {
            LoopKind::A => p.deg_a(self.level, self.index),
            LoopKind::B => p.deg_b(self.level, self.index),
        }
    }

    /// The cohomology class dual to this one.
    pub fn dual(&self) -> CohGen {
        let kind = match self.kind {
            LoopKind::A => CohKind::Sigma,
            LoopKind::B => CohKind::Mu,
        };
        CohGen { kind, level: self.level, index: self.index }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CohKind {
    Sigma,
    Mu,
}

/// `σ_k^i` or `μ_k^i`, dual to `A_k^i` resp. `B_k^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CohGen {
    pub kind: CohKind,
    pub level: u32,
    pub index: u32,
}

impl CohGen {
    pub fn sigma(level: u32, index: u32) -> Self {
        CohGen { kind: CohKind::Sigma, level, index }
    }

    pub fn mu(level: u32, index: u32) -> Self {
        CohGen { kind: CohKind::Mu, level, index }
    }

    pub fn validate(&self, p: &SpaceParams) -> Result<()> {
        self.dual().validate(p)
    }

    pub fn degree(&self, p: &SpaceParams) -> Result<u32> {
        self.dual().degree(p)
    }

    pub fn dual(&self) -> LoopGen {
        let kind = match self.kind {
            CohKind::Sigma => LoopKind::A,
            CohKind::Mu => LoopKind::B,
        };
        LoopGen { kind, level: self.level, index: self.index }
    }
}

/// Keys that can appear in a [`LinComb`], with their ASCII rendering.
pub trait Term: Ord + Clone {
    fn write_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Term for LoopGen {
    fn write_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LoopKind::A => 'A',
            LoopKind::B => 'B',
        };
        write!(f, "{c}[{},{}]", self.level, self.index)
    }
}

impl Term for CohGen {
    fn write_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            CohKind::Sigma => 's',
            CohKind::Mu => 'm',
        };
        write!(f, "{c}[{},{}]", self.level, self.index)
    }
}

impl<K: Term> Term for (K, K) {
    fn write_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_term(f)?;
        f.write_str(" x ")?;
        self.1.write_term(f)
    }
}

impl<K: Term> Term for (K, K, K) {
    fn write_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_term(f)?;
        f.write_str(" x ")?;
        self.1.write_term(f)?;
        f.write_str(" x ")?;
        self.2.write_term(f)
    }
}

/// Finite rational combination of basis keys, zero coefficients dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

pub type LoopClass = LinComb<LoopGen>;
pub type TensorLoopClass = LinComb<(LoopGen, LoopGen)>;
pub type CohClass = LinComb<CohGen>;
pub type TensorCohClass = LinComb<(CohGen, CohGen)>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        add_term(&mut self.terms, key, coeff);
    }

    pub fn terms(&self) -> &BTreeMap<K, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.iter().map(|(k, v)| (k.clone(), v * c)).collect()
    }

    /// Linear extension of `f` from basis keys.
    pub fn flat_map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k).terms {
                out.add_term(l, d * c);
            }
        }
        out
    }

    /// Fallible variant of [`flat_map`](Self::flat_map).
    pub fn try_flat_map<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> core::result::Result<LinComb<L>, E>,
    ) -> core::result::Result<LinComb<L>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k)?.terms {
                out.add_term(l, d * c);
            }
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-Scalar::one())
    }
}

/// Canonical ASCII form: `A[1,0] x A[2,1] - 3/2*B[1,1]`, `0` when empty.
impl<K: Term> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            match (n == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            k.write_term(f)?;
        }
        Ok(())
    }
}

impl<K: Term> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Common degree of all terms, if any.
pub fn loop_class_degree(p: &SpaceParams, x: &LoopClass) -> Result<Option<u32>> {
    let degs = x.iter().map(|(g, _)| g.degree(p)).collect::<Result<Vec<_>>>()?;
    Ok(homogeneous(degs))
}

pub fn tensor_class_degree(p: &SpaceParams, x: &TensorLoopClass) -> Result<Option<u32>> {
    let degs = x
        .iter()
        .map(|((g, h), _)| Ok(g.degree(p)? + h.degree(p)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(homogeneous(degs))
}

pub fn coh_class_degree(p: &SpaceParams, x: &CohClass) -> Result<Option<u32>> {
    let degs = x.iter().map(|(g, _)| g.degree(p)).collect::<Result<Vec<_>>>()?;
    Ok(homogeneous(degs))
}

fn homogeneous(degs: Vec<u32>) -> Option<u32> {
    let first = *degs.first()?;
    degs.iter().all(|&d| d == first).then_some(first)
}

/// Every `A_k^i`, `B_k^i` with `1 ≤ k ≤ max_k`, ordered by level.
pub fn loop_basis(p: &SpaceParams, max_k: u32) -> Vec<LoopGen> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for i in 0..p.n() {
            out.push(LoopGen::a(k, i));
            out.push(LoopGen::b(k, i));
        }
    }
    out
}

/// Every `σ_k^i`, `μ_k^i` with `1 ≤ k ≤ max_k`.
pub fn coh_basis(p: &SpaceParams, max_k: u32) -> Vec<CohGen> {
    loop_basis(p, max_k).iter().map(LoopGen::dual).collect()
}

/// Kronecker pairing of the dual bases: `⟨σ_k^i, A_k^i⟩ = ⟨μ_k^i, B_k^i⟩ = 1`.
pub fn kronecker(a: &CohClass, x: &LoopClass) -> Scalar {
    let mut acc = Scalar::zero();
    for (g, c) in x.iter() {
        if let Some(d) = a.terms.get(&g.dual()) {
            acc += c * d;
        }
    }
    acc
}

/// `⟨a × b, T⟩ = Σ a(g) b(h) T(g, h)`, no sign.
pub fn kronecker_tensor(a: &CohClass, b: &CohClass, t: &TensorLoopClass) -> Scalar {
    let mut acc = Scalar::zero();
    for ((g, h), c) in t.iter() {
        if let (Some(x), Some(y)) = (a.terms.get(&g.dual()), b.terms.get(&h.dual())) {
            acc += c * x * y;
        }
    }
    acc
}

/// Number of basis classes of `H_d(ΛM, M)`.
pub fn betti(p: &SpaceParams, d: u32) -> usize {
    let mut count = 0;
    let mut k = 1;
    while p.index(k).expect("k >= 1") <= d {
        for i in 0..p.n() {
            count += (p.deg_a(k, i).expect("valid") == d) as usize;
            count += (p.deg_b(k, i).expect("valid") == d) as usize;
        }
        k += 1;
    }
    count
}

/// `(d, betti(d))` for `0 ≤ d ≤ max_d`.
pub fn betti_table(p: &SpaceParams, max_d: u32) -> Vec<(u32, usize)> {
    (0..=max_d).map(|d| (d, betti(p, d))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::Family;
    use crate::{ratio, scalar};
    use alloc::string::ToString;

    fn cp2() -> SpaceParams {
        SpaceParams::new(Family::Complex, 2).unwrap()
    }

    #[test]
    fn display_is_canonical() {
        let x: LoopClass = [(LoopGen::a(2, 0), scalar(1)), (LoopGen::b(1, 1), ratio(-3, 2))]
            .into_iter()
            .collect();
        assert_eq!(x.to_string(), "A[2,0] - 3/2*B[1,1]");
        let t = TensorLoopClass::term((LoopGen::a(1, 0), LoopGen::b(1, 1)), scalar(-1));
        assert_eq!(t.to_string(), "-A[1,0] x B[1,1]");
        assert_eq!(LoopClass::zero().to_string(), "0");
        assert_eq!(CohClass::basis(CohGen::mu(3, 1)).to_string(), "m[3,1]");
    }

    #[test]
    fn cancellation_drops_terms() {
        let g = LoopGen::a(1, 0);
        let x = LoopClass::basis(g) - LoopClass::basis(g);
        assert!(x.is_zero());
    }

    #[test]
    fn dual_basis_pairing() {
        let s = CohClass::basis(CohGen::sigma(2, 0));
        assert_eq!(kronecker(&s, &LoopClass::basis(LoopGen::a(2, 0))), scalar(1));
        assert_eq!(kronecker(&s, &LoopClass::basis(LoopGen::b(2, 0))), scalar(0));
    }

    #[test]
    fn betti_numbers_cp2() {
        let p = cp2();
        assert_eq!(betti(&p, 5), 1);
        assert_eq!(betti(&p, 2), 0);
        assert_eq!(betti(&p, 0), 0);
        // A_1^0 in degree 1, A_1^1 in 3, B_1^0 in 6, B_1^1 in 8.
        let table = betti_table(&p, 8);
        let nonzero: Vec<u32> = table.iter().filter(|(_, c)| *c > 0).map(|(d, _)| *d).collect();
        assert_eq!(nonzero, [1, 3, 5, 6, 7, 8]);
    }

    #[test]
    fn betti_agrees_with_basis_degrees() {
        for fam in Family::ALL {
            let p = SpaceParams::new(fam, 3).unwrap();
            let max_d = 60;
            let mut counts = alloc::vec![0usize; max_d as usize + 1];
            for g in loop_basis(&p, 20) {
                let d = g.degree(&p).unwrap();
                if d <= max_d {
                    counts[d as usize] += 1;
                }
            }
            for (d, c) in betti_table(&p, max_d) {
                assert_eq!(c, counts[d as usize], "degree {d}");
            }
        }
    }
}
