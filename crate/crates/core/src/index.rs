//! Multi-index combinatorics: the place-permutation action, orbit canonical
//! forms, basis index sets and coset representatives for compositions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::character::{Character, CharacterSequence};
use crate::error::{Error, Result};
use crate::perm::{young_product, Permutation, PermutationGroup};
use crate::ring::Scalar;

/// Default cap on `n^d` for exhaustive index enumeration.
pub const DEFAULT_INDEX_CAP: u128 = 1_000_000;

/// A tuple `(i₁, …, i_d)` of 1-based letters. The empty tuple labels `e_∅`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Wraps entries without an alphabet check; see [`MultiIndex::checked`].
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    pub fn checked(entries: Vec<usize>, n: usize) -> Result<Self> {
        let i = MultiIndex(entries);
        i.check_alphabet(n)?;
        Ok(i)
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&x| x == 0 || x > n) {
            Some(x) => Err(Error::InvalidIndex(format!("letter {x} of {self} is outside [1,{n}]"))),
            None => Ok(()),
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ·i` with `(σ·i)_k = i_{σ⁻¹(k)}`; the degree of `σ` must equal `len()`.
    pub fn act_by(&self, sigma: &Permutation) -> MultiIndex {
        debug_assert_eq!(sigma.degree(), self.len());
        let mut out = vec![0; self.len()];
        for (t, &x) in self.0.iter().enumerate() {
            out[sigma.image(t)] = x;
        }
        MultiIndex(out)
    }

    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultiIndex(v)
    }

    /// Entries at the 0-based positions `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> MultiIndex {
        MultiIndex(self.0[range].to_vec())
    }

    /// `(i_{p₁}, i_{p₂}, …)` for 1-based positions `p`.
    pub fn select(&self, positions: &[usize]) -> MultiIndex {
        MultiIndex(positions.iter().map(|&p| self.0[p - 1]).collect())
    }
}

/// `σ·i`, checking degrees.
pub fn act(sigma: &Permutation, i: &MultiIndex) -> Result<MultiIndex> {
    if sigma.degree() != i.len() {
        return Err(Error::DegreeMismatch { expected: i.len(), found: sigma.degree() });
    }
    Ok(i.act_by(sigma))
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> Self {
        MultiIndex(v)
    }
}

/// The image of `e_i` in the quotient: zero, or `coeff · e_rep`.
#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalIndex<S> {
    Zero,
    Canonical { rep: MultiIndex, coeff: S },
}

impl<S> CanonicalIndex<S> {
    pub fn is_zero(&self) -> bool {
        matches!(self, CanonicalIndex::Zero)
    }
}

/// Orbit minimum, the first element reaching it, and whether χ is trivial on
/// the stabilizer. Does not check the standing hypotheses.
pub(crate) fn classify_unchecked<S: Scalar>(chi: &Character<S>, i: &MultiIndex) -> CanonicalIndex<S> {
    let group = chi.group();
    let mut best: Option<(MultiIndex, usize)> = None;
    for (k, sigma) in group.elements().iter().enumerate() {
        let image = i.act_by(sigma);
        if image == *i && !chi.value_at(k).is_one() {
            return CanonicalIndex::Zero;
        }
        match &best {
            Some((b, _)) if *b <= image => {}
            _ => best = Some((image, k)),
        }
    }
    let (rep, k) = best.expect("groups are non-empty");
    debug_assert!(group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, s)| i.act_by(s) == rep)
        .all(|(m, _)| chi.value_at(m) == chi.value_at(k)));
    CanonicalIndex::Canonical { rep, coeff: chi.value_at(k).clone() }
}

/// `(ℓm(i), ζ(i))`, or `Zero` when χ is non-trivial on the stabilizer of `i`.
pub fn classify<S: Scalar>(chi: &Character<S>, i: &MultiIndex) -> Result<CanonicalIndex<S>> {
    chi.check_standing_hypotheses()?;
    if i.len() != chi.degree() {
        return Err(Error::DegreeMismatch { expected: chi.degree(), found: i.len() });
    }
    Ok(classify_unchecked(chi, i))
}

/// Order of the stabilizer of `i` in the group of `chi`.
pub fn stabilizer_order(group: &PermutationGroup, i: &MultiIndex) -> usize {
    group.elements().iter().filter(|s| i.act_by(s) == *i).count()
}

/// Iterates `[1,n]^d` in lexicographic order.
pub(crate) struct AllIndices {
    n: usize,
    next: Option<Vec<usize>>,
}

impl AllIndices {
    pub(crate) fn new(n: usize, d: usize) -> Self {
        let next = if n == 0 && d > 0 { None } else { Some(vec![1; d]) };
        AllIndices { n, next }
    }
}

impl Iterator for AllIndices {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        while pos > 0 {
            pos -= 1;
            if succ[pos] < self.n {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(MultiIndex(cur))
    }
}

pub(crate) fn check_index_space(n: usize, d: usize, cap: u128) -> Result<()> {
    let size = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::IndexSpaceTooLarge { size, cap });
    }
    Ok(())
}

/// J(χ,n,d): canonical orbit representatives whose stabilizer lies in ker χ.
pub fn enum_j<S: Scalar>(chi: &Character<S>, n: usize) -> Result<Vec<MultiIndex>> {
    enum_j_with_cap(chi, n, DEFAULT_INDEX_CAP)
}

pub fn enum_j_with_cap<S: Scalar>(chi: &Character<S>, n: usize, cap: u128) -> Result<Vec<MultiIndex>> {
    chi.check_standing_hypotheses()?;
    if n == 0 {
        return Err(Error::InvalidIndex("alphabet size must be at least 1".into()));
    }
    let d = chi.degree();
    check_index_space(n, d, cap)?;
    let group = chi.group();
    let out = AllIndices::new(n, d)
        .filter(|i| {
            group.elements().iter().enumerate().all(|(k, s)| {
                let image = i.act_by(s);
                image > *i || (image == *i && chi.value_at(k).is_one())
            })
        })
        .collect();
    Ok(out)
}

/// M(χ;n;d,e,…,h): lexicographically minimal representatives of the left
/// cosets of `W_n` modulo `W_d × ω^d(W_e) × ⋯`.
#[derive(Clone, Debug)]
pub struct CompositionRepSet {
    n: usize,
    composition: Vec<usize>,
    offsets: Vec<usize>,
    reps: Vec<Permutation>,
    rep_positions: Vec<usize>,
    subgroup: PermutationGroup,
    ambient: std::sync::Arc<PermutationGroup>,
}

impl CompositionRepSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn composition(&self) -> &[usize] {
        &self.composition
    }

    /// 0-based start of each block.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// Position of each rep in the sorted element list of `W_n`.
    pub fn rep_positions(&self) -> &[usize] {
        &self.rep_positions
    }

    pub fn subgroup(&self) -> &PermutationGroup {
        &self.subgroup
    }

    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn contains(&self, rho: &Permutation) -> bool {
        self.reps.binary_search(rho).is_ok()
    }

    /// 1-based block `b` of the one-line word of `rho`: `(ρ(o+1), …, ρ(o+part))`.
    pub fn block(&self, rho: &Permutation, b: usize) -> MultiIndex {
        let o = self.offsets[b];
        MultiIndex((o..o + self.composition[b]).map(|t| rho.image(t) + 1).collect())
    }

    pub fn blocks(&self, rho: &Permutation) -> Vec<MultiIndex> {
        (0..self.composition.len()).map(|b| self.block(rho, b)).collect()
    }

    /// Lexicographically minimal element of `σX`.
    pub fn coset_min(&self, sigma: &Permutation) -> Permutation {
        self.subgroup
            .elements()
            .iter()
            .map(|x| sigma * x)
            .min()
            .expect("subgroup is non-empty")
    }

    /// `ζ′·ζ`, together with the block components of `υ ∈ X` satisfying
    /// `ζ′·ζ = ζ′ζυ`.
    pub fn dot_action(&self, zeta_prime: &Permutation, zeta: &Permutation) -> Result<(Permutation, Vec<Permutation>)> {
        if !self.contains(zeta) {
            return Err(Error::InvalidPermutation(format!("{zeta} is not a coset representative")));
        }
        if !self.ambient.contains(zeta_prime) {
            return Err(Error::InvalidPermutation(format!("{zeta_prime} is not in W_{}", self.n)));
        }
        let product = zeta_prime * zeta;
        let rep = self.coset_min(&product);
        let upsilon = &product.inverse() * &rep;
        let factors = self
            .offsets
            .iter()
            .zip(&self.composition)
            .map(|(&o, &len)| {
                let word: Vec<usize> = (o..o + len).map(|t| upsilon.image(t) - o).collect();
                Permutation::from_images(word)
            })
            .collect();
        Ok((rep, factors))
    }
}

pub(crate) fn offsets_of(composition: &[usize]) -> Vec<usize> {
    composition
        .iter()
        .scan(0, |acc, &p| {
            let o = *acc;
            *acc += p;
            Some(o)
        })
        .collect()
}

fn build_reps<S: Scalar>(seq: &CharacterSequence<S>, composition: &[usize]) -> Result<CompositionRepSet> {
    let n: usize = composition.iter().sum();
    let ambient = seq.stage(n)?.group().clone();
    let offsets = offsets_of(composition);
    let groups: Vec<&PermutationGroup> = composition
        .iter()
        .map(|&p| seq.stage(p).map(|c| c.group().as_ref()))
        .collect::<Result<_>>()?;
    let parts: Vec<(&PermutationGroup, usize)> = groups.into_iter().zip(offsets.iter().copied()).collect();
    let subgroup = young_product(n, &parts)?;
    let reps = ambient.left_coset_reps(&subgroup).map_err(|_| {
        Error::InvalidSequence(format!("the block subgroup for {composition:?} is not contained in W_{n}"))
    })?;
    let rep_positions = reps
        .iter()
        .map(|r| ambient.position(r).expect("rep lies in W_n"))
        .collect();
    Ok(CompositionRepSet { n, composition: composition.to_vec(), offsets, reps, rep_positions, subgroup, ambient })
}

/// M(χ;n;d,e,…,h) for `composition = (d, e, …, h)` summing to `n_total`.
pub fn composition_reps<S: Scalar>(
    seq: &CharacterSequence<S>,
    n_total: usize,
    composition: &[usize],
) -> Result<std::sync::Arc<CompositionRepSet>> {
    let sum: usize = composition.iter().sum();
    if sum != n_total {
        return Err(Error::InvalidComposition(format!("{composition:?} does not sum to {n_total}")));
    }
    if composition.is_empty() {
        return Err(Error::InvalidComposition("a composition needs at least one part".into()));
    }
    if n_total > seq.max_degree() {
        return Err(Error::DegreeOverflow { degree: n_total, max: seq.max_degree() });
    }
    seq.cached_reps(composition, || build_reps(seq, composition))
}

/// J(χ;n;d,e,…,h): the block tuples of the representatives in M.
pub fn enum_j_composition<S: Scalar>(
    seq: &CharacterSequence<S>,
    n_total: usize,
    composition: &[usize],
) -> Result<Vec<Vec<MultiIndex>>> {
    let m = composition_reps(seq, n_total, composition)?;
    Ok(m.reps().iter().map(|r| m.blocks(r)).collect())
}

/// Compositions of `n` into `k` non-negative parts, in lexicographic order.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=n {
            prefix.push(first);
            go(n - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Which of the two coset factorizations to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSide {
    /// `M(n;p,h) × M(p;d,e,…) → M(n;d,e,…,h)`.
    Left,
    /// `M(n;d,q) × ω^d M(q;e,…,h) → M(n;d,e,…,h)`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub domain_size: usize,
    pub codomain_size: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl FactorizationReport {
    pub fn is_bijection(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Checks that `(ρ, ϱ) ↦ 1·(ρϱ)` is a bijection onto the refined set.
///
/// For [`FactorSide::Left`] the outer split is `(split, n − split)` and
/// `inner` refines `split`; for [`FactorSide::Right`] the outer split is
/// `(split, n − split)` and `inner` refines `n − split`.
pub fn factorization_bijection_check<S: Scalar>(
    seq: &CharacterSequence<S>,
    n: usize,
    split: usize,
    inner: &[usize],
    side: FactorSide,
) -> Result<FactorizationReport> {
    if split > n {
        return Err(Error::InvalidComposition(format!("split {split} exceeds {n}")));
    }
    let rest = n - split;
    let outer = composition_reps(seq, n, &[split, rest])?;
    let (inner_set, refined, shift) = match side {
        FactorSide::Left => {
            let inner_set = composition_reps(seq, split, inner)?;
            let mut refined = inner.to_vec();
            refined.push(rest);
            (inner_set, refined, 0)
        }
        FactorSide::Right => {
            let inner_set = composition_reps(seq, rest, inner)?;
            let mut refined = vec![split];
            refined.extend_from_slice(inner);
            (inner_set, refined, split)
        }
    };
    let target = composition_reps(seq, n, &refined)?;
    let mut image = BTreeSet::new();
    let mut injective = true;
    for rho in outer.reps() {
        for varrho in inner_set.reps() {
            let lifted = varrho.shifted(shift, n)?;
            let rep = target.coset_min(&(rho * &lifted));
            if !target.contains(&rep) || !image.insert(rep) {
                injective = false;
            }
        }
    }
    let domain_size = outer.len() * inner_set.len();
    Ok(FactorizationReport {
        domain_size,
        codomain_size: target.len(),
        injective,
        surjective: image.len() == target.len(),
    })
}
