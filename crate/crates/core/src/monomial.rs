//! Monomial `W`-modules `σe_i = γ_i(σ)e_{σi}` and the bases of the χ-kernel,
//! the χ-image and the quotient.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::character::Character;
use crate::error::{Error, Result};
use crate::index::{AllIndices, MultiIndex};
use crate::perm::PermutationGroup;
use crate::ring::{check_descriptor, invert_integer, RingDescriptor, Scalar};

/// A finite linear combination of labelled basis vectors; zeros are never stored.
#[derive(Clone, PartialEq)]
pub struct SparseVector<S> {
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> Default for SparseVector<S> {
    fn default() -> Self {
        SparseVector { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> SparseVector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: MultiIndex) -> Self {
        let mut v = Self::zero();
        v.add_term(i, S::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Self {
        let mut v = Self::zero();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn add_term(&mut self, i: MultiIndex, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, i: &MultiIndex) -> S {
        self.terms.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, v)| (i.clone(), c.clone() * v.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }
}

impl<S: Scalar> fmt::Debug for SparseVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e{i}")?;
        }
        Ok(())
    }
}

/// A free module with basis `(e_i)_{i∈I}` on which `W` acts monomially.
#[derive(Clone)]
pub struct MonomialModule<S> {
    group: Arc<PermutationGroup>,
    ring: RingDescriptor,
    indices: Vec<MultiIndex>,
    // action[σ][i] = position of σi
    action: Vec<Vec<usize>>,
    // gamma[i][σ] = γ_i(σ)
    gamma: Vec<Vec<S>>,
}

/// `I(χ,M)`, `I₀(χ,M)` and their intersections with the orbit minima `I*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexClassification {
    pub i_set: Vec<MultiIndex>,
    pub i0_set: Vec<MultiIndex>,
    pub j_set: Vec<MultiIndex>,
    pub j0_set: Vec<MultiIndex>,
}

/// Bases of the χ-kernel, the χ-image and the quotient.
#[derive(Clone, Debug)]
pub struct ModuleBases<S: Scalar> {
    pub kernel: Vec<SparseVector<S>>,
    pub image: Vec<SparseVector<S>>,
    pub quotient: Vec<MultiIndex>,
}

impl<S: Scalar> MonomialModule<S> {
    /// Tabulates the action and the cocycle family and validates both.
    ///
    /// `action(σ, i)` returns the label of `σi`; `gamma(i, σ)` returns `γ_i(σ)`.
    pub fn new(
        group: Arc<PermutationGroup>,
        ring: RingDescriptor,
        mut indices: Vec<MultiIndex>,
        action: impl Fn(&crate::perm::Permutation, &MultiIndex) -> MultiIndex,
        gamma: impl Fn(&MultiIndex, &crate::perm::Permutation) -> S,
    ) -> Result<Self> {
        check_descriptor::<S>(&ring)?;
        indices.sort();
        indices.dedup();
        let pos = |i: &MultiIndex| indices.binary_search(i).ok();
        let mut table = Vec::with_capacity(group.order());
        for sigma in group.elements() {
            let row = indices
                .iter()
                .map(|i| {
                    let image = action(sigma, i);
                    pos(&image).ok_or_else(|| {
                        Error::InvalidModule(format!("{sigma} sends {i} outside the index set"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        let gamma: Vec<Vec<S>> = indices
            .iter()
            .map(|i| group.elements().iter().map(|s| gamma(i, s)).collect())
            .collect();
        let m = MonomialModule { group, ring, indices, action: table, gamma };
        m.validate()?;
        Ok(m)
    }

    /// `T^d(K^n)` with `W ≤ S_d` permuting places and `γ ≡ 1`.
    pub fn tensor_power(group: Arc<PermutationGroup>, ring: RingDescriptor, n: usize) -> Result<Self> {
        let d = group.degree();
        crate::index::check_index_space(n, d, crate::index::DEFAULT_INDEX_CAP)?;
        let indices = AllIndices::new(n, d).collect();
        MonomialModule::new(group, ring, indices, |s, i| i.act_by(s), |_, _| S::one())
    }

    fn validate(&self) -> Result<()> {
        let els = self.group.elements();
        let id = self
            .group
            .position(&crate::perm::Permutation::identity(self.group.degree()))
            .expect("identity");
        for i in 0..self.indices.len() {
            if self.action[id][i] != i {
                return Err(Error::InvalidModule(format!("identity moves {}", self.indices[i])));
            }
            for (s, g) in self.gamma[i].iter().enumerate() {
                if !g.is_unit() {
                    return Err(Error::InvalidModule(format!(
                        "γ_{}({}) = {g} is not a unit",
                        self.indices[i], els[s]
                    )));
                }
            }
        }
        for (a, sa) in els.iter().enumerate() {
            for (b, sb) in els.iter().enumerate() {
                let ab = self.group.position(&(sa * sb)).expect("closed");
                for i in 0..self.indices.len() {
                    let bi = self.action[b][i];
                    if self.action[ab][i] != self.action[a][bi] {
                        return Err(Error::InvalidModule(format!("not a left action at {sa}, {sb}")));
                    }
                    if self.gamma[i][ab] != self.gamma[bi][a].clone() * self.gamma[i][b].clone() {
                        return Err(Error::InvalidModule(format!(
                            "cocycle law fails at i = {}, σ = {sa}, τ = {sb}",
                            self.indices[i]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    fn position(&self, i: &MultiIndex) -> Result<usize> {
        self.indices
            .binary_search(i)
            .map_err(|_| Error::InvalidIndex(format!("{i} is not a basis label of the module")))
    }

    fn check_character(&self, chi: &Character<S>) -> Result<()> {
        if chi.group().elements() != self.group.elements() {
            return Err(Error::ContextMismatch("character lives on a different group".into()));
        }
        Ok(())
    }

    /// `σz` for the group element at sorted position `s`.
    fn apply_at(&self, s: usize, z: &SparseVector<S>) -> Result<SparseVector<S>> {
        let mut out = SparseVector::zero();
        for (i, c) in z.iter() {
            let p = self.position(i)?;
            let target = self.action[s][p];
            out.add_term(self.indices[target].clone(), self.gamma[p][s].clone() * c.clone());
        }
        Ok(out)
    }

    pub fn apply(&self, sigma: &crate::perm::Permutation, z: &SparseVector<S>) -> Result<SparseVector<S>> {
        let s = self
            .group
            .position(sigma)
            .ok_or_else(|| Error::InvalidPermutation(format!("{sigma} is not in W")))?;
        self.apply_at(s, z)
    }

    /// `Σ_σ weight(σ)·σz`, with no normalization.
    pub fn weighted_sum(&self, weight: &Character<S>, z: &SparseVector<S>) -> Result<SparseVector<S>> {
        self.check_character(weight)?;
        let mut out = SparseVector::zero();
        for s in 0..self.group.order() {
            let moved = self.apply_at(s, z)?;
            out = out.add(&moved.scale(weight.value_at(s)));
        }
        Ok(out)
    }

    /// `a_χ z = |W|⁻¹ Σ_σ χ⁻¹(σ)σz`.
    pub fn a_chi(&self, chi: &Character<S>, z: &SparseVector<S>) -> Result<SparseVector<S>> {
        let inv = invert_integer::<S>(self.group.order() as u64, &self.ring)?;
        Ok(self.weighted_sum(&chi.inverse(), z)?.scale(&inv))
    }

    /// The unnormalized symmetrizer with an explicit weight character.
    pub fn a_chi_unnormalized(&self, weight: &Character<S>, z: &SparseVector<S>) -> Result<SparseVector<S>> {
        self.weighted_sum(weight, z)
    }

    fn orbit_minimum(&self, p: usize) -> usize {
        (0..self.group.order()).map(|s| self.action[s][p]).min().expect("non-empty group")
    }

    fn in_i_set(&self, chi: &Character<S>, p: usize) -> bool {
        (0..self.group.order())
            .filter(|&s| self.action[s][p] == p)
            .all(|s| self.gamma[p][s] == *chi.value_at(s))
    }

    pub fn classify_indices(&self, chi: &Character<S>) -> Result<IndexClassification> {
        self.check_character(chi)?;
        let mut out = IndexClassification { i_set: vec![], i0_set: vec![], j_set: vec![], j0_set: vec![] };
        let member: Vec<bool> = (0..self.indices.len()).map(|p| self.in_i_set(chi, p)).collect();
        for (p, i) in self.indices.iter().enumerate() {
            for s in 0..self.group.order() {
                if member[self.action[s][p]] != member[p] {
                    return Err(Error::InvalidModule(format!("I(χ,M) is not stable at {i}")));
                }
            }
            let is_rep = self.orbit_minimum(p) == p;
            match (member[p], is_rep) {
                (true, true) => {
                    out.i_set.push(i.clone());
                    out.j_set.push(i.clone());
                }
                (true, false) => out.i_set.push(i.clone()),
                (false, true) => {
                    out.i0_set.push(i.clone());
                    out.j0_set.push(i.clone());
                }
                (false, false) => out.i0_set.push(i.clone()),
            }
        }
        Ok(out)
    }

    /// Bases of `_χM = ker a_χ`, `M_χ = im a_χ` and `M/_χM`.
    ///
    /// The kernel family pairs each orbit minimum `i` with the other cosets
    /// `σW_i`: `e_i − χ⁻¹(σ)γ_i(σ)e_{σi}`, plus `e_i` for `i ∈ J₀`.
    pub fn bases(&self, chi: &Character<S>) -> Result<ModuleBases<S>> {
        self.check_character(chi)?;
        chi.check_standing_hypotheses()?;
        let cls = self.classify_indices(chi)?;
        let chi_inv = chi.inverse();
        let mut kernel = Vec::new();
        for (p, i) in self.indices.iter().enumerate() {
            if self.orbit_minimum(p) != p {
                continue;
            }
            let stab = PermutationGroup::from_elements(
                self.group.degree(),
                (0..self.group.order())
                    .filter(|&s| self.action[s][p] == p)
                    .map(|s| self.group.elements()[s].clone())
                    .collect(),
            );
            for sigma in self.group.left_coset_reps(&stab)? {
                if stab.contains(&sigma) {
                    continue;
                }
                let s = self.group.position(&sigma).expect("rep in W");
                let c = chi_inv.value_at(s).clone() * self.gamma[p][s].clone();
                let mut v = SparseVector::basis(i.clone());
                v.add_term(self.indices[self.action[s][p]].clone(), -c);
                kernel.push(v);
            }
        }
        for j in &cls.j0_set {
            kernel.push(SparseVector::basis(j.clone()));
        }
        let image = cls
            .j_set
            .iter()
            .map(|j| self.a_chi(chi, &SparseVector::basis(j.clone())))
            .collect::<Result<_>>()?;
        Ok(ModuleBases { kernel, image, quotient: cls.j_set })
    }
}
