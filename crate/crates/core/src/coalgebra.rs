//! Comultiplication `c_k`, the counit, and checks of the coalgebra axioms.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{ChiElem, ChiForm, ChiVector, Graded, SemiSymmetricAlgebra};
use crate::duality::pair;
use crate::error::{Error, Result};
use crate::index::{composition_reps, compositions, MultiIndex};
use crate::ring::Scalar;

/// A sparse element of `([χ](E))^{⊗k}`; each key lists the basis index of
/// every slot (the slot degree is the index length).
#[derive(Clone, PartialEq)]
pub struct TensorVector<S> {
    n: usize,
    slots: usize,
    terms: BTreeMap<Vec<MultiIndex>, S>,
}

impl<S: Scalar> fmt::Debug for TensorVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·")?;
            for (s, j) in key.iter().enumerate() {
                if s > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "e{j}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> TensorVector<S> {
    pub fn zero(n: usize, slots: usize) -> Self {
        TensorVector { n, slots, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> &BTreeMap<Vec<MultiIndex>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<MultiIndex>, c: S) {
        debug_assert_eq!(key.len(), self.slots);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    /// `x₁ ⊗ ⋯ ⊗ x_k` expanded in the basis.
    pub fn tensor_of<K>(factors: &[ChiElem<S, K>]) -> Result<Self> {
        let n = factors.first().map_or(0, ChiElem::n);
        if factors.iter().any(|x| x.n() != n) {
            return Err(Error::ContextMismatch("tensor factors over different alphabets".into()));
        }
        let mut partial: Vec<(Vec<MultiIndex>, S)> = vec![(Vec::new(), S::one())];
        for x in factors {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for (j, v) in x.terms() {
                    let mut k = key.clone();
                    k.push(j.clone());
                    next.push((k, c.clone() * v.clone()));
                }
            }
            partial = next;
        }
        let mut out = TensorVector::zero(n, factors.len());
        for (k, c) in partial {
            out.add_term(k, c);
        }
        Ok(out)
    }

    /// Slot degrees of every term.
    pub fn degree_tuples(&self) -> Vec<Vec<usize>> {
        self.terms.keys().map(|k| k.iter().map(MultiIndex::len).collect()).collect()
    }
}

/// `c_k(e_j)`: the sum over compositions `(d, …, h)` of `n` with zero parts
/// and `ρ ∈ M(χ;n;d,…,h)` of `χ(ρ)·φ(j∘ρ|block₁) ⊗ ⋯ ⊗ φ(j∘ρ|block_k)`.
fn comul_basis<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, j: &MultiIndex, k: usize, out: &mut TensorVector<S>, scale: &S) -> Result<()> {
    let n = j.len();
    let chi_n = alg.sequence().stage(n)?;
    for comp in compositions(n, k) {
        let m = composition_reps(alg.sequence(), n, &comp)?;
        let powers = comp.iter().map(|&p| alg.power(p)).collect::<Result<Vec<_>>>()?;
        'reps: for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
            let mut coeff = scale.clone() * chi_n.value_at(pos).clone();
            let mut key = Vec::with_capacity(k);
            for (b, power) in powers.iter().enumerate() {
                let letters = j.select(m.block(rho, b).entries());
                match power.project_index(&letters)? {
                    None => continue 'reps,
                    Some((rep, zeta)) => {
                        coeff = coeff * zeta;
                        key.push(rep);
                    }
                }
            }
            out.add_term(key, coeff);
        }
    }
    Ok(())
}

/// `c_k(x)` for a homogeneous `x` and `k ≥ 1` (`c₁` is the identity).
pub fn comul<S: Scalar, K>(alg: &SemiSymmetricAlgebra<S>, x: &ChiElem<S, K>, k: usize) -> Result<TensorVector<S>> {
    if k == 0 {
        return Err(Error::InvalidComposition("comultiplication needs at least one slot".into()));
    }
    alg.power(x.degree())?.check_element(x)?;
    let mut out = TensorVector::zero(alg.n(), k);
    for (j, c) in x.terms() {
        comul_basis(alg, j, k, &mut out, c)?;
    }
    Ok(out)
}

pub fn comul_graded<S: Scalar, K>(alg: &SemiSymmetricAlgebra<S>, x: &Graded<S, K>, k: usize) -> Result<TensorVector<S>> {
    let mut out = TensorVector::zero(alg.n(), k);
    for part in x.parts() {
        for (key, c) in comul(alg, part, k)?.terms {
            out.add_term(key, c);
        }
    }
    Ok(out)
}

/// Replaces slot `slot` of every term by its image under `c_k`.
pub fn apply_comul_at<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, t: &TensorVector<S>, slot: usize, k: usize) -> Result<TensorVector<S>> {
    if slot >= t.slots {
        return Err(Error::ShapeMismatch(format!("slot {slot} of a {}-fold tensor", t.slots)));
    }
    let mut out = TensorVector::zero(t.n, t.slots + k - 1);
    for (key, c) in &t.terms {
        let mut inner = TensorVector::zero(t.n, k);
        comul_basis(alg, &key[slot], k, &mut inner, c)?;
        for (ikey, ic) in inner.terms {
            let mut full = key[..slot].to_vec();
            full.extend(ikey);
            full.extend_from_slice(&key[slot + 1..]);
            out.add_term(full, ic);
        }
    }
    Ok(out)
}

/// The degree-0 coefficient.
pub fn counit<S: Scalar, K>(x: &Graded<S, K>) -> S {
    x.grade_project(0).coeff(&MultiIndex::empty())
}

/// `c_k = (c_{k−1} ⊗ 1)∘c₂ = (1 ⊗ c_{k−1})∘c₂` on `x`.
pub fn coassociativity_check<S: Scalar, K>(alg: &SemiSymmetricAlgebra<S>, x: &ChiElem<S, K>, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidComposition("coassociativity needs k ≥ 2".into()));
    }
    let direct = comul(alg, x, k)?;
    let c2 = comul(alg, x, 2)?;
    let left = apply_comul_at(alg, &c2, 0, k - 1)?;
    let right = apply_comul_at(alg, &c2, 1, k - 1)?;
    Ok(direct == left && direct == right)
}

/// `(ε ⊗ 1)∘c₂(x) = x = (1 ⊗ ε)∘c₂(x)`.
pub fn counit_law_check<S: Scalar, K>(alg: &SemiSymmetricAlgebra<S>, x: &ChiElem<S, K>) -> Result<bool> {
    let c2 = comul(alg, x, 2)?;
    let mut left: ChiElem<S, K> = ChiElem::zero(alg.n(), x.degree());
    let mut right: ChiElem<S, K> = ChiElem::zero(alg.n(), x.degree());
    for (key, c) in c2.terms() {
        if key[0].is_empty() && key[1].len() == x.degree() {
            left.add_term(key[1].clone(), c.clone());
        }
        if key[1].is_empty() && key[0].len() == x.degree() {
            right.add_term(key[0].clone(), c.clone());
        }
    }
    Ok(left == *x && right == *x)
}

/// `⟨t, u⟩` for tensors of vectors and forms: slotwise pairings multiplied.
pub fn pair_tensors<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, t: &TensorVector<S>, u: &TensorVector<S>) -> Result<S> {
    if t.slots != u.slots {
        return Err(Error::ShapeMismatch(format!("{}-fold against {}-fold tensor", t.slots, u.slots)));
    }
    let mut total = S::zero();
    for (key, c) in &t.terms {
        if let Some(d) = u.terms.get(key) {
            let mut w = c.clone() * d.clone();
            for j in key {
                let order = alg.power(j.len())?.stabilizer_order(j)?;
                w = w * S::from_i64(order as i64, alg.ring());
            }
            total = total + w;
        }
    }
    Ok(total)
}

/// The three pairings that must agree for a block decomposition of the forms.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraDuality<S> {
    /// `⟨x₁χ…χx_n, y₁χ…χy_n⟩`.
    pub direct: S,
    /// `⟨c_k(x₁χ…χx_n), Y₁ ⊗ ⋯ ⊗ Y_k⟩` with `Y_b` the block products of forms.
    pub vector_side: S,
    /// `⟨X₁ ⊗ ⋯ ⊗ X_k, c_k(y₁χ…χy_n)⟩` with `X_b` the block products of vectors.
    pub form_side: S,
}

impl<S: PartialEq> CoalgebraDuality<S> {
    pub fn agree(&self) -> bool {
        self.direct == self.vector_side && self.direct == self.form_side
    }
}

/// Evaluates both identities relating `c_k` to the pairing.
pub fn duality_check<S: Scalar>(
    alg: &SemiSymmetricAlgebra<S>,
    xs: &[Vec<S>],
    ys: &[Vec<S>],
    composition: &[usize],
) -> Result<CoalgebraDuality<S>> {
    let n: usize = composition.iter().sum();
    if xs.len() != n || ys.len() != n {
        return Err(Error::InvalidComposition(format!("{composition:?} does not split {} vectors", xs.len())));
    }
    let x: ChiVector<S> = alg.decomposable(xs)?;
    let y: ChiForm<S> = alg.decomposable(ys)?;
    let direct = pair(&*alg.power(n)?, &x, &y)?;
    let k = composition.len();
    let mut x_blocks: Vec<ChiVector<S>> = Vec::with_capacity(k);
    let mut y_blocks: Vec<ChiForm<S>> = Vec::with_capacity(k);
    let mut start = 0;
    for &p in composition {
        x_blocks.push(alg.decomposable(&xs[start..start + p])?);
        y_blocks.push(alg.decomposable(&ys[start..start + p])?);
        start += p;
    }
    let vector_side = pair_tensors(alg, &comul(alg, &x, k)?, &TensorVector::tensor_of(&y_blocks)?)?;
    let form_side = pair_tensors(alg, &TensorVector::tensor_of(&x_blocks)?, &comul(alg, &y, k)?)?;
    Ok(CoalgebraDuality { direct, vector_side, form_side })
}
