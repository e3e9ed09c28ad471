//! Generalized Schur functions `d_χ(A)`, row minors of weight χ, and the
//! Laplace and Lagrange identities relating them.

use crate::character::{Character, CharacterSequence};
use crate::error::{Error, Result};
use crate::index::{composition_reps, enum_j, MultiIndex};
pub use crate::matrix::ExactMatrix;
use crate::perm::Permutation;
use crate::ring::Scalar;

/// `d_χ(A) = Σ_{σ∈W} χ(σ)·a_{σ⁻¹(1),1}···a_{σ⁻¹(d),d}`.
pub fn schur_direct<S: Scalar>(a: &ExactMatrix<S>, chi: &Character<S>) -> Result<S> {
    let d = chi.degree();
    if a.rows() != d || a.cols() != d {
        return Err(Error::ShapeMismatch(format!("{}×{} matrix for a group of degree {d}", a.rows(), a.cols())));
    }
    let mut total = S::zero();
    for (sigma, v) in chi.group().elements().iter().zip(chi.values()) {
        let inv = sigma.inverse();
        let term = (0..d).fold(v.clone(), |acc, t| acc * a.get(inv.image(t), t).clone());
        total = total + term;
    }
    Ok(total)
}

/// `A_{(j)k}(χ) = Σ_{τ∈W^{(j)}} χ⁻¹(τ)·∏_t a_{(τj)_t, k_t}` with `W^{(j)}` the
/// lexicographically minimal left coset representatives modulo the
/// stabilizer of `j`. Indices are 1-based.
pub fn row_minor<S: Scalar>(a: &ExactMatrix<S>, j: &MultiIndex, k: &MultiIndex, chi: &Character<S>) -> Result<S> {
    let d = chi.degree();
    if j.len() != d || k.len() != d {
        return Err(Error::DegreeMismatch { expected: d, found: if j.len() != d { j.len() } else { k.len() } });
    }
    j.check_alphabet(a.rows())?;
    k.check_alphabet(a.cols())?;
    let group = chi.group();
    let stab = group.stabilizer(j)?;
    let reps = group.left_coset_reps(&stab)?;
    let chi_inv = chi.inverse();
    let mut total = S::zero();
    for tau in &reps {
        let moved = j.act_by(tau);
        let w = chi_inv.value(tau).expect("rep lies in W").clone();
        let term = moved
            .entries()
            .iter()
            .zip(k.entries())
            .fold(w, |acc, (&r, &c)| acc * a.get(r - 1, c - 1).clone());
        total = total + term;
    }
    Ok(total)
}

/// `A_{(j)}(χ)`: the row minor against the columns `(1, …, d)`.
pub fn row_minor_standard<S: Scalar>(a: &ExactMatrix<S>, j: &MultiIndex, chi: &Character<S>) -> Result<S> {
    let k = MultiIndex::new((1..=chi.degree()).collect());
    row_minor(a, j, &k, chi)
}

/// Laplace expansion of `d_{χ_n}(A)` along the column blocks `(λ, μ, …, ν)`,
/// which must form an element of `J(χ;n;d,e,…,h)`.
pub fn schur_laplace<S: Scalar>(
    a: &ExactMatrix<S>,
    seq: &CharacterSequence<S>,
    composition: &[usize],
    blocks: &[MultiIndex],
) -> Result<S> {
    let n: usize = composition.iter().sum();
    if a.rows() != n || a.cols() != n {
        return Err(Error::ShapeMismatch(format!("{}×{} matrix for degree {n}", a.rows(), a.cols())));
    }
    if blocks.len() != composition.len() || blocks.iter().zip(composition).any(|(b, &p)| b.len() != p) {
        return Err(Error::InvalidComposition(format!("block shapes do not match {composition:?}")));
    }
    let m = composition_reps(seq, n, composition)?;
    let word: Vec<usize> = blocks.iter().flat_map(|b| b.entries().iter().copied()).collect();
    let sigma = Permutation::from_one_line(&word)
        .map_err(|_| Error::InvalidComposition(format!("blocks {blocks:?} do not partition [1,{n}]")))?;
    if !m.contains(&sigma) {
        return Err(Error::InvalidComposition(format!("blocks {blocks:?} are not canonical for {composition:?}")));
    }
    let chi_n = seq.stage(n)?;
    let stages: Vec<&Character<S>> = composition.iter().map(|&p| seq.stage(p)).collect::<Result<_>>()?;
    let mut total = S::zero();
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        let mut term = chi_n.value_at(pos).clone();
        for (b, lambda) in blocks.iter().enumerate() {
            term = term * row_minor(a, &m.block(rho, b), lambda, stages[b])?;
        }
        total = total + term;
    }
    Ok(chi_n.value(&sigma).expect("σ ∈ W_n").clone() * total)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeReport<S> {
    pub lhs: S,
    pub rhs: S,
    pub equal: bool,
}

/// `d_χ(ᵗAA)` against `Σ_{j∈J} |W_j|·A_{(j)}(χ)·A_{(j)}(χ⁻¹)` for an `n × d` matrix.
pub fn lagrange_check<S: Scalar>(a: &ExactMatrix<S>, chi: &Character<S>) -> Result<LagrangeReport<S>> {
    if a.cols() != chi.degree() {
        return Err(Error::ShapeMismatch(format!("{} columns for degree {}", a.cols(), chi.degree())));
    }
    let lhs = schur_direct(&a.transpose().mul(a)?, chi)?;
    let chi_inv = chi.inverse();
    let mut rhs = S::zero();
    for j in enum_j(chi, a.rows())? {
        let weight = S::from_i64(chi.group().stabilizer(&j)?.order() as i64, chi.ring());
        rhs = rhs + weight * row_minor_standard(a, &j, chi)? * row_minor_standard(a, &j, &chi_inv)?;
    }
    let equal = lhs == rhs;
    Ok(LagrangeReport { lhs, rhs, equal })
}

/// `d_χ(ᵗA) = d_{χ⁻¹}(A)`.
pub fn transpose_identity_check<S: Scalar>(a: &ExactMatrix<S>, chi: &Character<S>) -> Result<bool> {
    Ok(schur_direct(&a.transpose(), chi)? == schur_direct(a, &chi.inverse())?)
}
