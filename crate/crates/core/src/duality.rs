//! The canonical pairing between χ-vectors and χ-forms.

use crate::algebra::{ChiForm, ChiVector, GradedForm, GradedVector, SemiSymmetricAlgebra, SemiSymmetricPower};
use crate::character::{Character, CharacterSequence};
use crate::error::{Error, Result};
use crate::index::{composition_reps, MultiIndex};
use crate::matrix::ExactMatrix;
use crate::ring::{invert_integer, Scalar};
use crate::schur::schur_direct;

/// `⟨x, y⟩ = Σ_j |W_j|·x_j·y_j`.
pub fn pair<S: Scalar>(power: &SemiSymmetricPower<S>, x: &ChiVector<S>, y: &ChiForm<S>) -> Result<S> {
    power.check_element(x)?;
    power.check_element(y)?;
    let ring = power.ring();
    let mut total = S::zero();
    for (j, xj) in x.terms() {
        if let Some(yj) = y.terms().get(j) {
            let w = S::from_i64(power.stabilizer_order(j)? as i64, ring);
            total = total + w * xj.clone() * yj.clone();
        }
    }
    Ok(total)
}

fn dot<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter().zip(y).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// `⟨x₁χ…χx_d, y₁χ…χy_d⟩ = d_χ((⟨x_i, y_k⟩)_{i,k})`.
pub fn pair_decomposable<S: Scalar>(xs: &[Vec<S>], ys: &[Vec<S>], chi: &Character<S>) -> Result<S> {
    let d = chi.degree();
    if xs.len() != d || ys.len() != d {
        return Err(Error::DegreeMismatch { expected: d, found: if xs.len() != d { xs.len() } else { ys.len() } });
    }
    if d == 0 {
        return Ok(S::one());
    }
    let n = xs[0].len();
    if xs.iter().chain(ys).any(|v| v.len() != n) {
        return Err(Error::ShapeMismatch("vectors and covectors must share one length".into()));
    }
    let gram = ExactMatrix::from_fn(d, d, |i, k| dot(&xs[i], &ys[k]));
    schur_direct(&gram, chi)
}

/// `1/|W_j|` for every `j`: the coefficients making `(e_j)` and `(e_j*/|W_j|)` dual.
pub fn dual_basis_coefficients<S: Scalar>(power: &SemiSymmetricPower<S>) -> Result<Vec<(MultiIndex, S)>> {
    power
        .basis()
        .iter()
        .map(|j| {
            let w = power.stabilizer_order(j)? as u64;
            Ok((j.clone(), invert_integer::<S>(w, power.ring())?))
        })
        .collect()
}

/// Homogeneous components of different degrees are orthogonal.
pub fn pair_graded<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, x: &GradedVector<S>, y: &GradedForm<S>) -> Result<S> {
    if x.n() != alg.n() || y.n() != alg.n() {
        return Err(Error::ContextMismatch("graded elements over a different alphabet".into()));
    }
    let mut total = S::zero();
    for xd in x.parts() {
        let yd = y.grade_project(xd.degree());
        if !yd.is_zero() {
            total = total + pair(&*alg.power(xd.degree())?, xd, &yd)?;
        }
    }
    Ok(total)
}

/// `⟨x₁ ⊗ ⋯ ⊗ x_k, y₁ ⊗ ⋯ ⊗ y_k⟩ = ∏ ⟨x_b, y_b⟩`, zero unless the degree tuples agree.
pub fn pair_tensor_power<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, xs: &[ChiVector<S>], ys: &[ChiForm<S>]) -> Result<S> {
    if xs.len() != ys.len() {
        return Err(Error::ShapeMismatch(format!("{} tensor factors against {}", xs.len(), ys.len())));
    }
    if xs.iter().zip(ys).any(|(x, y)| x.degree() != y.degree()) {
        return Ok(S::zero());
    }
    let mut total = S::one();
    for (x, y) in xs.iter().zip(ys) {
        total = total * pair(&*alg.power(x.degree())?, x, y)?;
    }
    Ok(total)
}

/// Both Laplace expansions of `⟨x₁χ…χx_n, y₁χ…χy_n⟩` along a composition of `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaplacePairing<S> {
    pub direct: S,
    /// `Σ_{ζ∈M} χ(ζ)·∏_b ⟨x_{ζ(block b)}, y_{block b}⟩`.
    pub first: S,
    /// `Σ_{ζ∈M} χ(ζ)·∏_b ⟨x_{block b}, y_{ζ(block b)}⟩`.
    pub second: S,
}

impl<S: PartialEq> LaplacePairing<S> {
    pub fn agree(&self) -> bool {
        self.direct == self.first && self.direct == self.second
    }
}

pub fn pair_laplace<S: Scalar>(
    seq: &CharacterSequence<S>,
    xs: &[Vec<S>],
    ys: &[Vec<S>],
    composition: &[usize],
) -> Result<LaplacePairing<S>> {
    let n: usize = composition.iter().sum();
    let chi_n = seq.stage(n)?;
    chi_n.check_standing_hypotheses()?;
    let direct = pair_decomposable(xs, ys, chi_n)?;
    let m = composition_reps(seq, n, composition)?;
    let stages: Vec<&Character<S>> = composition.iter().map(|&p| seq.stage(p)).collect::<Result<_>>()?;
    let pick = |vs: &[Vec<S>], positions: &[usize]| -> Vec<Vec<S>> { positions.iter().map(|&p| vs[p - 1].clone()).collect() };
    let identity_blocks = m.blocks(&crate::perm::Permutation::identity(n));
    let mut first = S::zero();
    let mut second = S::zero();
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        let sign = chi_n.value_at(pos).clone();
        let mut t1 = sign.clone();
        let mut t2 = sign;
        for (b, block) in m.blocks(rho).iter().enumerate() {
            let plain = identity_blocks[b].entries();
            t1 = t1 * pair_decomposable(&pick(xs, block.entries()), &pick(ys, plain), stages[b])?;
            t2 = t2 * pair_decomposable(&pick(xs, plain), &pick(ys, block.entries()), stages[b])?;
        }
        first = first + t1;
        second = second + t2;
    }
    Ok(LaplacePairing { direct, first, second })
}
