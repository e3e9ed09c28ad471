//! Left and right inner products, adjoint to multiplication under the pairing.

use crate::algebra::{ChiElem, ChiForm, ChiVector, SemiSymmetricAlgebra};
use crate::duality::pair;
use crate::error::Result;
use crate::index::{composition_reps, MultiIndex};
use crate::ring::{invert_integer, Scalar};

/// `a⌋e_k*` by summing over `ρ ∈ M(χ;n;d,q)`:
/// `χ(ρ)·⟨a, φ(k∘ρ|[d+1,n])⟩·φ(k∘ρ|[1,d])`.
fn left_inner_basis_general<S: Scalar>(
    alg: &SemiSymmetricAlgebra<S>,
    a: &ChiVector<S>,
    k: &MultiIndex,
    scale: &S,
    out: &mut ChiForm<S>,
) -> Result<()> {
    let n = k.len();
    let q = a.degree();
    let d = n - q;
    let m = composition_reps(alg.sequence(), n, &[d, q])?;
    let chi_n = alg.sequence().stage(n)?;
    let (pd, pq) = (alg.power(d)?, alg.power(q)?);
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        let tail: ChiForm<S> = pq.project_tensor(&S::one(), &k.select(m.block(rho, 1).entries()))?;
        if tail.is_zero() {
            continue;
        }
        let weight = pair(&pq, a, &tail)?;
        if weight.is_zero() {
            continue;
        }
        let coeff = scale.clone() * chi_n.value_at(pos).clone() * weight;
        if let Some((rep, zeta)) = pd.project_index(&k.select(m.block(rho, 0).entries()))? {
            out.add_term(rep, coeff * zeta);
        }
    }
    Ok(())
}

/// `a⌋f`, the form of degree `n − q` with `⟨xχa, f⟩ = ⟨x, a⌋f⟩`; zero when `n < q`.
pub fn left_inner<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, a: &ChiVector<S>, f: &ChiForm<S>) -> Result<ChiForm<S>> {
    alg.power(a.degree())?.check_element(a)?;
    alg.power(f.degree())?.check_element(f)?;
    if f.degree() < a.degree() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let mut out = ChiElem::zero(alg.n(), f.degree() - a.degree());
    for (k, c) in f.terms() {
        left_inner_basis_general(alg, a, k, c, &mut out)?;
    }
    Ok(out)
}

/// `a⌊e_j*` by summing over `ρ ∈ M(χ;n;p,h)`:
/// `χ(ρ)·⟨φ(k∘ρ|[1,p]), f⟩·φ(k∘ρ|[p+1,n])` for each term `e_k` of `a`.
fn right_inner_basis_general<S: Scalar>(
    alg: &SemiSymmetricAlgebra<S>,
    k: &MultiIndex,
    f: &ChiForm<S>,
    scale: &S,
    out: &mut ChiVector<S>,
) -> Result<()> {
    let n = k.len();
    let p = f.degree();
    let h = n - p;
    let m = composition_reps(alg.sequence(), n, &[p, h])?;
    let chi_n = alg.sequence().stage(n)?;
    let (pp, ph) = (alg.power(p)?, alg.power(h)?);
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        let head: ChiVector<S> = pp.project_tensor(&S::one(), &k.select(m.block(rho, 0).entries()))?;
        if head.is_zero() {
            continue;
        }
        let weight = pair(&pp, &head, f)?;
        if weight.is_zero() {
            continue;
        }
        let coeff = scale.clone() * chi_n.value_at(pos).clone() * weight;
        if let Some((rep, zeta)) = ph.project_index(&k.select(m.block(rho, 1).entries()))? {
            out.add_term(rep, coeff * zeta);
        }
    }
    Ok(())
}

/// `a⌊f`, the vector of degree `n − p` with `⟨a⌊f, y⟩ = ⟨a, fχy⟩`; zero when `n < p`.
pub fn right_inner<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, a: &ChiVector<S>, f: &ChiForm<S>) -> Result<ChiVector<S>> {
    alg.power(a.degree())?.check_element(a)?;
    alg.power(f.degree())?.check_element(f)?;
    if a.degree() < f.degree() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let mut out = ChiElem::zero(alg.n(), a.degree() - f.degree());
    for (k, c) in a.terms() {
        right_inner_basis_general(alg, k, f, c, &mut out)?;
    }
    Ok(out)
}

/// `e_j⌋e_k*` by the filtered sum over `ρ ∈ M(χ;n;d,q)` with
/// `(k_{ρ(d+1)}, …, k_{ρ(n)}) = j`, each contributing `|W_j|·χ(ρ)·e*_{k∘ρ|[1,d]}`.
pub fn left_inner_basis<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, j: &MultiIndex, k: &MultiIndex) -> Result<ChiForm<S>> {
    let pq = alg.power(j.len())?;
    let w = S::from_i64(pq.stabilizer_order(j)? as i64, alg.ring());
    alg.power(k.len())?.basis_element::<crate::algebra::Form>(k)?;
    if k.len() < j.len() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let n = k.len();
    let d = n - j.len();
    let m = composition_reps(alg.sequence(), n, &[d, j.len()])?;
    let chi_n = alg.sequence().stage(n)?;
    let pd = alg.power(d)?;
    let mut out = ChiElem::zero(alg.n(), d);
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        if k.select(m.block(rho, 1).entries()) != *j {
            continue;
        }
        if let Some((rep, zeta)) = pd.project_index(&k.select(m.block(rho, 0).entries()))? {
            out.add_term(rep, w.clone() * chi_n.value_at(pos).clone() * zeta);
        }
    }
    Ok(out)
}

/// `e_k⌊e_j*` by the filtered sum over `ρ ∈ M(χ;n;p,h)` with
/// `(k_{ρ(1)}, …, k_{ρ(p)}) = j`, each contributing `|W_j|·χ(ρ)·e_{k∘ρ|[p+1,n]}`.
pub fn right_inner_basis<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, k: &MultiIndex, j: &MultiIndex) -> Result<ChiVector<S>> {
    let pp = alg.power(j.len())?;
    let w = S::from_i64(pp.stabilizer_order(j)? as i64, alg.ring());
    alg.power(k.len())?.basis_element::<crate::algebra::Vector>(k)?;
    if k.len() < j.len() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let n = k.len();
    let h = n - j.len();
    let m = composition_reps(alg.sequence(), n, &[j.len(), h])?;
    let chi_n = alg.sequence().stage(n)?;
    let ph = alg.power(h)?;
    let mut out = ChiElem::zero(alg.n(), h);
    for (rho, &pos) in m.reps().iter().zip(m.rep_positions()) {
        if k.select(m.block(rho, 0).entries()) != *j {
            continue;
        }
        if let Some((rep, zeta)) = ph.project_index(&k.select(m.block(rho, 1).entries()))? {
            out.add_term(rep, w.clone() * chi_n.value_at(pos).clone() * zeta);
        }
    }
    Ok(out)
}

/// Solves `⟨x, a⌋f⟩ = ⟨xχa, f⟩` against the dual basis: the coefficient of
/// `e_i*` is `⟨e_iχa, f⟩ / |W_i|`.
pub fn left_inner_by_adjunction<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, a: &ChiVector<S>, f: &ChiForm<S>) -> Result<ChiForm<S>> {
    if f.degree() < a.degree() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let d = f.degree() - a.degree();
    let pd = alg.power(d)?;
    let pn = alg.power(f.degree())?;
    let mut out = ChiElem::zero(alg.n(), d);
    for i in pd.basis() {
        let ei: ChiVector<S> = pd.basis_element(i)?;
        let value = pair(&pn, &alg.multiply(&ei, a)?, f)?;
        let inv = invert_integer::<S>(pd.stabilizer_order(i)? as u64, alg.ring())?;
        out.add_term(i.clone(), value * inv);
    }
    Ok(out)
}

/// Solves `⟨a⌊f, y⟩ = ⟨a, fχy⟩`: the coefficient of `e_i` is `⟨a, fχe_i*⟩ / |W_i|`.
pub fn right_inner_by_adjunction<S: Scalar>(alg: &SemiSymmetricAlgebra<S>, a: &ChiVector<S>, f: &ChiForm<S>) -> Result<ChiVector<S>> {
    if a.degree() < f.degree() {
        return Ok(ChiElem::zero(alg.n(), 0));
    }
    let h = a.degree() - f.degree();
    let ph = alg.power(h)?;
    let pn = alg.power(a.degree())?;
    let mut out = ChiElem::zero(alg.n(), h);
    for i in ph.basis() {
        let ei: ChiForm<S> = ph.basis_element(i)?;
        let value = pair(&pn, a, &alg.multiply(f, &ei)?)?;
        let inv = invert_integer::<S>(ph.stabilizer_order(i)? as u64, alg.ring())?;
        out.add_term(i.clone(), value * inv);
    }
    Ok(out)
}

/// Outcome of the module-law checks on one sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleLawReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ModuleLawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `(aχb)⌋f = a⌋(b⌋f)`, `1⌋f = f`, `a⌊(fχg) = (a⌊f)⌊g`, `a⌊1 = a`.
pub fn module_law_checks<S: Scalar>(
    alg: &SemiSymmetricAlgebra<S>,
    a: &ChiVector<S>,
    b: &ChiVector<S>,
    f: &ChiForm<S>,
    g: &ChiForm<S>,
) -> Result<ModuleLawReport> {
    let mut report = ModuleLawReport::default();
    let mut check = |name: &str, ok: bool| {
        report.checked += 1;
        if !ok {
            report.failures.push(name.to_string());
        }
    };
    if a.degree() + b.degree() <= alg.max_degree() {
        let lhs = left_inner(alg, &alg.multiply(a, b)?, f)?;
        let rhs = left_inner(alg, a, &left_inner(alg, b, f)?)?;
        check("(aχb)⌋f = a⌋(b⌋f)", lhs.is_zero() && rhs.is_zero() || lhs == rhs);
    }
    let one_v: ChiVector<S> = alg.scalar(S::one());
    check("1⌋f = f", left_inner(alg, &one_v, f)? == *f);
    if f.degree() + g.degree() <= alg.max_degree() {
        let lhs = right_inner(alg, a, &alg.multiply(f, g)?)?;
        let rhs = right_inner(alg, &right_inner(alg, a, f)?, g)?;
        check("a⌊(fχg) = (a⌊f)⌊g", lhs.is_zero() && rhs.is_zero() || lhs == rhs);
    }
    let one_f: ChiForm<S> = alg.scalar(S::one());
    check("a⌊1 = a", right_inner(alg, a, &one_f)? == *a);
    Ok(report)
}
