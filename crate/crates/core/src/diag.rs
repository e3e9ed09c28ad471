//! Integer linear algebra (ranks over prime fields, Smith normal form) and
//! the two freeness counterexamples, where the standing hypotheses fail and
//! the canonical basis machinery does not apply.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::character::Character;
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::matrix::ExactMatrix;
use crate::monomial::{MonomialModule, SparseVector};
use crate::perm::{Permutation, PermutationGroup};
use crate::ring::{is_prime, Eisenstein, Integer, RingDescriptor, Scalar, Zmod};

fn big_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub prime: u64,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfReport {
    /// `d₁ | d₂ | ⋯`, one per diagonal slot, zeros last.
    #[serde(serialize_with = "big_strings")]
    pub invariant_factors: Vec<BigInt>,
}

impl SnfReport {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn rank_mod_p(a: &ExactMatrix<Integer>, p: u64) -> Result<RankReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (rows, cols) = (a.rows(), a.cols());
    let big_p = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| a.row(i).iter().map(|x| x.mod_floor(&big_p).to_u64().expect("residue fits")).collect())
        .collect();
    let mul = |x: u64, y: u64| (x as u128 * y as u128 % p as u128) as u64;
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][c], p - 2, p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = mul(m[r][c], inv);
                for k in c..cols {
                    let sub = mul(f, m[rank][k]);
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    Ok(RankReport { prime: p, rank, rows, cols })
}

pub fn smith_normal_form(a: &ExactMatrix<Integer>) -> SnfReport {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.to_rows();
    let slots = rows.min(cols);
    let mut diag: Vec<BigInt> = Vec::with_capacity(slots);
    'pivots: for t in 0..slots {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivots };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                    }
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if clean {
                diag.push(p.abs());
                continue 'pivots;
            }
        }
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.resize(slots, BigInt::zero());
    SnfReport { invariant_factors: diag }
}

/// Whether `v` lies in the ℤ-span of `rows`: adjoining it must keep both the
/// rank and the product of the nonzero invariant factors.
fn lattice_contains(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let before = smith_normal_form(&ExactMatrix::from_rows(rows.to_vec()).expect("rectangular"));
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    let after = smith_normal_form(&ExactMatrix::from_rows(ext).expect("rectangular"));
    let volume = |r: &SnfReport| r.invariant_factors.iter().filter(|d| !d.is_zero()).fold(BigInt::one(), |a, d| a * d);
    before.rank() == after.rank() && volume(&before) == volume(&after)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportTerm {
    pub index: MultiIndex,
    pub coeff: String,
}

fn report_terms<S: Scalar>(v: &SparseVector<S>) -> Vec<ReportTerm> {
    v.iter().map(|(i, c)| ReportTerm { index: i.clone(), coeff: c.to_string() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z15Report {
    pub ring: String,
    pub generators: Vec<String>,
    pub character_values: Vec<String>,
    pub index_count: usize,
    /// `a_χ(e_j)` for each orbit minimum `j` with a nonzero image.
    pub image_generators: Vec<Vec<ReportTerm>>,
    pub disjoint_supports: bool,
    pub image_rank_mod_3: usize,
    pub image_rank_mod_5: usize,
    #[serde(serialize_with = "big_string")]
    pub cardinality: BigInt,
    pub cardinality_factored: String,
    pub power_of_15: bool,
    /// Ranks of the span of `χ(σ)e_i − σe_i`.
    pub relation_rank_mod_3: usize,
    pub relation_rank_mod_5: usize,
    /// `(16 − r₃, 16 − r₅)` for the relation span.
    pub quotient_exponents: (usize, usize),
    pub quotient_free: bool,
}

fn big_string<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn perm(s: &str, d: usize) -> Permutation {
    Permutation::parse(s, d).expect("literal permutation")
}

fn residue_rows(vectors: &[SparseVector<Zmod>], indices: &[MultiIndex]) -> ExactMatrix<Integer> {
    let rows = vectors
        .iter()
        .map(|v| indices.iter().map(|i| BigInt::from(v.get(i).residue())).collect())
        .collect();
    ExactMatrix::from_rows(rows).expect("rectangular")
}

fn orbit_minima(group: &PermutationGroup, indices: &[MultiIndex]) -> Vec<MultiIndex> {
    indices
        .iter()
        .filter(|i| group.elements().iter().all(|s| i.act_by(s) >= **i))
        .cloned()
        .collect()
}

fn power_product(parts: &[(u64, usize)]) -> String {
    let shown: Vec<String> = parts.iter().filter(|(_, e)| *e > 0).map(|(b, e)| format!("{b}^{e}")).collect();
    if shown.is_empty() {
        "1".into()
    } else {
        shown.join("·")
    }
}

/// `T²(E)^{⊗2}` over ℤ/15 with the Klein four group on four slots and
/// `χ ≡ 4` on both generators.
pub fn z15_counterexample() -> Result<Z15Report> {
    let ring = RingDescriptor::Modular(15);
    let gens = vec![perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)];
    let group = Arc::new(PermutationGroup::closure(4, gens.clone())?);
    let four = Zmod::from_i64(4, &ring);
    let chi = Character::from_generators(group.clone(), &[four.clone(), four.clone()], ring)?;
    let module = MonomialModule::tensor_power(group.clone(), ring, 2)?;
    let indices = module.indices().to_vec();

    let image: Vec<SparseVector<Zmod>> = indices
        .iter()
        .map(|i| module.a_chi(&chi, &SparseVector::basis(i.clone())))
        .collect::<Result<_>>()?;
    let image_rows = residue_rows(&image, &indices);
    let r3 = rank_mod_p(&image_rows, 3)?.rank;
    let r5 = rank_mod_p(&image_rows, 5)?.rank;

    let generators: Vec<SparseVector<Zmod>> = orbit_minima(&group, &indices)
        .into_iter()
        .map(|j| module.a_chi(&chi, &SparseVector::basis(j)))
        .filter(|v| v.as_ref().map_or(true, |v| !v.is_zero()))
        .collect::<Result<_>>()?;
    let mut seen = std::collections::BTreeSet::new();
    let disjoint_supports = generators.iter().all(|g| g.iter().all(|(i, _)| seen.insert(i.clone())));

    let mut relations = Vec::new();
    for (sigma, c) in group.elements().iter().zip(chi.values()) {
        for i in &indices {
            let e = SparseVector::basis(i.clone());
            relations.push(e.scale(c).sub(&module.apply(sigma, &e)?));
        }
    }
    let rel_rows = residue_rows(&relations, &indices);
    let k3 = rank_mod_p(&rel_rows, 3)?.rank;
    let k5 = rank_mod_p(&rel_rows, 5)?.rank;

    let cardinality = BigInt::from(3u8).pow(r3 as u32) * BigInt::from(5u8).pow(r5 as u32);
    let common = r3.min(r5);
    let cardinality_factored = format!(
        "{} = {}",
        power_product(&[(3, r3), (5, r5)]),
        power_product(&[(15, common), (3, r3 - common), (5, r5 - common)])
    );
    let n = indices.len();
    Ok(Z15Report {
        ring: ring.to_string(),
        generators: gens.iter().map(ToString::to_string).collect(),
        character_values: vec![four.to_string(), four.to_string()],
        index_count: n,
        image_generators: generators.iter().map(report_terms).collect(),
        disjoint_supports,
        image_rank_mod_3: r3,
        image_rank_mod_5: r5,
        cardinality,
        cardinality_factored,
        power_of_15: r3 == r5,
        relation_rank_mod_3: k3,
        relation_rank_mod_5: k5,
        quotient_exponents: (n - k3, n - k5),
        quotient_free: k3 == k5,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinReport {
    pub ring: String,
    pub generator: String,
    pub character_value: String,
    /// ℤ-rank of the ambient lattice, coordinates `(a, b)` of `a + bε` per index.
    pub lattice_dimension: usize,
    pub relation_count: usize,
    pub snf: SnfReport,
    #[serde(serialize_with = "big_strings")]
    pub torsion_factors: Vec<BigInt>,
    pub free_rank: usize,
    pub has_torsion: bool,
    pub e111_in_lattice: bool,
    pub one_minus_epsilon_e111_in_lattice: bool,
    /// `Σ_σ χ²(σ)σ` applied to `e_(1,1,1)`.
    pub symmetrizer_on_e111: Vec<ReportTerm>,
    pub quotient_free: bool,
}

fn eisenstein_coords(v: &SparseVector<Eisenstein>, indices: &[MultiIndex]) -> Vec<BigInt> {
    indices
        .iter()
        .flat_map(|i| {
            let c = v.get(i);
            [c.a, c.b]
        })
        .collect()
}

/// `T³(E)` over ℤ[ε] for `E` of rank 2, `W = ⟨(1 2 3)⟩` and `χ((1 2 3)) = ε`.
pub fn eisenstein_counterexample() -> Result<EisensteinReport> {
    let ring = RingDescriptor::Eisenstein;
    let cycle = perm("(1 2 3)", 3);
    let group = Arc::new(PermutationGroup::closure(3, vec![cycle.clone()])?);
    let eps = Eisenstein::omega();
    let chi = Character::from_generators(group.clone(), &[eps.clone()], ring)?;
    let module = MonomialModule::tensor_power(group.clone(), ring, 2)?;
    let indices = module.indices().to_vec();

    let mut rows = Vec::new();
    for (sigma, c) in group.elements().iter().zip(chi.values()) {
        for i in &indices {
            let e = SparseVector::basis(i.clone());
            let r = e.scale(c).sub(&module.apply(sigma, &e)?);
            rows.push(eisenstein_coords(&r, &indices));
            rows.push(eisenstein_coords(&r.scale(&eps), &indices));
        }
    }
    let dim = 2 * indices.len();
    let snf = smith_normal_form(&ExactMatrix::from_rows(rows.clone())?);

    let e111 = SparseVector::basis(MultiIndex::new(vec![1, 1, 1]));
    let one = Eisenstein::from_i64(1, &ring);
    let e111_in = lattice_contains(&rows, &eisenstein_coords(&e111, &indices));
    let shifted = e111.scale(&(one - eps.clone()));
    let shifted_in = lattice_contains(&rows, &eisenstein_coords(&shifted, &indices));

    let chi_sq = Character::from_fn(group.clone(), ring, |s| {
        let v = chi.value(s).expect("σ ∈ W").clone();
        v.clone() * v
    })?;
    let sym = module.a_chi_unnormalized(&chi_sq, &e111)?;

    let torsion = snf.torsion();
    Ok(EisensteinReport {
        ring: ring.to_string(),
        generator: cycle.to_string(),
        character_value: eps.to_string(),
        lattice_dimension: dim,
        relation_count: rows.len(),
        free_rank: dim - snf.rank(),
        has_torsion: !torsion.is_empty(),
        quotient_free: torsion.is_empty(),
        torsion_factors: torsion,
        snf,
        e111_in_lattice: e111_in,
        one_minus_epsilon_e111_in_lattice: shifted_in,
        symmetrizer_on_e111: report_terms(&sym),
    })
}
