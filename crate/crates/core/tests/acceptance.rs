//! Acceptance criteria. Each prints one PASS or FAIL line; expected values
//! come from the brute-force helpers in `common`, not from the library.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use semisym::coalgebra::{coassociativity_check, comul, counit_law_check, duality_check};
use semisym::diag::{eisenstein_counterexample, z15_counterexample};
use semisym::duality::{pair, pair_laplace};
use semisym::index::{factorization_bijection_check, FactorSide};
use semisym::inner::{
    left_inner, left_inner_basis, left_inner_by_adjunction, module_law_checks, right_inner, right_inner_basis, right_inner_by_adjunction,
};
use semisym::schur::{lagrange_check, schur_laplace};
use semisym::{
    BuiltinKind, Character, CharacterSequence, ChiForm, ChiVector, ExactMatrix, MultiIndex, Permutation, PermutationGroup, RingDescriptor,
    SemiSymmetricAlgebra, SemiSymmetricPower, Violation,
};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: semisym::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const RQ: RingDescriptor = RingDescriptor::Rational;
const KINDS: [BuiltinKind; 4] = [BuiltinKind::Tensor, BuiltinKind::Symmetric, BuiltinKind::Exterior, BuiltinKind::Truncated(2)];

fn algebra(kind: BuiltinKind, n: usize, max_degree: usize) -> Result<SemiSymmetricAlgebra<Q>, String> {
    let seq = lib(CharacterSequence::builtin(kind, RQ, max_degree))?;
    lib(SemiSymmetricAlgebra::new(Arc::new(seq), n))
}

fn random_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<Q>> {
    (0..rows).map(|_| (0..cols).map(|_| q(rng.gen_range(-bound..=bound))).collect()).collect()
}

fn matrix(rows: &[Vec<Q>]) -> ExactMatrix<Q> {
    ExactMatrix::from_rows(rows.to_vec()).expect("rectangular")
}

fn oracle_product(kind: BuiltinKind, j: &[usize], k: &[usize]) -> BTreeMap<Vec<usize>, Q> {
    match project_builtin(kind, &[j, k].concat()) {
        Some((m, z)) => BTreeMap::from([(m, q(z))]),
        None => BTreeMap::new(),
    }
}

fn specialization() -> Outcome {
    let sizes = [(BuiltinKind::Tensor, 16), (BuiltinKind::Symmetric, 10), (BuiltinKind::Exterior, 6)];
    for (kind, expected) in sizes {
        let alg = algebra(kind, 4, 4)?;
        let rank = lib(alg.power(2))?.rank();
        ensure!(rank == expected, "{kind}: rank {rank} at n = 4, d = 2, expected {expected}");
        ensure!(lib(alg.power(2))?.basis().iter().all(|j| project_builtin(kind, j.entries()) == Some((j.entries().to_vec(), 1))), "{kind}: non-canonical basis label");
        for p in 0..=4 {
            for r in 0..=4 - p {
                let (bp, br) = (lib(alg.power(p))?, lib(alg.power(r))?);
                for j in bp.basis() {
                    let a: ChiVector<Q> = lib(bp.basis_element(j))?;
                    for k in br.basis() {
                        let b: ChiVector<Q> = lib(br.basis_element(k))?;
                        let ab = lib(alg.multiply(&a, &b))?;
                        ensure!(terms_of(&ab) == oracle_product(kind, j.entries(), k.entries()), "{kind}: e{j}·e{k} = {ab:?}");
                        let ba = lib(alg.multiply(&b, &a))?;
                        match kind {
                            BuiltinKind::Symmetric => ensure!(ab == ba, "symmetric product not commutative at e{j}, e{k}"),
                            BuiltinKind::Exterior => {
                                let s = if (p * r) % 2 == 0 { q(1) } else { q(-1) };
                                ensure!(ab == ba.scale(&s), "exterior product not graded-alternating at e{j}, e{k}");
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn dual_bases() -> Outcome {
    let contexts = [
        ("S3/sign", Table::symmetric_sign(3)),
        ("S3/trivial", Table::symmetric_trivial(3)),
        ("C3/trivial", Table::cyclic3()),
        ("Klein/trivial", Table::klein()),
    ];
    for (name, table) in contexts {
        let chi = table.library();
        for n in 1..=3 {
            let power = lib(SemiSymmetricPower::new(chi.clone(), n))?;
            let expected = table.basis(n);
            let got: Vec<Vec<usize>> = power.basis().iter().map(|j| j.entries().to_vec()).collect();
            ensure!(got == expected, "{name}, n = {n}: basis {got:?}, expected {expected:?}");
            for j in power.basis() {
                let x: ChiVector<Q> = lib(power.basis_element(j))?;
                for k in power.basis() {
                    let y: ChiForm<Q> = lib(power.basis_element(k))?;
                    let want = if j == k { q(table.stabilizer(j.entries()).len() as i64) } else { q(0) };
                    let got = lib(pair(&power, &x, &y))?;
                    ensure!(got == want, "{name}, n = {n}: ⟨e{j}, e{k}*⟩ = {got}, expected {want}");
                }
            }
        }
    }
    Ok(())
}

/// `Σ_{j∈J} |W_j|·A_(j)(χ)·A_(j)(χ⁻¹)` with `A_(j) = |W_j|⁻¹ Σ_σ χ⁻¹(σ) ∏_t a_{(σj)_t, t}`.
fn lagrange_rhs(table: &Table, a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut total = Q::zero();
    for j in table.basis(n) {
        let w = q(table.stabilizer(&j).len() as i64);
        let mut s = Q::zero();
        for (sigma, &c) in table.elems.iter().zip(&table.chi) {
            let moved = act(sigma, &j);
            let mut term = q(c);
            for (t, &r) in moved.iter().enumerate() {
                term *= &a[r - 1][t];
            }
            s += term;
        }
        // χ = χ⁻¹ for ±1 characters, so both minors share the sum s
        let minor = &s / &w;
        total += &w * &minor * &minor;
    }
    total
}

fn lagrange() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let contexts = [
        ("S2/sign", Table::symmetric_sign(2)),
        ("S3/sign", Table::symmetric_sign(3)),
        ("S3/trivial", Table::symmetric_trivial(3)),
        ("C3/trivial", Table::cyclic3()),
        ("Klein/trivial", Table::klein()),
        ("S4/sign", Table::symmetric_sign(4)),
        ("S4/trivial", Table::symmetric_trivial(4)),
        ("trivial(3)", Table::trivial(3)),
    ];
    for (name, table) in contexts {
        let chi = table.library();
        for _ in 0..50 {
            let n = rng.gen_range(1..=4);
            let a = random_rows(&mut rng, n, table.degree, 9);
            let at: Vec<Vec<Q>> = (0..table.degree).map(|c| a.iter().map(|row| row[c].clone()).collect()).collect();
            let ata: Vec<Vec<Q>> = at.iter().map(|r| at.iter().map(|s| r.iter().zip(s).map(|(x, y)| x * y).sum()).collect()).collect();
            let lhs = table.schur(&ata);
            let rhs = lagrange_rhs(&table, &a);
            let rep = lib(lagrange_check(&matrix(&a), &chi))?;
            ensure!(lhs == rhs, "{name}: reference sides differ on {a:?}");
            ensure!(rep.lhs == lhs && rep.rhs == rhs && rep.equal, "{name}: library gave {} / {}, expected {lhs}", rep.lhs, rep.rhs);
        }
    }
    Ok(())
}

fn laplace() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for kind in [BuiltinKind::Symmetric, BuiltinKind::Exterior] {
        let seq = lib(CharacterSequence::<Q>::builtin(kind, RQ, 4))?;
        for n in 1..=4 {
            let table = Table::for_kind(kind, n);
            let mats: Vec<Vec<Vec<Q>>> = (0..20).map(|_| random_rows(&mut rng, n, n, 9)).collect();
            for comp in compositions(n) {
                for rho in block_reps(kind, &comp) {
                    let mut blocks = Vec::new();
                    let mut start = 0;
                    for &p in &comp {
                        blocks.push(MultiIndex::new(rho[start..start + p].iter().map(|x| x + 1).collect()));
                        start += p;
                    }
                    for a in &mats {
                        let got = lib(schur_laplace(&matrix(a), &seq, &comp, &blocks))?;
                        let want = table.schur(a);
                        ensure!(got == want, "{kind}: composition {comp:?}, blocks {blocks:?}: {got} ≠ {want}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn pairing_expansions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for kind in KINDS {
        let seq = lib(CharacterSequence::<Q>::builtin(kind, RQ, 4))?;
        for n in 1..=4 {
            let table = Table::for_kind(kind, n);
            for _ in 0..8 {
                let dim = rng.gen_range(1..=3);
                let alg = lib(SemiSymmetricAlgebra::new(Arc::new(seq.clone()), dim))?;
                let xs = random_rows(&mut rng, n, dim, 4);
                let ys = random_rows(&mut rng, n, dim, 4);
                let gram: Vec<Vec<Q>> = xs.iter().map(|x| ys.iter().map(|y| x.iter().zip(y).map(|(a, b)| a * b).sum()).collect()).collect();
                let want = table.schur(&gram);
                for k in [2, 3] {
                    for comp in weak_compositions(n, k) {
                        let l = lib(pair_laplace(&seq, &xs, &ys, &comp))?;
                        ensure!(l.direct == want && l.first == want && l.second == want, "{kind}: pairing expansions along {comp:?}: {l:?}, expected {want}");
                        let c = lib(duality_check(&alg, &xs, &ys, &comp))?;
                        ensure!(
                            c.direct == want && c.vector_side == want && c.form_side == want,
                            "{kind}: comultiplication duality along {comp:?}: {c:?}, expected {want}"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn coalgebra_laws() -> Outcome {
    for kind in KINDS {
        for (n, top) in [(2, 5), (3, 3)] {
            let alg = algebra(kind, n, top)?;
            for d in 0..=top {
                let power = lib(alg.power(d))?;
                for j in power.basis() {
                    let x: ChiVector<Q> = lib(power.basis_element(j))?;
                    let c2 = lib(comul(&alg, &x, 2))?;
                    let got: BTreeMap<(Vec<usize>, Vec<usize>), Q> =
                        c2.terms().iter().map(|(key, v)| ((key[0].entries().to_vec(), key[1].entries().to_vec()), v.clone())).collect();
                    ensure!(got == coproduct(kind, j.entries()), "{kind}: c₂(e{j}) = {c2:?}");
                    ensure!(lib(coassociativity_check(&alg, &x, 3))?, "{kind}: coassociativity fails at e{j}");
                    ensure!(lib(counit_law_check(&alg, &x))?, "{kind}: counit law fails at e{j}");
                    let left: BTreeMap<Vec<usize>, Q> = got.iter().filter(|((h, _), _)| h.is_empty()).map(|((_, t), v)| (t.clone(), v.clone())).collect();
                    let right: BTreeMap<Vec<usize>, Q> = got.iter().filter(|((_, t), _)| t.is_empty()).map(|((h, _), v)| (h.clone(), v.clone())).collect();
                    let id = BTreeMap::from([(j.entries().to_vec(), q(1))]);
                    ensure!(left == id && right == id, "{kind}: counit slices of c₂(e{j}) are not e{j}");
                }
            }
        }
    }
    Ok(())
}

fn same<K>(a: &semisym::ChiElem<Q, K>, b: &semisym::ChiElem<Q, K>) -> bool {
    terms_of(a) == terms_of(b)
}

fn inner_products() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in KINDS {
        for n in 1..=4 {
            let alg = algebra(kind, n, 3)?;
            for m in 0..=3 {
                for p in 0..=m {
                    let (pp, pm) = (lib(alg.power(p))?, lib(alg.power(m))?);
                    for j in pp.basis() {
                        for k in pm.basis() {
                            let ej: ChiVector<Q> = lib(pp.basis_element(j))?;
                            let fk: ChiForm<Q> = lib(pm.basis_element(k))?;
                            let via_basis = lib(left_inner_basis(&alg, j, k))?;
                            let general = lib(left_inner(&alg, &ej, &fk))?;
                            let adjoint = lib(left_inner_by_adjunction(&alg, &ej, &fk))?;
                            ensure!(same(&via_basis, &general) && same(&general, &adjoint), "{kind}, n = {n}: e{j}⌋e{k}* routes differ");
                            let ek: ChiVector<Q> = lib(pm.basis_element(k))?;
                            let fj: ChiForm<Q> = lib(pp.basis_element(j))?;
                            let via_basis = lib(right_inner_basis(&alg, k, j))?;
                            let general = lib(right_inner(&alg, &ek, &fj))?;
                            let adjoint = lib(right_inner_by_adjunction(&alg, &ek, &fj))?;
                            ensure!(same(&via_basis, &general) && same(&general, &adjoint), "{kind}, n = {n}: e{k}⌊e{j}* routes differ");
                        }
                    }
                }
            }
            for _ in 0..10 {
                let element = |d: usize, rng: &mut ChaCha8Rng| -> Result<Vec<(MultiIndex, Q)>, String> {
                    Ok(lib(alg.power(d))?.basis().iter().map(|j| (j.clone(), q(rng.gen_range(-3..=3)))).collect())
                };
                let (da, db) = (rng.gen_range(0..=3), 0);
                let db = db + rng.gen_range(0..=3 - da);
                let (df, dg) = (rng.gen_range(0..=3), 0);
                let dg = dg + rng.gen_range(0..=3 - df);
                let a: ChiVector<Q> = lib(lib(alg.power(da))?.element(element(da, &mut rng)?))?;
                let b: ChiVector<Q> = lib(lib(alg.power(db))?.element(element(db, &mut rng)?))?;
                let f: ChiForm<Q> = lib(lib(alg.power(df))?.element(element(df, &mut rng)?))?;
                let g: ChiForm<Q> = lib(lib(alg.power(dg))?.element(element(dg, &mut rng)?))?;
                let rep = lib(module_law_checks(&alg, &a, &b, &f, &g))?;
                ensure!(rep.passed(), "{kind}, n = {n}: module laws fail: {:?}", rep.failures);
            }
        }
    }
    Ok(())
}

fn z15_freeness() -> Outcome {
    let start = Instant::now();
    let report = lib(z15_counterexample())?;
    let elapsed = start.elapsed();
    // Klein group on four slots, χ = 4 on (1 2)(3 4) and (1 3)(2 4), 4⁻¹ = 4 mod 15
    let table = Table::new(4, Table::klein().elems, |w| if w == [0, 1, 2, 3] || w == [3, 2, 1, 0] { 1 } else { 4 });
    let indices = all_indices(2, 4);
    let col = |i: &[usize]| indices.iter().position(|x| x == i).unwrap();
    let mut image = vec![vec![0i64; 16]; 16];
    let mut relations = Vec::new();
    for (r, i) in indices.iter().enumerate() {
        for (w, &c) in table.elems.iter().zip(&table.chi) {
            image[r][col(&act(w, i))] += 4 * c;
            let mut rel = vec![0i64; 16];
            rel[col(i)] += c;
            rel[col(&act(w, i))] -= 1;
            relations.push(rel);
        }
    }
    let (r3, r5) = (rank_mod(&image, 3), rank_mod(&image, 5));
    let (k3, k5) = (rank_mod(&relations, 3), rank_mod(&relations, 5));
    ensure!((r3, r5) == (7, 3), "reference image ranks ({r3}, {r5})");
    ensure!((report.image_rank_mod_3, report.image_rank_mod_5) == (r3, r5), "report ranks ({}, {})", report.image_rank_mod_3, report.image_rank_mod_5);
    let card = BigInt::from(3).pow(r3 as u32) * BigInt::from(5).pow(r5 as u32);
    ensure!(card == BigInt::from(15).pow(3) * BigInt::from(3).pow(4), "3^{r3}·5^{r5} is not 15³·3⁴");
    ensure!(report.cardinality == card && !report.power_of_15, "report cardinality {}", report.cardinality);
    ensure!(report.quotient_exponents == (16 - k3, 16 - k5) && k3 != k5, "quotient exponents {:?} against ({}, {})", report.quotient_exponents, 16 - k3, 16 - k5);
    ensure!(!report.quotient_free, "quotient declared free");
    ensure!(report.image_generators.len() == 7 && report.disjoint_supports, "expected seven generators with disjoint supports");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(())
}

/// `(a + bε)` as a pair; `ε² = −1 − ε`.
fn eis_mul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0 - x.1 * y.1)
}

fn eisenstein_torsion() -> Outcome {
    let start = Instant::now();
    let report = lib(eisenstein_counterexample())?;
    let elapsed = start.elapsed();
    let elems = Table::cyclic3().elems;
    let chi = [(1, 0), (0, 1), (-1, -1)];
    let indices = all_indices(2, 3);
    let col = |i: &[usize]| indices.iter().position(|x| x == i).unwrap();
    let mut rows = Vec::new();
    for (w, &c) in elems.iter().zip(&chi) {
        for i in &indices {
            let mut rel = vec![(0i64, 0i64); 8];
            let (a, b) = (col(i), col(&act(w, i)));
            rel[a] = (rel[a].0 + c.0, rel[a].1 + c.1);
            rel[b] = (rel[b].0 - 1, rel[b].1);
            for scale in [(1, 0), (0, 1)] {
                rows.push(rel.iter().flat_map(|&z| {
                    let p = eis_mul(z, scale);
                    [p.0, p.1]
                }).collect::<Vec<i64>>());
            }
        }
    }
    let rank_q = rank_rational(&rows);
    let rank_3 = rank_mod(&rows, 3);
    ensure!(rank_3 < rank_q, "no 3-torsion in the reference lattice ({rank_3} vs {rank_q})");
    let divisible_by_3 = report.snf.invariant_factors.iter().filter(|d| !d.is_zero() && (*d % 3u8).is_zero()).count();
    ensure!(report.snf.rank() == rank_q, "SNF rank {} against {rank_q}", report.snf.rank());
    ensure!(divisible_by_3 == rank_q - rank_3, "{divisible_by_3} invariant factors divisible by 3, expected {}", rank_q - rank_3);
    ensure!(report.has_torsion && !report.quotient_free, "torsion not reported");
    let mut with_e111 = rows.clone();
    let mut e111 = vec![0i64; 16];
    e111[2 * col(&[1, 1, 1])] = 1;
    with_e111.push(e111);
    ensure!(rank_mod(&with_e111, 3) > rank_3, "e_(1,1,1) lies in the lattice modulo 3");
    ensure!(!report.e111_in_lattice, "report places e_(1,1,1) in the lattice");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(())
}

fn decomposables() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for kind in KINDS {
        let seq = Arc::new(lib(CharacterSequence::<Q>::builtin(kind, RQ, 4))?);
        for _ in 0..100 {
            let n = rng.gen_range(1..=3);
            let d = rng.gen_range(1..=4);
            let alg = lib(SemiSymmetricAlgebra::new(seq.clone(), n))?;
            let xs = random_rows(&mut rng, d, n, 5);
            let mut want = BTreeMap::new();
            for i in all_indices(n, d) {
                let coeff: Q = i.iter().enumerate().map(|(t, &l)| xs[t][l - 1].clone()).product();
                if let Some((m, z)) = project_builtin(kind, &i) {
                    add_to(&mut want, m, coeff * q(z));
                }
            }
            let got: ChiVector<Q> = lib(alg.decomposable(&xs))?;
            ensure!(terms_of(&got) == drop_zeros(want), "{kind}: decomposable of {xs:?} is {got:?}");
        }
    }
    Ok(())
}

fn factorizations() -> Outcome {
    for kind in [BuiltinKind::Symmetric, BuiltinKind::Exterior] {
        let seq = lib(CharacterSequence::<Q>::builtin(kind, RQ, 4))?;
        for n in 1..=4 {
            for split in 0..=n {
                let rest = n - split;
                for (side, part) in [(FactorSide::Left, split), (FactorSide::Right, rest)] {
                    if part == 0 {
                        continue;
                    }
                    for inner in compositions(part) {
                        let rep = lib(factorization_bijection_check(&seq, n, split, &inner, side))?;
                        let refined: Vec<usize> = match side {
                            FactorSide::Left => [inner.clone(), vec![rest]].concat(),
                            FactorSide::Right => [vec![split], inner.clone()].concat(),
                        };
                        let domain = multinomial(&[split, rest]) * multinomial(&inner);
                        let codomain = multinomial(&refined);
                        ensure!(domain == codomain, "reference counts disagree for {refined:?}");
                        ensure!(
                            rep.domain_size as u64 == domain && rep.codomain_size as u64 == codomain && rep.is_bijection(),
                            "{kind}: n = {n}, split {split}, {side:?} {inner:?}: {rep:?}"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn sequence_validation() -> Outcome {
    for kind in KINDS.into_iter().chain([BuiltinKind::Truncated(1), BuiltinKind::Truncated(3)]) {
        let report = lib(CharacterSequence::<Q>::builtin(kind, RQ, 5))?.validate();
        ensure!(report.is_valid(), "{kind}: {:?}", report.violations);
    }
    let sym = |d: usize| Arc::new(PermutationGroup::symmetric(d).unwrap());
    let p = |s: &str, d: usize| Permutation::parse(s, d).unwrap();
    let s1 = Character::trivial(sym(1), RQ);
    let s2 = lib(Character::from_generators(sym(2), &[q(-1)], RQ))?;
    let gens3 = Arc::new(lib(PermutationGroup::closure(3, vec![p("(1 2)", 3), p("(1 2 3)", 3)]))?);
    let flipped = lib(Character::from_generators(gens3, &[q(1), q(1)], RQ))?;
    let report = lib(CharacterSequence::new(RQ, vec![s1, s2, flipped]))?.validate();
    ensure!(!report.is_valid(), "corrupted sequence validated");
    let found = report.violations.iter().any(|v| {
        matches!(v, Violation::Restriction { degree: 2, element, restricted, expected } if element == "(1 2)" && restricted == "1" && expected == "-1")
    });
    ensure!(found, "restriction violation at (1 2) not identified: {:?}", report.violations);
    Ok(())
}

fn panic_text(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("specialization to tensor, symmetric and exterior algebras", specialization),
        ("basis pairing is |W_j|·δ(j,k)", dual_bases),
        ("generalized Lagrange identity", lagrange),
        ("Laplace expansion of d_χ", laplace),
        ("Laplace expansions of the pairing and comultiplication duality", pairing_expansions),
        ("coassociativity and counit laws", coalgebra_laws),
        ("inner products: basis, general and adjunction routes; module laws", inner_products),
        ("mod 15 module with 15³·3⁴ elements is not free", z15_freeness),
        ("Eisenstein quotient has 3-torsion", eisenstein_torsion),
        ("decomposable elements match tensor expansion and projection", decomposables),
        ("coset factorization counts and bijectivity", factorizations),
        ("sequence validation", sequence_validation),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| Err(panic_text(p)));
        match outcome {
            Ok(()) => println!("PASS {:>2}  {name} ({:.2?})", k + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {e}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
