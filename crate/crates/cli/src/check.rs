use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use semisym::coalgebra::{coassociativity_check, counit, counit_law_check, duality_check};
use semisym::duality::pair_laplace;
use semisym::index::{composition_reps, compositions};
use semisym::inner::{
    left_inner, left_inner_basis, left_inner_by_adjunction, module_law_checks, right_inner, right_inner_basis, right_inner_by_adjunction,
};
use semisym::schur::{lagrange_check, schur_direct, schur_laplace};
use semisym::{ChiElem, ChiForm, ChiVector, ExactMatrix, RingDescriptor, Scalar, SemiSymmetricPower};

use crate::commands::{algebra, sequence};
use crate::{Context, Failure, Outcome};

/// Exhaustive cases per family up to this many, random samples beyond.
const CASE_LIMIT: usize = 300;
const SHOWN_FAILURES: usize = 5;

#[derive(Serialize)]
struct CheckResult {
    check: &'static str,
    cases: usize,
    passed: bool,
    failures: Vec<String>,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < SHOWN_FAILURES {
            self.failures.push(what());
        }
    }

    fn finish(self, check: &'static str) -> CheckResult {
        CheckResult { check, cases: self.cases, passed: self.failures.is_empty(), failures: self.failures }
    }
}

/// Index tuples into sets of the given sizes: all of them when there are at
/// most [`CASE_LIMIT`], otherwise that many uniform samples.
fn tuples(sizes: &[usize], rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let total = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
    match total {
        Some(0) => vec![],
        Some(t) if t <= CASE_LIMIT => {
            let mut out = vec![vec![]];
            for &s in sizes {
                out = out.into_iter().flat_map(|p| (0..s).map(move |i| [p.clone(), vec![i]].concat())).collect();
            }
            out
        }
        _ => (0..CASE_LIMIT).map(|_| sizes.iter().map(|&s| rng.gen_range(0..s)).collect()).collect(),
    }
}

fn small<S: Scalar>(rng: &mut ChaCha8Rng, ring: &RingDescriptor, bound: i64) -> S {
    S::from_i64(rng.gen_range(-bound..=bound), ring)
}

fn random_matrix<S: Scalar>(rows: usize, cols: usize, rng: &mut ChaCha8Rng, ring: &RingDescriptor) -> ExactMatrix<S> {
    let data = (0..rows * cols).map(|_| small(rng, ring, 9)).collect();
    ExactMatrix::new(rows, cols, data).expect("sized")
}

fn random_vectors<S: Scalar>(count: usize, n: usize, rng: &mut ChaCha8Rng, ring: &RingDescriptor) -> Vec<Vec<S>> {
    (0..count).map(|_| (0..n).map(|_| small(rng, ring, 5)).collect()).collect()
}

fn random_element<S: Scalar, K>(power: &SemiSymmetricPower<S>, rng: &mut ChaCha8Rng) -> Result<ChiElem<S, K>, Failure> {
    let terms: Vec<_> = power.basis().iter().map(|j| (j.clone(), small(rng, power.ring(), 3))).collect();
    Ok(power.element(terms)?)
}

fn same<S: Scalar, K>(a: &ChiElem<S, K>, b: &ChiElem<S, K>) -> bool {
    a == b || (a.is_zero() && b.is_zero())
}

pub fn run<S: Scalar>(ctx: &Context, ring: RingDescriptor, samples: usize) -> Result<Outcome, Failure> {
    let wanted = ctx.max_degree.unwrap_or(3);
    let seq = sequence::<S>(ctx, ring, wanted)?;
    let top = wanted.min(seq.max_degree());
    let mut results = Vec::new();

    let report = seq.validate();
    let mut t = Tally::default();
    t.cases = 1;
    t.failures = report.violations.iter().map(ToString::to_string).collect();
    results.push(t.finish("sequence"));
    if !report.is_valid() {
        return Ok(Outcome { value: json!({ "passed": false, "max_degree": top, "checks": results }), passed: false });
    }

    let alg = algebra(ctx, seq)?;
    let n = alg.n();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let powers = (0..=top).map(|d| alg.power(d)).collect::<semisym::Result<Vec<_>>>()?;

    let mut t = Tally::default();
    for p in 1..=top {
        for q in 1..=top - p {
            for r in 1..=top - p - q {
                let (bp, bq, br) = (powers[p].basis(), powers[q].basis(), powers[r].basis());
                for ix in tuples(&[bp.len(), bq.len(), br.len()], &mut rng) {
                    let a: ChiVector<S> = powers[p].basis_element(&bp[ix[0]])?;
                    let b: ChiVector<S> = powers[q].basis_element(&bq[ix[1]])?;
                    let c: ChiVector<S> = powers[r].basis_element(&br[ix[2]])?;
                    let lhs = alg.multiply(&alg.multiply(&a, &b)?, &c)?;
                    let rhs = alg.multiply(&a, &alg.multiply(&b, &c)?)?;
                    t.record(lhs == rhs, || format!("(e{}·e{})·e{}", bp[ix[0]], bq[ix[1]], br[ix[2]]));
                }
            }
        }
    }
    results.push(t.finish("associativity"));

    let mut coassoc = Tally::default();
    let mut counit_law = Tally::default();
    for d in 0..=top {
        let basis = powers[d].basis();
        for ix in tuples(&[basis.len()], &mut rng) {
            let x: ChiVector<S> = powers[d].basis_element(&basis[ix[0]])?;
            coassoc.record(coassociativity_check(&alg, &x, 3)?, || format!("c₃(e{})", basis[ix[0]]));
            counit_law.record(counit_law_check(&alg, &x)?, || format!("(ε⊗1)c₂(e{})", basis[ix[0]]));
        }
    }
    counit_law.record(counit(&alg.unit::<semisym::Vector>()) == S::one(), || "ε(1) = 1".into());
    results.push(coassoc.finish("coassociativity"));
    results.push(counit_law.finish("counit"));

    let mut t = Tally::default();
    for d in 1..=top {
        for _ in 0..samples {
            let a = random_matrix::<S>(n, d, &mut rng, &ring);
            let rep = lagrange_check(&a, alg.sequence().stage(d)?)?;
            t.record(rep.equal, || format!("degree {d}: {} ≠ {}", rep.lhs, rep.rhs));
        }
    }
    results.push(t.finish("lagrange"));

    let mut t = Tally::default();
    for d in 1..=top {
        let chi = alg.sequence().stage(d)?;
        for comp in compositions(d, 2) {
            let m = composition_reps(alg.sequence(), d, &comp)?;
            for _ in 0..samples {
                let a = random_matrix::<S>(d, d, &mut rng, &ring);
                let direct = schur_direct(&a, chi)?;
                for rho in m.reps() {
                    let blocks = m.blocks(rho);
                    let ok = schur_laplace(&a, alg.sequence(), &comp, &blocks)? == direct;
                    t.record(ok, || format!("composition {comp:?}, blocks {blocks:?}"));
                }
            }
        }
    }
    results.push(t.finish("laplace"));

    let mut pairing = Tally::default();
    let mut duality = Tally::default();
    for d in 1..=top {
        for k in [2, 3] {
            for comp in compositions(d, k) {
                for _ in 0..samples {
                    let xs = random_vectors::<S>(d, n, &mut rng, &ring);
                    let ys = random_vectors::<S>(d, n, &mut rng, &ring);
                    if k == 2 {
                        let l = pair_laplace(alg.sequence(), &xs, &ys, &comp)?;
                        pairing.record(l.agree(), || format!("composition {comp:?}"));
                    }
                    let c = duality_check(&alg, &xs, &ys, &comp)?;
                    duality.record(c.agree(), || format!("composition {comp:?}"));
                }
            }
        }
    }
    results.push(pairing.finish("pairing-laplace"));
    results.push(duality.finish("comultiplication-duality"));

    let mut t = Tally::default();
    for m in 0..=top {
        for p in 0..=m {
            let (bj, bk) = (powers[p].basis(), powers[m].basis());
            for ix in tuples(&[bj.len(), bk.len()], &mut rng) {
                let (j, k) = (&bj[ix[0]], &bk[ix[1]]);
                let ej: ChiVector<S> = powers[p].basis_element(j)?;
                let fk: ChiForm<S> = powers[m].basis_element(k)?;
                let basis_route = left_inner_basis(&alg, j, k)?;
                let ok = same(&basis_route, &left_inner(&alg, &ej, &fk)?) && same(&basis_route, &left_inner_by_adjunction(&alg, &ej, &fk)?);
                t.record(ok, || format!("e{j}⌋e{k}*"));
                let ek: ChiVector<S> = powers[m].basis_element(k)?;
                let fj: ChiForm<S> = powers[p].basis_element(j)?;
                let basis_route = right_inner_basis(&alg, k, j)?;
                let ok = same(&basis_route, &right_inner(&alg, &ek, &fj)?) && same(&basis_route, &right_inner_by_adjunction(&alg, &ek, &fj)?);
                t.record(ok, || format!("e{k}⌊e{j}*"));
            }
        }
    }
    results.push(t.finish("adjunctions"));

    let mut t = Tally::default();
    for _ in 0..samples * (top + 1) {
        let da = rng.gen_range(0..=top);
        let db = rng.gen_range(0..=top - da);
        let df = rng.gen_range(0..=top);
        let dg = rng.gen_range(0..=top - df);
        let a: ChiVector<S> = random_element(&powers[da], &mut rng)?;
        let b: ChiVector<S> = random_element(&powers[db], &mut rng)?;
        let f: ChiForm<S> = random_element(&powers[df], &mut rng)?;
        let g: ChiForm<S> = random_element(&powers[dg], &mut rng)?;
        let rep = module_law_checks(&alg, &a, &b, &f, &g)?;
        for failure in &rep.failures {
            t.record(false, || format!("{failure} at degrees ({da}, {db}, {df}, {dg})"));
        }
        t.cases += rep.checked - rep.failures.len();
    }
    results.push(t.finish("module-laws"));

    let passed = results.iter().all(|r| r.passed);
    Ok(Outcome { value: json!({ "passed": passed, "n": n, "max_degree": top, "seed": ctx.seed, "checks": results }), passed })
}
