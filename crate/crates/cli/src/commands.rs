use std::path::Path;
use std::sync::Arc;

use semisym::diag;
use semisym::index::composition_reps;
use semisym::inner::{left_inner, right_inner};
use semisym::json::{element_from_json, element_to_json, parse_matrix, sequence_from_json, tensor_to_json};
use semisym::schur::{schur_direct, schur_laplace};
use semisym::{BuiltinKind, CharacterSequence, ChiForm, ChiVector, RingDescriptor, Scalar, SemiSymmetricAlgebra, SemiSymmetricPower};
use serde_json::{json, Value};

use crate::{check, Command, Context, Example, Failure, Outcome, Side};

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// An operand given inline as JSON, or as `@path` to a JSON file.
fn operand(text: &str, what: &str) -> Result<Value, Failure> {
    let body = match text.strip_prefix('@') {
        Some(path) => read_file(Path::new(path))?,
        None => text.to_string(),
    };
    serde_json::from_str(&body).map_err(|e| usage(format!("{what}: invalid JSON: {e}")))
}

fn operand_degree(v: &Value, what: &str) -> Result<usize, Failure> {
    v.get("degree")
        .and_then(Value::as_u64)
        .map(|d| d as usize)
        .ok_or_else(|| usage(format!("{what}: missing non-negative integer \"degree\"")))
}

pub fn parse_composition(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| usage(format!("bad composition {text:?}"))))
        .collect()
}

/// The sequence named by `--builtin` or `--config`, covering at least `need` degrees.
pub fn sequence<S: Scalar>(ctx: &Context, ring: RingDescriptor, need: usize) -> Result<CharacterSequence<S>, Failure> {
    match (&ctx.builtin, &ctx.config) {
        (Some(_), Some(_)) => Err(usage("--builtin and --config are mutually exclusive")),
        (None, None) => Err(usage("one of --builtin or --config is required")),
        (Some(name), None) => {
            let kind: BuiltinKind = name.parse()?;
            let d = need.max(ctx.max_degree.unwrap_or(0)).max(1);
            Ok(CharacterSequence::builtin_with_cap(kind, ring, d, ctx.max_group)?)
        }
        (None, Some(path)) => {
            let v: Value = serde_json::from_str(&read_file(path)?).map_err(|e| usage(format!("{}: invalid JSON: {e}", path.display())))?;
            let seq = sequence_from_json(&v, ring, ctx.max_group)?;
            if seq.max_degree() < need {
                return Err(usage(format!("{} covers degrees up to {}, degree {need} is needed", path.display(), seq.max_degree())));
            }
            Ok(seq)
        }
    }
}

pub fn algebra<S: Scalar>(ctx: &Context, seq: CharacterSequence<S>) -> Result<SemiSymmetricAlgebra<S>, Failure> {
    let n = ctx.n.ok_or_else(|| usage("--n is required"))?;
    Ok(SemiSymmetricAlgebra::with_cap(Arc::new(seq), n, ctx.max_indices)?)
}

fn basis_json<S: Scalar>(power: &SemiSymmetricPower<S>) -> Value {
    Value::Array(power.basis().iter().map(|j| json!(j.entries())).collect())
}

pub fn run<S: Scalar>(cmd: &Command, ctx: &Context, ring: RingDescriptor) -> Result<Outcome, Failure> {
    match cmd {
        Command::Basis { degree } => {
            let n = ctx.n.ok_or_else(|| usage("--n is required"))?;
            let top = match (degree, ctx.max_degree) {
                (Some(d), _) => *d,
                (None, Some(d)) => d,
                (None, None) if ctx.config.is_some() => 0,
                (None, None) => return Err(usage("basis needs --degree or --max-degree")),
            };
            let seq = sequence::<S>(ctx, ring, top)?;
            let power = |d: usize| -> Result<SemiSymmetricPower<S>, Failure> {
                Ok(SemiSymmetricPower::with_cap(seq.stage(d)?.clone(), n, ctx.max_indices)?)
            };
            match degree {
                Some(d) => Ok(Outcome::ok(basis_json(&power(*d)?))),
                None => {
                    let top = ctx.max_degree.unwrap_or(seq.max_degree()).min(seq.max_degree());
                    let mut out = Vec::new();
                    for d in 0..=top {
                        let p = power(d)?;
                        out.push(json!({ "degree": d, "rank": p.rank(), "basis": basis_json(&p) }));
                    }
                    Ok(Outcome::ok(Value::Array(out)))
                }
            }
        }
        Command::Table { degree, right_degree } => {
            let (p, q) = (*degree, right_degree.unwrap_or(*degree));
            let alg = algebra(ctx, sequence::<S>(ctx, ring, p + q)?)?;
            let (left, right) = (alg.power(p)?, alg.power(q)?);
            let mut rows = Vec::new();
            for j in left.basis() {
                let a: ChiVector<S> = left.basis_element(j)?;
                for k in right.basis() {
                    let b: ChiVector<S> = right.basis_element(k)?;
                    let prod = alg.multiply(&a, &b)?;
                    rows.push(json!({ "left": j.entries(), "right": k.entries(), "product": element_to_json(&prod) }));
                }
            }
            Ok(Outcome::ok(Value::Array(rows)))
        }
        Command::Schur { matrix, composition } => {
            let a = parse_matrix::<S>(&read_file(matrix)?, &ring)?;
            if !a.is_square() {
                return Err(usage(format!("schur needs a square matrix, got {}×{}", a.rows(), a.cols())));
            }
            let d = a.rows();
            let seq = sequence::<S>(ctx, ring, d)?;
            let direct = schur_direct(&a, seq.stage(d)?)?;
            let mut out = json!({ "degree": d, "direct": direct.to_string() });
            let mut passed = true;
            if let Some(text) = composition {
                let comp = parse_composition(text)?;
                if comp.iter().sum::<usize>() != d {
                    return Err(usage(format!("composition {text:?} does not sum to {d}")));
                }
                let m = composition_reps(&seq, d, &comp)?;
                let mut expansions = Vec::new();
                for rho in m.reps() {
                    let blocks = m.blocks(rho);
                    let value = schur_laplace(&a, &seq, &comp, &blocks)?;
                    passed &= value == direct;
                    let shown: Vec<&[usize]> = blocks.iter().map(|b| b.entries()).collect();
                    expansions.push(json!({ "blocks": shown, "value": value.to_string() }));
                }
                out["composition"] = json!(comp);
                out["laplace"] = Value::Array(expansions);
                out["agree"] = json!(passed);
            }
            Ok(Outcome { value: out, passed })
        }
        Command::Pair { x, y } => {
            let (xv, yv) = (operand(x, "--x")?, operand(y, "--y")?);
            let (dx, dy) = (operand_degree(&xv, "--x")?, operand_degree(&yv, "--y")?);
            let alg = algebra(ctx, sequence::<S>(ctx, ring, dx.max(dy))?)?;
            let xe: ChiVector<S> = element_from_json(&alg, &xv)?;
            let ye: ChiForm<S> = element_from_json(&alg, &yv)?;
            let value = if dx == dy { semisym::duality::pair(&*alg.power(dx)?, &xe, &ye)? } else { S::zero() };
            Ok(Outcome::ok(json!({ "value": value.to_string() })))
        }
        Command::Comul { x, k } => {
            let xv = operand(x, "--x")?;
            let alg = algebra(ctx, sequence::<S>(ctx, ring, operand_degree(&xv, "--x")?)?)?;
            let xe: ChiVector<S> = element_from_json(&alg, &xv)?;
            Ok(Outcome::ok(tensor_to_json(&semisym::coalgebra::comul(&alg, &xe, *k)?)))
        }
        Command::Inner { side, a, f } => {
            let (av, fv) = (operand(a, "--a")?, operand(f, "--f")?);
            let need = operand_degree(&av, "--a")?.max(operand_degree(&fv, "--f")?);
            let alg = algebra(ctx, sequence::<S>(ctx, ring, need)?)?;
            let ae: ChiVector<S> = element_from_json(&alg, &av)?;
            let fe: ChiForm<S> = element_from_json(&alg, &fv)?;
            let out = match side {
                Side::Left => element_to_json(&left_inner(&alg, &ae, &fe)?),
                Side::Right => element_to_json(&right_inner(&alg, &ae, &fe)?),
            };
            Ok(Outcome::ok(out))
        }
        Command::Check { samples } => check::run::<S>(ctx, ring, *samples),
        Command::Counterexample { which } => counterexample(*which),
    }
}

pub fn counterexample(which: Example) -> Result<Outcome, Failure> {
    let value = match which {
        Example::Z15 => serde_json::to_value(diag::z15_counterexample()?),
        Example::Eisenstein => serde_json::to_value(diag::eisenstein_counterexample()?),
    }
    .expect("reports serialize");
    Ok(Outcome::ok(value))
}
