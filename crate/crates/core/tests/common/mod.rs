//! Brute-force reference computations shared by the integration tests.
//! Nothing here calls into the library beyond constructing inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use semisym::{BuiltinKind, Character, ChiElem, Permutation, PermutationGroup, Rational, RingDescriptor};

pub type Q = Rational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// All permutations of `0..d` as image words.
pub fn perms(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in perms(d - 1) {
        for pos in 0..=w.len() {
            let mut v = w.clone();
            v.insert(pos, d - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

pub fn inversions<T: Ord>(w: &[T]) -> usize {
    (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
}

pub fn sign<T: Ord>(w: &[T]) -> i64 {
    if inversions(w) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(σ·i)_{σ(t)} = i_t`.
pub fn act(w: &[usize], i: &[usize]) -> Vec<usize> {
    let mut out = vec![0; i.len()];
    for (t, &x) in i.iter().enumerate() {
        out[w[t]] = x;
    }
    out
}

pub fn all_indices(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out.into_iter().flat_map(|p| (1..=n).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// A permutation group listed element by element, with a ±1 character.
#[derive(Clone, Debug)]
pub struct Table {
    pub degree: usize,
    pub elems: Vec<Vec<usize>>,
    pub chi: Vec<i64>,
}

impl Table {
    pub fn new(degree: usize, elems: Vec<Vec<usize>>, chi: impl Fn(&[usize]) -> i64) -> Self {
        let chi = elems.iter().map(|w| chi(w)).collect();
        Table { degree, elems, chi }
    }

    pub fn symmetric_sign(d: usize) -> Self {
        Table::new(d, perms(d), sign)
    }

    pub fn symmetric_trivial(d: usize) -> Self {
        Table::new(d, perms(d), |_| 1)
    }

    pub fn trivial(d: usize) -> Self {
        Table::new(d, vec![(0..d).collect()], |_| 1)
    }

    pub fn cyclic3() -> Self {
        Table::new(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], |_| 1)
    }

    pub fn klein() -> Self {
        Table::new(4, vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]], |_| 1)
    }

    pub fn for_kind(kind: BuiltinKind, d: usize) -> Self {
        match kind {
            BuiltinKind::Tensor => Table::trivial(d),
            BuiltinKind::Symmetric => Table::symmetric_trivial(d),
            BuiltinKind::Exterior => Table::symmetric_sign(d),
            BuiltinKind::Truncated(k) if d <= k => Table::trivial(d),
            BuiltinKind::Truncated(_) => Table::symmetric_sign(d),
        }
    }

    pub fn value(&self, w: &[usize]) -> i64 {
        let k = self.elems.iter().position(|e| e == w).expect("element of the table");
        self.chi[k]
    }

    pub fn stabilizer(&self, i: &[usize]) -> Vec<usize> {
        (0..self.elems.len()).filter(|&k| act(&self.elems[k], i) == i).collect()
    }

    /// `J(χ, n)`: orbit minima on which χ is trivial on the stabilizer.
    pub fn basis(&self, n: usize) -> Vec<Vec<usize>> {
        all_indices(n, self.degree)
            .into_iter()
            .filter(|i| self.elems.iter().all(|w| act(w, i) >= *i))
            .filter(|i| self.stabilizer(i).iter().all(|&k| self.chi[k] == 1))
            .collect()
    }

    /// `e_i ≡ ζ·e_m` with `m` the orbit minimum, or `None` when `e_i ≡ 0`.
    pub fn project(&self, i: &[usize]) -> Option<(Vec<usize>, i64)> {
        if self.stabilizer(i).iter().any(|&k| self.chi[k] != 1) {
            return None;
        }
        let (k, m) = (0..self.elems.len()).map(|k| (k, act(&self.elems[k], i))).min_by(|a, b| a.1.cmp(&b.1)).expect("nonempty");
        // σ maps i to m, so e_i = e_{σ⁻¹m} ≡ χ(σ)e_m
        Some((m, self.chi[k]))
    }

    /// `d_χ(B) = Σ_σ χ(σ) ∏_t b_{σ⁻¹(t), t}`.
    pub fn schur(&self, b: &[Vec<Q>]) -> Q {
        let mut total = Q::zero();
        for (w, &c) in self.elems.iter().zip(&self.chi) {
            let mut inv = vec![0; w.len()];
            for (t, &x) in w.iter().enumerate() {
                inv[x] = t;
            }
            let mut term = q(c);
            for t in 0..self.degree {
                term *= &b[inv[t]][t];
            }
            total += term;
        }
        total
    }

    pub fn library(&self) -> Character<Q> {
        let gens = self
            .elems
            .iter()
            .map(|w| Permutation::from_one_line(&w.iter().map(|x| x + 1).collect::<Vec<_>>()).unwrap())
            .collect();
        let group = Arc::new(PermutationGroup::closure(self.degree, gens).unwrap());
        let table = self.clone();
        Character::from_fn(group, RingDescriptor::Rational, move |s| {
            let w: Vec<usize> = s.one_line().iter().map(|x| x - 1).collect();
            q(table.value(&w))
        })
        .unwrap()
    }
}

/// `φ` for a builtin sequence, letter by letter.
pub fn project_builtin(kind: BuiltinKind, i: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut sorted = i.to_vec();
    sorted.sort();
    let alternating = || {
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            None
        } else {
            Some((sorted.clone(), sign(i)))
        }
    };
    match kind {
        BuiltinKind::Tensor => Some((i.to_vec(), 1)),
        BuiltinKind::Symmetric => Some((sorted.clone(), 1)),
        BuiltinKind::Exterior => alternating(),
        BuiltinKind::Truncated(k) if i.len() <= k => Some((i.to_vec(), 1)),
        BuiltinKind::Truncated(_) => alternating(),
    }
}

pub fn add_to<K: Ord>(map: &mut BTreeMap<K, Q>, key: K, c: Q) {
    let e = map.entry(key).or_insert_with(Q::zero);
    *e += c;
}

pub fn drop_zeros<K: Ord>(map: BTreeMap<K, Q>) -> BTreeMap<K, Q> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn terms_of<K>(x: &ChiElem<Q, K>) -> BTreeMap<Vec<usize>, Q> {
    x.terms().iter().map(|(k, v)| (k.entries().to_vec(), v.clone())).collect()
}

/// Lexicographically minimal representatives of `W_n` modulo the block
/// product `W_{p₁} × W_{p₂} × ⋯` for a builtin sequence.
pub fn block_reps(kind: BuiltinKind, composition: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = composition.iter().sum();
    let mut young: Vec<Vec<usize>> = vec![vec![]];
    let mut offset = 0;
    for &p in composition {
        let part = Table::for_kind(kind, p).elems;
        young = young
            .into_iter()
            .flat_map(|h| part.iter().map(move |w| [h.clone(), w.iter().map(|x| x + offset).collect()].concat()))
            .collect();
        offset += p;
    }
    Table::for_kind(kind, n)
        .elems
        .into_iter()
        .filter(|s| young.iter().all(|h| h.iter().map(|&x| s[x]).collect::<Vec<_>>() >= *s))
        .collect()
}

/// `c₂(e_j)` from its defining sum, with every factor projected by `φ`.
pub fn coproduct(kind: BuiltinKind, j: &[usize]) -> BTreeMap<(Vec<usize>, Vec<usize>), Q> {
    let n = j.len();
    let table = Table::for_kind(kind, n);
    let mut out = BTreeMap::new();
    for p in 0..=n {
        for rho in block_reps(kind, &[p, n - p]) {
            let letters: Vec<usize> = rho.iter().map(|&t| j[t]).collect();
            let (Some((h, zh)), Some((t, zt))) = (project_builtin(kind, &letters[..p]), project_builtin(kind, &letters[p..])) else {
                continue;
            };
            add_to(&mut out, (h, t), q(table.value(&rho) * zh * zt));
        }
    }
    drop_zeros(out)
}

pub fn multinomial(parts: &[usize]) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    fact(parts.iter().sum()) / parts.iter().map(|&p| fact(p)).product::<u64>()
}

/// Compositions of `n` into `k` parts, zero parts allowed.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=n).flat_map(|first| weak_compositions(n - first, k - 1).into_iter().map(move |rest| [vec![first], rest].concat())).collect()
}

/// Compositions of `n` with positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n).flat_map(|first| compositions(n - first).into_iter().map(move |rest| [vec![first], rest].concat())).collect()
}

/// Rank over ℤ/p by elimination on residues.
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over ℚ.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let s = &f * &m[rank][k];
                    m[r][k] -= s;
                }
            }
        }
        rank += 1;
    }
    rank
}
