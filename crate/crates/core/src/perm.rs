//! Permutations of `[1, d]` and fully enumerated permutation groups.
//!
//! Points are stored 0-based; everything user-facing (one-line words, cycle
//! notation) is 1-based. Composition applies the right factor first.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::index::MultiIndex;

pub const DEFAULT_GROUP_CAP: usize = 50_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // word[i] = image of point i (0-based); derived Ord is lexicographic on words
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { word: (0..degree).collect() }
    }

    /// Builds a permutation from its 1-based one-line form `(σ(1), …, σ(d))`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let d = word.len();
        let mut seen = vec![false; d];
        let mut out = Vec::with_capacity(d);
        for &x in word {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection of [1,{d}]")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Permutation { word: out })
    }

    pub(crate) fn from_images(word: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = word.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { word }
    }

    /// Builds a permutation of degree `degree` from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut word: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!("point {x} outside [1,{degree}]")));
                }
                if touched[x - 1] {
                    return Err(Error::InvalidPermutation(format!("point {x} repeated in cycles")));
                }
                touched[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                word[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { word })
    }

    /// Parses cycle notation `"(1 2)(3 4)"`, `"()"`, or a one-line form `"[2,1,4,3]"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated one-line form {t:?}")))?;
            let word = parse_points(inner)?;
            if word.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: word.len() });
            }
            return Permutation::from_one_line(&word);
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {t:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unterminated cycle in {t:?}")))?;
            let points = parse_points(&body[..close])?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.word[i]
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { word: inv }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self * other)
    }

    pub fn sign(&self) -> i64 {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut transpositions = 0;
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.word[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Self {
        assert!(degree >= self.degree());
        let mut word = self.word.clone();
        word.extend(self.degree()..degree);
        Permutation { word }
    }

    /// The shift ω: fixes 1 and sends `t + 1` to `σ(t) + 1`; the degree grows by one.
    pub fn omega(&self) -> Self {
        let mut word = Vec::with_capacity(self.degree() + 1);
        word.push(0);
        word.extend(self.word.iter().map(|x| x + 1));
        Permutation { word }
    }

    /// ω applied `shift` times, padded with fixed points up to `degree`.
    pub fn shifted(&self, shift: usize, degree: usize) -> Result<Self> {
        if degree < self.degree() + shift {
            return Err(Error::DegreeMismatch { expected: self.degree() + shift, found: degree });
        }
        let mut word: Vec<usize> = (0..shift).collect();
        word.extend(self.word.iter().map(|x| x + shift));
        word.extend(self.degree() + shift..degree);
        Ok(Permutation { word })
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] || self.word[s] == s {
                seen[s] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.word[x];
            }
            out.push(cycle);
        }
        out
    }
}

/// Iterated shift ω^k with `k = target_degree − deg σ`.
pub fn omega_shift(sigma: &Permutation, target_degree: usize) -> Result<Permutation> {
    if target_degree < sigma.degree() + 1 {
        return Err(Error::DegreeMismatch { expected: sigma.degree() + 1, found: target_degree });
    }
    sigma.shifted(target_degree - sigma.degree(), target_degree)
}

fn parse_points(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {p:?}"))))
        .collect()
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { word: rhs.word.iter().map(|&x| self.word[x]).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite permutation group with its elements listed in lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn symmetric(degree: usize) -> Result<Self> {
        Self::symmetric_with_cap(degree, DEFAULT_GROUP_CAP)
    }

    pub fn symmetric_with_cap(degree: usize, cap: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[vec![1, 2]])?);
        }
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[(1..=degree).collect()])?);
        }
        Self::closure_with_cap(degree, gens, cap)
    }

    pub fn closure(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::closure_with_cap(degree, generators, DEFAULT_GROUP_CAP)
    }

    /// Enumerates the group generated by `generators`, failing once more than
    /// `cap` elements have been found.
    pub fn closure_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        let mut elements = frontier.clone();
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g * &x;
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        elements.sort();
        Ok(PermutationGroup { degree, generators, elements })
    }

    /// Wraps a list that is already known to be a subgroup.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let generators = elements.iter().filter(|e| !e.is_identity()).cloned().collect();
        PermutationGroup { degree, generators, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn position(&self, sigma: &Permutation) -> Option<usize> {
        self.elements.binary_search(sigma).ok()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.position(sigma).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// `{σ ∈ G : σ·i = i}` under the place-permutation action.
    pub fn stabilizer(&self, i: &MultiIndex) -> Result<PermutationGroup> {
        if i.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: i.len() });
        }
        let elements = self.elements.iter().filter(|s| i.act_by(s) == *i).cloned().collect();
        Ok(PermutationGroup::from_elements(self.degree, elements))
    }

    /// Lexicographically minimal representatives of the left cosets `σH`, sorted.
    pub fn left_coset_reps(&self, sub: &PermutationGroup) -> Result<Vec<Permutation>> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(format!("{sub:?} is not contained in {self:?}")));
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::with_capacity(self.order() / sub.order());
        for (k, g) in self.elements.iter().enumerate() {
            if covered[k] {
                continue;
            }
            // elements are scanned in increasing order, so g is its coset's minimum
            reps.push(g.clone());
            for h in &sub.elements {
                let gh = g * h;
                let pos = self.position(&gh).expect("closed under products");
                covered[pos] = true;
            }
        }
        Ok(reps)
    }
}

/// The internal product `W_d · ω^d(W_e) · …` inside `S_n`. Each part is a
/// group together with the offset of its block.
pub fn young_product(n: usize, parts: &[(&PermutationGroup, usize)]) -> Result<PermutationGroup> {
    let mut used = vec![false; n];
    let mut generators = Vec::new();
    for (group, offset) in parts {
        let end = offset + group.degree();
        if end > n {
            return Err(Error::InvalidComposition(format!(
                "block [{}, {end}] does not fit in degree {n}",
                offset + 1
            )));
        }
        for slot in &mut used[*offset..end] {
            if *slot {
                return Err(Error::InvalidComposition(format!("blocks overlap at offset {offset}")));
            }
            *slot = true;
        }
        for g in group.generators() {
            generators.push(g.shifted(*offset, n)?);
        }
    }
    let mut elements = vec![Permutation::identity(n)];
    for (group, offset) in parts {
        let shifted: Vec<Permutation> = group
            .elements()
            .iter()
            .map(|g| g.shifted(*offset, n))
            .collect::<Result<_>>()?;
        elements = elements
            .iter()
            .flat_map(|x| shifted.iter().map(move |g| x * g))
            .collect();
    }
    elements.sort();
    Ok(PermutationGroup { degree: n, generators, elements })
}
