//! Linear characters of permutation groups and ω-invariant character sequences.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};


use crate::error::{Error, Result};
use crate::index::CompositionRepSet;
use crate::perm::{Permutation, PermutationGroup};
use crate::ring::{check_descriptor, invert_integer, RingDescriptor, Scalar};

/// A group homomorphism `W → U(K)`, tabulated on the sorted elements of `W`.
#[derive(Clone, PartialEq)]
pub struct Character<S> {
    group: Arc<PermutationGroup>,
    values: Vec<S>,
    ring: RingDescriptor,
}

impl<S: Scalar> fmt::Debug for Character<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (g, v) in self.group.elements().iter().zip(&self.values) {
            m.entry(&g.to_string(), &v.to_string());
        }
        m.finish()
    }
}

impl<S: Scalar> Character<S> {
    pub fn trivial(group: Arc<PermutationGroup>, ring: RingDescriptor) -> Self {
        let values = vec![S::one(); group.order()];
        Character { group, values, ring }
    }

    pub fn signature(group: Arc<PermutationGroup>, ring: RingDescriptor) -> Self {
        let values = group.elements().iter().map(|g| S::from_i64(g.sign(), &ring)).collect();
        Character { group, values, ring }
    }

    /// Extends per-generator values multiplicatively over the whole group.
    ///
    /// Walks the Cayley graph of the generators; an edge that disagrees with
    /// an already assigned value means the assignment is not a homomorphism.
    pub fn from_generators(group: Arc<PermutationGroup>, gen_values: &[S], ring: RingDescriptor) -> Result<Self> {
        check_descriptor::<S>(&ring)?;
        let gens = group.generators();
        if gens.len() != gen_values.len() {
            return Err(Error::InconsistentCharacter(format!(
                "{} generators but {} values",
                gens.len(),
                gen_values.len()
            )));
        }
        for v in gen_values {
            if !v.is_unit() {
                return Err(Error::NonUnitValue(v.to_string()));
            }
        }
        let mut values: Vec<Option<S>> = vec![None; group.order()];
        let id = group.position(&Permutation::identity(group.degree())).expect("identity");
        values[id] = Some(S::one());
        let mut stack = vec![id];
        while let Some(k) = stack.pop() {
            let x = &group.elements()[k];
            let vx = values[k].clone().expect("assigned");
            for (g, vg) in gens.iter().zip(gen_values) {
                let y = g * x;
                let pos = group.position(&y).expect("group closed under generators");
                let vy = vg.clone() * vx.clone();
                match &values[pos] {
                    Some(existing) if *existing != vy => {
                        return Err(Error::InconsistentCharacter(format!(
                            "{y} receives both {existing} and {vy}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        values[pos] = Some(vy);
                        stack.push(pos);
                    }
                }
            }
        }
        let values = values.into_iter().map(|v| v.expect("every element reached")).collect();
        Ok(Character { group, values, ring })
    }

    /// Tabulates `f` and checks the homomorphism law on every pair.
    pub fn from_fn(group: Arc<PermutationGroup>, ring: RingDescriptor, f: impl Fn(&Permutation) -> S) -> Result<Self> {
        check_descriptor::<S>(&ring)?;
        let values: Vec<S> = group.elements().iter().map(&f).collect();
        let chi = Character { group, values, ring };
        chi.check_homomorphism()?;
        Ok(chi)
    }

    fn check_homomorphism(&self) -> Result<()> {
        let els = self.group.elements();
        for (a, va) in els.iter().zip(&self.values) {
            if !va.is_unit() {
                return Err(Error::NonUnitValue(va.to_string()));
            }
            for (b, vb) in els.iter().zip(&self.values) {
                let ab = a * b;
                let vab = &self.values[self.group.position(&ab).ok_or_else(|| {
                    Error::NotASubgroup(format!("{ab} escapes the group"))
                })?];
                if *vab != va.clone() * vb.clone() {
                    return Err(Error::InconsistentCharacter(format!(
                        "χ({a}·{b}) = {vab} but χ({a})χ({b}) = {}",
                        va.clone() * vb.clone()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// Value at the `k`-th element of the group's sorted element list.
    #[inline]
    pub fn value_at(&self, k: usize) -> &S {
        &self.values[k]
    }

    pub fn value(&self, sigma: &Permutation) -> Option<&S> {
        self.group.position(sigma).map(|k| &self.values[k])
    }

    pub fn inverse(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.try_inverse().expect("character values are units"))
            .collect();
        Character { group: self.group.clone(), values, ring: self.ring }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn restrict(&self, sub: &Arc<PermutationGroup>) -> Result<Self> {
        let values = sub
            .elements()
            .iter()
            .map(|g| {
                self.value(g)
                    .cloned()
                    .ok_or_else(|| Error::NotASubgroup(format!("{g} is not in the parent group")))
            })
            .collect::<Result<_>>()?;
        Ok(Character { group: sub.clone(), values, ring: self.ring })
    }

    /// K is an integral domain and |W| is a unit of K.
    pub fn check_standing_hypotheses(&self) -> Result<()> {
        if !self.ring.is_integral_domain() {
            return Err(Error::HypothesisViolation(format!("{} is not an integral domain", self.ring)));
        }
        invert_integer::<S>(self.group.order() as u64, &self.ring).map_err(|_| {
            Error::HypothesisViolation(format!(
                "|W| = {} is not invertible in {}",
                self.group.order(),
                self.ring
            ))
        })?;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinKind {
    Tensor,
    Symmetric,
    Exterior,
    /// Trivial groups through degree `k`, then `S_d` with the signature.
    Truncated(usize),
}

impl FromStr for BuiltinKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "tensor" => Ok(BuiltinKind::Tensor),
            "symmetric" => Ok(BuiltinKind::Symmetric),
            "exterior" => Ok(BuiltinKind::Exterior),
            t => {
                let k = t
                    .strip_prefix("truncated:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown builtin sequence {t:?}")))?;
                Ok(BuiltinKind::Truncated(k))
            }
        }
    }
}

impl fmt::Display for BuiltinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinKind::Tensor => write!(f, "tensor"),
            BuiltinKind::Symmetric => write!(f, "symmetric"),
            BuiltinKind::Exterior => write!(f, "exterior"),
            BuiltinKind::Truncated(k) => write!(f, "truncated:{k}"),
        }
    }
}

/// One failed condition found by [`CharacterSequence::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `W_d` is not a group of degree `d`.
    Admissibility { degree: usize, found: usize },
    /// `W_d ≤ W_{d+1}` fails at `element`.
    NotIncreasing { degree: usize, element: String },
    /// `ω(W_d) ≤ W_{d+1}` fails at `element`.
    NotOmegaStable { degree: usize, element: String },
    /// `χ_{d+1}|_{W_d} ≠ χ_d` at `element`.
    Restriction { degree: usize, element: String, restricted: String, expected: String },
    /// `χ_{d+1}∘ω|_{W_d} ≠ χ_d` at `element`.
    ShiftedRestriction { degree: usize, element: String, shifted: String, expected: String },
    NotInvolution { degree: usize, element: String, value: String },
    NotPlusMinusOne { degree: usize, element: String, value: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Admissibility { degree, found } => {
                write!(f, "admissibility: W_{degree} acts on {found} points")
            }
            Violation::NotIncreasing { degree, element } => {
                write!(f, "ω-stability: {element} ∈ W_{degree} is not in W_{}", degree + 1)
            }
            Violation::NotOmegaStable { degree, element } => {
                write!(f, "ω-stability: ω({element}) is not in W_{} (element of W_{degree})", degree + 1)
            }
            Violation::Restriction { degree, element, restricted, expected } => write!(
                f,
                "restriction: χ_{}({element}) = {restricted} but χ_{degree}({element}) = {expected}",
                degree + 1
            ),
            Violation::ShiftedRestriction { degree, element, shifted, expected } => write!(
                f,
                "shifted restriction: χ_{}(ω({element})) = {shifted} but χ_{degree}({element}) = {expected}",
                degree + 1
            ),
            Violation::NotInvolution { degree, element, value } => {
                write!(f, "involution: χ_{degree}({element}) = {value} does not square to 1")
            }
            Violation::NotPlusMinusOne { degree, element, value } => {
                write!(f, "integral domain: χ_{degree}({element}) = {value} is not ±1")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Characters `χ_d : W_d → U(K)` for `d = 0..=D`; stage 0 is the trivial
/// group on no points.
pub struct CharacterSequence<S> {
    ring: RingDescriptor,
    stages: Vec<Character<S>>,
    reps_cache: Mutex<HashMap<Vec<usize>, Arc<CompositionRepSet>>>,
}

impl<S: Scalar> Clone for CharacterSequence<S> {
    fn clone(&self) -> Self {
        CharacterSequence { ring: self.ring, stages: self.stages.clone(), reps_cache: Mutex::default() }
    }
}

impl<S: Scalar> fmt::Debug for CharacterSequence<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterSequence")
            .field("ring", &self.ring)
            .field("max_degree", &self.max_degree())
            .finish()
    }
}

impl<S: Scalar> CharacterSequence<S> {
    /// `stages[k]` is the character of degree `k + 1`.
    pub fn new(ring: RingDescriptor, stages: Vec<Character<S>>) -> Result<Self> {
        check_descriptor::<S>(&ring)?;
        if stages.is_empty() {
            return Err(Error::InvalidSequence("a sequence needs at least one stage".into()));
        }
        for st in &stages {
            if *st.ring() != ring {
                return Err(Error::DescriptorMismatch(format!("stage over {} in a sequence over {ring}", st.ring())));
            }
        }
        let zero = Character::trivial(Arc::new(PermutationGroup::trivial(0)), ring);
        let mut all = Vec::with_capacity(stages.len() + 1);
        all.push(zero);
        all.extend(stages);
        Ok(CharacterSequence { ring, stages: all, reps_cache: Mutex::default() })
    }

    pub fn builtin(kind: BuiltinKind, ring: RingDescriptor, max_degree: usize) -> Result<Self> {
        Self::builtin_with_cap(kind, ring, max_degree, crate::perm::DEFAULT_GROUP_CAP)
    }

    pub fn builtin_with_cap(kind: BuiltinKind, ring: RingDescriptor, max_degree: usize, cap: usize) -> Result<Self> {
        check_descriptor::<S>(&ring)?;
        if max_degree == 0 {
            return Err(Error::InvalidSequence("maximum degree must be at least 1".into()));
        }
        let mut stages = Vec::with_capacity(max_degree);
        for d in 1..=max_degree {
            let full = || PermutationGroup::symmetric_with_cap(d, cap).map(Arc::new);
            let trivial = || Arc::new(PermutationGroup::trivial(d));
            let stage = match kind {
                BuiltinKind::Tensor => Character::trivial(trivial(), ring),
                BuiltinKind::Symmetric => Character::trivial(full()?, ring),
                BuiltinKind::Exterior => Character::signature(full()?, ring),
                BuiltinKind::Truncated(k) if d <= k => Character::trivial(trivial(), ring),
                BuiltinKind::Truncated(_) => Character::signature(full()?, ring),
            };
            stages.push(stage);
        }
        let seq = CharacterSequence::new(ring, stages)?;
        let report = seq.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidSequence(v.to_string()));
        }
        Ok(seq)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn max_degree(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn stage(&self, degree: usize) -> Result<&Character<S>> {
        self.stages
            .get(degree)
            .ok_or(Error::DegreeOverflow { degree, max: self.max_degree() })
    }

    pub fn stages(&self) -> &[Character<S>] {
        &self.stages[1..]
    }

    pub(crate) fn cached_reps(
        &self,
        key: &[usize],
        build: impl FnOnce() -> Result<CompositionRepSet>,
    ) -> Result<Arc<CompositionRepSet>> {
        if let Some(hit) = self.reps_cache.lock().expect("cache lock").get(key) {
            return Ok(hit.clone());
        }
        let built = Arc::new(build()?);
        self.reps_cache.lock().expect("cache lock").insert(key.to_vec(), built.clone());
        Ok(built)
    }

    /// Checks every condition of ω-invariance plus the involution consequences,
    /// over all group elements.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (d, st) in self.stages.iter().enumerate().skip(1) {
            if st.degree() != d {
                violations.push(Violation::Admissibility { degree: d, found: st.degree() });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        for d in 1..self.max_degree() {
            let (lo, hi) = (&self.stages[d], &self.stages[d + 1]);
            for (sigma, v) in lo.group().elements().iter().zip(lo.values()) {
                let up = sigma.extend(d + 1);
                match hi.value(&up) {
                    None => violations.push(Violation::NotIncreasing { degree: d, element: sigma.to_string() }),
                    Some(w) if w != v => violations.push(Violation::Restriction {
                        degree: d,
                        element: sigma.to_string(),
                        restricted: w.to_string(),
                        expected: v.to_string(),
                    }),
                    Some(_) => {}
                }
                let shifted = sigma.omega();
                match hi.value(&shifted) {
                    None => violations.push(Violation::NotOmegaStable { degree: d, element: sigma.to_string() }),
                    Some(w) if w != v => violations.push(Violation::ShiftedRestriction {
                        degree: d,
                        element: sigma.to_string(),
                        shifted: w.to_string(),
                        expected: v.to_string(),
                    }),
                    Some(_) => {}
                }
            }
        }
        let minus_one = -S::one();
        for (d, st) in self.stages.iter().enumerate().skip(1) {
            for (sigma, v) in st.group().elements().iter().zip(st.values()) {
                if !(v.clone() * v.clone()).is_one() {
                    violations.push(Violation::NotInvolution {
                        degree: d,
                        element: sigma.to_string(),
                        value: v.to_string(),
                    });
                } else if self.ring.is_integral_domain() && !v.is_one() && *v != minus_one {
                    violations.push(Violation::NotPlusMinusOne {
                        degree: d,
                        element: sigma.to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Fails with [`Error::InvalidSequence`] unless the sequence is ω-invariant.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidSequence(v.to_string())),
        }
    }
}
