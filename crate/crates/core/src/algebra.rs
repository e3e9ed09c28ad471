//! Semi-symmetric powers `[χ]^d(K^n)` in their canonical bases, and the
//! graded algebra built from an ω-invariant character sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::sync::{Arc, Mutex};

use crate::character::{Character, CharacterSequence};
use crate::error::{Error, Result};
use crate::index::{classify_unchecked, enum_j_with_cap, CanonicalIndex, MultiIndex, DEFAULT_INDEX_CAP};
use crate::matrix::ExactMatrix;
use crate::monomial::SparseVector;
use crate::ring::{RingDescriptor, Scalar};

/// Marker for elements of `[χ]^d(E)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vector {}

/// Marker for χ-forms, elements of `[χ⁻¹]^d(E*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {}

/// A homogeneous element in the canonical basis `(e_j)_{j∈J(χ,n,d)}`.
pub struct ChiElem<S, K> {
    n: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, S>,
    _kind: PhantomData<K>,
}

pub type ChiVector<S> = ChiElem<S, Vector>;
pub type ChiForm<S> = ChiElem<S, Form>;

impl<S: Clone, K> Clone for ChiElem<S, K> {
    fn clone(&self) -> Self {
        ChiElem { n: self.n, degree: self.degree, terms: self.terms.clone(), _kind: PhantomData }
    }
}

impl<S: PartialEq, K> PartialEq for ChiElem<S, K> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.degree == other.degree && self.terms == other.terms
    }
}

impl<S: Scalar, K> fmt::Debug for ChiElem<S, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] ", self.degree)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (j, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e{j}")?;
        }
        Ok(())
    }
}

impl<S: Scalar, K> ChiElem<S, K> {
    pub fn zero(n: usize, degree: usize) -> Self {
        ChiElem { n, degree, terms: BTreeMap::new(), _kind: PhantomData }
    }

    /// Builds an element from already canonical terms; use
    /// [`SemiSymmetricPower::element`] to validate or project arbitrary ones.
    pub(crate) fn from_canonical(n: usize, degree: usize, terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Self {
        let mut out = Self::zero(n, degree);
        for (j, c) in terms {
            out.add_term(j, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, S> {
        &self.terms
    }

    pub fn coeff(&self, j: &MultiIndex) -> S {
        self.terms.get(j).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, j: MultiIndex, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(j);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ContextMismatch(format!("alphabets of size {} and {}", self.n, other.n)));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (j, c) in &other.terms {
            out.add_term(j.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_canonical(self.n, self.degree, self.terms.iter().map(|(j, v)| (j.clone(), c.clone() * v.clone())))
    }

    /// The same coefficients read on the other side of the duality.
    pub fn reinterpret<L>(&self) -> ChiElem<S, L> {
        ChiElem { n: self.n, degree: self.degree, terms: self.terms.clone(), _kind: PhantomData }
    }
}

/// `[χ]^d(K^n)` for a single group `W ≤ S_d` and character `χ`.
pub struct SemiSymmetricPower<S> {
    chi: Character<S>,
    n: usize,
    basis: Vec<MultiIndex>,
    stabilizer_orders: Vec<usize>,
    // for each basis index j: the distinct τ·j with χ⁻¹(τ)
    orbits: Vec<Vec<(MultiIndex, S)>>,
}

impl<S: Scalar> fmt::Debug for SemiSymmetricPower<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiSymmetricPower")
            .field("n", &self.n)
            .field("degree", &self.degree())
            .field("rank", &self.basis.len())
            .finish()
    }
}

impl<S: Scalar> SemiSymmetricPower<S> {
    pub fn new(chi: Character<S>, n: usize) -> Result<Self> {
        Self::with_cap(chi, n, DEFAULT_INDEX_CAP)
    }

    pub fn with_cap(chi: Character<S>, n: usize, cap: u128) -> Result<Self> {
        let basis = enum_j_with_cap(&chi, n, cap)?;
        let chi_inv = chi.inverse();
        let mut stabilizer_orders = Vec::with_capacity(basis.len());
        let mut orbits = Vec::with_capacity(basis.len());
        for j in &basis {
            let mut seen: BTreeMap<MultiIndex, S> = BTreeMap::new();
            let mut stab = 0;
            for (k, sigma) in chi.group().elements().iter().enumerate() {
                let image = j.act_by(sigma);
                if image == *j {
                    stab += 1;
                }
                seen.entry(image).or_insert_with(|| chi_inv.value_at(k).clone());
            }
            stabilizer_orders.push(stab);
            orbits.push(seen.into_iter().collect());
        }
        Ok(SemiSymmetricPower { chi, n, basis, stabilizer_orders, orbits })
    }

    pub fn character(&self) -> &Character<S> {
        &self.chi
    }

    pub fn ring(&self) -> &RingDescriptor {
        self.chi.ring()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.chi.degree()
    }

    /// J(χ,n,d), sorted.
    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, j: &MultiIndex) -> Option<usize> {
        self.basis.binary_search(j).ok()
    }

    pub fn contains(&self, j: &MultiIndex) -> bool {
        self.position(j).is_some()
    }

    fn require(&self, j: &MultiIndex) -> Result<usize> {
        self.position(j)
            .ok_or_else(|| Error::InvalidIndex(format!("{j} is not a canonical basis index in degree {}", self.degree())))
    }

    /// `|W_j|` for a basis index `j`.
    pub fn stabilizer_order(&self, j: &MultiIndex) -> Result<usize> {
        Ok(self.stabilizer_orders[self.require(j)?])
    }

    /// The distinct members `τ·j` of the orbit of `j` with `χ⁻¹(τ)`, so that
    /// `e_{τj} = χ⁻¹(τ)·e_j` in the quotient.
    pub fn orbit(&self, j: &MultiIndex) -> Result<&[(MultiIndex, S)]> {
        Ok(&self.orbits[self.require(j)?])
    }

    fn check_index(&self, i: &MultiIndex) -> Result<()> {
        if i.len() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: i.len() });
        }
        i.check_alphabet(self.n)
    }

    /// `φ_d(e_i)`: zero, or `ζ(i)·e_{ℓm(i)}`.
    pub fn project_index(&self, i: &MultiIndex) -> Result<Option<(MultiIndex, S)>> {
        self.check_index(i)?;
        Ok(match classify_unchecked(&self.chi, i) {
            CanonicalIndex::Zero => None,
            CanonicalIndex::Canonical { rep, coeff } => Some((rep, coeff)),
        })
    }

    pub fn project_tensor<K>(&self, coeff: &S, i: &MultiIndex) -> Result<ChiElem<S, K>> {
        let mut out = ChiElem::zero(self.n, self.degree());
        if let Some((rep, z)) = self.project_index(i)? {
            out.add_term(rep, coeff.clone() * z);
        }
        Ok(out)
    }

    /// `φ_d` applied to an arbitrary tensor.
    pub fn project_sparse<K>(&self, z: &SparseVector<S>) -> Result<ChiElem<S, K>> {
        let mut out = ChiElem::zero(self.n, self.degree());
        for (i, c) in z.iter() {
            if let Some((rep, zeta)) = self.project_index(i)? {
                out.add_term(rep, c.clone() * zeta);
            }
        }
        Ok(out)
    }

    /// Projects arbitrary `(index, coefficient)` terms into the quotient.
    pub fn element<K>(&self, terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Result<ChiElem<S, K>> {
        let mut out = ChiElem::zero(self.n, self.degree());
        for (i, c) in terms {
            if let Some((rep, zeta)) = self.project_index(&i)? {
                out.add_term(rep, c * zeta);
            }
        }
        Ok(out)
    }

    /// `e_j` for a canonical basis index `j`.
    pub fn basis_element<K>(&self, j: &MultiIndex) -> Result<ChiElem<S, K>> {
        self.require(j)?;
        Ok(ChiElem::from_canonical(self.n, self.degree(), [(j.clone(), S::one())]))
    }

    pub fn check_element<K>(&self, x: &ChiElem<S, K>) -> Result<()> {
        if x.n != self.n {
            return Err(Error::ContextMismatch(format!("element over {} letters, space over {}", x.n, self.n)));
        }
        if x.degree != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: x.degree });
        }
        for j in x.terms.keys() {
            self.require(j)?;
        }
        Ok(())
    }

    /// `x₁χ…χx_d` for coordinate vectors `x_t ∈ K^n`.
    ///
    /// The coefficient of `e_j` is `Σ_{τ∈W^{(j)}} χ⁻¹(τ)·∏_t x_t[(τj)_t]`.
    pub fn decomposable<K>(&self, vectors: &[Vec<S>]) -> Result<ChiElem<S, K>> {
        if vectors.len() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: vectors.len() });
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != self.n) {
            return Err(Error::ShapeMismatch(format!("vector of length {} in K^{}", v.len(), self.n)));
        }
        let mut out = ChiElem::zero(self.n, self.degree());
        for (j, orbit) in self.basis.iter().zip(&self.orbits) {
            let mut c = S::zero();
            for (image, w) in orbit {
                let prod = image
                    .entries()
                    .iter()
                    .zip(vectors)
                    .fold(w.clone(), |acc, (&letter, x)| acc * x[letter - 1].clone());
                c = c + prod;
            }
            out.add_term(j.clone(), c);
        }
        Ok(out)
    }

    /// Matrix of `[χ]^d(u)` from this space (alphabet `n`) to `target`
    /// (alphabet `m`), for `u` an `m × n` matrix; columns follow `self.basis()`.
    pub fn power_map(&self, u: &ExactMatrix<S>, target: &SemiSymmetricPower<S>) -> Result<ExactMatrix<S>> {
        if u.cols() != self.n || u.rows() != target.n {
            return Err(Error::ShapeMismatch(format!(
                "a {}×{} matrix does not map K^{} to K^{}",
                u.rows(),
                u.cols(),
                self.n,
                target.n
            )));
        }
        if target.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: target.degree() });
        }
        let mut out = ExactMatrix::zeros(target.rank(), self.rank());
        for (col, j) in self.basis.iter().enumerate() {
            let vectors: Vec<Vec<S>> = j.entries().iter().map(|&l| u.column(l - 1)).collect();
            let image: ChiVector<S> = target.decomposable(&vectors)?;
            for (k, c) in image.terms() {
                let row = target.position(k).expect("canonical");
                out.set(row, col, c.clone());
            }
        }
        Ok(out)
    }

    /// Applies `[χ]^d(u)` to an element.
    pub fn apply_power_map<K>(
        &self,
        u: &ExactMatrix<S>,
        target: &SemiSymmetricPower<S>,
        x: &ChiElem<S, K>,
    ) -> Result<ChiElem<S, K>> {
        self.check_element(x)?;
        let mut out = ChiElem::zero(target.n, target.degree());
        for (j, c) in x.terms() {
            let vectors: Vec<Vec<S>> = j.entries().iter().map(|&l| u.column(l - 1)).collect();
            let image: ChiElem<S, K> = target.decomposable(&vectors)?;
            for (k, v) in image.terms() {
                out.add_term(k.clone(), c.clone() * v.clone());
            }
        }
        Ok(out)
    }
}

/// A finite sum of homogeneous elements of different degrees.
pub struct Graded<S, K> {
    n: usize,
    parts: BTreeMap<usize, ChiElem<S, K>>,
}

pub type GradedVector<S> = Graded<S, Vector>;
pub type GradedForm<S> = Graded<S, Form>;

impl<S: Clone, K> Clone for Graded<S, K> {
    fn clone(&self) -> Self {
        Graded { n: self.n, parts: self.parts.clone() }
    }
}

impl<S: PartialEq, K> PartialEq for Graded<S, K> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.parts == other.parts
    }
}

impl<S: Scalar, K> fmt::Debug for Graded<S, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.parts.values()).finish()
    }
}

impl<S: Scalar, K> Graded<S, K> {
    pub fn zero(n: usize) -> Self {
        Graded { n, parts: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn homogeneous(x: ChiElem<S, K>) -> Self {
        let mut g = Graded::zero(x.n);
        if !x.is_zero() {
            g.parts.insert(x.degree, x);
        }
        g
    }

    pub fn parts(&self) -> impl Iterator<Item = &ChiElem<S, K>> {
        self.parts.values()
    }

    pub fn grade_project(&self, d: usize) -> ChiElem<S, K> {
        self.parts.get(&d).cloned().unwrap_or_else(|| ChiElem::zero(self.n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ContextMismatch(format!("alphabets of size {} and {}", self.n, other.n)));
        }
        let mut out = self.clone();
        for x in other.parts.values() {
            out.add_homogeneous(x)?;
        }
        Ok(out)
    }

    pub fn add_homogeneous(&mut self, x: &ChiElem<S, K>) -> Result<()> {
        if x.n != self.n {
            return Err(Error::ContextMismatch(format!("alphabets of size {} and {}", self.n, x.n)));
        }
        let sum = match self.parts.get(&x.degree) {
            Some(y) => y.add(x)?,
            None => x.clone(),
        };
        if sum.is_zero() {
            self.parts.remove(&x.degree);
        } else {
            self.parts.insert(x.degree, sum);
        }
        Ok(())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Graded::zero(self.n);
        for x in self.parts.values() {
            let y = x.scale(c);
            if !y.is_zero() {
                out.parts.insert(y.degree, y);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }
}

/// `[χ](K^n)` for an ω-invariant sequence, truncated at its maximum degree.
pub struct SemiSymmetricAlgebra<S> {
    seq: Arc<CharacterSequence<S>>,
    n: usize,
    powers: Mutex<Vec<Option<Arc<SemiSymmetricPower<S>>>>>,
    index_cap: u128,
}

impl<S: Scalar> fmt::Debug for SemiSymmetricAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiSymmetricAlgebra")
            .field("n", &self.n)
            .field("max_degree", &self.seq.max_degree())
            .finish()
    }
}

impl<S: Scalar> SemiSymmetricAlgebra<S> {
    /// Requires an ω-invariant sequence over an integral domain in which every
    /// `|W_d|` is invertible.
    pub fn new(seq: Arc<CharacterSequence<S>>, n: usize) -> Result<Self> {
        Self::with_cap(seq, n, DEFAULT_INDEX_CAP)
    }

    pub fn with_cap(seq: Arc<CharacterSequence<S>>, n: usize, index_cap: u128) -> Result<Self> {
        seq.require_valid()?;
        for st in seq.stages() {
            st.check_standing_hypotheses()?;
        }
        if n == 0 {
            return Err(Error::InvalidIndex("alphabet size must be at least 1".into()));
        }
        let powers = Mutex::new(vec![None; seq.max_degree() + 1]);
        Ok(SemiSymmetricAlgebra { seq, n, powers, index_cap })
    }

    pub fn sequence(&self) -> &Arc<CharacterSequence<S>> {
        &self.seq
    }

    pub fn ring(&self) -> &RingDescriptor {
        self.seq.ring()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.seq.max_degree()
    }

    pub fn power(&self, d: usize) -> Result<Arc<SemiSymmetricPower<S>>> {
        let stage = self.seq.stage(d)?;
        if let Some(p) = &self.powers.lock().expect("power cache")[d] {
            return Ok(p.clone());
        }
        let built = Arc::new(SemiSymmetricPower::with_cap(stage.clone(), self.n, self.index_cap)?);
        self.powers.lock().expect("power cache")[d] = Some(built.clone());
        Ok(built)
    }

    fn check<K>(&self, x: &ChiElem<S, K>) -> Result<()> {
        self.power(x.degree)?.check_element(x)
    }

    pub fn unit<K>(&self) -> Graded<S, K> {
        Graded::homogeneous(ChiElem::from_canonical(self.n, 0, [(MultiIndex::empty(), S::one())]))
    }

    pub fn scalar<K>(&self, c: S) -> ChiElem<S, K> {
        ChiElem::from_canonical(self.n, 0, [(MultiIndex::empty(), c)])
    }

    /// `e_jχe_k = φ(e_{(j,k)})`, extended bilinearly. Forms multiply by the
    /// same rule since a valid sequence satisfies `χ⁻¹ = χ`.
    pub fn multiply<K>(&self, a: &ChiElem<S, K>, b: &ChiElem<S, K>) -> Result<ChiElem<S, K>> {
        self.check(a)?;
        self.check(b)?;
        let target = self.power(a.degree + b.degree)?;
        let mut out = ChiElem::zero(self.n, target.degree());
        for (j, cj) in a.terms() {
            for (k, ck) in b.terms() {
                if let Some((rep, zeta)) = target.project_index(&j.concat(k))? {
                    out.add_term(rep, cj.clone() * ck.clone() * zeta);
                }
            }
        }
        Ok(out)
    }

    pub fn multiply_graded<K>(&self, a: &Graded<S, K>, b: &Graded<S, K>) -> Result<Graded<S, K>> {
        let mut out = Graded::zero(self.n);
        for x in a.parts() {
            for y in b.parts() {
                out.add_homogeneous(&self.multiply(x, y)?)?;
            }
        }
        Ok(out)
    }

    /// `φ` on a tensor of any degree up to the maximum.
    pub fn project_tensor<K>(&self, coeff: &S, i: &MultiIndex) -> Result<ChiElem<S, K>> {
        self.power(i.len())?.project_tensor(coeff, i)
    }

    pub fn basis_element<K>(&self, j: &MultiIndex) -> Result<ChiElem<S, K>> {
        self.power(j.len())?.basis_element(j)
    }

    pub fn decomposable<K>(&self, vectors: &[Vec<S>]) -> Result<ChiElem<S, K>> {
        self.power(vectors.len())?.decomposable(vectors)
    }
}
