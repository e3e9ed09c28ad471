//! Exact computation in semi-symmetric powers `[χ]^d(E)` and the graded
//! algebras and coalgebras they form, over ℚ, ℤ, ℤ/m and ℤ[ε].
//!
//! Everything is generic over [`Scalar`]; the aliases below fix the ring.

pub mod algebra;
pub mod character;
pub mod coalgebra;
pub mod diag;
pub mod duality;
pub mod error;
pub mod index;
pub mod inner;
pub mod json;
pub mod matrix;
pub mod monomial;
pub mod perm;
pub mod ring;
pub mod schur;

pub use algebra::{ChiElem, ChiForm, ChiVector, Form, Graded, GradedForm, GradedVector, SemiSymmetricAlgebra, SemiSymmetricPower, Vector};
pub use character::{BuiltinKind, Character, CharacterSequence, ValidationReport, Violation};
pub use coalgebra::TensorVector;
pub use error::{Error, Result};
pub use index::{MultiIndex, DEFAULT_INDEX_CAP};
pub use matrix::ExactMatrix;
pub use perm::{Permutation, PermutationGroup, DEFAULT_GROUP_CAP};
pub use ring::{Eisenstein, Integer, Rational, RingDescriptor, RingKind, Scalar, Zmod};

pub type RationalSequence = CharacterSequence<Rational>;
pub type RationalAlgebra = SemiSymmetricAlgebra<Rational>;
pub type RationalPower = SemiSymmetricPower<Rational>;
pub type RationalChiVector = ChiVector<Rational>;
pub type RationalChiForm = ChiForm<Rational>;
pub type IntegerAlgebra = SemiSymmetricAlgebra<Integer>;
pub type ModularAlgebra = SemiSymmetricAlgebra<Zmod>;
pub type EisensteinAlgebra = SemiSymmetricAlgebra<Eisenstein>;

/// Size caps for group enumeration and index spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_group: usize,
    pub max_indices: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_group: DEFAULT_GROUP_CAP, max_indices: DEFAULT_INDEX_CAP }
    }
}

impl Limits {
    pub const GROUP_ENV: &'static str = "SEMISYM_MAX_GROUP";

    /// Defaults, with the group cap taken from `SEMISYM_MAX_GROUP` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(Self::GROUP_ENV) {
            limits.max_group = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{} must be a positive integer, got {v:?}", Self::GROUP_ENV)))?;
        }
        Ok(limits)
    }
}
