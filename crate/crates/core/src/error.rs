//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus of degree {degree} is reducible over GF({p})")]
    ReducibleModulus { p: u64, degree: usize },

    #[error("extension degree {0} exceeds the supported cap of 12")]
    DegreeCap(usize),

    #[error("no irreducible polynomial found in search (degree {0})")]
    IrreducibleSearch(usize),

    #[error("Artin-Schreier equation is already solvable in the base field")]
    SolvableInBaseField,

    #[error("no generator of the extension found within the search budget")]
    GeneratorSearch,

    #[error("field extension budget exhausted after {0} steps")]
    ExtensionBudget(usize),

    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("operation requires field coefficients, found {0}")]
    NotAField(String),

    #[error("operation requires a prime field, found {0}")]
    NotPrimeField(String),

    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },

    #[error("negative exponent not permitted here")]
    NegativeExponent,

    #[error("{0} is not a power of the characteristic {1}")]
    NotCharPower(u64, u64),

    #[error("cutoff {0} too small: trailing numerator coefficients do not vanish")]
    CutoffTooSmall(usize),

    #[error("strand piece in degree {degree} has {size} monomials, exceeding the cap {cap}")]
    PieceCap { degree: i64, size: usize, cap: usize },

    #[error("stabilization not detected within t_max = {t_max} (j = {j}, s = {s})")]
    StabilizationNotDetected { j: usize, s: i64, t_max: usize },

    #[error("transition from stage {from} to stage {to} is not invertible")]
    TransitionNotInvertible { from: usize, to: usize },

    #[error("a-invariant scan exhausted: no nonzero strand found in degrees [{lo}, {hi}]")]
    ScanExhausted { lo: i64, hi: i64 },

    #[error("projection is not equivariant for the Frobenius structures")]
    NotEquivariant,

    #[error("Frobenius structure must be injective (zero nilpotent part) here")]
    InjectivityRequired,

    #[error("nonface is not squarefree: {0}")]
    NonSquarefree(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
