use thiserror::Error;

/// Errors surfaced by field construction, solvers, spectra and closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field too large: q = {q} exceeds 2^22")]
    FieldTooLarge { q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {encoding} out of range for field of order {q}")]
    OutOfRange { encoding: u64, q: u64 },
    #[error("elements belong to different field contexts")]
    ContextMismatch,
    #[error("{d} does not divide the extension degree {n}")]
    NotADivisor { d: usize, n: usize },
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("operation requires characteristic 2")]
    OddCharacteristic,

    #[error("trinomial leading coefficient A must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("quadratic linear coefficient must be nonzero")]
    ZeroLinearCoefficient,
    #[error("cubic constant term must be nonzero")]
    ZeroConstant,
    #[error("companion construction is degenerate for A = 1")]
    DegenerateA,

    #[error("DDT direction a must be nonzero")]
    ZeroDirection,
    #[error("operation only applies to monomial functions")]
    NotAMonomial,
    #[error("map is not a permutation")]
    NotAPermutation,

    #[error("binomial spectrum is degenerate for q = 3")]
    DegenerateField,
    #[error("theorem requires odd extension degree")]
    EvenDegree,
    #[error("q = {q} is not congruent to 3 or 7 mod 8")]
    BadCongruence { q: u64 },
    #[error("theorem stated for a different characteristic")]
    WrongCharacteristic,
    #[error("cubic form indices must satisfy 0 < i < j < n")]
    MalformedCubic,
    #[error("DO polynomial indices must satisfy 0 <= i < j < n")]
    MalformedDoPoly,
    #[error("gcd(n, s+1) = 1 is required")]
    GcdViolation,
    #[error("theorem requires n - s = 3")]
    WrongCodimension,
    #[error("theorem predicate violated at cell (a={a}, b={b}): predicted {predicted}, observed {observed}")]
    PredicateViolation {
        a: u64,
        b: u64,
        predicted: u64,
        observed: u64,
    },

    #[error("lookup table must have exactly q entries, got {got}")]
    BadLutLength { got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("computation exceeds the default budget ({detail}); pass --force to override")]
    BudgetExceeded { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
