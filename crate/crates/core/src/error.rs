use alloc::string::String;
use core::fmt;

/// Broad category of a failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: bad permutations, unknown group specs, mismatched shapes.
    Input,
    /// A configured size cap was exceeded.
    Cap,
    /// A mathematical precondition does not hold.
    Math,
    /// A user-supplied Tamagawa table has no entry for a splitting factor.
    ModelGap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotSquare { rows: usize, cols: usize },
    ShapeMismatch { expected: usize, found: usize },
    ZeroValue,
    NotPrime(u64),
    FactorBoundExceeded { bound: u64 },
    InvalidPermutation(String),
    OrderCapExceeded { cap: usize },
    SubgroupEnumerationCap { order: usize, cap: usize },
    UnsupportedGroup(String),
    ForeignSubgroup,
    NotClosed,
    GroupMismatch,
    SeedNotSymmetric,
    SeedNotPositiveDefinite,
    PairingNotInvariant,
    DegeneratePairing(&'static str),
    NotARepresentation,
    NotSelfDual { label: String, class: usize },
    NotNormal,
    QuotientNotCyclic,
    MissingTamagawaEntry { e: u64, f: u64 },
    CoefficientOverflow,
    Singular,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            OrderCapExceeded { .. } | SubgroupEnumerationCap { .. } | FactorBoundExceeded { .. } => {
                ErrorKind::Cap
            }
            MissingTamagawaEntry { .. } => ErrorKind::ModelGap,
            NotSquare { .. }
            | ShapeMismatch { .. }
            | InvalidPermutation(_)
            | UnsupportedGroup(_)
            | ForeignSubgroup
            | GroupMismatch
            | CoefficientOverflow => ErrorKind::Input,
            ZeroValue | NotPrime(_) | NotClosed | SeedNotSymmetric | SeedNotPositiveDefinite
            | PairingNotInvariant | DegeneratePairing(_) | NotARepresentation
            | NotSelfDual { .. } | NotNormal | QuotientNotCyclic | Singular => ErrorKind::Math,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, expected square"),
            ShapeMismatch { expected, found } => {
                write!(f, "shape mismatch: expected {expected}, found {found}")
            }
            ZeroValue => f.write_str("zero has no square class or valuation"),
            NotPrime(n) => write!(f, "{n} is not prime"),
            FactorBoundExceeded { bound } => write!(
                f,
                "cofactor has prime factors above the trial-division bound {bound}; use ord_p instead"
            ),
            InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            OrderCapExceeded { cap } => write!(f, "group order exceeds the cap of {cap} elements"),
            SubgroupEnumerationCap { order, cap } => write!(
                f,
                "group of order {order} exceeds the subgroup-enumeration cap {cap}; list subgroups explicitly"
            ),
            UnsupportedGroup(s) => write!(f, "unsupported group spec '{s}'"),
            ForeignSubgroup => f.write_str("subgroup belongs to a different group"),
            NotClosed => f.write_str("element set is not closed under composition"),
            GroupMismatch => f.write_str("objects are defined over different groups"),
            SeedNotSymmetric => f.write_str("seed form is not symmetric"),
            SeedNotPositiveDefinite => f.write_str("seed form is not positive definite"),
            PairingNotInvariant => f.write_str("pairing is not G-invariant"),
            DegeneratePairing(ctx) => write!(f, "pairing degenerate on {ctx}"),
            NotARepresentation => f.write_str("matrices do not define a homomorphism"),
            NotSelfDual { label, class } => {
                write!(f, "representation '{label}' is not self-dual (class {class})")
            }
            NotNormal => f.write_str("inertia subgroup is not normal in the decomposition subgroup"),
            QuotientNotCyclic => f.write_str("decomposition/inertia quotient is not cyclic"),
            MissingTamagawaEntry { e, f: rf } => {
                write!(f, "Tamagawa table has no entry for (e,f) = ({e},{rf})")
            }
            CoefficientOverflow => f.write_str("relation coefficient does not fit in 64 bits"),
            Singular => f.write_str("matrix is singular"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
