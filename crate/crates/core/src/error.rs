use core::fmt;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by an exact zero.
    DivisionByZero,
    /// A denominator was zero where a nonzero one is required.
    InvalidDenominator,
    /// The coefficient sequence violates the symmetry of its claimed space;
    /// the message names the violated constraint.
    InvalidForm(&'static str),
    /// The operation is defined for a different coefficient space or parity.
    WrongSpace(&'static str),
    /// The declared parity does not match the degree of the input.
    ParityMismatch,
    /// Leading and trailing coefficients must both equal one.
    NotMonic,
    /// The leading coefficient must be nonzero.
    LeadingCoefficientZero,
    /// The degree is too small for the requested operation.
    DegreeTooSmall,
    /// Exact division left a nonzero remainder.
    NotDivisible,
    /// The discriminant vanishes, so the roots are not distinct.
    ZeroDiscriminant,
    /// Root iteration did not reach the update threshold.
    NoConvergence { sweeps: u32 },
    /// Two sample angles coincide modulo a full turn.
    RepeatedAngles,
    /// Sample angles must sum to zero.
    AngleSumNonzero,
    /// A floating-point value was NaN or infinite where a finite one is
    /// required.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidDenominator => write!(f, "denominator must be nonzero"),
            Error::InvalidForm(msg) => write!(f, "invalid form: {msg}"),
            Error::WrongSpace(msg) => write!(f, "wrong space: {msg}"),
            Error::ParityMismatch => write!(f, "declared parity does not match the degree"),
            Error::NotMonic => write!(f, "form must be monic (zeta[0] = zeta[n+1] = 1)"),
            Error::LeadingCoefficientZero => write!(f, "leading coefficient must be nonzero"),
            Error::DegreeTooSmall => write!(f, "degree too small for this operation"),
            Error::NotDivisible => write!(f, "exact division left a nonzero remainder"),
            Error::ZeroDiscriminant => write!(f, "discriminant is zero, roots are not distinct"),
            Error::NoConvergence { sweeps } => {
                write!(f, "root iteration did not converge after {sweeps} sweeps")
            }
            Error::RepeatedAngles => write!(f, "angles must be pairwise distinct modulo 2*pi"),
            Error::AngleSumNonzero => write!(f, "angles must sum to zero"),
            Error::NonFinite => write!(f, "value is NaN or infinite"),
        }
    }
}

impl core::error::Error for Error {}
