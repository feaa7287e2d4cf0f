use alloc::string::String;
use core::fmt;

/// Errors raised by constructions and exact computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (group, field or family specifications).
    Parse(String),
    /// Parameters outside the domain of a constructor, e.g. an exclusion
    /// index out of range.
    InvalidParameter(String),
    /// A mathematically valid request that the construction cannot honour,
    /// e.g. a kernel of rank zero or a set that is not Sidon.
    Construction(String),
    /// Dimensions of operands do not fit together.
    Shape(String),
    /// Rows of a would-be basis are linearly dependent.
    SingularGram,
    /// No closed-form expression is known for the requested quantity.
    NoClosedForm(String),
    /// Parameters outside the hypotheses of a closed-form theorem.
    OutsideTheorem(String),
    /// Power sums of degree >= p cannot be recovered from elementary
    /// symmetric functions in characteristic p.
    PowerSumsDegenerate { k: usize, p: u64 },
    /// A flattening exceeds the configured column budget.
    BudgetExceeded { needed: usize, budget: usize },
    /// No nonzero vector up to the search cap.
    ExceedsCap(u64),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Construction(msg) => write!(f, "construction error: {msg}"),
            Error::Shape(msg) => write!(f, "shape mismatch: {msg}"),
            Error::SingularGram => f.write_str("singular Gram"),
            Error::NoClosedForm(what) => write!(f, "no closed form for {what}"),
            Error::OutsideTheorem(msg) => write!(f, "outside theorem: {msg}"),
            Error::PowerSumsDegenerate { k, p } => {
                write!(f, "power sums degenerate (k = {k} >= characteristic {p})")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "budget exceeded: {needed} columns > {budget}")
            }
            Error::ExceedsCap(cap) => write!(f, "minimum exceeds cap {cap}"),
        }
    }
}

impl core::error::Error for Error {}
