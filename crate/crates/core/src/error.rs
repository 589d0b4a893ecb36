use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live over different rings.
    RingMismatch { left: String, right: String },
    InvalidGenerator { name: String, reason: &'static str },
    DuplicateGenerator(String),
    /// An operation that needs a homogeneous element got a mixed-degree one.
    NotHomogeneous,
    InvalidRingMap(String),
    /// A level, index or other parameter outside its admissible range.
    OutOfRange { what: &'static str, value: i64, bound: String },
    /// The zero monomial is not an element of the presentation ring.
    ZeroMonomial,
    /// A computed intermediate did not have the shape the pipeline expects.
    /// This always indicates a sign or convention bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} vs {right}")
            }
            Error::InvalidGenerator { name, reason } => {
                write!(f, "invalid generator `{name}`: {reason}")
            }
            Error::DuplicateGenerator(name) => write!(f, "duplicate generator name `{name}`"),
            Error::NotHomogeneous => f.write_str("element is not homogeneous"),
            Error::InvalidRingMap(msg) => write!(f, "invalid ring map: {msg}"),
            Error::OutOfRange { what, value, bound } => {
                write!(f, "{what} = {value} out of range ({bound})")
            }
            Error::ZeroMonomial => f.write_str("the empty monomial is not in the presentation ring"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
