//! Error type shared by the fallible operations of the engine.

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreError {
    /// An operation required a chiral input and the argument was not chiral.
    NotChiral,
    /// An operation required an antichiral input.
    NotAntichiral,
    /// The argument does not lie in the required sector.
    NotInSector(&'static str),
    /// The vector superfield is not in Wess-Zumino gauge.
    NotWessZuminoGauge,
    /// The Grassmann parameter level must be activated for this operation.
    ParamLevelInactive,
    /// Auxiliary-field elimination hit a shape it does not support.
    Elimination(String),
    /// An index was outside its allowed range (dotted/undotted mismatch and
    /// out-of-range spacetime indices are reported through this).
    BadIndex(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NotChiral => write!(f, "expression is not chiral"),
            CoreError::NotAntichiral => write!(f, "expression is not antichiral"),
            CoreError::NotInSector(s) => write!(f, "expression is not in the {s} sector"),
            CoreError::NotWessZuminoGauge => {
                write!(f, "vector superfield is not in Wess-Zumino gauge")
            }
            CoreError::ParamLevelInactive => {
                write!(f, "the Grassmann parameter level is not activated")
            }
            CoreError::Elimination(msg) => write!(f, "auxiliary elimination: {msg}"),
            CoreError::BadIndex(msg) => write!(f, "bad index: {msg}"),
        }
    }
}
