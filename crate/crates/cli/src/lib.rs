//! File format, reports and verification runs behind the `leibniz` binary.

pub mod catalog;
pub mod format;
pub mod report;
pub mod verify;

use leibniz::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_ENGINE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_NON_SPLIT: u8 = 5;
pub const EXIT_UNDECIDABLE: u8 = 6;

/// Process exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ScalarSyntax(_)
        | Error::BadLabels(_)
        | Error::BadParams(_)
        | Error::CharacteristicClash(_)
        | Error::NonReducible { .. }
        | Error::NotPrime(_) => EXIT_PARSE,
        Error::WrongCharacteristic { .. } | Error::NeedsPrimeField { .. } => EXIT_ENGINE,
        Error::BudgetExceeded { .. } | Error::TimeBudgetExceeded { .. } => EXIT_BUDGET,
        Error::NonSplit { .. } => EXIT_NON_SPLIT,
        Error::Undecidable(_) => EXIT_UNDECIDABLE,
        _ => EXIT_VIOLATION,
    }
}
