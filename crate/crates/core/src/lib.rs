//! LCD MDS codes from generalized Reed-Solomon codes over GF(q), q odd.
//!
//! Field elements are canonical indices: c_0 + c_1·p + ... + c_{e-1}·p^(e-1)
//! for the polynomial-basis coordinates of the element, so 0 and 1 are the
//! field's zero and one.
//!
//! ```
//! use lcdmds::{construct_auto, verify_report, Field, Overrides};
//!
//! let f = Field::from_order(7).unwrap();
//! let report = construct_auto(&f, 6, 3, &Overrides::NONE).unwrap();
//! let checked = verify_report(&report, 1_000_000).unwrap();
//! assert_eq!(checked.verified.unwrap().hull_dimension, 0);
//! ```

pub mod construct;
pub mod error;
pub mod field;
pub mod grs;
pub mod io;
pub mod linear_code;
pub mod polynomial;
pub mod sweep;

pub use construct::{
    applicable_constructions, check_hypotheses, construct, construct_auto, construct_divisor,
    construct_extended, construct_large_nk, construct_prime_power, construct_window, verify_report,
    ChosenMultiplier, Construction, ConstructionParams, ConstructionReport, ExtendedCase,
    Overrides, ReportRecord, Verification,
};
pub use error::{Error, Result};
pub use field::{ArithOp, Elem, Field, FieldElement, FieldRecord};
pub use grs::{dual_multipliers, DualMultipliers, GrsRecord, GrsSpec};
pub use io::CodeFile;
pub use linear_code::{binomial, CodeVerdict, LinearCode, Matrix, MdsRoute, MdsVerdict, Rref};
pub use polynomial::Polynomial;
pub use sweep::{grid, render_table, sweep, RowStatus, SweepOptions, SweepResult, SweepRow};
