//! Stanley depth and depth of monomial ideals with linear quotients.
//!
//! The crate covers monomial-ideal arithmetic ([`ideal`]), admissible orders
//! and the depth formula they give ([`linquo`]), Stanley decompositions with
//! an exact interval-partition search for Stanley depth ([`stanley`]), an
//! independent depth oracle through multigraded Betti numbers ([`betti`]),
//! and executable checks of the surrounding theorems and conjectures
//! ([`theorems`]).
//!
//! ```
//! use lqsdepth::{parse_ideal, Limits, TargetKind};
//!
//! let ideal = parse_ideal("n=4; x1^2, x1*x2^2, x1*x2*x3^2").unwrap();
//! let limits = Limits::default();
//! let order = lqsdepth::find_admissible_order(&ideal, &limits).unwrap().unwrap();
//! assert_eq!(lqsdepth::depth_via_linear_quotients(&order), 1);
//! assert_eq!(lqsdepth::depth_oracle(&ideal, &limits).unwrap(), 1);
//! assert_eq!(lqsdepth::sdepth_exact(&ideal, TargetKind::Quotient, &limits).unwrap(), 1);
//! ```

pub mod betti;
pub mod error;
pub mod exec;
pub mod ideal;
pub mod limits;
pub mod linquo;
pub mod monomial;
pub mod stanley;
pub mod text;
pub mod theorems;

pub use betti::{betti_numbers, depth_oracle, BettiTable};
pub use error::{Error, Result};
pub use exec::Execution;
pub use ideal::{IdealOutcome, MonomialIdeal};
pub use limits::Limits;
pub use linquo::{
    add_variable, colon_variable_set, depth_via_linear_quotients, find_admissible_order,
    linear_quotient_decomposition, AdmissibleOrder,
};
pub use monomial::{Monomial, VarSet};
pub use stanley::{
    sdepth_exact, sdepth_of_decomposition, verify_decomposition, StanleyDecomposition,
    StanleyPiece, Target, TargetKind,
};
pub use text::{parse_decomposition, parse_ideal, parse_monomial, render_decomposition};
