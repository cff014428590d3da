//! Nim: closed forms, the three-player quotient, and finite verifiers.

mod closed;
mod position;
mod quotient;
mod verify;

pub use closed::{
    closed3_profile, nim_outcome_closed3, one_heap_outcome, ones_outcome, two_heap_outcome,
};
pub use position::{NimPosition, NimProfile};
pub use quotient::{phi, pi, quotient_build, Quotient, QuotientElement, PROFILE_CAPS};
pub use verify::{
    check_n_periodicity, check_n_stability, search_nim_periodicity, search_quotient_absorbing,
    PeriodicityReport, StabilityReport,
};
