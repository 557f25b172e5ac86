//! Symbolic powers, their comparison with ordinary powers, and the
//! classification and Betti-bound checks built on them.

mod classify;
mod powers;
mod romer;

pub use classify::{
    classification_hypotheses, classify_all_powers, predicted_equality, ClassificationHypotheses,
    ClassificationReport, Verdict,
};
pub use powers::{
    applicable_routes, powers_equal, symbolic_power, symbolic_power_components, symbolic_power_saturation,
    PowerComparison, Route, RouteHint,
};
pub use romer::{romer_check, RomerReport, RomerRow};
