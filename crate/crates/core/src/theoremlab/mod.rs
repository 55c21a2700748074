//! Executable forms of the two arguments: the reduction and certified lower
//! bound `σ ≥ b₁/48` for positive links, and the twist-family experiment.

pub mod bigons;
pub mod census;
pub mod certificate;
pub mod mis;
pub mod twist;

pub use bigons::{classify_bigons, reduce, Bigon, BigonKind, Reduction, ReductionPass};
pub use census::{curve_census, CurveCensus, TypeCount};
pub use certificate::{certify_bound, BoundCertificate, BoundReport, Inequality, Relation, Verdict};
pub use mis::{independent_set, IndependentSet};
pub use twist::{
    choose_omega0, ribbon_matrix, smooth_at, twist_family_experiment, twist_insert, RibbonMatrix, TwistFamilyReport,
};
