//! Rational series supported on half-open lattice cones in the open orthant.

#[allow(clippy::module_inception)]
mod cone;
mod fm;
mod scan;
mod series;

pub(crate) use cone::Named;
pub use cone::{chi_union, feasible, rank, Cone, Constraint, LinearForm, Relation};
pub use series::{ConeSeries, ConeTerm};
