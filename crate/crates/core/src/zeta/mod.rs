//! Motivic integrals, Poincaré and zeta series, volumes and nearby cycles as
//! functions of resolution combinatorics.

mod data;
mod formulas;
mod generalized;

pub use data::{Gauge, ResolutionData, StratumClass, StratumDatum, ValidationReport};
pub use formulas::{
    integral_at_level, motivic_volume, motivic_volume_closed_form, motivic_volume_via_limit,
    nearby_cycles, poincare_series, smooth_integral, zeta_at_level, zeta_series,
};
pub use generalized::{
    delta_cones, delta_union, generalized_at_level, generalized_poincare, mv_at_least,
    mv_at_least_by_union, mv_at_least_with, EllForm, Gamma,
};
