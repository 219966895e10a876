//! Exact arithmetic in equivariant Grothendieck rings of varieties.

mod class;
mod laurent;
mod specialize;

pub use class::{GeneratorSymbol, MotivicClass, PRODUCT_SEPARATOR, UNIT_SYMBOL};
pub use laurent::LaurentPoly;
pub use specialize::{MissingPolicy, SpecializationMap};
