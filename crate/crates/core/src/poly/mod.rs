//! Exact polynomial and quadratic-field arithmetic, the forcing and
//! anti-forcing polynomials of `H_n`, and the integer sequences derived from
//! them.

mod chain;
mod intpoly;
mod quadrat;
mod sequences;

pub use chain::{
    antiforcing_poly_closed, antiforcing_poly_recurrence, forcing_poly_closed,
    forcing_poly_recurrence, Binomials, PolyRecurrence,
};
pub use intpoly::IntPoly;
pub use quadrat::QuadRat;
pub use sequences::{
    af_sum, asymptotic_ratio, closed_form_value, fourth_order_residuals, idf, phi, RatioKind,
    Route, SequenceName, SequenceTable,
};
