//! Exact polynomial arithmetic, term orders, Gröbner bases and Hilbert
//! numerators.

pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod order;
pub mod poly;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{groebner_basis, lift_combination, minimal_generators, poly_arith, tracked_groebner, ArithOp, GroebnerBasis, TrackMode, TrackedBasis};
pub use hilbert::{hilbert_numerator, UniPoly};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{ModuleOrder, MonomialOrder};
pub use poly::{Poly, PolyRing, Variable};
