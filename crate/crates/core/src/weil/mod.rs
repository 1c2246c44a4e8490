//! Commutative and noncommutative Weil algebras and the maps between them.

pub mod commutative;
pub mod convolution;
pub mod factorization;
pub mod gda;
pub mod generators;
pub mod ncweil;

pub use commutative::{casimir_curvature, transgression, Transgression, WeilAlgebra, W};
pub use convolution::{coproduct, counit, rigidity_checks, Convolution, TruncatedMap};
pub use factorization::duflo_factorization_checks;
pub use gda::{characteristic_map, ncweil_square, ConnectionSide, Gda, KoszulWeil, NcWeilSquare, TensorGda};
pub use generators::KoszulPbw;
pub use ncweil::{dirac_square_checks, quantization_chain_checks, Nc, NcMono, NcWeil};
