//! Exact computer algebra around the Faà di Bruno formula: series
//! composition, the Faà di Bruno and related Hopf algebras, rooted trees,
//! pre-Lie and brace structures, incidence Hopf algebras and operadic groups.

pub mod basis;
pub mod checks;
pub mod combinat;
pub mod error;
pub mod fdb_hopf;
pub mod hopf;
pub mod incidence;
pub mod lie_brace;
pub mod linalg;
pub mod lincomb;
pub mod nc_hopf;
pub mod operads;
pub mod random;
pub mod scalar;
pub mod series;
pub mod trees_hopf;

pub use basis::{CommMonomial, Graded, Monomial, MulBasis, Word};
pub use error::{Error, Result};
pub use lincomb::{functional_eval, lincomb_combine, LinComb, Tensor2};
pub use scalar::{scalar_arith, ArithOp, Scalar};
pub use series::{SeriesKind, TruncSeries};
