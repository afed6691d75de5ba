//! Non-symmetric operads (Assoc and the duplicial operad on planar binary
//! trees), their pre-Lie structure, and the groups of operadic series.

mod assoc;
mod dup;
mod operad;
mod series;

pub use assoc::{Assoc, AssocOp};
pub use dup::{
    check_duplicial, dup_total_by_partials, duplicial_holds, over, under, Dup, DuplicialAxiom, PlanarBinaryTree,
};
pub use operad::{
    check_operad_axioms, check_prelie, operadic_bracket, operadic_prelie, operadic_prelie_lin, prelie_associator,
    total_by_partials, NsOperad, PreLieSide,
};
pub use series::{
    alpha_residual, alpha_series, assoc_to_series, order_project, section_embed, series_to_assoc, AnyOperadSeries,
    OperadKind, OperadSeries, TreeSeries,
};
