//! The Hopf algebra of rooted forests, grafting, the Grossman–Larson dual,
//! and the maps relating it to L_1 and H_FdB.

mod grafting;
mod hopf;
mod phi;
mod tree;

pub use grafting::{
    check_graft_prelie, gl_product, graft, graft_all_positions, graft_count_m, graft_count_n, graft_lin,
    normalized_delta, pbw_decompose, pbw_expand, GlContext, GlFunctional,
};
pub use hopf::{check_cocycle, cocycle_sides, coproduct_rt, RtHopf};
pub use phi::{check_phi_morphism, phi, phi_lin, psi_embed, PsiContext};
pub(crate) use tree::Shape;
pub use tree::{bplus, forests_of_degree, symmetry_factor, trees_of_degree, Forest, RootedTree};
