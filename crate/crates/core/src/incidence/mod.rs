//! Incidence Hopf algebras of hereditary poset families.

mod families;
mod hopf;
mod poset;

pub use families::{boolean_lattice, forest_ideals, forest_poset, partition_lattice, Family, MAX_PARTITION_N};
pub use hopf::{
    classify, incidence_coproduct, incidence_coproduct_poset, incidence_counit, iso_check, ClassMonomial, FamilyKind,
    IncidenceHopf, IsoReport, IsoTarget,
};
pub use poset::{all_posets, canonical_form, direct_product, factorize, ideal_lattice, Poset, PosetClass};
