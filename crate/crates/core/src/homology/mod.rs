//! Finitely presented graded modules: kernels, subquotients, minimal free
//! resolutions, Hilbert series, dimension and depth.

mod hilbert;
mod invariants;
mod module;
mod resolution;

pub use hilbert::{combinatorial_dim, minimize, monomial_numerator, HilbertSeries};
pub use invariants::{
    cut_by_form, depth_by_sections, dim_depth_cm, hilbert_and_dim, module_invariants, DepthMethod, DepthStrategy,
    ModuleInvariants, AUTO_RESOLUTION_VARS,
};
pub use module::{
    apply_map, has_socle, kernel_of_map, socle_degree_search, socle_verdict, subquotient, trim, Embedding, FpModule,
    SOCLE_EXACT_CAP, SOCLE_PIECE_CAP,
};
pub use resolution::{minimal_resolution, BettiTable, Resolution};
