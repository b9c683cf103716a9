//! Monomial ideals, graph colorings, and the codimension bridge between them.
//!
//! The central objects are monomial ideals given by their minimal generators
//! and finite simple graphs. A graph G on n vertices gets a squarefree
//! "chromatic" ideal M_G whose codimension equals the chromatic number of G,
//! whose realizations are the minimal vertex covers by color classes, and
//! whose multiplicity counts the optimal colorings up to permutation. The
//! crate computes each side independently so the identities can be checked
//! rather than assumed.

pub mod bridge;
pub mod efl;
pub mod error;
pub mod graph;
pub mod json;
pub mod monomial;
pub mod ideal;
pub mod multiplicity;
pub mod poly;
pub mod verify;

pub use bridge::{
    chromatic_number_via_codim, chromatic_poly_at_chi, configurations_count,
    multiplicity_with_cross_check, pd_upper_bound, BridgeReport, CliqueCover,
    MultiplicityByMethod, CROSS_CHECK_MAX_OTHERS,
};
pub use efl::{
    pair_sum_coloring, pair_sum_coloring_extended, EflInstance, PairColoring, PairColoringKind,
};
pub use error::{Error, Result};
pub use graph::{Coloring, Graph};
pub use ideal::{CIDecomposition, MonomialIdeal, Realization};
pub use json::{
    cover_from_json, graph_from_json, ideal_from_json, instance_from_json, ColoringJson,
    DecompositionJson, GraphJson, IdealJson, InstanceJson,
};
pub use monomial::{Monomial, VarId, VarRegistry};
pub use multiplicity::{ExpansionTerm, Multiplicity};
pub use poly::{chromatic_polynomial, Poly};
pub use verify::{run_verify, Counterexample, VerifyOptions, VerifySummary};

/// Variable count above which exhaustive realization checks are refused.
pub const DEFAULT_VAR_CAP: usize = 20;
/// Largest allowed number of generators outside the complete intersection in
/// the signed subset expansion (2^cap terms).
pub const DEFAULT_SUBSET_CAP: usize = 24;
/// Vertex count above which chromatic polynomials are refused.
pub const DEFAULT_POLY_CAP: usize = 16;

/// Resource limits for the exponential-cost operations. Every field must be
/// positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_vars: usize,
    pub max_subsets: usize,
    pub max_poly_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vars: DEFAULT_VAR_CAP,
            max_subsets: DEFAULT_SUBSET_CAP,
            max_poly_vertices: DEFAULT_POLY_CAP,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        if self.max_vars == 0 || self.max_subsets == 0 || self.max_poly_vertices == 0 {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        Ok(())
    }
}
