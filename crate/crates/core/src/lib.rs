//! Bipartite entanglement of qudit pairs via concurrence vectors.
//!
//! The concurrence of a pair of qubits generalizes to arbitrary
//! dimension by replacing the spin flip sigma_y with the antisymmetric
//! ladder combinations F_alpha = E_alpha - E_{-alpha} of the A_{N-1}
//! Lie algebra, one per positive root. The resulting vector of overlaps
//! <psi| F_alpha (x) F_beta |psi*> has vanishing norm exactly on
//! separable pure states, extends to mixed states through the Takagi
//! spectrum of the tau matrices, and its norm ties to the von Neumann
//! and linear entropies in closed form.
//!
//! Modules:
//! - [`root_system`]: simple/positive roots and fundamental weights.
//! - [`fundamental_rep`]: H_i, E_{+-alpha}, flip operators, commutator checks.
//! - [`state_space`]: pure states, density matrices, the named-state catalog.
//! - [`concurrence`]: pure and mixed concurrence vectors.
//! - [`entropy`]: entropy reports, secular checks, the entropy-vs-|C| envelope.
//! - [`geometry`]: delta condition, sign criterion, edge scans, concurrence
//!   surfaces and enclosed volumes.
//! - [`io`]: JSON state files.

pub mod concurrence;
pub mod entropy;
pub mod error;
pub mod fundamental_rep;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod root_system;
pub mod state_space;

pub use concurrence::{
    concurrence_vector_mixed, concurrence_vector_pure, mixed_component, tau_matrix,
    ConcurrenceVector,
};
pub use entropy::{
    check_secular, entropy_bounds, entropy_from_norm_qubit, entropy_from_norm_qutrit,
    entropy_report, EntropyReport,
};
pub use error::{Error, Result};
pub use fundamental_rep::{
    build_ladder_set, flip_operators, verify_commutators, CommutatorReport, FlipOperator,
    LadderSet,
};
pub use geometry::{
    delta_condition, edge_scan, enclosed_volume, sign_criterion, surface, EdgePoint, EdgeScan,
    EdgeScanMode, SubspaceBasis, SurfaceSample, Verdict,
};
pub use root_system::{fundamental_weights, positive_roots, simple_roots, Half, Root, Weight};
pub use state_space::{
    catalog, catalog_state, named_basis, reduced_density, CatalogEntry, DensityMatrix, PureState,
    Side, BASIS_NAMES,
};
