//! factorlab decides perfect-matching-Hamiltonicity (PMH), 2-factor
//! Hamiltonicity (2FH), even-2-factorability (E2F), vertex malleability and
//! tight-cut properties of small multigraphs, builds graphs by star
//! products, 2-cut connections and Y-extensions, and machine-checks a
//! registry of theorems about these properties on concrete instances.
//!
//! Everything is exact: the engines enumerate exhaustively with pruning and
//! return verdicts together with certificates that re-validate through an
//! independent checker.
//!
//! ```
//! use factorlab::{is_2fh, is_pmh, make_named, star_product, NamedGraph, StarSpec};
//!
//! // the cube is PMH but not 2FH: some matching extends in exactly one way
//! let cube = make_named(&NamedGraph::Cube)?;
//! assert!(is_pmh(&cube)?.verdict);
//! assert!(!is_2fh(&cube).verdict);
//! let unique = factorlab::find_unique_extension_pm(&cube)?;
//! assert!(unique.is_some());
//!
//! // star products of K3,3 stay 2FH, and their principal cut is tight
//! let k33 = make_named(&NamedGraph::CompleteBipartite(3, 3))?;
//! let star = star_product(&StarSpec::new(&k33, 0, &k33, 0, [0, 1, 2]))?;
//! assert!(is_2fh(&star.graph).verdict);
//! assert!(factorlab::is_tight_cut(&star.graph, &star.principal_cut)?);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod catalog;
pub mod certify;
pub mod construct;
pub mod decide;
pub mod factor;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod scan;
pub mod verify;

pub use catalog::{Catalog, CatalogEntry};
pub use construct::{
    decompose_along_cut, repeated_star, star_product, two_cut_connection, y_extension,
    ConstructError, Orientation, StarSpec, StarStep, TwoCutSpec,
};
pub use decide::{
    extends_through_edge, find_unique_extension_pm, is_2fh, is_e2f, is_malleable, is_pmh,
    is_tight_cut, malleable_vertices, two_factor_conditions, Certificate, PropertyReport,
    TwoFactorConditions,
};
pub use factor::{
    extension_count, extensions_of, perfect_matchings, two_factors, EngineConfig, EngineError,
    Extension, Matching, TwoFactor,
};
pub use graph::{Bipartition, Edge, EdgeCut, Graph, GraphError, HalfEdge};
pub use graph6::{parse_graph6, parse_graph6_stream};
pub use named::{catalog_names, make_named, parse_name, NamedError, NamedGraph};
pub use scan::{scan, ScanFilter, ScanRecord};
pub use verify::{
    haggkvist_condition, registry, verify_paper, verify_theorem, PaperVerification, TheoremCheck,
    VerifyError,
};
