//! Normalized-Laplacian spectra of n-polygon graphs.
//!
//! The n-polygon graph `τ_n(G)` replaces every edge of `G` with an
//! (n+1)-cycle. Its normalized-Laplacian spectrum, and that of every iterate
//! `τ_n^g(G)`, follows from the spectrum of `G` alone: a few fixed polynomial
//! families contribute eigenvalues with structural multiplicities, and every
//! other base eigenvalue `λ` lifts to the roots of a degree-`⌈n/2⌉`
//! polynomial. The [`oracle`] module builds the graphs explicitly and
//! diagonalizes them densely, for cross-checking.
//!
//! ```
//! use polyspec::{base_spectrum, iterate_spectrum, Graph, MERGE_TOL};
//!
//! let triangle = Graph::from_edges([(0, 1), (1, 2), (0, 2)]).unwrap();
//! let (base, ctx) = base_spectrum(&triangle).unwrap();
//! let (spec, ctx) = iterate_spectrum(&base, &ctx, 2, 1).unwrap();
//! let spec = spec.merged(MERGE_TOL);
//! let values: Vec<f64> = spec.entries().iter().map(|e| e.value).collect();
//! assert_eq!(ctx.vertices, 6u32.into());
//! assert!((values[1] - 0.75).abs() < 1e-12 && (values[2] - 1.5).abs() < 1e-12);
//! ```

pub mod a_series;
pub mod cli;
pub mod error;
pub mod exec;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod roots;
pub mod spectrum;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{iterate_transform, parse_edge_list, polygon_transform, predict_counts, Graph, GrowthCounts};
pub use invariants::{invariants_from_spectrum, DegreeProduct, ExactInvariants, InvariantReport, Method};
pub use roots::{roots_of_family, solve_lambda_equation, FamilyKind, LambdaSolver, RootFamily, RootSet};
pub use spectrum::{
    base_spectrum, iterate_spectrum, iterate_spectrum_with, lift_eigenvector, transform_spectrum,
    transform_spectrum_with, Source, Spectrum, SpectrumContext, SpectrumEntry, MERGE_TOL,
};
