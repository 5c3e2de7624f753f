//! Exact-arithmetic invariants of cyclic quotient surface singularities and
//! Fano lattice polygons.
//!
//! A two-dimensional cone decomposes crepantly into elementary
//! T-singularities plus a leftover cyclic quotient singularity, its residue.
//! Summing over the spanning fan of a Fano polygon gives the polygon's
//! *singularity content*: the number of elementary T-pieces together with the
//! cyclic basket of residues. The crate computes this content, the
//! anticanonical degree and Hilbert series of the associated toric surface
//! (each checked against an independent Ehrhart/dual-area oracle), and
//! explores mutation graphs of Fano polygons, for which singularity content
//! is an invariant.
//!
//! Everything is exact: coordinates are arbitrary-precision integers and all
//! derived quantities are rationals. There is no floating point anywhere in
//! the library.

pub mod cone;
pub mod dedekind;
pub mod error;
pub mod format;
pub mod hilbert;
pub mod hj;
pub mod lattice;
pub mod mutation;
pub mod normal_form;
pub mod orbit;
pub mod polygon;

pub use cone::{
    cone_to_type, decompose, type_to_cone, Cone2, ConeProfile, ConeSingularityContent,
    QuotientSingularityType, Residue,
};
pub use dedekind::{dedekind_sums, periodic_correction, DedekindTable, PeriodicCorrection};
pub use error::{Error, Result};
pub use hilbert::{ehrhart_hilbert_oracle, hilbert_series, HilbertSeries};
pub use hj::{a_correction, hj_data, hj_expand, HjExpansion};
pub use lattice::{
    gcd, is_primitive, lattice_height, lattice_length, DualVector, LatticePoint, Rational,
    UnimodularMap,
};
pub use mutation::{candidate_factors, candidate_mutations, mutate, same_content, same_content_with, Factor};
pub use normal_form::{normal_form, NormalForm};
pub use orbit::{explore_orbit, MutationGraph};
pub use polygon::{
    wps_triangle, BasketComparison, FanoPolygon, PolygonSingularityContent, RationalPolygon,
    WpsWeights,
};
