//! Exact computations with finitely generated graded modules over
//! `F_p[t1, ..., tr]`: Gröbner bases, minimal free resolutions, Ext, depth,
//! Krull dimension, Cohen–Macaulay tests, syzygy order, and partial
//! exactness of augmented cochain complexes.

pub mod error;
pub mod cli;
pub mod complexes;
pub mod corpus;
pub mod field;
pub mod format;
pub mod free;
pub mod groebner;
pub mod hilbert;
pub mod homalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod vector;

pub use complexes::{tensor_complexes, Augmentation, CochainComplex, ExactnessProfile, Violation};
pub use error::{Error, Result};
pub use format::{NamedComplex, PresentationFile};
pub use free::{free_hilbert_series, FreeElement, FreeModuleSpec};
pub use groebner::{groebner_basis, kernel, normal_form, SubmoduleGB};
pub use hilbert::{HilbertSeries, LaurentPoly};
pub use homalg::{
    double_dual, summarize, HomologicalSummary,
    cm_dual, depth, ext_module, ext_modules, hom_module, is_cm_of_projdim, is_reflexive,
    is_regular_sequence, is_torsion_free, krull_dimension, lambda_induce, linear_regular_test,
    syzygy_order, tensor_external, Depth, LambdaAlgebraSpec, SyzygyOrder,
};
pub use module::{subquotient, ModulePresentation};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use resolution::{
    graded_betti, hilbert_series, minimal_free_resolution, projective_dimension, BettiTable,
    Measured, Resolution,
};
pub use ring::GradedRing;
pub use vector::Vector;
