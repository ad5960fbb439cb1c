//! Surface models, fibre analysis, trigonal-locus counting, invariants and
//! the slope-equality verdict.

mod fibre;
mod invariants;
mod locus;
mod model;
mod slope;

pub use invariants::{
    ambient_basis, extract_invariants, fit_window, invariants_from_basis, FitOptions, InvariantsReport, BASE_GENUS,
    DEFAULT_RANGE, GENUS,
};
pub use model::{
    build_example1, build_example2, build_example3, build_trigonal_at, build_with_convention, random_form,
    Convention, Family, ModelJson, SurfaceModel, MODEL_SCHEMA_VERSION, PRNG_NAME,
};
pub use fibre::{
    analyze_fibre, fibre_is_smooth, multiplication_rank, BasePoint, Classification, FibreOptions, FibreReport,
    Smoothness, SMOOTHNESS_PRIME, SMOOTHNESS_PRIME_ALT,
};
pub use locus::{chart_matrix, chart_smith_form, rational_roots, sample_points, trigonal_locus, TrigonalLocus, GENERIC_RANK};
pub use slope::{
    verify_dual_prime, verify_slope, ConventionTrial, CrossCheck, SlopeReport, Status, VerifyOptions, DUAL_PRIMES,
    REPORT_SCHEMA_VERSION,
};
