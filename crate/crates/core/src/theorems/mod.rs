//! Exhaustive and sampled verification of the spectral factor theorems,
//! the supporting lemmas and the unique `k`-factor exploration.

mod enumerate;
mod explore;
mod lemmas;
mod report;
mod sampling;
mod verify;

pub use enumerate::{
    enumerate_graphs, isomorphism_classes, EnumerationSource, SourceMode, CLASSES_MAX_ORDER,
    INTERNAL_MAX_ORDER,
};
pub use explore::{even_circulants, explore_problem_5_1, has_unique_k_factor};
pub use lemmas::verify_lemma_suite;
pub use report::{format_real, Check, ReportVerdict, RunMode, VerificationReport, MAX_LISTED};
pub use sampling::{Sampler, Strategy};
pub use verify::{
    verify_cor_1_1, verify_thm_1_1, verify_thm_1_2, verify_thm_1_3, verify_thm_5_1, RunConfig,
    Variant,
};
