//! Covers, compactness, separation and the finite intersection property.
//!
//! Over a finite universe and parameter set, a topology has finitely many
//! opens, so every open cover already is a finite subcover and every space
//! is compact. The interesting questions are therefore quantitative: how
//! small a subcover can be ([`min_subcover`]), whether the algebraic steps
//! behind the classical arguments hold exactly for fuzzy soft sets
//! ([`fip_duality_check`], [`audit_complement_disjointness`]), and whether
//! the point-set statements survive on random finite instances
//! ([`audit_theorem`]).

pub mod audit;
pub mod certificate;
pub mod cover;
pub mod fip;
pub mod generator;
pub mod separation;

pub use audit::{
    audit_theorem, audit_theorem_with_threads, evaluate, generate_instance, revalidate, AuditInstance,
    AuditReport, Counterexample, Evaluation, TheoremId,
};
pub use certificate::{compactness_certificate, covering_subfamilies, CompactnessCertificate, DEFAULT_ENUMERATION_CAP};
pub use cover::{
    is_cover, min_subcover, min_subcover_with_budget, CoverCheck, CoverFamily, Deficiency, SubcoverMode,
    DEFAULT_NODE_BUDGET,
};
pub use fip::{audit_complement_disjointness, fip_duality_check, has_fip, DisjointnessRecord, FipCheck};
pub use generator::GeneratorSettings;
pub use separation::{contains_point, is_hausdorff, member_point, HausdorffCheck, MembershipRule, Separation};
