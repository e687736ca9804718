//! Fuzzy soft topological spaces over finite universes.
//!
//! Grades are exact rationals in `[0, 1]`. A [`FuzzySoftSet`] assigns a grade
//! to every (parameter, point) cell of a [`Context`]; topologies, mappings,
//! covers and compactness are built on top of that.
//!
//! ```
//! use fuzzysoft::{generate_topology, Context, FuzzySoftSet, DEFAULT_CAP};
//!
//! let ctx = Context::new(["x1", "x2"], ["e1"])?;
//! let f = FuzzySoftSet::from_text_rows(&ctx, &[&["1/2", "1"]])?;
//! let t = generate_topology(&ctx, &[f.clone()], DEFAULT_CAP)?;
//! assert_eq!(t.len(), 3);
//! assert!(t.is_open(&f)?);
//! # Ok::<(), fuzzysoft::Error>(())
//! ```

pub mod cli;
pub mod compactness;
pub mod error;
pub mod fss;
pub mod grade;
pub mod io;
pub mod mapping;
pub mod topology;

pub use compactness::{
    audit_theorem, compactness_certificate, has_fip, is_cover, is_hausdorff, min_subcover, AuditReport,
    CoverFamily, GeneratorSettings, MembershipRule, SubcoverMode, TheoremId,
};
pub use error::Error;
pub use fss::{intersection_all, union_all, Context, FuzzySoftSet};
pub use grade::Grade;
pub use io::{parse_space_file, serialize, SpaceFile, SpaceFileError};
pub use mapping::{MapCheck, SoftMapping};
pub use topology::{generate_topology, validate_topology, Topology, ValidationReport, DEFAULT_CAP};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/grades.md")]
    mod grades {}
    #[doc = include_str!("../../../book/src/fuzzy-soft-sets.md")]
    mod fuzzy_soft_sets {}
    #[doc = include_str!("../../../book/src/topologies.md")]
    mod topologies {}
    #[doc = include_str!("../../../book/src/mappings.md")]
    mod mappings {}
    #[doc = include_str!("../../../book/src/compactness.md")]
    mod compactness {}
    #[doc = include_str!("../../../book/src/audits.md")]
    mod audits {}
    #[doc = include_str!("../../../book/src/space-files.md")]
    mod space_files {}
}
