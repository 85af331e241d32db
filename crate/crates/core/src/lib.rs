//! Binary Golay complementary pairs of length `2^a 10^b 26^c` built with
//! Turyn's method, odd-length Z-complementary pairs derived from them by
//! inserting one symbol into each row, and exact tools for checking the
//! aperiodic correlation structure of any binary pair.
//!
//! ```
//! use golayzcp::{build_gcp, classify, construct_obzcp, is_gcp};
//! use golayzcp::{GcpRecipe, InsertionPosition, InsertionSpec, ZcpType};
//!
//! let recipe: GcpRecipe = "K2*K10".parse().unwrap();
//! let gcp = build_gcp(&recipe).unwrap();
//! assert!(is_gcp(&gcp));
//!
//! let spec = InsertionSpec::for_target(InsertionPosition::Front, ZcpType::Type1);
//! let c = construct_obzcp(&recipe, &spec).unwrap();
//! assert_eq!(c.report.type1_zcz, 11);
//! assert!(c.report.optimal.type1);
//! assert_eq!(c.prediction_holds(), Some(true));
//! # let _ = classify(&gcp);
//! ```

pub mod correlation;
pub mod error;
pub mod golay;
pub mod search;
pub mod sequence;
pub mod zcp;

/// Longest sequence any operation will produce. Correlations of sequences
/// this long fit comfortably in `i64`.
pub const MAX_LEN: usize = 1 << 20;

pub use correlation::{aacf, aacs_profile, cross_correlation, CorrelationProfile};
pub use error::{Error, Result};
pub use golay::{
    block_structure, build_gcp, check_quadrature, column_sign_profile, expected_leading_same,
    is_gcp, kernel, kernel_segments, turyn, turyn_element, verify_block_structure,
    BlockStructureCheck, ColumnSign, ColumnSignProfile, GcpRecipe, KernelId, KernelSegment,
    RecipeClass,
};
pub use search::{
    exhaustive_max_zcz, insertion_search, out_of_zone_floor, verify_out_of_zone_floor,
    InsertionHit, InsertionSearchResult, OutOfZoneFloor, SearchConfig, SearchResult,
};
pub use sequence::{BinarySequence, SequencePair, Sign};
pub use zcp::{
    classify, construct_obzcp, end_insertion_sum, front_insertion_sum, inserted_aacf,
    measure_obzcp, middle_pair_identities, predicted_profile, supports_prediction, Construction,
    ConstructionFamily, InsertionPosition, InsertionSpec, PerType, PredictedProfile,
    ProfileSegment, ZcpReport, ZcpType,
};
