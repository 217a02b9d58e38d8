//! Structural recognition of mixed graphs relative to the thresholds
//! `-√2`, `-√3` and `-(1+√5)/2`.

pub mod cograph;
pub mod induced;
pub mod local;
pub mod knst;
pub mod catalog;
pub mod threshold;

pub use catalog::{Catalog, CatalogEntry, CatalogMatch};
pub use cograph::{cograph_join_split, underlying_family, SporadicShape, UnderlyingFamily};
pub use induced::{find_induced, ForbiddenPattern};
pub use knst::{recognize_knst, KnstError, KnstMembership};
pub use local::{all_quads_in_c4, all_triangles_in_c3, quad_class, triangle_type, QuadClass, QuadType, TriangleType};
pub use threshold::{
    classify_sqrt2, classify_threshold, classify_threshold_with, Certificate, ClassifyError, Decision, Family,
    Verdict, Witness,
};
