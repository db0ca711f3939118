//! Young tableau combinatorics and exact truncated Schur multiple zeta
//! identities.
//!
//! The crate provides partitions and skew shapes, semistandard tableaux over
//! arbitrary ordered alphabets, Knuth equivalence, jeu de taquin with cell
//! tracking, three independent Littlewood-Richardson routes, and verifiers
//! for the product and skew expansion identities of Schur multiple zeta
//! functions evaluated over tableaux with bounded entries.

pub mod error;
pub mod exact;
pub mod jdt;
pub mod knuth;
pub mod lr;
pub mod poly;
mod serde_util;
pub mod shapes;
pub mod tableaux;
pub mod zeta;

pub use error::{Error, Result, WingCondition};
pub use exact::{Exponent, RadicalSum, Scalar};
pub use jdt::{rectify, rectify_with, CornerPolicy, RectResult};
pub use knuth::{p_tableau, phi_t, phi_w, Word};
pub use lr::{lr_coeff_rect, lr_coeff_star, lr_expand, LRTable, SkewExpansion};
pub use shapes::{arm_body, star_shape, winged_shape, ArmBodySplit, Cell, Diagram, Partition, SkewShape};
pub use tableaux::{enumerate_ssyt, enumerate_ssyt_with_content, is_ssyt, Labeled, Tableau};
pub use zeta::{Arithmetic, TruncationContext, VerificationReport};
