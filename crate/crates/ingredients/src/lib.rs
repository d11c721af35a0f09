//! Reusable building blocks: transversal designs, triple GDDs of small
//! type, pairwise balanced designs, Sarvate-Beam triple systems and cubes,
//! and a digest-checked catalog of pinned small designs.

pub mod appendix;
pub mod catalog;
pub mod cube;
pub mod error;
pub mod gf;
pub mod lambda;
pub mod latin;
pub mod mate;
pub mod pbd;
pub mod sbts;
pub mod smallgdd;
pub mod td;

pub use appendix::{isbgdd_2_5, sbgdd_2_4, sbgdd_2_6, sbgdd_2_8};
pub use catalog::{Catalog, Provenance};
pub use cube::{k6xk3_cover, sb_cube};
pub use error::{IngredientError, Result};
pub use lambda::{igdd3_5, inflate_by_gdd, lambda_gdd3, weight_inflate};
pub use latin::{idempotent_latin_square, latin_square, mols_prime_power};
pub use pbd::pbd_345;
pub use sbts::{certify_sbts4_0_infeasible, sbts};
pub use smallgdd::small_gdd;
pub use td::td;
