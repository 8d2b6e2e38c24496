//! Desk-scale Murasugi-sum calculus: combinatorial Seifert surfaces,
//! patches and abstract sums, homological mapping classes, open books,
//! cylindrical cobordisms, embedded Seifert matrices, braids and plumbing
//! graphs, all over exact integer arithmetic.

pub mod braid;
pub mod cobordism;
pub mod embedded;
pub mod error;
pub mod linalg;
pub mod mapclass;
pub mod openbook;
pub mod patching;
pub mod plumbgraph;
pub mod poly;
pub mod sample;
pub mod surface;

pub use error::{Error, Result};
pub use linalg::IntMat;
pub use poly::IntPoly;
pub use surface::RibbonSurface;
