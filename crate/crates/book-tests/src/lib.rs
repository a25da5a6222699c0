//! The guide's code listings, compiled and run as doc-tests. mdbook cannot
//! link against workspace crates, so each chapter is pulled in here.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}
#[doc = include_str!("../../../book/src/loops.md")]
pub mod loops {}
#[doc = include_str!("../../../book/src/graded.md")]
pub mod graded {}
#[doc = include_str!("../../../book/src/affine.md")]
pub mod affine {}
#[doc = include_str!("../../../book/src/garland.md")]
pub mod garland {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
