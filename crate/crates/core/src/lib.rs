//! Exact computational Lie theory.
//!
//! `liecalc` works with a fixed finite simple Lie algebra `g` of type A–G and
//! computes, without floating point anywhere:
//!
//! * root data, Weyl orbits and dominant straightening ([`rootsys`]);
//! * formal characters, tensor products and plethysms ([`charring`]);
//! * classification data, blocks and `Ext¹` of finite-dimensional modules
//!   for the loop algebra `g ⊗ ℂ[t, t⁻¹]` ([`loopcat`]);
//! * graded projective multiplicities, Ext groups and Ext-quivers for graded
//!   modules of the current algebra `g ⊗ ℂ[t]` ([`gradedcat`]);
//! * truncated characters of integrable highest weight modules of the
//!   untwisted affine algebra ([`affine`]);
//! * the integral imaginary-root-vector series and divided-power identities
//!   ([`garland`]).
//!
//! ```
//! use liecalc::{CharRing, Limits, RootSystem, Weight};
//!
//! let rs = RootSystem::build("A2".parse().unwrap());
//! let ring = CharRing::new(&rs, Limits::default());
//! let adjoint = Weight::new([1, 1]);
//! assert_eq!(ring.dim_irreducible(&adjoint).unwrap(), 8u32.into());
//! let ch = ring.char_irreducible(&adjoint).unwrap();
//! assert_eq!(ch.get(&Weight::new([0, 0])), 2);
//! ```

pub mod affine;
pub mod charring;
mod error;
pub mod garland;
pub mod gradedcat;
pub mod json;
mod linalg;
pub mod loopcat;
pub mod rootsys;

pub use charring::{CharRing, DominantDecomposition, FormalCharacter};
pub use error::{Error, Result};
pub use linalg::{smith_normal_form, SmithForm};
pub use rootsys::{CartanType, Family, RootSystem, RootVector, Weight};

/// Size guards shared by every computation. All of them are plain
/// configuration; nothing in the library hard-codes a limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest module dimension whose full character is expanded.
    pub max_dim: u64,
    /// Largest Weyl group that is enumerated element by element.
    pub max_weyl_order: u64,
    /// Largest Weyl orbit returned by [`RootSystem::weyl_orbit`] callers.
    pub max_orbit: usize,
    /// Largest exponent accepted by symmetric and exterior powers.
    pub max_power: usize,
    /// Largest degree of the graded enveloping algebra that is expanded.
    pub max_uplus_degree: usize,
    /// Largest node count of any breadth-first search over graded simples.
    pub max_reach: usize,
    /// Largest depth of truncated affine series.
    pub max_depth: usize,
    /// Largest order of the imaginary-root-vector series.
    pub max_garland_order: usize,
    /// Largest `r`, `s` (and `N / 4`) accepted by the divided-power check.
    pub max_zform: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 1_000_000,
            max_weyl_order: 100_000,
            max_orbit: 1_000_000,
            max_power: 64,
            max_uplus_degree: 6,
            max_reach: 100_000,
            max_depth: 12,
            max_garland_order: 12,
            max_zform: 16,
        }
    }
}
