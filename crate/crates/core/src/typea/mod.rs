//! Type-A Hessenberg moduli: configurations of eigenvalues up to affine and
//! Möbius maps, their stabilizers, canonical points, the line-bundle
//! characterization on `X`, symmetrization and the pencil invariant.
//!
//! Only rational scalars are supported. Configurations built from roots of
//! unity are replaced by rational analogues such as geometric progressions.

pub mod config;
pub mod group;
pub mod hessenberg;
pub mod matrix;
pub mod random;
pub mod scalar;

pub use config::{affine_equivalent, canonical_point, mobius_equivalent, AffineMap, EigenConfig, Flavor, MobiusMap, Permutation};
pub use group::{aut_report, stab_affine, stab_mobius, AutReport, GroupClass, PermutationGroup};
pub use hessenberg::{characterize_search, closed_form_chi, euler_hessenberg_linebundle, weyl_dim_a};
pub use matrix::{pencil_charpoly, symmetrize};
pub use scalar::{ProjPoint, Q};
