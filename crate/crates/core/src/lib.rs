//! Constructions and exact checks for 2D storage-tradeoff code families.
//!
//! The crate builds two families of geometrically local codes at desk scale —
//! classical codes generated by the rule-90 cellular automaton and planar /
//! toric surface codes — computes their (n, k, d) parameters exactly, verifies
//! entropic erasure-correctability conditions on real instances, and emits the
//! tradeoff datasets (`k d²/n`, `k √d/n`) behind the 2D storage bounds.
//!
//! Modules:
//! - [`gf2`]: word-packed GF(2) vectors and matrices (rank, nullspace, solve).
//! - [`lattice`]: 2D lattices, regions, boundary operators and the block
//!   partitions with their window-overlap property.
//! - [`cacode`]: the rule-90 cellular-automaton code family, single-seed
//!   weights, exhaustive distance and scaling fits.
//! - [`stabilizer`]: binary-symplectic stabilizer codes, region
//!   correctability, exact entropies and the entropic verifications.
//! - [`surface`]: planar and toric surface-code constructors.
//! - [`harness`]: parameter scans, bound-ratio reports and CSV/JSON output.

pub mod cacode;
pub mod gf2;
pub mod harness;
pub mod lattice;
pub mod stabilizer;
pub mod surface;
