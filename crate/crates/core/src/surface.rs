//! Planar and toric surface-code constructors.
//!
//! Both families are built on the refined (2×-resolution) edge lattice so
//! the window machinery applies: qubits sit on edge midpoints, vertex and
//! plaquette checks act on the four (or three, at a planar boundary) edges
//! around them, and every check support fits a 3×3 window.
//!
//! The planar code uses the (2d−1)×(2d−1) grid with two rough and two
//! smooth boundaries: n = d² + (d−1)², k = 1, distance d. The toric code
//! lives on the 2L×2L periodic grid: n = 2L², k = 2, distance L.

use crate::harness::{DistanceValue, Family, TradeoffPoint};
use crate::lattice::Lattice;
use crate::stabilizer::{Pauli, StabilizerCode};
use std::fmt;

/// Interaction range of the surface-code checks on the refined lattice.
pub const SURFACE_RANGE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceError {
    /// Planar codes need d >= 2, toric codes L >= 2.
    SizeTooSmall { size: usize, minimum: usize },
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::SizeTooSmall { size, minimum } => {
                write!(f, "surface code size {size} below minimum {minimum}")
            }
        }
    }
}

impl std::error::Error for SurfaceError {}

/// Which 2D surface family a layout describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Planar,
    Toric,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Planar => write!(f, "planar"),
            SurfaceKind::Toric => write!(f, "toric"),
        }
    }
}

/// A surface-code descriptor: family plus linear size (distance d for
/// planar, side L for toric).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceLayout {
    pub kind: SurfaceKind,
    pub size: usize,
}

impl SurfaceLayout {
    pub fn planar(d: usize) -> Self {
        Self { kind: SurfaceKind::Planar, size: d }
    }

    pub fn toric(l: usize) -> Self {
        Self { kind: SurfaceKind::Toric, size: l }
    }

    pub fn num_qubits(&self) -> usize {
        match self.kind {
            SurfaceKind::Planar => self.size * self.size + (self.size - 1) * (self.size - 1),
            SurfaceKind::Toric => 2 * self.size * self.size,
        }
    }

    pub fn num_logical(&self) -> usize {
        match self.kind {
            SurfaceKind::Planar => 1,
            SurfaceKind::Toric => 2,
        }
    }

    pub fn nominal_distance(&self) -> usize {
        self.size
    }

    pub fn build(&self) -> Result<StabilizerCode, SurfaceError> {
        match self.kind {
            SurfaceKind::Planar => planar_surface_code(self.size),
            SurfaceKind::Toric => toric_code(self.size),
        }
    }
}

fn pauli_on(n: usize, qubits: &[usize], z_type: bool) -> Pauli {
    use crate::gf2::BitVec;
    let mut xz = BitVec::zeros(2 * n);
    for &q in qubits {
        xz.set(if z_type { n + q } else { q }, true);
    }
    Pauli::from_xz(n, xz)
}

/// The planar surface code with two rough and two smooth boundaries:
/// qubits on the even-checkerboard sites of a (2d−1)×(2d−1) open grid,
/// X checks at odd-row/even-column sites, Z checks at even-row/odd-column
/// sites, each acting on its in-grid neighbors.
pub fn planar_surface_code(d: usize) -> Result<StabilizerCode, SurfaceError> {
    if d < 2 {
        return Err(SurfaceError::SizeTooSmall { size: d, minimum: 2 });
    }
    let span = 2 * d - 1;
    let lat = Lattice::open(span, span);
    let mut qubit_at = vec![None; span * span];
    let mut sites = Vec::new();
    for r in 0..span {
        for c in 0..span {
            if (r + c) % 2 == 0 {
                qubit_at[r * span + c] = Some(sites.len());
                sites.push((r, c));
            }
        }
    }
    let n = sites.len();
    debug_assert_eq!(n, d * d + (d - 1) * (d - 1));
    let mut generators = Vec::new();
    for r in 0..span {
        for c in 0..span {
            if (r + c) % 2 == 0 {
                continue;
            }
            let mut support = Vec::new();
            for (dr, dc) in [(0i64, 1i64), (0, -1), (1, 0), (-1, 0)] {
                let rr = r as i64 + dr;
                let cc = c as i64 + dc;
                if (0..span as i64).contains(&rr) && (0..span as i64).contains(&cc) {
                    support.push(qubit_at[rr as usize * span + cc as usize].expect("qubit site"));
                }
            }
            // Odd rows host the X-type (vertex) checks, even rows the
            // Z-type (plaquette) checks.
            generators.push(pauli_on(n, &support, r % 2 == 0));
        }
    }
    let code = StabilizerCode::new(lat, sites, generators, SURFACE_RANGE)
        .expect("planar construction satisfies its own invariants");
    debug_assert_eq!(code.k(), 1);
    Ok(code)
}

/// The standard toric code on a 2L×2L periodic refined grid: horizontal
/// edges at (2i, 2j+1), vertical edges at (2i+1, 2j), star checks around
/// every vertex and plaquette checks around every face.
pub fn toric_code(l: usize) -> Result<StabilizerCode, SurfaceError> {
    if l < 2 {
        return Err(SurfaceError::SizeTooSmall { size: l, minimum: 2 });
    }
    let n = 2 * l * l;
    let eh = |i: usize, j: usize| 2 * ((i % l) * l + (j % l));
    let ev = |i: usize, j: usize| 2 * ((i % l) * l + (j % l)) + 1;
    let lat = Lattice::periodic(2 * l, 2 * l);
    let mut sites = vec![(0usize, 0usize); n];
    for i in 0..l {
        for j in 0..l {
            sites[eh(i, j)] = (2 * i, 2 * j + 1);
            sites[ev(i, j)] = (2 * i + 1, 2 * j);
        }
    }
    let mut generators = Vec::with_capacity(2 * l * l);
    for i in 0..l {
        for j in 0..l {
            // Star at vertex (i, j).
            generators.push(pauli_on(
                n,
                &[eh(i, j), eh(i, j + l - 1), ev(i, j), ev(i + l - 1, j)],
                false,
            ));
            // Plaquette at face (i, j).
            generators.push(pauli_on(
                n,
                &[eh(i, j), eh(i + 1, j), ev(i, j), ev(i, j + 1)],
                true,
            ));
        }
    }
    let code = StabilizerCode::new(lat, sites, generators, SURFACE_RANGE)
        .expect("toric construction satisfies its own invariants");
    debug_assert_eq!(code.k(), 2);
    Ok(code)
}

/// Tradeoff point for `copies` planar codes of distance d placed side by
/// side: n scales as copies·(d²+(d−1)²), k as copies, d unchanged.
pub fn k_copies_point(d: usize, copies: usize) -> Result<TradeoffPoint, SurfaceError> {
    if d < 2 {
        return Err(SurfaceError::SizeTooSmall { size: d, minimum: 2 });
    }
    assert!(copies >= 1, "need at least one copy");
    let per_copy = d * d + (d - 1) * (d - 1);
    Ok(TradeoffPoint::new(
        Family::KCopies,
        copies * per_copy,
        copies,
        DistanceValue::Exact(d as u64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_parameters() {
        for (d, n) in [(2usize, 5usize), (3, 13), (4, 25)] {
            let code = planar_surface_code(d).unwrap();
            assert_eq!(code.num_qubits(), n);
            assert_eq!(code.k(), 1);
        }
        assert!(planar_surface_code(1).is_err());
    }

    #[test]
    fn planar_small_distances() {
        assert_eq!(planar_surface_code(2).unwrap().min_distance_bruteforce().unwrap(), 2);
        assert_eq!(planar_surface_code(3).unwrap().min_distance_bruteforce().unwrap(), 3);
    }

    #[test]
    fn toric_parameters() {
        for (l, n) in [(2usize, 8usize), (3, 18), (4, 32)] {
            let code = toric_code(l).unwrap();
            assert_eq!(code.num_qubits(), n);
            assert_eq!(code.k(), 2);
            // Exactly one X and one Z dependency among the 2L² checks.
            assert_eq!(code.generators().num_rows() - code.generator_rank(), 2);
        }
    }

    #[test]
    fn toric_small_distances() {
        assert_eq!(toric_code(2).unwrap().min_distance_bruteforce().unwrap(), 2);
        assert_eq!(toric_code(3).unwrap().min_distance_bruteforce().unwrap(), 3);
    }

    #[test]
    fn rank_only_parameters_up_to_12() {
        for d in 4..=12 {
            assert_eq!(planar_surface_code(d).unwrap().k(), 1);
        }
        for l in 4..=12 {
            assert_eq!(toric_code(l).unwrap().k(), 2);
        }
    }

    #[test]
    fn layout_descriptors_match_builds() {
        for layout in [SurfaceLayout::planar(3), SurfaceLayout::toric(3)] {
            let code = layout.build().unwrap();
            assert_eq!(code.num_qubits(), layout.num_qubits());
            assert_eq!(code.k(), layout.num_logical());
        }
    }

    #[test]
    fn k_copies_arithmetic() {
        let p = k_copies_point(3, 1).unwrap();
        assert_eq!((p.n, p.k), (13, 1));
        assert!((p.q_ratio() - 9.0 / 13.0).abs() < 1e-12);
        let p = k_copies_point(2, 4).unwrap();
        assert_eq!((p.n, p.k), (20, 4));
        assert!((p.q_ratio() - 16.0 / 20.0).abs() < 1e-12);
    }

    #[test]
    fn k_copies_ratio_window() {
        for d in 2..=12 {
            for copies in [1usize, 3, 7] {
                let q = k_copies_point(d, copies).unwrap().q_ratio();
                assert!((0.5..=1.0).contains(&q), "d={d} copies={copies} q={q}");
            }
        }
    }
}
