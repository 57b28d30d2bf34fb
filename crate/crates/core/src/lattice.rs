//! 2D lattice geometry: sites, regions, boundary operators, and the block
//! partitions used by the entropy-counting arguments.
//!
//! Adjacency is the window model: two sites interact iff some axis-aligned
//! w×w window contains both, which is Chebyshev distance ≤ w−1 (computed
//! per axis, wrapping on periodic axes).

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Errors from partition constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// abc_partition block size too small for the corner cut-outs.
    BlockTooSmall { block: usize, range: usize },
    /// A site index is outside the lattice.
    SiteOutOfRange { site: usize, num_sites: usize },
    /// Regions passed together live on different lattices.
    LatticeMismatch,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::BlockTooSmall { block, range } => write!(
                f,
                "block size {block} too small for interaction range {range} (need 2w <= R)"
            ),
            LatticeError::SiteOutOfRange { site, num_sites } => {
                write!(f, "site {site} out of range (lattice has {num_sites} sites)")
            }
            LatticeError::LatticeMismatch => write!(f, "regions live on different lattices"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// A rectangular 2D lattice with per-axis boundary conditions.
///
/// Sites are indexed row-major: `(row, col) <-> row * width + col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice {
    pub width: usize,
    pub height: usize,
    pub periodic_x: bool,
    pub periodic_y: bool,
}

impl Lattice {
    pub fn open(width: usize, height: usize) -> Self {
        assert!(width >= 1 && height >= 1, "lattice must be at least 1x1");
        Self {
            width,
            height,
            periodic_x: false,
            periodic_y: false,
        }
    }

    pub fn periodic(width: usize, height: usize) -> Self {
        assert!(width >= 1 && height >= 1, "lattice must be at least 1x1");
        Self {
            width,
            height,
            periodic_x: true,
            periodic_y: true,
        }
    }

    pub fn num_sites(&self) -> usize {
        self.width * self.height
    }

    pub fn index(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.height && col < self.width);
        row * self.width + col
    }

    pub fn coords(&self, site: usize) -> (usize, usize) {
        debug_assert!(site < self.num_sites());
        (site / self.width, site % self.width)
    }

    fn axis_distance(a: usize, b: usize, extent: usize, periodic: bool) -> usize {
        let d = a.abs_diff(b);
        if periodic {
            d.min(extent - d)
        } else {
            d
        }
    }

    /// Chebyshev distance between two sites, wrapping on periodic axes.
    pub fn chebyshev(&self, a: usize, b: usize) -> usize {
        let (ar, ac) = self.coords(a);
        let (br, bc) = self.coords(b);
        let dr = Self::axis_distance(ar, br, self.height, self.periodic_y);
        let dc = Self::axis_distance(ac, bc, self.width, self.periodic_x);
        dr.max(dc)
    }

    /// True iff some w×w window contains both sites.
    pub fn within_window(&self, a: usize, b: usize, w: usize) -> bool {
        w >= 1 && self.chebyshev(a, b) < w
    }

    /// Sites at Chebyshev distance in `1..=radius` from `site`.
    fn neighborhood(&self, site: usize, radius: usize) -> Vec<usize> {
        let (r, c) = self.coords(site);
        let radius = radius as isize;
        let mut out = Vec::new();
        for dr in -radius..=radius {
            for dc in -radius..=radius {
                if dr == 0 && dc == 0 {
                    continue;
                }
                let rr = r as isize + dr;
                let cc = c as isize + dc;
                let rr = if self.periodic_y {
                    rr.rem_euclid(self.height as isize)
                } else if (0..self.height as isize).contains(&rr) {
                    rr
                } else {
                    continue;
                };
                let cc = if self.periodic_x {
                    cc.rem_euclid(self.width as isize)
                } else if (0..self.width as isize).contains(&cc) {
                    cc
                } else {
                    continue;
                };
                out.push(self.index(rr as usize, cc as usize));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A set of lattice sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    lattice: Lattice,
    sites: BTreeSet<usize>,
}

impl Region {
    pub fn new(
        lattice: Lattice,
        sites: impl IntoIterator<Item = usize>,
    ) -> Result<Self, LatticeError> {
        let sites: BTreeSet<usize> = sites.into_iter().collect();
        if let Some(&max) = sites.iter().next_back() {
            if max >= lattice.num_sites() {
                return Err(LatticeError::SiteOutOfRange {
                    site: max,
                    num_sites: lattice.num_sites(),
                });
            }
        }
        Ok(Self { lattice, sites })
    }

    pub fn empty(lattice: Lattice) -> Self {
        Self {
            lattice,
            sites: BTreeSet::new(),
        }
    }

    pub fn full(lattice: Lattice) -> Self {
        Self {
            lattice,
            sites: (0..lattice.num_sites()).collect(),
        }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.contains(&site)
    }

    /// Sites in ascending order.
    pub fn sites(&self) -> impl Iterator<Item = usize> + '_ {
        self.sites.iter().copied()
    }

    pub fn complement(&self) -> Region {
        Region {
            lattice: self.lattice,
            sites: (0..self.lattice.num_sites())
                .filter(|s| !self.sites.contains(s))
                .collect(),
        }
    }

    pub fn union(&self, other: &Region) -> Result<Region, LatticeError> {
        if self.lattice != other.lattice {
            return Err(LatticeError::LatticeMismatch);
        }
        Ok(Region {
            lattice: self.lattice,
            sites: self.sites.union(&other.sites).copied().collect(),
        })
    }

    pub fn is_disjoint(&self, other: &Region) -> bool {
        self.sites.is_disjoint(&other.sites)
    }
}

impl Serialize for Region {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RegionJson {
            width: self.lattice.width,
            height: self.lattice.height,
            periodic_x: self.lattice.periodic_x,
            periodic_y: self.lattice.periodic_y,
            sites: self.sites.iter().copied().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RegionJson::deserialize(deserializer)?;
        let lattice = Lattice {
            width: raw.width,
            height: raw.height,
            periodic_x: raw.periodic_x,
            periodic_y: raw.periodic_y,
        };
        Region::new(lattice, raw.sites).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RegionJson {
    width: usize,
    height: usize,
    periodic_x: bool,
    periodic_y: bool,
    sites: Vec<usize>,
}

/// External boundary: sites outside `m` that share a w×w window with `m`.
pub fn boundary_plus(m: &Region, w: usize) -> Region {
    assert!(w >= 1, "interaction range must be at least 1");
    let lat = m.lattice();
    let mut out = BTreeSet::new();
    if w == 1 {
        // 1x1 windows hold a single site; no exterior site qualifies.
        return Region::empty(lat);
    }
    for site in m.sites() {
        for u in lat.neighborhood(site, w - 1) {
            if !m.contains(u) {
                out.insert(u);
            }
        }
    }
    Region { lattice: lat, sites: out }
}

/// Internal boundary: `boundary_plus` of the complement.
pub fn boundary_minus(m: &Region, w: usize) -> Region {
    boundary_plus(&m.complement(), w)
}

/// Full boundary: union of the external and internal boundaries.
pub fn boundary(m: &Region, w: usize) -> Region {
    boundary_plus(m, w)
        .union(&boundary_minus(m, w))
        .expect("same lattice")
}

/// The three-color block partition: checkerboard R×R cells assigned to A and
/// B, with 2w×2w squares around every interior four-cell junction carved out
/// into the separator C.
#[derive(Debug, Clone)]
pub struct PartitionABC {
    pub a: Region,
    pub b: Region,
    pub c: Region,
    pub block_size: usize,
    pub range: usize,
}

impl PartitionABC {
    /// Checks disjointness and exact cover.
    pub fn validate(&self) -> bool {
        self.a.is_disjoint(&self.b)
            && self.a.is_disjoint(&self.c)
            && self.b.is_disjoint(&self.c)
            && self.a.len() + self.b.len() + self.c.len() == self.a.lattice().num_sites()
    }

    /// Scans every w×w window; passes iff no window meets two distinct
    /// connected blocks of A or two of B.
    pub fn verify_window_property(&self, w: usize) -> WindowReport {
        let groups = [
            ('A', connected_components(&self.a)),
            ('B', connected_components(&self.b)),
        ];
        scan_windows(self.a.lattice(), &groups, w)
    }
}

/// Result of a window scan: pass, or the first violating window anchor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub pass: bool,
    pub violation: Option<WindowViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowViolation {
    pub row: usize,
    pub col: usize,
    pub group: char,
}

/// Tiles the lattice into R×R cells (edge cells may be smaller), colors them
/// checkerboard into A and B, and carves 2w×2w corner squares around every
/// interior four-cell junction into C.
///
/// Rejects R < 2w: the corner cut-outs would swallow whole blocks.
pub fn abc_partition(lat: Lattice, block: usize, w: usize) -> Result<PartitionABC, LatticeError> {
    assert!(w >= 1, "interaction range must be at least 1");
    if block < 2 * w {
        return Err(LatticeError::BlockTooSmall { block, range: w });
    }
    let cells_per_row = lat.width.div_ceil(block);
    let cells_per_col = lat.height.div_ceil(block);
    let mut in_c = vec![false; lat.num_sites()];
    for a in 1..cells_per_col {
        for b in 1..cells_per_row {
            let (jr, jc) = (a * block, b * block);
            for r in jr.saturating_sub(w)..(jr + w).min(lat.height) {
                for c in jc.saturating_sub(w)..(jc + w).min(lat.width) {
                    in_c[lat.index(r, c)] = true;
                }
            }
        }
    }
    let mut a_sites = BTreeSet::new();
    let mut b_sites = BTreeSet::new();
    let mut c_sites = BTreeSet::new();
    for (site, &cut) in in_c.iter().enumerate() {
        if cut {
            c_sites.insert(site);
            continue;
        }
        let (r, c) = lat.coords(site);
        if (r / block + c / block).is_multiple_of(2) {
            a_sites.insert(site);
        } else {
            b_sites.insert(site);
        }
    }
    let p = PartitionABC {
        a: Region { lattice: lat, sites: a_sites },
        b: Region { lattice: lat, sites: b_sites },
        c: Region { lattice: lat, sites: c_sites },
        block_size: block,
        range: w,
    };
    debug_assert!(p.validate());
    Ok(p)
}

/// The two-color partition for classical codes: a grid of b×b blocks at
/// pitch b+w (clipped at the lattice edge), with the w-wide strips between
/// them forming the complement A.
#[derive(Debug, Clone)]
pub struct ClassicalPartition {
    pub a: Region,
    pub blocks: Vec<Region>,
}

impl ClassicalPartition {
    pub fn verify_window_property(&self, w: usize) -> WindowReport {
        let groups = [('B', self.blocks.clone())];
        scan_windows(self.a.lattice(), &groups, w)
    }
}

pub fn classical_partition(lat: Lattice, block: usize, w: usize) -> ClassicalPartition {
    assert!(block >= 1 && w >= 1, "block and strip widths must be at least 1");
    let pitch = block + w;
    let mut blocks = Vec::new();
    let mut covered = vec![false; lat.num_sites()];
    let mut r0 = 0;
    while r0 < lat.height {
        let mut c0 = 0;
        while c0 < lat.width {
            let mut sites = BTreeSet::new();
            for r in r0..(r0 + block).min(lat.height) {
                for c in c0..(c0 + block).min(lat.width) {
                    let s = lat.index(r, c);
                    sites.insert(s);
                    covered[s] = true;
                }
            }
            blocks.push(Region { lattice: lat, sites });
            c0 += pitch;
        }
        r0 += pitch;
    }
    let a = Region {
        lattice: lat,
        sites: (0..lat.num_sites()).filter(|&s| !covered[s]).collect(),
    };
    ClassicalPartition { a, blocks }
}

/// Connected components of a region under 4-adjacency (wrapping on periodic
/// axes).
pub fn connected_components(region: &Region) -> Vec<Region> {
    let lat = region.lattice();
    let mut label: Vec<Option<usize>> = vec![None; lat.num_sites()];
    let mut comps: Vec<BTreeSet<usize>> = Vec::new();
    for start in region.sites() {
        if label[start].is_some() {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut sites = BTreeSet::new();
        label[start] = Some(id);
        while let Some(s) = stack.pop() {
            sites.insert(s);
            let (r, c) = lat.coords(s);
            let mut neighbors: Vec<(isize, isize)> =
                vec![(r as isize - 1, c as isize), (r as isize + 1, c as isize)];
            neighbors.push((r as isize, c as isize - 1));
            neighbors.push((r as isize, c as isize + 1));
            for (rr, cc) in neighbors {
                let rr = if lat.periodic_y {
                    rr.rem_euclid(lat.height as isize)
                } else if (0..lat.height as isize).contains(&rr) {
                    rr
                } else {
                    continue;
                };
                let cc = if lat.periodic_x {
                    cc.rem_euclid(lat.width as isize)
                } else if (0..lat.width as isize).contains(&cc) {
                    cc
                } else {
                    continue;
                };
                let u = lat.index(rr as usize, cc as usize);
                if region.contains(u) && label[u].is_none() {
                    label[u] = Some(id);
                    stack.push(u);
                }
            }
        }
        comps.push(sites);
    }
    comps
        .into_iter()
        .map(|sites| Region { lattice: lat, sites })
        .collect()
}

/// Scans all w×w windows; per labeled group, a window may intersect at most
/// one of the group's blocks. Returns pass or the first violation.
pub fn scan_windows(lat: Lattice, groups: &[(char, Vec<Region>)], w: usize) -> WindowReport {
    assert!(w >= 1, "window size must be at least 1");
    // Per group, map each site to the id of the block holding it.
    let mut site_block: Vec<Vec<Option<usize>>> = Vec::with_capacity(groups.len());
    for (_, blocks) in groups {
        let mut ids = vec![None; lat.num_sites()];
        for (bi, block) in blocks.iter().enumerate() {
            for s in block.sites() {
                ids[s] = Some(bi);
            }
        }
        site_block.push(ids);
    }
    let row_anchors: Vec<usize> = if lat.periodic_y {
        (0..lat.height).collect()
    } else if lat.height >= w {
        (0..=lat.height - w).collect()
    } else {
        Vec::new()
    };
    let col_anchors: Vec<usize> = if lat.periodic_x {
        (0..lat.width).collect()
    } else if lat.width >= w {
        (0..=lat.width - w).collect()
    } else {
        Vec::new()
    };
    for &r0 in &row_anchors {
        for &c0 in &col_anchors {
            for (gi, (label, _)) in groups.iter().enumerate() {
                let mut seen: Option<usize> = None;
                let mut bad = false;
                'window: for dr in 0..w {
                    for dc in 0..w {
                        let r = if lat.periodic_y { (r0 + dr) % lat.height } else { r0 + dr };
                        let c = if lat.periodic_x { (c0 + dc) % lat.width } else { c0 + dc };
                        if let Some(id) = site_block[gi][lat.index(r, c)] {
                            match seen {
                                None => seen = Some(id),
                                Some(prev) if prev != id => {
                                    bad = true;
                                    break 'window;
                                }
                                _ => {}
                            }
                        }
                    }
                }
                if bad {
                    return WindowReport {
                        pass: false,
                        violation: Some(WindowViolation {
                            row: r0,
                            col: c0,
                            group: *label,
                        }),
                    };
                }
            }
        }
    }
    WindowReport {
        pass: true,
        violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn site_index_bijection() {
        let lat = Lattice::open(7, 5);
        for site in 0..lat.num_sites() {
            let (r, c) = lat.coords(site);
            assert_eq!(lat.index(r, c), site);
        }
    }

    #[test]
    fn complement_involution() {
        let lat = Lattice::open(4, 4);
        let m = Region::new(lat, [0, 5, 9, 15]).unwrap();
        assert_eq!(m.complement().complement(), m);
    }

    #[test]
    fn boundary_of_empty_and_full() {
        let lat = Lattice::open(6, 6);
        assert!(boundary_plus(&Region::empty(lat), 2).is_empty());
        assert!(boundary_plus(&Region::full(lat), 2).is_empty());
    }

    #[test]
    fn boundary_of_interior_site() {
        // All 2x2 windows containing the site cover exactly its 8 Chebyshev
        // neighbors.
        let lat = Lattice::open(5, 5);
        let m = Region::new(lat, [lat.index(2, 2)]).unwrap();
        let b = boundary_plus(&m, 2);
        assert_eq!(b.len(), 8);
        for s in b.sites() {
            assert_eq!(lat.chebyshev(s, lat.index(2, 2)), 1);
            assert!(!m.contains(s));
        }
    }

    #[test]
    fn boundary_disjoint_from_region() {
        let lat = Lattice::periodic(6, 6);
        let m = Region::new(lat, [0, 1, 2, 6, 7, 35]).unwrap();
        for w in 1..4 {
            let plus = boundary_plus(&m, w);
            assert!(plus.is_disjoint(&m));
            for s in plus.sites() {
                assert!(m.complement().contains(s));
            }
        }
    }

    #[test]
    fn boundary_wraps_on_torus() {
        let lat = Lattice::periodic(5, 5);
        let m = Region::new(lat, [lat.index(0, 0)]).unwrap();
        let b = boundary_plus(&m, 2);
        assert_eq!(b.len(), 8);
        assert!(b.contains(lat.index(4, 4)));
    }

    #[test]
    fn abc_single_block_when_r_covers_lattice() {
        let lat = Lattice::open(6, 6);
        let p = abc_partition(lat, 6, 1).unwrap();
        assert_eq!(p.a.len(), 36);
        assert!(p.b.is_empty());
        assert!(p.c.is_empty());
    }

    #[test]
    fn abc_8x8_single_junction() {
        let lat = Lattice::open(8, 8);
        let p = abc_partition(lat, 4, 1).unwrap();
        assert_eq!(p.c.len(), 4);
        let expected = [
            lat.index(3, 3),
            lat.index(3, 4),
            lat.index(4, 3),
            lat.index(4, 4),
        ];
        for s in expected {
            assert!(p.c.contains(s));
        }
        assert!(p.validate());
    }

    #[test]
    fn abc_rejects_undersized_blocks() {
        let lat = Lattice::open(8, 8);
        assert!(matches!(
            abc_partition(lat, 3, 2),
            Err(LatticeError::BlockTooSmall { .. })
        ));
        // R = 2w is the smallest admissible block.
        assert!(abc_partition(lat, 4, 2).is_ok());
    }

    #[test]
    fn abc_window_property_48x48() {
        let lat = Lattice::open(48, 48);
        let p = abc_partition(lat, 12, 2).unwrap();
        let report = p.verify_window_property(2);
        assert!(report.pass, "violation: {:?}", report.violation);
        // Separator count stays within the n/R^2 envelope.
        let n = lat.num_sites();
        assert!(p.c.len() * 12 * 12 <= 16 * 2 * 2 * n);
        assert!(p.c.len() <= 4 * 2 * 2 * 4 * 4);
    }

    #[test]
    fn abc_diagonal_blocks_without_cutout_fail() {
        // Hand-built counterexample: two A-blocks meeting at a corner.
        let lat = Lattice::open(4, 4);
        let mut a = BTreeSet::new();
        let mut b = BTreeSet::new();
        for r in 0..4 {
            for c in 0..4 {
                if (r / 2 + c / 2) % 2 == 0 {
                    a.insert(lat.index(r, c));
                } else {
                    b.insert(lat.index(r, c));
                }
            }
        }
        let p = PartitionABC {
            a: Region { lattice: lat, sites: a },
            b: Region { lattice: lat, sites: b },
            c: Region::empty(lat),
            block_size: 2,
            range: 2,
        };
        let report = p.verify_window_property(2);
        assert!(!report.pass);
        let v = report.violation.unwrap();
        assert_eq!((v.row, v.col), (1, 1));
    }

    #[test]
    fn single_block_partition_passes() {
        let lat = Lattice::open(5, 5);
        let p = abc_partition(lat, 5, 1).unwrap();
        assert!(p.verify_window_property(3).pass);
    }

    #[test]
    fn classical_partition_10x10() {
        let lat = Lattice::open(10, 10);
        let p = classical_partition(lat, 3, 2);
        assert_eq!(p.blocks.len(), 4);
        for b in &p.blocks {
            assert_eq!(b.len(), 9);
        }
        assert_eq!(p.a.len(), 64);
    }

    #[test]
    fn classical_partition_window_property_20x20() {
        let lat = Lattice::open(20, 20);
        let p = classical_partition(lat, 4, 2);
        assert!(p.verify_window_property(2).pass);
    }

    #[test]
    fn classical_partition_block_covers_lattice() {
        let lat = Lattice::open(6, 6);
        let p = classical_partition(lat, 9, 1);
        assert_eq!(p.blocks.len(), 1);
        assert_eq!(p.blocks[0].len(), 36);
        assert!(p.a.is_empty());
    }

    #[test]
    fn region_json_roundtrip() {
        let lat = Lattice::periodic(3, 4);
        let m = Region::new(lat, [11, 2, 7]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"sites\":[2,7,11]"));
        let back: Region = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn region_json_rejects_out_of_range() {
        let json = r#"{"width":2,"height":2,"periodic_x":false,"periodic_y":false,"sites":[4]}"#;
        assert!(serde_json::from_str::<Region>(json).is_err());
    }

    #[test]
    fn components_split_and_wrap() {
        let lat = Lattice::open(4, 4);
        let m = Region::new(lat, [0, 1, 15]).unwrap();
        assert_eq!(connected_components(&m).len(), 2);
        let lat = Lattice::periodic(4, 1);
        let m = Region::new(lat, [0, 3]).unwrap();
        assert_eq!(connected_components(&m).len(), 1);
    }
}
