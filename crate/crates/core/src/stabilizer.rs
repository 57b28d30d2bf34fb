//! Binary-symplectic stabilizer codes with geometric locality.
//!
//! A code is a list of pairwise-commuting Pauli generators on n qubits,
//! each stored as a 2n-bit vector (X part followed by Z part, phases
//! dropped: k, d, correctability and the entropies of the maximally mixed
//! encoded state depend only on the symplectic structure). Every qubit is
//! pinned to a lattice site and each generator's support must fit a w×w
//! window, so the lattice-level statements can be exercised on real
//! instances.
//!
//! Region queries are rank computations, not enumerations:
//! - a region M is correctable iff every normalizer element supported in M
//!   lies in the stabilizer span, compared via `dim{P in N(S): supp ⊆ M} =
//!   dim{s in span: supp ⊆ M}`;
//! - the entropy of the maximally mixed encoded state on M is
//!   `|M| − log2|S_M|`, with `log2|S_M| = rank(G) − rank(G restricted to
//!   the complement's columns)`.

use crate::gf2::{BitMatrix, BitVec, RowBasis};
use crate::lattice::{boundary_plus, Lattice, PartitionABC, Region};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on `n + k` for brute-force distance enumeration.
pub const DEFAULT_DISTANCE_GUARD: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerError {
    BadPauliChar { index: usize, ch: char },
    GeneratorLength { generator: usize, expected: usize, got: usize },
    SiteCount { expected: usize, got: usize },
    SiteOutOfLattice { qubit: usize, site: (usize, usize) },
    /// Two generators anticommute; the code constraints must commute.
    NonCommuting { first: usize, second: usize },
    /// A generator's support does not fit a w×w window.
    NonLocal { generator: usize, rows: usize, cols: usize, range: usize },
    /// Enumeration guard refused; pass a larger guard to force it.
    GuardExceeded { needed: usize, guard: usize },
    RegionLatticeMismatch,
    Json(String),
}

impl fmt::Display for StabilizerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerError::BadPauliChar { index, ch } => {
                write!(f, "invalid Pauli character {ch:?} at position {index}")
            }
            StabilizerError::GeneratorLength { generator, expected, got } => write!(
                f,
                "generator {generator} has {got} bits, expected {expected} (2n)"
            ),
            StabilizerError::SiteCount { expected, got } => {
                write!(f, "expected {expected} qubit sites, got {got}")
            }
            StabilizerError::SiteOutOfLattice { qubit, site } => {
                write!(f, "qubit {qubit} site {site:?} outside the lattice")
            }
            StabilizerError::NonCommuting { first, second } => {
                write!(f, "generators {first} and {second} anticommute")
            }
            StabilizerError::NonLocal { generator, rows, cols, range } => write!(
                f,
                "generator {generator} spans {rows}x{cols} sites, exceeding the {range}x{range} window"
            ),
            StabilizerError::GuardExceeded { needed, guard } => write!(
                f,
                "normalizer enumeration needs 2^{needed} elements (guard 2^{guard})"
            ),
            StabilizerError::RegionLatticeMismatch => {
                write!(f, "region lattice does not match the code lattice")
            }
            StabilizerError::Json(msg) => write!(f, "code file rejected: {msg}"),
        }
    }
}

impl std::error::Error for StabilizerError {}

/// A phase-stripped Pauli operator: X part in bits `0..n`, Z part in
/// bits `n..2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pauli {
    n: usize,
    xz: BitVec,
}

impl Pauli {
    pub fn from_xz(n: usize, xz: BitVec) -> Self {
        assert_eq!(xz.len(), 2 * n, "xz vector must have 2n bits");
        Self { n, xz }
    }

    /// Parses an `IXZY` string, one character per qubit.
    pub fn parse(s: &str) -> Result<Self, StabilizerError> {
        let n = s.chars().count();
        let mut xz = BitVec::zeros(2 * n);
        for (i, ch) in s.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => xz.set(i, true),
                'Z' => xz.set(n + i, true),
                'Y' => {
                    xz.set(i, true);
                    xz.set(n + i, true);
                }
                _ => return Err(StabilizerError::BadPauliChar { index: i, ch }),
            }
        }
        Ok(Self { n, xz })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn xz(&self) -> &BitVec {
        &self.xz
    }

    /// Qubits on which the operator acts nontrivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.xz.get(i) || self.xz.get(self.n + i))
            .collect()
    }

    /// Number of qubits in the support.
    pub fn weight(&self) -> usize {
        pauli_weight(&self.xz, self.n)
    }

    /// True iff the symplectic form vanishes (phase-stripped commutation).
    pub fn commutes(&self, other: &Pauli) -> bool {
        assert_eq!(self.n, other.n);
        !self.xz.dot(&swap_halves(&other.xz, other.n))
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let ch = match (self.xz.get(i), self.xz.get(self.n + i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

/// Swaps the X and Z halves of a 2n-bit vector.
fn swap_halves(v: &BitVec, n: usize) -> BitVec {
    let mut out = BitVec::zeros(2 * n);
    for i in v.ones() {
        out.set(if i < n { i + n } else { i - n }, true);
    }
    out
}

/// Number of qubits where the X or Z bit is set.
fn pauli_weight(v: &BitVec, n: usize) -> usize {
    if 2 * n <= 64 {
        let w = v.words().first().copied().unwrap_or(0);
        let mask = if n == 0 { 0 } else { (1u64 << n) - 1 };
        ((w & mask) | (w >> n)).count_ones() as usize
    } else {
        (0..n).filter(|&i| v.get(i) || v.get(n + i)).count()
    }
}

/// Exact extent of a coordinate set along one axis: the side of the smallest
/// window covering it, allowing wrap-around on periodic axes.
fn axis_extent(coords: &mut Vec<usize>, dim: usize, periodic: bool) -> usize {
    coords.sort_unstable();
    coords.dedup();
    if coords.is_empty() {
        return 0;
    }
    if !periodic {
        return coords[coords.len() - 1] - coords[0] + 1;
    }
    let mut max_gap = dim - coords[coords.len() - 1] + coords[0];
    for pair in coords.windows(2) {
        max_gap = max_gap.max(pair[1] - pair[0]);
    }
    dim - max_gap
}

/// A geometrically local stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    generators: BitMatrix,
    sym_generators: BitMatrix,
    rank: usize,
    lattice: Lattice,
    sites: Vec<(usize, usize)>,
    w: usize,
}

impl StabilizerCode {
    /// Validates commutation, site placement and w-window locality, then
    /// caches the generator rank.
    pub fn new(
        lattice: Lattice,
        sites: Vec<(usize, usize)>,
        generators: Vec<Pauli>,
        w: usize,
    ) -> Result<Self, StabilizerError> {
        let n = sites.len();
        assert!(w >= 1, "interaction range must be at least 1");
        for (q, &(r, c)) in sites.iter().enumerate() {
            if r >= lattice.height || c >= lattice.width {
                return Err(StabilizerError::SiteOutOfLattice { qubit: q, site: (r, c) });
            }
        }
        let mut rows = Vec::with_capacity(generators.len());
        for (gi, g) in generators.iter().enumerate() {
            if g.num_qubits() != n {
                return Err(StabilizerError::GeneratorLength {
                    generator: gi,
                    expected: 2 * n,
                    got: 2 * g.num_qubits(),
                });
            }
            rows.push(g.xz().clone());
        }
        let generators = BitMatrix::from_rows(rows, 2 * n);
        let sym_rows: Vec<BitVec> = generators
            .rows()
            .iter()
            .map(|r| swap_halves(r, n))
            .collect();
        let sym_generators = BitMatrix::from_rows(sym_rows, 2 * n);
        for a in 0..generators.num_rows() {
            for b in (a + 1)..generators.num_rows() {
                if generators.row(a).dot(sym_generators.row(b)) {
                    return Err(StabilizerError::NonCommuting { first: a, second: b });
                }
            }
        }
        for (gi, row) in generators.rows().iter().enumerate() {
            let mut rows_coords = Vec::new();
            let mut cols_coords = Vec::new();
            for (q, &(sr, sc)) in sites.iter().enumerate() {
                if row.get(q) || row.get(n + q) {
                    rows_coords.push(sr);
                    cols_coords.push(sc);
                }
            }
            let er = axis_extent(&mut rows_coords, lattice.height, lattice.periodic_y);
            let ec = axis_extent(&mut cols_coords, lattice.width, lattice.periodic_x);
            if er > w || ec > w {
                return Err(StabilizerError::NonLocal {
                    generator: gi,
                    rows: er,
                    cols: ec,
                    range: w,
                });
            }
        }
        let rank = generators.rank();
        Ok(Self {
            n,
            generators,
            sym_generators,
            rank,
            lattice,
            sites,
            w,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Number of encoded qubits, k = n − rank(generators).
    pub fn k(&self) -> usize {
        self.n - self.rank
    }

    pub fn generator_rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &BitMatrix {
        &self.generators
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn interaction_range(&self) -> usize {
        self.w
    }

    pub fn site_of_qubit(&self, q: usize) -> (usize, usize) {
        self.sites[q]
    }

    /// Qubits whose site falls inside the region.
    pub fn qubits_in_region(&self, m: &Region) -> Result<Vec<usize>, StabilizerError> {
        if m.lattice() != self.lattice {
            return Err(StabilizerError::RegionLatticeMismatch);
        }
        Ok((0..self.n)
            .filter(|&q| {
                let (r, c) = self.sites[q];
                m.contains(self.lattice.index(r, c))
            })
            .collect())
    }

    /// The region occupied by a set of qubits.
    pub fn region_of_qubits(&self, qubits: &[usize]) -> Region {
        let sites = qubits
            .iter()
            .map(|&q| {
                let (r, c) = self.sites[q];
                self.lattice.index(r, c)
            })
            .collect::<Vec<_>>();
        Region::new(self.lattice, sites).expect("qubit sites in range")
    }

    /// Basis of the normalizer N(S) = {P : P commutes with every generator};
    /// its dimension is n + k.
    pub fn normalizer_basis(&self) -> BitMatrix {
        self.sym_generators.nullspace()
    }

    fn column_indices(&self, qubits: &[usize]) -> Vec<usize> {
        qubits.iter().flat_map(|&q| [q, self.n + q]).collect()
    }

    fn complement_qubits(&self, qubits: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        for &q in qubits {
            inside[q] = true;
        }
        (0..self.n).filter(|&q| !inside[q]).collect()
    }

    /// log2 of the stabilizer subgroup supported inside the qubit set.
    fn stab_subgroup_dim(&self, qubits: &[usize]) -> usize {
        let comp_cols = self.column_indices(&self.complement_qubits(qubits));
        self.rank - self.generators.select_columns(&comp_cols).rank()
    }

    /// Dimension of the normalizer elements supported inside the qubit set.
    fn normalizer_subgroup_dim(&self, qubits: &[usize]) -> usize {
        let cols = self.column_indices(qubits);
        2 * qubits.len() - self.sym_generators.select_columns(&cols).rank()
    }

    /// Erasure correctability of a qubit set: every normalizer element
    /// supported inside it must lie in the stabilizer span. Polynomial time.
    pub fn correctable_qubits(&self, qubits: &[usize]) -> bool {
        self.normalizer_subgroup_dim(qubits) == self.stab_subgroup_dim(qubits)
    }

    pub fn correctable_region(&self, m: &Region) -> Result<bool, StabilizerError> {
        Ok(self.correctable_qubits(&self.qubits_in_region(m)?))
    }

    /// Entropy (in bits) of the maximally mixed encoded state reduced to a
    /// qubit set: `|M| − log2|S_M|`. Always an exact integer.
    pub fn entropy_qubits(&self, qubits: &[usize]) -> u64 {
        (qubits.len() - self.stab_subgroup_dim(qubits)) as u64
    }

    pub fn entropy_region(&self, m: &Region) -> Result<u64, StabilizerError> {
        Ok(self.entropy_qubits(&self.qubits_in_region(m)?))
    }

    /// Entropies of a region, its complement, and the conditional
    /// S(M|M̄) = S(Λ) − S(M̄).
    pub fn entropy_report(&self, m: &Region) -> Result<EntropyReport, StabilizerError> {
        let qubits = self.qubits_in_region(m)?;
        let s_m = self.entropy_qubits(&qubits);
        let s_complement = self.entropy_qubits(&self.complement_qubits(&qubits));
        let s_lambda = self.k() as u64;
        Ok(EntropyReport {
            region: m.clone(),
            region_qubits: qubits.len(),
            s_m,
            s_complement,
            s_lambda,
            s_conditional: s_lambda as i64 - s_complement as i64,
        })
    }

    /// Checks the entropic erasure condition S(M|M̄) = −S(M) on a
    /// correctable region; exact integer arithmetic on both sides.
    pub fn verify_fact1_qubits(&self, qubits: &[usize]) -> Fact1Report {
        let correctable = self.correctable_qubits(qubits);
        let s_m = self.entropy_qubits(qubits);
        let s_complement = self.entropy_qubits(&self.complement_qubits(qubits));
        let conditional = self.k() as i64 - s_complement as i64;
        Fact1Report {
            correctable,
            s_m,
            s_complement,
            conditional,
            holds: if correctable {
                Some(conditional == -(s_m as i64))
            } else {
                None
            },
        }
    }

    pub fn verify_fact1(&self, m: &Region) -> Result<Fact1Report, StabilizerError> {
        Ok(self.verify_fact1_qubits(&self.qubits_in_region(m)?))
    }

    /// Entropy chain over the three-color partition: requires A and B
    /// correctable, then asserts S(Λ) ≤ S(C) + S(B) − S(A), the symmetric
    /// inequality, and k ≤ S(C) ≤ |C|.
    pub fn verify_entropy_chain(&self, p: &PartitionABC) -> Result<ChainReport, StabilizerError> {
        let qa = self.qubits_in_region(&p.a)?;
        let qb = self.qubits_in_region(&p.b)?;
        let qc = self.qubits_in_region(&p.c)?;
        Ok(self.chain_report_qubits(&qa, &qb, &qc))
    }

    /// The same chain over explicit disjoint qubit sets covering all qubits.
    pub fn chain_report_qubits(&self, qa: &[usize], qb: &[usize], qc: &[usize]) -> ChainReport {
        let a_correctable = self.correctable_qubits(qa);
        let b_correctable = self.correctable_qubits(qb);
        let s_a = self.entropy_qubits(qa) as i64;
        let s_b = self.entropy_qubits(qb) as i64;
        let s_c = self.entropy_qubits(qc) as i64;
        let k = self.k() as i64;
        let applicable = a_correctable && b_correctable;
        ChainReport {
            a_correctable,
            b_correctable,
            skipped: !applicable,
            s_a,
            s_b,
            s_c,
            k,
            eq8: applicable.then(|| k <= s_c + s_b - s_a),
            eq9: applicable.then(|| k <= s_c + s_a - s_b),
            k_le_s_c: applicable.then_some(k <= s_c),
            s_c_le_c: s_c <= qc.len() as i64,
        }
    }

    /// Union statement: two correctable regions that no w×w window couples,
    /// with a correctable external boundary of the first, must have a
    /// correctable union.
    pub fn union_lemma_check(
        &self,
        m1: &Region,
        m2: &Region,
    ) -> Result<UnionReport, StabilizerError> {
        let q1 = self.qubits_in_region(m1)?;
        let q2 = self.qubits_in_region(m2)?;
        let separated = !self.windows_couple(m1, m2);
        let m1_correctable = self.correctable_qubits(&q1);
        let m2_correctable = self.correctable_qubits(&q2);
        let boundary = boundary_plus(m1, self.w);
        let boundary_correctable = self.correctable_qubits(&self.qubits_in_region(&boundary)?);
        let preconditions_met =
            separated && m1_correctable && m2_correctable && boundary_correctable;
        let union_correctable = preconditions_met.then(|| {
            let mut q = q1.clone();
            q.extend_from_slice(&q2);
            self.correctable_qubits(&q)
        });
        Ok(UnionReport {
            separated,
            m1_correctable,
            m2_correctable,
            boundary_correctable,
            preconditions_met,
            union_correctable,
        })
    }

    /// True iff some w×w window contains sites from both regions.
    pub fn windows_couple(&self, m1: &Region, m2: &Region) -> bool {
        for a in m1.sites() {
            for b in m2.sites() {
                if self.lattice.within_window(a, b, self.w) {
                    return true;
                }
            }
        }
        false
    }

    /// Minimum weight over N(S) \ span(S) with the default guard.
    pub fn min_distance_bruteforce(&self) -> Result<u64, StabilizerError> {
        self.min_distance_with_guard(DEFAULT_DISTANCE_GUARD)
    }

    /// Brute-force distance: enumerates the 2^(n+k) normalizer elements as
    /// (logical class) × (stabilizer span), skipping the pure-stabilizer
    /// class. Classes are distributed over a worker pool and merged by min.
    pub fn min_distance_with_guard(&self, guard: usize) -> Result<u64, StabilizerError> {
        let needed = self.n + self.k();
        if needed > guard {
            return Err(StabilizerError::GuardExceeded { needed, guard });
        }
        let stab_basis = RowBasis::from_matrix(&self.generators);
        let stab_rows: Vec<BitVec> = stab_basis.rows();
        let mut mod_basis = stab_basis;
        let mut logicals: Vec<BitVec> = Vec::new();
        for row in self.normalizer_basis().rows() {
            let rem = mod_basis.reduce(row.clone());
            if mod_basis.insert(rem.clone()) {
                logicals.push(rem);
            }
        }
        debug_assert_eq!(logicals.len(), 2 * self.k());
        if logicals.is_empty() {
            // k = 0: no logical operators at all. By convention d = n + 1
            // is never needed here; report the full weight bound.
            return Ok(self.n as u64 + 1);
        }
        let r = stab_rows.len();
        let n = self.n;
        let best = (1u64..(1u64 << logicals.len()))
            .into_par_iter()
            .map(|mask| {
                let mut cur = BitVec::zeros(2 * n);
                for (b, logical) in logicals.iter().enumerate() {
                    if (mask >> b) & 1 == 1 {
                        cur.xor_assign(logical);
                    }
                }
                let mut local = pauli_weight(&cur, n);
                for j in 1u64..(1u64 << r) {
                    let idx = j.trailing_zeros() as usize;
                    cur.xor_assign(&stab_rows[idx]);
                    local = local.min(pauli_weight(&cur, n));
                }
                local as u64
            })
            .min()
            .expect("nonempty class enumeration");
        Ok(best)
    }

    pub fn to_json(&self) -> String {
        let json = CodeJson {
            n: self.n,
            w: self.w,
            lattice: self.lattice,
            generators: self
                .generators
                .rows()
                .iter()
                .map(|r| r.to_bitstring())
                .collect(),
            sites: self.sites.iter().map(|&(r, c)| [r, c]).collect(),
        };
        serde_json::to_string_pretty(&json).expect("code serialization")
    }

    /// Parses and fully re-validates a code file.
    pub fn from_json(s: &str) -> Result<Self, StabilizerError> {
        let raw: CodeJson =
            serde_json::from_str(s).map_err(|e| StabilizerError::Json(e.to_string()))?;
        if raw.sites.len() != raw.n {
            return Err(StabilizerError::SiteCount {
                expected: raw.n,
                got: raw.sites.len(),
            });
        }
        let mut generators = Vec::with_capacity(raw.generators.len());
        for (gi, g) in raw.generators.iter().enumerate() {
            let xz = BitVec::from_bitstring(g).ok_or_else(|| {
                StabilizerError::Json(format!("generator {gi} is not a 0/1 string"))
            })?;
            if xz.len() != 2 * raw.n {
                return Err(StabilizerError::GeneratorLength {
                    generator: gi,
                    expected: 2 * raw.n,
                    got: xz.len(),
                });
            }
            generators.push(Pauli::from_xz(raw.n, xz));
        }
        Self::new(
            raw.lattice,
            raw.sites.iter().map(|&[r, c]| (r, c)).collect(),
            generators,
            raw.w,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    n: usize,
    w: usize,
    lattice: Lattice,
    generators: Vec<String>,
    sites: Vec<[usize; 2]>,
}

/// All size-`size` subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut current: Vec<usize> = (0..size).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - size {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Aggregate result of checking the entropic erasure condition over every
/// qubit subset up to a size cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact1SweepReport {
    pub max_region_size: usize,
    pub regions: usize,
    pub correctable: usize,
    /// Regions where the condition was applicable but failed. The paper
    /// proves this is impossible, so any entry flags an implementation bug.
    pub violations: usize,
    pub first_violation: Option<Vec<usize>>,
}

/// Evaluates `verify_fact1` on every qubit subset with `|M| <= max_size`.
pub fn fact1_sweep(code: &StabilizerCode, max_size: usize) -> Fact1SweepReport {
    let n = code.num_qubits();
    let mut regions = 0usize;
    let mut correctable = 0usize;
    let mut violations = 0usize;
    let mut first_violation = None;
    for size in 0..=max_size.min(n) {
        for subset in subsets_of_size(n, size) {
            regions += 1;
            let report = code.verify_fact1_qubits(&subset);
            if report.correctable {
                correctable += 1;
            }
            if report.holds == Some(false) {
                violations += 1;
                if first_violation.is_none() {
                    first_violation = Some(subset);
                }
            }
        }
    }
    Fact1SweepReport {
        max_region_size: max_size,
        regions,
        correctable,
        violations,
        first_violation,
    }
}

/// Smallest subset size (up to `max_size`) at which some region stops being
/// correctable; by the erasure semantics this equals the code distance
/// whenever it is within range.
pub fn min_noncorrectable_size(code: &StabilizerCode, max_size: usize) -> Option<usize> {
    let n = code.num_qubits();
    for size in 1..=max_size.min(n) {
        let any_bad = subsets_of_size(n, size)
            .par_iter()
            .any(|subset| !code.correctable_qubits(subset));
        if any_bad {
            return Some(size);
        }
    }
    None
}

/// Exact integer entropies of a region of the maximally mixed encoded state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntropyReport {
    pub region: Region,
    pub region_qubits: usize,
    pub s_m: u64,
    pub s_complement: u64,
    pub s_lambda: u64,
    /// S(M|M̄) = S(Λ) − S(M̄).
    pub s_conditional: i64,
}

/// Both sides of the entropic erasure condition on one region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact1Report {
    pub correctable: bool,
    pub s_m: u64,
    pub s_complement: u64,
    /// S(M|M̄), to be compared with −S(M).
    pub conditional: i64,
    /// None when the region is not correctable (condition not applicable).
    pub holds: Option<bool>,
}

/// Entropy-chain evaluation over an ABC partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub a_correctable: bool,
    pub b_correctable: bool,
    /// True when a precondition failed and the chain was not asserted.
    pub skipped: bool,
    pub s_a: i64,
    pub s_b: i64,
    pub s_c: i64,
    pub k: i64,
    pub eq8: Option<bool>,
    pub eq9: Option<bool>,
    pub k_le_s_c: Option<bool>,
    pub s_c_le_c: bool,
}

/// Union-correctability evaluation for two separated regions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionReport {
    pub separated: bool,
    pub m1_correctable: bool,
    pub m2_correctable: bool,
    pub boundary_correctable: bool,
    pub preconditions_met: bool,
    /// Evaluated only when the preconditions hold.
    pub union_correctable: Option<bool>,
}
