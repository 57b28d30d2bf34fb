//! Classical codes generated by the rule-90 cellular automaton.
//!
//! A codeword is a full space-time history of the linear automaton
//! `x_i -> x_{i-1} XOR x_{i+1}` on a ring of odd size L, run for L time
//! steps, with the gauge constraint that site 0 of the first row is zero.
//! The code encodes k = L-1 bits into n = L² bits and its distance is
//! probed two ways: the single-seed codeword weight d' (streaming, O(L)
//! memory) and exhaustive minimization over all 2^(L-1) messages.

use crate::gf2::{BitMatrix, BitVec};
use crate::lattice::{Lattice, Region};
use num_bigint::BigUint;
use rayon::prelude::*;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

/// Default cap on exhaustive enumeration (2^(L-1) messages).
pub const DEFAULT_ENUMERATION_GUARD: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaError {
    /// The construction requires an odd lattice side.
    EvenSide(usize),
    /// Side below the smallest admissible code (L = 3).
    SideTooSmall(usize),
    /// Exhaustive search refused; pass a larger guard to force it.
    EnumerationTooLarge { side: usize, guard: usize },
    /// Message length must be L-1.
    MessageLength { expected: usize, got: usize },
    /// Exponent fits need at least two strictly positive points.
    FitDomain(String),
}

impl fmt::Display for CaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaError::EvenSide(l) => write!(f, "lattice side must be odd, got {l}"),
            CaError::SideTooSmall(l) => write!(f, "lattice side must be at least 3, got {l}"),
            CaError::EnumerationTooLarge { side, guard } => write!(
                f,
                "exhaustive search over 2^{} messages refused (L={side} > guard {guard})",
                side - 1
            ),
            CaError::MessageLength { expected, got } => {
                write!(f, "message must have {expected} bits, got {got}")
            }
            CaError::FitDomain(msg) => write!(f, "fit rejected: {msg}"),
        }
    }
}

impl std::error::Error for CaError {}

fn check_side(l: usize) -> Result<(), CaError> {
    if l.is_multiple_of(2) {
        Err(CaError::EvenSide(l))
    } else if l < 3 {
        Err(CaError::SideTooSmall(l))
    } else {
        Ok(())
    }
}

/// The automaton code on the L×L lattice (space axis periodic, time open).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaCode {
    side: usize,
}

impl CaCode {
    pub fn new(side: usize) -> Result<Self, CaError> {
        check_side(side)?;
        Ok(Self { side })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Number of bits, n = L².
    pub fn n(&self) -> usize {
        self.side * self.side
    }

    /// Number of encoded bits, k = L-1.
    pub fn k(&self) -> usize {
        self.side - 1
    }

    /// The code lattice: row t = time slice t, column i = ring position i.
    pub fn lattice(&self) -> Lattice {
        Lattice {
            width: self.side,
            height: self.side,
            periodic_x: true,
            periodic_y: false,
        }
    }

    /// Parity-check matrix: one row per transition constraint
    /// `x^{t+1}_i + x^t_{i-1} + x^t_{i+1} = 0` plus the gauge row `x^0_0 = 0`.
    pub fn parity_check_matrix(&self) -> BitMatrix {
        let l = self.side;
        let n = self.n();
        let site = |t: usize, i: usize| t * l + i;
        let mut h = BitMatrix::zeros(0, n);
        for t in 0..l - 1 {
            for i in 0..l {
                let mut row = BitVec::zeros(n);
                row.set(site(t + 1, i), true);
                row.flip(site(t, (i + l - 1) % l));
                row.flip(site(t, (i + 1) % l));
                h.push_row(row);
            }
        }
        let mut gauge = BitVec::zeros(n);
        gauge.set(site(0, 0), true);
        h.push_row(gauge);
        h
    }
}

/// A full automaton history, one [`BitVec`] per time slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaCodeword {
    width: usize,
    rows: Vec<BitVec>,
    periodic: bool,
}

impl CaCodeword {
    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Total Hamming weight of the history.
    pub fn weight(&self) -> u64 {
        self.rows.iter().map(|r| r.weight() as u64).sum()
    }

    /// Sites carrying a set bit, on the code lattice (`site = t*width + i`).
    pub fn support(&self, lattice: Lattice) -> Region {
        let mut sites = Vec::new();
        for (t, row) in self.rows.iter().enumerate() {
            for i in row.ones() {
                sites.push(t * self.width + i);
            }
        }
        Region::new(lattice, sites).expect("support sites in range")
    }

    /// Checks the transition rule between consecutive rows (and the gauge
    /// constraint in periodic mode).
    pub fn validate(&self) -> bool {
        let gauge_ok = !self.periodic || !self.rows[0].get(0);
        gauge_ok
            && self
                .rows
                .windows(2)
                .all(|pair| evolve_row(&pair[0], self.periodic) == pair[1])
    }
}

/// One automaton step: `out_i = row_{i-1} XOR row_{i+1}`. Periodic wraps the
/// indices; otherwise out-of-range neighbors read as zero (windowed mode).
pub fn evolve_row(row: &BitVec, periodic: bool) -> BitVec {
    let l = row.len();
    assert!(l >= 1, "row must be nonempty");
    let words = row.words();
    let nw = words.len();
    let mut out_words = vec![0u64; nw];
    // Contribution of the left neighbor: bit i-1 moves up to bit i.
    let mut carry = 0u64;
    for i in 0..nw {
        out_words[i] ^= (words[i] << 1) | carry;
        carry = words[i] >> 63;
    }
    // Contribution of the right neighbor: bit i+1 moves down to bit i.
    let mut carry = 0u64;
    for i in (0..nw).rev() {
        out_words[i] ^= (words[i] >> 1) | (carry << 63);
        carry = words[i] & 1;
    }
    let mut out = BitVec::from_words(l, out_words);
    if periodic {
        if row.get(l - 1) {
            out.flip(0);
        }
        if row.get(0) {
            out.flip(l - 1);
        }
    }
    out
}

/// Expands a message (the first-row bits `x^0_1 .. x^0_{L-1}`; `x^0_0` is
/// gauge-fixed to zero) into the full L×L history.
pub fn codeword_from_message(l: usize, message: &BitVec) -> Result<CaCodeword, CaError> {
    check_side(l)?;
    if message.len() != l - 1 {
        return Err(CaError::MessageLength {
            expected: l - 1,
            got: message.len(),
        });
    }
    let mut first = BitVec::zeros(l);
    for i in message.ones() {
        first.set(i + 1, true);
    }
    let mut rows = Vec::with_capacity(l);
    rows.push(first);
    for _ in 0..l - 1 {
        let next = evolve_row(rows.last().unwrap(), true);
        rows.push(next);
    }
    Ok(CaCodeword {
        width: l,
        rows,
        periodic: true,
    })
}

/// The open-strip history grown from an arbitrary initial row (used for the
/// semi-infinite lattice: the strip must be wide enough that the light cone
/// never reaches the edges).
pub fn windowed_history(initial: &BitVec, steps: usize) -> CaCodeword {
    let mut rows = Vec::with_capacity(steps);
    rows.push(initial.clone());
    for _ in 1..steps {
        let next = evolve_row(rows.last().unwrap(), false);
        rows.push(next);
    }
    CaCodeword {
        width: initial.len(),
        rows,
        periodic: false,
    }
}

/// Weight d' of the codeword grown from a single active cell
/// (`x^0_i = delta_{i,1}`), streaming two rows only.
pub fn single_seed_weight(l: usize) -> Result<u64, CaError> {
    check_side(l)?;
    let mut row = BitVec::zeros(l);
    row.set(1, true);
    let mut total = 1u64;
    for _ in 0..l - 1 {
        row = evolve_row(&row, true);
        total += row.weight() as u64;
    }
    Ok(total)
}

#[inline]
fn evolve_word(row: u64, l: usize, mask: u64) -> u64 {
    let left = ((row << 1) | (row >> (l - 1))) & mask;
    let right = ((row >> 1) | ((row & 1) << (l - 1))) & mask;
    left ^ right
}

/// History weight for a single-word initial row, pruned against `bound`.
/// Returns `None` as soon as the running weight reaches the bound.
#[inline]
fn bounded_word_weight(l: usize, first_row: u64, bound: u64) -> Option<u64> {
    let mask = (1u64 << l) - 1;
    let mut row = first_row & mask;
    let mut w = row.count_ones() as u64;
    if w >= bound {
        return None;
    }
    for _ in 0..l - 1 {
        row = evolve_word(row, l, mask);
        w += row.count_ones() as u64;
        if w >= bound {
            return None;
        }
    }
    Some(w)
}

/// Exact code distance by enumerating all 2^(L-1)-1 nonzero messages with
/// the default guard of L <= 25.
pub fn exhaustive_distance(l: usize) -> Result<u64, CaError> {
    exhaustive_distance_with_guard(l, DEFAULT_ENUMERATION_GUARD)
}

/// Exact code distance with an explicit enumeration guard.
///
/// Messages are walked in reflected-binary order, chunked across a worker
/// pool with a shared running minimum (the result is order-independent).
/// The minimum is seeded with d', which the single-seed message realizes,
/// so pruning against it keeps the search exact.
pub fn exhaustive_distance_with_guard(l: usize, guard: usize) -> Result<u64, CaError> {
    check_side(l)?;
    if l > guard {
        return Err(CaError::EnumerationTooLarge { side: l, guard });
    }
    assert!(l <= 63, "message enumeration supports L <= 63");
    let total = 1u64 << (l - 1);
    let best = AtomicU64::new(single_seed_weight(l)?);
    let chunk = 1u64 << 14;
    let chunks = total.div_ceil(chunk);
    (0..chunks).into_par_iter().for_each(|ci| {
        let start = (ci * chunk).max(1);
        let end = ((ci + 1) * chunk).min(total);
        let mut local = best.load(Ordering::Relaxed);
        for j in start..end {
            let message = j ^ (j >> 1);
            if let Some(w) = bounded_word_weight(l, message << 1, local) {
                local = w;
                best.fetch_min(w, Ordering::Relaxed);
            }
            if j & 0xfff == 0 {
                local = local.min(best.load(Ordering::Relaxed));
            }
        }
    });
    Ok(best.load(Ordering::Relaxed))
}

/// Hamming weight of the single-seed history over 2^p rows on the
/// semi-infinite lattice, by direct windowed simulation. The strip width
/// 2^(p+1)+1 keeps the light cone away from the edges.
pub fn sierpinski_weight_simulated(p: u32) -> BigUint {
    assert!(p <= 14, "simulated path is exponential in p");
    let t_max = 1usize << p;
    let width = 2 * t_max + 1;
    let mut row = BitVec::zeros(width);
    row.set(t_max, true);
    let mut total: u64 = 1;
    for _ in 0..t_max - 1 {
        row = evolve_row(&row, false);
        total += row.weight() as u64;
    }
    BigUint::from(total)
}

/// The same weight via the popcount sum `sum_{t<2^p} 2^popcount(t)`:
/// exactly C(p, j) values of t have popcount j, so the sum collapses to
/// `sum_j C(p, j) 2^j`, evaluated in big-integer arithmetic.
pub fn sierpinski_weight_closed_form(p: u32) -> BigUint {
    let mut pascal: Vec<BigUint> = vec![BigUint::from(1u32)];
    for _ in 0..p {
        let mut next = Vec::with_capacity(pascal.len() + 1);
        next.push(BigUint::from(1u32));
        for i in 0..pascal.len() - 1 {
            next.push(&pascal[i] + &pascal[i + 1]);
        }
        next.push(BigUint::from(1u32));
        pascal = next;
    }
    let mut total = BigUint::ZERO;
    for (j, coeff) in pascal.iter().enumerate() {
        total += coeff << j;
    }
    total
}

/// Single-seed weight over 2^p rows. Computed by the closed-form sum; for
/// small p the windowed simulation is run as well and must agree.
pub fn sierpinski_weight(p: u32) -> BigUint {
    let closed = sierpinski_weight_closed_form(p);
    if p <= 10 {
        assert_eq!(
            sierpinski_weight_simulated(p),
            closed,
            "simulation and closed form disagree at p={p}"
        );
    }
    closed
}

/// Counts which of the four sublattices (classified by (i+t) mod 4 and
/// t mod 2) hold at least one set bit of a windowed history.
///
/// The history must be supported on the even sublattice (i+t even).
pub fn sublattice_occupancy(cw: &CaCodeword) -> usize {
    let mut occupied = [false; 4];
    for (t, row) in cw.rows().iter().enumerate() {
        for i in row.ones() {
            assert!(
                (i + t) % 2 == 0,
                "support must lie on the even sublattice (found bit at i={i}, t={t})"
            );
            let class = ((i + t) % 4) / 2 + 2 * (t % 2);
            occupied[class] = true;
        }
    }
    occupied.iter().filter(|&&b| b).count()
}

/// True iff no nonzero codeword is supported inside `m`: the parity-check
/// system extended with `x_u = 0` for every site outside `m` must have a
/// trivial nullspace.
pub fn correctable_region_classical(code: &CaCode, m: &Region) -> bool {
    assert_eq!(m.lattice(), code.lattice(), "region lattice mismatch");
    let n = code.n();
    let mut h = code.parity_check_matrix();
    for u in 0..n {
        if !m.contains(u) {
            let mut row = BitVec::zeros(n);
            row.set(u, true);
            h.push_row(row);
        }
    }
    h.rank() == n
}

/// Least-squares slope of log y against log x.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<f64, CaError> {
    if points.len() < 2 {
        return Err(CaError::FitDomain(format!(
            "need at least 2 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, y)) = points.iter().find(|(x, y)| *x <= 0.0 || *y <= 0.0) {
        return Err(CaError::FitDomain(format!(
            "nonpositive point ({x}, {y})"
        )));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / logs.len() as f64;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / logs.len() as f64;
    let num: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if den == 0.0 {
        return Err(CaError::FitDomain("all x values equal".into()));
    }
    Ok(num / den)
}
