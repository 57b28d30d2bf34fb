//! Independent entropy oracle: builds the maximally mixed encoded state as
//! a dense density matrix, reduces it by partial trace, and diagonalizes.
//!
//! Works for codes whose generators avoid Y (X and Z matrices are real),
//! which covers every code the oracle is pinned to. Deliberately naive:
//! nothing here shares a code path with the rank-formula implementation.

use nalgebra::DMatrix;
use tradeoff_core::stabilizer::StabilizerCode;

/// Dense matrix of one phase-free Pauli row: `P|b> = (-1)^(z.b) |b xor x>`.
fn pauli_matrix(n: usize, x_bits: u64, z_bits: u64) -> DMatrix<f64> {
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let row = col ^ x_bits as usize;
        let sign = if ((col as u64) & z_bits).count_ones().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        m[(row, col)] = sign;
    }
    m
}

/// rho = Pi / 2^k with Pi the product of the (I + g)/2 generator projectors.
pub fn maximally_mixed_encoded(code: &StabilizerCode) -> DMatrix<f64> {
    let n = code.num_qubits();
    assert!(n <= 8, "dense oracle is exponential in n");
    let dim = 1usize << n;
    let mut pi = DMatrix::<f64>::identity(dim, dim);
    for gen in code.generators().rows() {
        let mut x_bits = 0u64;
        let mut z_bits = 0u64;
        for q in 0..n {
            let x = gen.get(q);
            let z = gen.get(n + q);
            assert!(!(x && z), "oracle restricted to Y-free generators");
            if x {
                x_bits |= 1 << q;
            }
            if z {
                z_bits |= 1 << q;
            }
        }
        let g = pauli_matrix(n, x_bits, z_bits);
        pi = (&pi + &pi * g) * 0.5;
    }
    let trace = pi.trace();
    let expected = (1u64 << code.k()) as f64;
    assert!(
        (trace - expected).abs() < 1e-9,
        "projector trace {trace} != 2^k = {expected}"
    );
    pi / trace
}

/// Partial trace onto `keep` qubits followed by eigendecomposition;
/// returns the von Neumann entropy in bits.
pub fn entropy_bits(rho: &DMatrix<f64>, n: usize, keep: &[usize]) -> f64 {
    let others: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let dim_keep = 1usize << keep.len();
    let dim_other = 1usize << others.len();
    let scatter = |bits: usize, positions: &[usize]| -> usize {
        positions
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &q)| acc | (((bits >> j) & 1) << q))
    };
    let mut reduced = DMatrix::<f64>::zeros(dim_keep, dim_keep);
    for a in 0..dim_keep {
        for b in 0..dim_keep {
            let mut acc = 0.0;
            for c in 0..dim_other {
                let row = scatter(a, keep) | scatter(c, &others);
                let col = scatter(b, keep) | scatter(c, &others);
                acc += rho[(row, col)];
            }
            reduced[(a, b)] = acc;
        }
    }
    let eigenvalues = reduced.symmetric_eigen().eigenvalues;
    let mut entropy = 0.0;
    for &lambda in eigenvalues.iter() {
        if lambda > 1e-12 {
            entropy -= lambda * lambda.log2();
        }
    }
    entropy
}
