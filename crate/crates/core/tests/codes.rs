//! Cross-module invariants: correctability structure on constructed codes,
//! distance consistency, and the file-format flows the CLI relies on.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tradeoff_core::cacode::{correctable_region_classical, CaCode};
use tradeoff_core::lattice::{boundary, boundary_minus, boundary_plus, Region};
use tradeoff_core::stabilizer::{min_noncorrectable_size, StabilizerCode};
use tradeoff_core::surface::{planar_surface_code, toric_code};

#[test]
fn correctability_is_monotone_under_inclusion() {
    let code = planar_surface_code(3).unwrap();
    let n = code.num_qubits();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let mut qubits: Vec<usize> = (0..n).collect();
        qubits.shuffle(&mut rng);
        let large = rng.gen_range(1..=6);
        let small = rng.gen_range(0..=large);
        let outer = &qubits[..large];
        let inner = &qubits[..small];
        if code.correctable_qubits(outer) {
            assert!(
                code.correctable_qubits(inner),
                "inner {inner:?} not correctable though outer {outer:?} is"
            );
        }
    }
}

#[test]
fn no_cloning_on_planar_2() {
    let code = planar_surface_code(2).unwrap();
    let n = code.num_qubits();
    for mask in 0u32..(1 << n) {
        let m: Vec<usize> = (0..n).filter(|q| (mask >> q) & 1 == 1).collect();
        let comp: Vec<usize> = (0..n).filter(|q| (mask >> q) & 1 == 0).collect();
        assert!(!(code.correctable_qubits(&m) && code.correctable_qubits(&comp)));
    }
}

#[test]
fn smallest_noncorrectable_region_is_the_distance() {
    for (code, d) in [
        (planar_surface_code(2).unwrap(), 2),
        (planar_surface_code(3).unwrap(), 3),
        (toric_code(2).unwrap(), 2),
        (toric_code(3).unwrap(), 3),
    ] {
        assert_eq!(min_noncorrectable_size(&code, 3), Some(d));
        assert_eq!(code.min_distance_bruteforce().unwrap(), d as u64);
    }
}

#[test]
fn larger_codes_have_no_small_logicals() {
    // Region sweep in place of brute force above the enumeration guard.
    for code in [planar_surface_code(4).unwrap(), toric_code(4).unwrap()] {
        assert_eq!(min_noncorrectable_size(&code, 3), None);
    }
}

#[test]
fn fact1_region_api_on_planar() {
    let code = planar_surface_code(3).unwrap();
    let lat = code.lattice();
    // A 2-qubit region by sites.
    let m = Region::new(lat, [lat.index(0, 0), lat.index(2, 2)]).unwrap();
    let report = code.verify_fact1(&m).unwrap();
    assert!(report.correctable);
    assert_eq!(report.holds, Some(true));
}

#[test]
fn union_check_skips_adjacent_regions() {
    let code = planar_surface_code(3).unwrap();
    let m1 = code.region_of_qubits(&[0]);
    let m2 = code.region_of_qubits(&[1]);
    let report = code.union_lemma_check(&m1, &m2).unwrap();
    assert!(!report.separated);
    assert!(!report.preconditions_met);
    assert_eq!(report.union_correctable, None);
}

#[test]
fn boundary_operators_on_code_lattices() {
    let code = toric_code(3).unwrap();
    let lat = code.lattice();
    let m = Region::new(lat, [lat.index(0, 1)]).unwrap();
    let w = code.interaction_range();
    let plus = boundary_plus(&m, w);
    let minus = boundary_minus(&m, w);
    assert!(plus.is_disjoint(&m));
    assert_eq!(minus.len(), 1);
    assert_eq!(boundary(&m, w).len(), plus.len() + minus.len());
}

#[test]
fn surface_codes_roundtrip_through_json() {
    for code in [planar_surface_code(3).unwrap(), toric_code(2).unwrap()] {
        let reloaded = StabilizerCode::from_json(&code.to_json()).unwrap();
        assert_eq!(reloaded, code);
        assert_eq!(reloaded.k(), code.k());
        assert_eq!(
            reloaded.min_distance_bruteforce().unwrap(),
            code.min_distance_bruteforce().unwrap()
        );
    }
}

#[test]
fn ca_code_rank_matches_encoded_bits() {
    for l in [5usize, 7, 9] {
        let code = CaCode::new(l).unwrap();
        let h = code.parity_check_matrix();
        assert_eq!(code.n() - h.rank(), code.k());
    }
}

#[test]
fn ca_small_regions_are_correctable() {
    // d(5) = 11: random regions below the distance never hold a codeword.
    let code = CaCode::new(5).unwrap();
    let lat = code.lattice();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let mut sites: Vec<usize> = (0..lat.num_sites()).collect();
        sites.shuffle(&mut rng);
        let m = Region::new(lat, sites[..10].iter().copied()).unwrap();
        assert!(correctable_region_classical(&code, &m));
    }
}
