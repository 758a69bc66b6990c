mod common;

use std::fs;
use std::path::PathBuf;

use spectral_tsp::bounds::{phi_symmetric, report};
use spectral_tsp::instances::random_symmetric;
use spectral_tsp::solvers::{brute_force, held_karp, tour_length};
use spectral_tsp::tsplib::{load_file, load_with_optimum, parse_tsplib, write_full_matrix, WeightFormat, WeightKind};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/tsplib")
        .join(name)
}

fn read_tour(name: &str) -> Vec<usize> {
    let text = fs::read_to_string(fixture(name)).unwrap();
    text.lines()
        .skip_while(|l| l.trim() != "TOUR_SECTION")
        .skip(1)
        .map(|l| l.trim().parse::<i64>().unwrap())
        .take_while(|&v| v != -1)
        .map(|v| v as usize - 1)
        .collect()
}

#[test]
fn gr17_matches_published_optimum() {
    let inst = load_file(&fixture("gr17.tsp"), Some(&fixture("gr17.opt"))).unwrap();
    assert_eq!(inst.name, "gr17");
    assert_eq!(inst.dimension, 17);
    assert_eq!(inst.weight_kind, WeightKind::Explicit);
    assert_eq!(inst.weight_format, Some(WeightFormat::LowerDiagRow));
    assert!(inst.distances.is_symmetric(0.0));
    assert_eq!(inst.distances[(1, 0)], 633.0);
    assert_eq!(inst.distances[(0, 16)], inst.distances[(16, 0)]);
    let tour = held_karp(&inst.distances).unwrap();
    assert_eq!(tour.length, 2085.0);
    assert_eq!(inst.optimum, Some(2085));
    let r = report(&inst.distances).unwrap();
    assert!(r.psd);
    assert!((r.phi_symmetric.unwrap() / 2085.0 - 0.591).abs() <= 0.002);
}

// Reference values below come from a standalone script that reimplements
// each distance rule. For GEO it uses π = 3.141592 as in the format's
// reference code; with the full-precision π the matrix sum is 3390984242.
#[test]
fn att532_pseudo_euclidean() {
    let inst = parse_tsplib(&fs::read_to_string(fixture("att532.tsp")).unwrap()).unwrap();
    let d = &inst.distances;
    assert_eq!((inst.dimension, inst.weight_kind), (532, WeightKind::Att));
    assert!(d.as_slice().iter().all(|v| v.fract() == 0.0));
    assert_eq!((d[(0, 1)], d[(1, 531)], d[(5, 17)]), (109.0, 1947.0, 119.0));
    assert_eq!(d.sum(), 271_932_912.0);
}

#[test]
fn gr666_geographic_optimal_tour() {
    let inst = parse_tsplib(&fs::read_to_string(fixture("gr666.tsp")).unwrap()).unwrap();
    let d = &inst.distances;
    assert_eq!(inst.weight_kind, WeightKind::Geo);
    assert_eq!((d[(0, 1)], d[(1, 665)], d[(5, 17)]), (2084.0, 17955.0, 5011.0));
    assert_eq!(d.sum(), 3_390_984_018.0);
    let optimum = fs::read_to_string(fixture("gr666.opt")).unwrap();
    let inst = load_with_optimum(&fs::read_to_string(fixture("gr666.tsp")).unwrap(), &optimum).unwrap();
    assert_eq!(
        tour_length(&inst.distances, &read_tour("gr666.opt.tour")).unwrap(),
        inst.optimum.unwrap() as f64
    );
}

#[test]
fn pcb442_euclidean_optimal_tour() {
    let inst = load_file(&fixture("pcb442.tsp"), Some(&fixture("pcb442.opt"))).unwrap();
    let d = &inst.distances;
    assert_eq!(inst.weight_kind, WeightKind::Euc2d);
    assert_eq!((d[(0, 1)], d[(1, 441)], d[(5, 17)]), (100.0, 539.0, 1200.0));
    assert_eq!(d.sum(), 340_721_328.0);
    assert_eq!(tour_length(d, &read_tour("pcb442.opt.tour")).unwrap(), 50778.0);
    assert!(phi_symmetric(d).unwrap() <= 50778.0);
}

#[test]
fn synthetic_sidecar_from_brute_force() {
    let d = random_symmetric(5, 11).map(|v| (v * 100.0).round());
    let opt = brute_force(&d).unwrap().length as u64;
    let inst = load_with_optimum(&write_full_matrix("syn5", &d), &format!("optimum: {opt}\n")).unwrap();
    assert_eq!(inst.distances, d);
    assert_eq!(held_karp(&inst.distances).unwrap().length, inst.optimum.unwrap() as f64);
}

#[test]
fn missing_file_is_io_error() {
    let err = load_file(&fixture("does-not-exist.tsp"), None).unwrap_err();
    assert!(err.to_string().contains("does-not-exist.tsp"));
}

mod roundtrip {
    use proptest::prelude::*;
    use spectral_tsp::tsplib::{parse_tsplib, write_full_matrix};
    use spectral_tsp::DenseMatrix;

    proptest! {
        #[test]
        fn full_matrix_roundtrip(n in 2usize..9, values in proptest::collection::vec(-1e6f64..1e6, 36)) {
            let d = DenseMatrix::from_fn(n, |i, j| {
                if i == j { 0.0 } else { values[(i.min(j) * 8 + i.max(j)) % values.len()] }
            }).unwrap();
            let parsed = parse_tsplib(&write_full_matrix("p", &d)).unwrap();
            prop_assert_eq!(parsed.distances, d);
        }
    }
}
