mod common;

use covering_type::chain::{same_betti, ChainData};
use covering_type::cohomology::{coboundary, cup_1_1, h1_cocycle_basis, Cochain};
use covering_type::gf2::{in_span, subspace_intersection};
use covering_type::io::{parse_complex, write_complex};
use covering_type::reduction::collapse_all;
use covering_type::surface::{check_closed_surface, classify_surface, rho};
use covering_type::{betti_numbers, has_property_a, Gf2Matrix, Gf2Vector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{bundled_surfaces, grow, oracle_betti, random_complex, Growth};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), cols), rows).prop_map(move |bits| {
        Gf2Matrix::from_rows(cols, bits.iter().map(|r| Gf2Vector::from_bits(r)).collect()).unwrap()
    })
}

fn sized_matrix() -> impl Strategy<Value = Gf2Matrix> {
    (0usize..9, 0usize..70).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Every vector of the span, by enumerating all subsets.
fn span_elements(vs: &[Gf2Vector], len: usize) -> Vec<Gf2Vector> {
    (0u32..(1 << vs.len()))
        .map(|mask| {
            let mut acc = Gf2Vector::zeros(len);
            for (i, v) in vs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc.xor_assign(v);
                }
            }
            acc
        })
        .collect()
}

proptest! {
    #[test]
    fn rank_nullity(a in sized_matrix()) {
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), a.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).unwrap().is_zero());
        }
        prop_assert_eq!(a.image_basis().len(), a.rank());
    }

    #[test]
    fn solve_finds_preimages(a in sized_matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Gf2Vector::from_bits(&(0..a.cols()).map(|_| rand::Rng::gen(&mut rng)).collect::<Vec<bool>>());
        let b = a.mul_vec(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn intersection_matches_enumeration(
        a in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 0..5),
        b in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 0..5),
    ) {
        let a: Vec<Gf2Vector> = a.iter().map(|v| Gf2Vector::from_bits(v)).collect();
        let b: Vec<Gf2Vector> = b.iter().map(|v| Gf2Vector::from_bits(v)).collect();
        let meet = subspace_intersection(&a, &b).unwrap();
        let span_b = span_elements(&b, 7);
        let expected: std::collections::BTreeSet<Vec<usize>> = span_elements(&a, 7)
            .into_iter()
            .filter(|v| span_b.contains(v))
            .map(|v| v.ones().collect())
            .collect();
        let got: std::collections::BTreeSet<Vec<usize>> =
            span_elements(&meet, 7).into_iter().map(|v| v.ones().collect()).collect();
        prop_assert_eq!(got, expected);
        for v in &meet {
            prop_assert!(in_span(&a, v) && in_span(&b, v));
        }
    }

    #[test]
    fn betti_matches_oracle_and_euler(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(&mut rng, n, 8, 3);
        k.check_invariants().unwrap();
        let b = betti_numbers(&k);
        prop_assert_eq!(&b, &oracle_betti(&k));
        let alternating: i64 = b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(alternating, k.euler_characteristic());
    }

    #[test]
    fn collapses_preserve_homology(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(&mut rng, n, 6, 3);
        let (l, trace) = collapse_all(&k);
        prop_assert!(l.free_faces().is_empty());
        prop_assert!(same_betti(&betti_numbers(&l), &betti_numbers(&k)));
        trace.verify().unwrap();
        prop_assert_eq!(trace.replay(&k).unwrap(), l);
    }

    #[test]
    fn file_round_trip(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(&mut rng, n, 8, 3);
        prop_assert_eq!(parse_complex(&write_complex(&k, None)).unwrap(), k);
    }

    #[test]
    fn rho_is_least_solution(chi in -1_000_000i64..=2) {
        let n = rho(chi).unwrap() as i128;
        let ok = |n: i128| 2 * n - 7 >= 0 && (2 * n - 7) * (2 * n - 7) >= 49 - 24 * i128::from(chi);
        prop_assert!(ok(n));
        prop_assert!(!ok(n - 1));
    }

    #[test]
    fn cup_classes_ignore_coboundaries(seed in any::<u64>(), which in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, k, _) = bundled_surfaces().swap_remove(which);
        let basis = h1_cocycle_basis(&k);
        let cycles = ChainData::new(&k).homology_basis_vectors(2);
        let combo = |rng: &mut ChaCha8Rng| {
            let mut v = Gf2Vector::zeros(k.count(1));
            for c in &basis {
                if rand::Rng::gen(rng) {
                    v.xor_assign(&c.values);
                }
            }
            Cochain::new(&k, 1, v).unwrap()
        };
        let alpha = combo(&mut rng);
        let beta = combo(&mut rng);
        let f = Cochain::new(&k, 0, Gf2Vector::from_bits(&(0..k.count(0)).map(|_| rand::Rng::gen(&mut rng)).collect::<Vec<bool>>())).unwrap();
        let df = coboundary(&k, &f).unwrap();
        let shifted = Cochain::new(&k, 1, &alpha.values + &df.values).unwrap();
        let pair = |a: &Cochain, b: &Cochain| -> Vec<bool> {
            let c = cup_1_1(&k, a, b).unwrap();
            cycles.iter().map(|z| c.evaluate(z)).collect()
        };
        prop_assert_eq!(pair(&alpha, &beta), pair(&shifted, &beta));
        prop_assert_eq!(pair(&beta, &alpha), pair(&beta, &shifted));
    }

    #[test]
    fn subdivisions_stay_surfaces(seed in any::<u64>(), which in 0usize..6, steps in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, mut k, class) = bundled_surfaces().swap_remove(which);
        let mut counter = 0;
        for i in 0..steps {
            let how = if i % 2 == 0 { Growth::SubdivideTriangle } else { Growth::SubdivideEdge };
            k = grow(&mut rng, &k, how, &mut counter);
        }
        prop_assert!(check_closed_surface(&k).verdict);
        prop_assert_eq!(classify_surface(&k).unwrap(), class);
        prop_assert!(has_property_a(&k));
    }
}
