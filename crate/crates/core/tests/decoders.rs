use isdecode::bounds::ball_volume;
use isdecode::code::Messages;
use isdecode::decode::CosetTableDecoder;
use isdecode::{fixtures, md_decode, unique_decode, FieldSpec, FqMatrix, FqVector, LinearCode, PatternEnumerator};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_codes() -> Vec<LinearCode> {
    vec![fixtures::hamming_7_4(), fixtures::code_5_2(), fixtures::repetition(5)]
}

#[test]
fn completeness_within_radius_t() {
    for code in small_codes() {
        let t = code.unique_radius().unwrap();
        let n = code.n();
        for (_, c) in code.codewords().unwrap() {
            for e in PatternEnumerator::new(code.field(), n, t) {
                let y = c.add(&e).unwrap();
                let out = unique_decode(&code, &y).unwrap();
                assert_eq!(out.codeword(), Some(&c));
                assert_eq!(out.error(), Some(&e));
            }
        }
    }
}

#[test]
fn soundness_and_work_bound_on_every_word() {
    for code in small_codes() {
        let t = code.unique_radius().unwrap();
        let bound = ball_volume(code.k(), t.min(code.k()), code.q()).unwrap();
        for y in Messages::new(code.field(), code.n()) {
            let out = unique_decode(&code, &y).unwrap();
            let inspected = BigUint::from(out.stats.patterns_inspected);
            assert!(inspected <= bound);
            match out.codeword() {
                Some(c) => {
                    assert!(code.is_codeword(c).unwrap());
                    assert!(out.error_weight().unwrap() <= t);
                    assert_eq!(&c.add(out.error().unwrap()).unwrap(), &y);
                }
                None => assert_eq!(inspected, bound),
            }
        }
    }
}

#[test]
fn perfect_codes_have_covering_radius_t() {
    for code in [fixtures::hamming_7_4(), fixtures::golay_23_12(), fixtures::repetition(3), fixtures::repetition(7)] {
        let rho = code.covering_radius().unwrap();
        assert_eq!(rho, code.unique_radius().unwrap());
    }
    // not perfect: covering radius strictly above t
    assert_eq!(fixtures::code_5_2().covering_radius().unwrap(), 2);
}

#[test]
fn md_matches_coset_table_and_is_monotone_in_radius() {
    for code in small_codes() {
        let table = CosetTableDecoder::new(&code).unwrap();
        let rho = table.covering_radius();
        for y in Messages::new(code.field(), code.n()) {
            let reference = table.decode(&code, &y).unwrap().error_weight().unwrap();
            assert_eq!(md_decode(&code, &y, rho).unwrap().error_weight(), Some(reference));
            let weights: Vec<usize> = (0..=code.k())
                .map(|r| md_decode(&code, &y, r).unwrap().error_weight().unwrap())
                .collect();
            assert!(weights.windows(2).all(|w| w[0] >= w[1]), "{weights:?}");
        }
    }
}

#[test]
fn md_ties_resolve_to_earliest_pattern() {
    let code = fixtures::code_5_2();
    let y = FqVector::new(code.field(), vec![0, 0, 0, 1, 1]).unwrap();
    // zero pattern scores 2, as does pattern (1,1) reaching (1,1,0,1,1)
    let out = md_decode(&code, &y, 2).unwrap();
    assert!(out.codeword().unwrap().is_zero());
}

fn code_strategy() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..5, 1usize..5)
        .prop_flat_map(|(q, k, r)| (Just(q), Just(k), Just(k + r), prop::collection::vec(0..q, k * r)))
        .prop_map(|(q, k, n, a)| {
            let f = FieldSpec::new(q).unwrap();
            let rows: Vec<Vec<u32>> = (0..k)
                .map(|i| {
                    let mut row = vec![0; n];
                    row[i] = 1;
                    row[k..].copy_from_slice(&a[i * (n - k)..(i + 1) * (n - k)]);
                    row
                })
                .collect();
            let g = FqMatrix::from_rows(f, &rows).unwrap();
            LinearCode::from_generator(&g, None).unwrap().with_computed_distance().unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_codes_decode_consistently(code in code_strategy(), seed in prop::collection::vec(0u32..1000, 8)) {
        let f = code.field();
        let y = FqVector::new(f, (0..code.n()).map(|i| seed[i % seed.len()].wrapping_mul(i as u32 + 3) % f.q()).collect()).unwrap();
        let table = CosetTableDecoder::new(&code).unwrap();
        let md = md_decode(&code, &y, table.covering_radius()).unwrap();
        prop_assert_eq!(md.error_weight(), table.decode(&code, &y).unwrap().error_weight());
        prop_assert!(code.is_codeword(md.codeword().unwrap()).unwrap());

        let t = code.unique_radius().unwrap();
        let out = unique_decode(&code, &y).unwrap();
        if let Some(c) = out.codeword() {
            prop_assert!(code.is_codeword(c).unwrap());
            prop_assert!(out.error_weight().unwrap() <= t);
        } else {
            prop_assert!(md.error_weight().unwrap() > t);
        }
    }

    #[test]
    fn enumerator_replays_identically(q in prop::sample::select(vec![2u32, 3, 5]), k in 0usize..7, w in 0usize..8) {
        let f = FieldSpec::new(q).unwrap();
        let a: Vec<FqVector> = PatternEnumerator::new(f, k, w).collect();
        let b: Vec<FqVector> = PatternEnumerator::new(f, k, w).collect();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(BigUint::from(a.len()), ball_volume(k, w.min(k), q).unwrap());
    }
}
