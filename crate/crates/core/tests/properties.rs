use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;

use schubert_mult::paths::{
    cut_q_to_p, enumerate_families, enumerate_nonintersecting, lgv_matrix, p_spec, q_spec, r_spec,
    validate_family,
};
use schubert_mult::schubert::{
    conjugate, frobenius, multiplicity_lw, multiplicity_rz, multiplicity_thm5, s_vector,
    thm5_matrix, Partition,
};
use schubert_mult::tableaux::{
    enumerate_arrays, paths_from_labels, r_family_to_array, shape_of, validate_array,
};
use schubert_mult::{
    binomial, determinant, determinant_cofactor, validate, Guard, IntMatrix, SchubertDatum,
    UnusualArray,
};

/// Valid data with `d <= max_d <= n <= max_n`: `i` is a random subset and
/// each `j_k` is drawn from `(j_{k-1}, i_k]`.
fn datum(max_n: i64, max_d: usize) -> impl Strategy<Value = SchubertDatum> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let d_hi = max_d.min(n as usize);
            (Just(n), 1..=d_hi)
        })
        .prop_flat_map(|(n, d)| {
            (
                Just(n),
                subsequence((1..=n).collect::<Vec<i64>>(), d),
                proptest::collection::vec(any::<u32>(), d),
            )
        })
        .prop_map(|(n, i, picks)| {
            let mut j = Vec::with_capacity(i.len());
            let mut prev = 0;
            for (k, &ik) in i.iter().enumerate() {
                let lo = prev + 1;
                let v = lo + (picks[k] as i64) % (ik - lo + 1);
                j.push(v);
                prev = v;
            }
            validate(n, i.len() as i64, &i, &j).expect("generated datum is valid")
        })
}

fn special(max_n: i64, max_d: usize) -> impl Strategy<Value = SchubertDatum> {
    datum(max_n, max_d).prop_map(|dt| {
        let j: Vec<i64> = (1..=dt.d() as i64).collect();
        validate(dt.n(), dt.d() as i64, dt.i(), &j).unwrap()
    })
}

fn matrix(order: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-9i64..=9, order * order)
        .prop_map(move |v| IntMatrix::from_fn(order, |r, c| BigInt::from(v[r * order + c])))
}

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1i64..=12, 0..10).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn hook_sign(dt: &SchubertDatum) -> i32 {
    if s_vector(dt).sum() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pascal_recurrence(n in -10i64..60, k in -10i64..60) {
        prop_assume!(n >= 1);
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn binomial_symmetry(n in 0i64..80, k in -5i64..85) {
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
    }

    #[test]
    fn bareiss_matches_cofactor(order in 0usize..=6, seed in any::<u64>()) {
        let m = matrix_from_seed(order, seed);
        prop_assert_eq!(determinant(&m), determinant_cofactor(&m).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_4x4(m in matrix(4)) {
        prop_assert_eq!(determinant(&m), determinant_cofactor(&m).unwrap());
    }

    #[test]
    fn equal_columns_vanish(m in matrix(5), a in 0usize..5, b in 0usize..5) {
        prop_assume!(a != b);
        let copy = IntMatrix::from_fn(5, |r, c| m.get(r, if c == b { a } else { c }).clone());
        prop_assert_eq!(determinant(&copy), BigInt::from(0));
    }

    #[test]
    fn row_swap_negates(m in matrix(4), a in 0usize..4, b in 0usize..4) {
        prop_assume!(a != b);
        let swap = |r: usize| if r == a { b } else if r == b { a } else { r };
        let swapped = IntMatrix::from_fn(4, |r, c| m.get(swap(r), c).clone());
        prop_assert_eq!(determinant(&swapped), -determinant(&m));
    }

    #[test]
    fn conjugate_is_an_involution(p in partition()) {
        prop_assert_eq!(conjugate(&conjugate(&p)), p.clone());
        prop_assert_eq!(conjugate(&p).size(), p.size());
    }

    #[test]
    fn frobenius_round_trips(p in partition()) {
        let fc = frobenius(&p);
        prop_assert_eq!(fc.alpha.len(), fc.beta.len());
        prop_assert_eq!(fc.to_partition(), p);
    }

    #[test]
    fn s_vector_invariants(dt in datum(12, 5)) {
        let s = s_vector(&dt);
        let d = dt.d();
        prop_assert_eq!(s.at(d), 0);
        for q in 1..=d {
            prop_assert!(s.at(q) >= 0 && s.at(q) <= (d - q) as i64);
            if q < d {
                prop_assert!(s.at(q) >= s.at(q + 1));
            }
        }
    }

    #[test]
    fn determinant_formulas_agree(dt in datum(12, 5)) {
        let rz = multiplicity_rz(&dt);
        prop_assert!(rz >= BigInt::from(1));
        prop_assert_eq!(multiplicity_thm5(&dt), rz);
    }

    #[test]
    fn lw_agrees_when_special(dt in special(12, 5)) {
        prop_assert_eq!(multiplicity_lw(&dt).unwrap(), multiplicity_rz(&dt));
    }

    #[test]
    fn last_column_is_unit_vector(dt in datum(12, 5)) {
        let m = thm5_matrix(&dt);
        let d = dt.d();
        for p in 0..d {
            let expect = BigInt::from(if p + 1 == d { 1 } else { 0 });
            prop_assert_eq!(m.get(p, d - 1), &expect);
        }
        prop_assert_eq!(determinant(&m), determinant(&m.leading_minor(d - 1)));
    }

    #[test]
    fn lgv_identities(dt in datum(9, 4)) {
        let rz = multiplicity_rz(&dt);
        let q = q_spec(&dt);
        let qc = enumerate_nonintersecting(&q, Guard::DEFAULT).unwrap();
        prop_assert_eq!(&qc.total, &determinant(&lgv_matrix(&q)));
        prop_assert_eq!(qc.by_permutation.len(), 1);
        let (perm, count) = qc.by_permutation.iter().next().unwrap();
        prop_assert_eq!(permutation_sign(perm), hook_sign(&dt));
        prop_assert_eq!(count, &rz);

        let r = r_spec(&dt);
        let rc = enumerate_nonintersecting(&r, Guard::DEFAULT).unwrap();
        prop_assert_eq!(&rc.total, &determinant(&lgv_matrix(&r)));
        let identity: Vec<usize> = (0..dt.d()).collect();
        prop_assert_eq!(rc.by_permutation.keys().collect::<Vec<_>>(), vec![&identity]);
        prop_assert_eq!(&rc.total, &rz);
    }

    #[test]
    fn cut_is_a_bijection(dt in special(9, 4)) {
        let qs = enumerate_families(&q_spec(&dt), Guard::DEFAULT).unwrap();
        let ps: BTreeSet<_> = enumerate_families(&p_spec(&dt).unwrap(), Guard::DEFAULT)
            .unwrap()
            .into_iter()
            .map(|(_, f)| format!("{f:?}"))
            .collect();
        let image: BTreeSet<_> = qs
            .iter()
            .map(|(_, f)| format!("{:?}", cut_q_to_p(&dt, f).unwrap()))
            .collect();
        prop_assert_eq!(image.len(), qs.len());
        prop_assert_eq!(image, ps);
    }

    #[test]
    fn arrays_count_and_label(dt in datum(9, 4)) {
        prop_assume!(dt.d() >= 2);
        let shape = shape_of(&dt).unwrap();
        let arrays = enumerate_arrays(&shape, Guard::DEFAULT).unwrap();
        prop_assert_eq!(BigInt::from(arrays.len()), multiplicity_rz(&dt));
        for a in &arrays {
            for (c, col) in a.columns.iter().enumerate() {
                prop_assert!(col.iter().all(|&v| v < shape.caps[c]));
            }
        }
        let fams = enumerate_families(&r_spec(&dt), Guard::DEFAULT).unwrap();
        let image: BTreeSet<UnusualArray> = fams
            .iter()
            .map(|(_, f)| r_family_to_array(&dt, f).unwrap())
            .collect();
        prop_assert_eq!(image.len(), fams.len());
        prop_assert_eq!(image, arrays.into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn array_validity_matches_disjointness(dt in datum(12, 5), seeds in proptest::collection::vec(any::<u64>(), 8)) {
        prop_assume!(dt.d() >= 2);
        let shape = shape_of(&dt).unwrap();
        for seed in seeds {
            let array = column_valid_array(&shape.heights, &shape.caps, seed);
            check_equivalence(&dt, &array)?;
        }
    }
}

/// Column-valid array: column `c` is a sorted random `heights[c]`-subset of
/// `1..caps[c]`.
fn column_valid_array(heights: &[usize], caps: &[i64], mut seed: u64) -> UnusualArray {
    let mut next = || {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        seed >> 33
    };
    let columns = heights
        .iter()
        .zip(caps)
        .map(|(&h, &cap)| {
            let mut pool: Vec<i64> = (1..cap).collect();
            let mut col = Vec::with_capacity(h);
            for _ in 0..h {
                let k = (next() as usize) % pool.len();
                col.push(pool.swap_remove(k));
            }
            col.sort_unstable();
            col
        })
        .collect();
    UnusualArray::new(columns)
}

fn check_equivalence(dt: &SchubertDatum, array: &UnusualArray) -> Result<(), TestCaseError> {
    let shape = shape_of(dt).unwrap();
    let verdict = validate_array(&shape, array);
    let family = paths_from_labels(dt, array).unwrap();
    let disjoint = validate_family(&r_spec(dt), &family).is_ok();
    prop_assert_eq!(
        verdict.is_ok(),
        disjoint,
        "array {} on {}: {:?}",
        array,
        dt,
        verdict
    );
    if let Err(v) = verdict {
        prop_assert!(
            v.property() == 2 || v.property() == 4,
            "unexpected violation {v}"
        );
    }
    Ok(())
}

fn matrix_from_seed(order: usize, mut seed: u64) -> IntMatrix {
    IntMatrix::from_fn(order, |_, _| {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        BigInt::from(((seed >> 33) % 19) as i64 - 9)
    })
}

/// Every column-valid array of every datum with `n <= 7`, `d <= 4`.
#[test]
fn array_validity_matches_disjointness_exhaustively() {
    fn columns(h: usize, cap: i64, lo: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if acc.len() == h {
            out.push(acc.clone());
            return;
        }
        for v in lo..cap {
            acc.push(v);
            columns(h, cap, v + 1, acc, out);
            acc.pop();
        }
    }
    let mut checked = 0usize;
    for dt in schubert_mult::verify::exhaustive_corpus(7, 4) {
        if dt.d() < 2 {
            continue;
        }
        let shape = shape_of(&dt).unwrap();
        let choices: Vec<Vec<Vec<i64>>> = shape
            .heights
            .iter()
            .zip(&shape.caps)
            .map(|(&h, &cap)| {
                let mut out = Vec::new();
                columns(h, cap, 1, &mut Vec::new(), &mut out);
                out
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        'outer: loop {
            let array = UnusualArray::new(
                idx.iter()
                    .zip(&choices)
                    .map(|(&k, c)| c[k].clone())
                    .collect(),
            );
            check_equivalence(&dt, &array).unwrap();
            checked += 1;
            for p in 0..idx.len() {
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    continue 'outer;
                }
                idx[p] = 0;
            }
            break;
        }
    }
    eprintln!("{checked} arrays checked");
    assert!(checked > 1000, "only {checked} arrays checked");
}
