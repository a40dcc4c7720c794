mod common;

use common::Group;
use picketlab::module::{quotient, span_type};
use picketlab::ring::snf;
use picketlab::{Matrix, Partition, RingCtx};
use proptest::prelude::*;

/// Ambient exponents with group order at most 2^16, plus relation columns.
fn instance() -> impl Strategy<Value = (u64, Vec<u32>, Vec<Vec<u64>>)> {
    (prop_oneof![Just(2u64), Just(3u64)], 1usize..=4)
        .prop_flat_map(|(p, r)| {
            let max_e = if p == 2 { 6u32 } else { 4 };
            (Just(p), prop::collection::vec(1..=max_e, r))
        })
        .prop_filter("order at most 2^16", |(p, exps)| {
            (*p as f64).powi(exps.iter().sum::<u32>() as i32) <= 65536.0
        })
        .prop_flat_map(|(p, exps)| {
            let r = exps.len();
            (Just(p), Just(exps), prop::collection::vec(prop::collection::vec(any::<u64>(), r), 0..=4))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quotient_type_matches_brute_force((p, exps, raw) in instance()) {
        let mut exps = exps;
        exps.sort_unstable_by(|a, b| b.cmp(a));
        let g = Group::new(p, &exps);
        let cols: Vec<Vec<u64>> = raw
            .iter()
            .map(|c| c.iter().zip(&g.moduli).map(|(x, m)| x % m).collect())
            .collect();
        let ctx = RingCtx::for_exponents(p, exps.iter().copied()).unwrap();
        let rel = Matrix::from_columns(exps.len(), &cols);
        let q = quotient(&ctx, &exps, &rel);
        let x = g.span(&cols.iter().map(|c| g.encode(c)).collect::<Vec<_>>());
        prop_assert_eq!(&q.ty, &g.quotient_type(&x));
        let size = x.iter().filter(|&&b| b).count();
        prop_assert_eq!(span_type(&ctx, &exps, &rel).weight(), common::log_p(p, size));
        // the coordinate map kills exactly the relations
        for y in 0..g.order {
            let v = g.decode(y);
            let zero = q.apply(&ctx, &v).iter().all(|&c| c == 0);
            prop_assert_eq!(zero, x[y]);
        }
    }

    #[test]
    fn snf_transforms((p, cap, rows, cols, seed) in (prop_oneof![Just(2u64), Just(3u64)], 1u32..=6, 1usize..=4, 1usize..=4, any::<u64>())) {
        let ctx = RingCtx::new(p, cap).unwrap();
        let mut rng = picketlab::random::SplitMix64::new(seed);
        let data: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.below(ctx.modulus())).collect())
            .collect();
        let m = Matrix::from_rows(&data);
        let res = snf(&ctx, &m);
        prop_assert!(res.left.det_mod_p(&ctx) != 0);
        prop_assert!(res.right.det_mod_p(&ctx) != 0);
        let d = res.left.mul(&ctx, &m).mul(&ctx, &res.right);
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j { ctx.pow_mod(res.diag_valuations[i]) } else { 0 };
                prop_assert_eq!(d[(i, j)], want);
            }
        }
        prop_assert!(res.diag_valuations.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn zero_relations_leave_the_ambient() {
    let ctx = RingCtx::new(2, 4).unwrap();
    let q = quotient(&ctx, &[4, 2, 1], &Matrix::zeros(3, 0));
    assert_eq!(q.ty, Partition::new(vec![4, 2, 1]).unwrap());
}
