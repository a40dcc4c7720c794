mod common;

use common::{exhaustive_corpus, random_corpus, Brute};
use picketlab::embedding::{construct_a, construct_c, Picket};
use picketlab::tableau::LRTableau;
use picketlab::Embedding;
use proptest::prelude::*;

fn check_against_brute_force(e: &Embedding) {
    let b = Brute::new(e);
    for (ell, gamma) in e.chain().iter().enumerate() {
        assert_eq!(gamma, &b.chain_entry(ell as u32), "{e:?} at {ell}");
    }
    let t = e.lr_tableau();
    for ell in 1..=e.s() as u32 {
        for m in 1..=e.beta().first() + 1 {
            assert_eq!(
                b.s1_multiplicity(ell, m),
                t.boxes_or_zero(ell as usize, m),
                "{e:?} at ({ell}, {m})"
            );
        }
    }
}

#[test]
fn chains_and_subfactors_match_brute_force() {
    for e in exhaustive_corpus(5) {
        check_against_brute_force(&e);
    }
}

#[test]
fn random_chains_match_brute_force() {
    for e in random_corpus(60, 8, 11) {
        check_against_brute_force(&e);
    }
}

#[test]
fn every_chain_is_an_lr_tableau() {
    for e in exhaustive_corpus(5).iter().chain(&random_corpus(300, 12, 5)) {
        let t = LRTableau::validate(e.chain().to_vec()).unwrap();
        assert_eq!(e.alpha().weight() + e.gamma().weight(), e.beta().weight());
        assert_eq!(&t.alpha(), e.alpha());
    }
}

#[test]
fn duality_is_an_involution() {
    for e in exhaustive_corpus(5).iter().chain(&random_corpus(200, 10, 9)) {
        let d = e.dual();
        assert_eq!(d.alpha(), e.gamma());
        assert_eq!(d.gamma(), e.alpha());
        assert_eq!(d.beta(), e.beta());
        let dd = d.dual();
        assert_eq!(dd.chain(), e.chain());
    }
}

#[test]
fn subfactor_multiplicities_by_formula() {
    for e in exhaustive_corpus(5) {
        let t = e.lr_tableau();
        for ell in 1..=e.s() {
            let pickets = e.subfactor(ell).unwrap().decompose_s1().unwrap();
            for m in 1..=6 {
                let mult = pickets.iter().filter(|q| q.ell == 1 && q.m == m).count() as u32;
                assert_eq!(mult, t.boxes_or_zero(ell, m));
            }
        }
    }
}

#[test]
fn pickets_dualize() {
    for p in [2, 3] {
        for m in 1..=6 {
            for ell in 0..=m {
                let e = Picket::new(ell, m).unwrap().to_embedding(p).unwrap();
                let d = Picket::new(m - ell, m).unwrap().to_embedding(p).unwrap();
                assert_eq!(e.dual().chain(), d.chain());
                let want: Vec<u32> = if ell == 0 { vec![] } else { vec![ell] };
                assert_eq!(e.alpha().parts(), &want[..]);
            }
        }
    }
}

#[test]
fn c_objects_have_a_unique_box() {
    for p in [2, 3] {
        for n in 1..=6 {
            for m in 1..=n {
                for ell in 1..=m {
                    let c = construct_c(p, n, ell, m).unwrap();
                    assert!(c.in_s(n));
                    assert_eq!(c.lr_tableau().boxes_or_zero(ell as usize, m), 1, "C({n},{ell},{m})");
                    let a = construct_a(p, n, m - ell, m).unwrap();
                    assert_eq!(a.chain(), c.dual().chain());
                }
            }
        }
    }
    let c = construct_c(2, 5, 2, 4).unwrap();
    assert_eq!(c.generator_rows(), vec![vec![4, 1]]);
    let want: LRTableau = serde_json::from_str("[[3],[3,1],[4,1],[5,1]]").unwrap();
    assert_eq!(c.lr_tableau(), want);
    assert_eq!(construct_a(2, 5, 0, 4).unwrap(), Picket::new(0, 5).unwrap().to_embedding(2).unwrap());
}

#[test]
fn direct_sums_add_chains() {
    let corpus = random_corpus(40, 6, 21);
    for pair in corpus.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.p() != b.p() {
            continue;
        }
        let s = a.direct_sum(b);
        for ell in 0..=a.s().max(b.s()) {
            let mut parts = a.chain().get(ell).unwrap_or(a.beta()).parts().to_vec();
            parts.extend(b.chain().get(ell).unwrap_or(b.beta()).parts());
            let want = picketlab::Partition::from_unsorted(parts);
            assert_eq!(s.chain().get(ell).unwrap_or(s.beta()), &want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_embeddings_are_deterministic(seed in any::<u64>(), gens in 0usize..=3) {
        let beta: picketlab::Partition = "4,3,2".parse().unwrap();
        let a = picketlab::random::random_embedding(2, &beta, gens, seed).unwrap();
        let b = picketlab::random::random_embedding(2, &beta, gens, seed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(LRTableau::validate(a.chain().to_vec()).is_ok());
    }
}
