mod common;

use common::{lr_filler, subpartitions};
use picketlab::partition::{partitions_of, SkewStrip};
use picketlab::tableau::{enumerate, lr_coefficient, LRTableau, TableauError};
use picketlab::Partition;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn enumeration_matches_filler_up_to_weight_6() {
    for w in 0..=6 {
        for beta in partitions_of(w) {
            for gamma in subpartitions(&beta) {
                for alpha in partitions_of(w - gamma.weight()) {
                    let found = enumerate(&alpha, &beta, &gamma);
                    assert_eq!(found.len(), lr_filler(&alpha, &beta, &gamma), "{alpha} {beta} {gamma}");
                    for t in &found {
                        assert_eq!(&t.alpha(), &alpha);
                        assert_eq!(t.beta(), &beta);
                        assert_eq!(t.gamma(), &gamma);
                        assert!(LRTableau::validate(t.chain().to_vec()).is_ok());
                    }
                }
            }
        }
    }
}

#[test]
fn known_coefficients() {
    assert_eq!(lr_coefficient(&p("1"), &p("2"), &p("1")), 1);
    assert_eq!(lr_coefficient(&p("2,1"), &p("3,2,1"), &p("2,1")), 2);
    assert_eq!(lr_coefficient(&p("3"), &p("5,1"), &p("3")), 1);
    assert_eq!(lr_filler(&p("2,1"), &p("3,2,1"), &p("2,1")), 2);
    assert_eq!(lr_coefficient(&p("2"), &p("2"), &p("1")), 0);
}

#[test]
fn validation_errors_use_one_based_indices() {
    let chain = |s: &[&str]| s.iter().map(|x| p(x)).collect::<Vec<_>>();
    assert_eq!(
        LRTableau::validate(chain(&["", "1", "1,1"])),
        Err(TableauError::LatticeViolation { ell: 2, h: 2 })
    );
    assert!(matches!(
        LRTableau::validate(chain(&["1", "3"])),
        Err(TableauError::NotHorizontalStrip { ell: 1, .. })
    ));
    assert!(matches!(LRTableau::validate(chain(&["2", "1"])), Err(TableauError::NotIncreasing { ell: 1 })));
    assert!(matches!(LRTableau::validate(Vec::new()), Err(TableauError::EmptyChain)));
}

#[test]
fn worked_example_boxes() {
    let t: LRTableau = serde_json::from_str("[[3,1],[3,2,1],[4,3,1],[5,3,1]]").unwrap();
    let mut boxes = Vec::new();
    for ell in 1..=t.s() {
        for m in 1..=6 {
            for _ in 0..t.boxes_or_zero(ell, m) {
                boxes.push((ell, m));
            }
        }
    }
    assert_eq!(boxes, vec![(1, 1), (1, 2), (2, 3), (2, 4), (3, 5)]);
    assert_eq!(t.alpha(), p("3,2"));
    assert_eq!(t.count_boxes(4, 1), Err(TableauError::IndexOutOfRange { ell: 4, s: 3 }));
}

proptest! {
    #[test]
    fn transpose_is_an_involution(parts in prop::collection::vec(0u32..8, 0..8)) {
        let x = Partition::from_unsorted(parts);
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!(x.transpose().weight(), x.weight());
        for m in 1..=9 {
            prop_assert_eq!(x.row(m), x.transpose().part(m as usize - 1));
        }
    }

    #[test]
    fn strips_of_enumerated_tableaux(w in 1u32..=7, pick in any::<prop::sample::Index>()) {
        let shapes = partitions_of(w);
        let beta = pick.get(&shapes);
        for gamma in subpartitions(beta) {
            for alpha in partitions_of(w - gamma.weight()) {
                for t in enumerate(&alpha, beta, &gamma) {
                    for ell in 1..=t.s() {
                        let strip = SkewStrip::new(t.chain()[ell].clone(), t.chain()[ell - 1].clone()).unwrap();
                        prop_assert_eq!(strip.is_horizontal_strip().unwrap(), alpha.transpose().part(ell - 1));
                    }
                }
            }
        }
    }
}
