use std::collections::BTreeMap;

use canon_core::counting::{count_by_bcomp, count_peakmatch_by_bcomp, count_pk_eq_bpk_by_bcomp};
use canon_core::maximizers::{b_set, bperm, max_descents_formula, max_poset, valley_walk, vperm};
use canon_core::{des, Composition, DyckPath, Step};
use proptest::prelude::*;

#[test]
fn under_is_a_partial_order() {
    for n in 1..=6 {
        let paths: Vec<DyckPath> = DyckPath::enumerate(n).collect();
        for a in &paths {
            assert!(a.is_under(a).unwrap());
            for b in &paths {
                let ab = a.is_under(b).unwrap();
                if ab && b.is_under(a).unwrap() {
                    assert_eq!(a, b);
                }
                if !ab {
                    continue;
                }
                for c in &paths {
                    if b.is_under(c).unwrap() {
                        assert!(a.is_under(c).unwrap(), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn composition_formulas_match_enumeration() {
    for n in 1..=8u32 {
        let mut all = BTreeMap::<Composition, u64>::new();
        let mut peakmatch = BTreeMap::<Composition, u64>::new();
        let mut singleton = BTreeMap::<Composition, u64>::new();
        for d in DyckPath::enumerate(n as usize) {
            let c = d.bcomp();
            *all.entry(c.clone()).or_default() += 1;
            if d.pk() == d.bpk() {
                *peakmatch.entry(c.clone()).or_default() += 1;
            }
            if b_set(&d).len() == 1 {
                *singleton.entry(c).or_default() += 1;
            }
        }
        for c in Composition::all(n) {
            let get = |m: &BTreeMap<Composition, u64>| m.get(&c).copied().unwrap_or(0);
            assert_eq!(count_by_bcomp::<u64>(&c), get(&all), "{c}");
            assert_eq!(count_pk_eq_bpk_by_bcomp::<u64>(&c), get(&peakmatch), "{c}");
            assert_eq!(count_peakmatch_by_bcomp::<u64>(&c), get(&singleton), "{c}");
        }
    }
}

#[test]
fn bpk_and_height_are_equidistributed() {
    for n in 1..=8 {
        let mut by_bpk = vec![0; n + 1];
        let mut by_height = vec![0; n + 1];
        for d in DyckPath::enumerate(n) {
            by_bpk[d.bpk()] += 1;
            by_height[d.height() as usize] += 1;
        }
        assert_eq!(by_bpk, by_height, "n={n}");
    }
}

#[test]
fn enumeration_is_ordered_and_complete() {
    let counts: Vec<usize> = (0..=8).map(|n| DyckPath::enumerate(n).count()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    let seven: Vec<DyckPath> = DyckPath::enumerate(7).collect();
    assert!(seven.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(seven[0], DyckPath::pyramid(7));
    assert_eq!(seven.last().unwrap(), &DyckPath::staircase(7));
}

fn dyck_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    // Random walk of ups and downs, then repaired into a Dyck path by
    // dropping steps that would go below the axis and closing at the end.
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), 2 * n)).prop_map(|bits| {
        let n = bits.len() / 2;
        let (mut steps, mut h, mut ups) = (Vec::new(), 0usize, 0usize);
        for up in bits {
            if up && ups < n {
                steps.push(Step::Up);
                ups += 1;
                h += 1;
            } else if h > 0 {
                steps.push(Step::Down);
                h -= 1;
            }
        }
        steps.extend(std::iter::repeat_n(Step::Up, n - ups));
        steps.extend(std::iter::repeat_n(Step::Down, h + n - ups));
        DyckPath::new(steps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructions_hit_the_maximum(d in dyck_path(14)) {
        let want = max_descents_formula(&d);
        prop_assert_eq!(des(&d, &bperm(&d)).unwrap(), want);
        prop_assert_eq!(des(&d, &vperm(&d)).unwrap(), want);
        let chain = max_poset(&d, &d.bounce()).unwrap();
        prop_assert!(chain.is_linear_extension(&bperm(&d)));
        prop_assert!(chain.is_linear_extension(&vperm(&d)));
    }

    #[test]
    fn valley_walk_climbs(d in dyck_path(12)) {
        let trace = valley_walk(&d.bounce(), &d).unwrap();
        let first = trace[0].descent_set();
        for w in trace.windows(2) {
            prop_assert!(w[0].path().is_under(w[1].path()).unwrap());
            prop_assert!(w[0].path() != w[1].path());
            prop_assert_eq!(w[1].descent_set(), first.clone());
        }
    }

    #[test]
    fn b_set_members_are_valid(d in dyck_path(12)) {
        let bs = b_set(&d);
        prop_assert!(bs.contains(&d.bounce()));
        prop_assert!(bs.contains(&d.reverse_bounce()));
        for b in &bs {
            prop_assert_eq!(b.pk(), d.bpk());
            prop_assert!(max_poset(&d, b).is_ok());
        }
    }
}
