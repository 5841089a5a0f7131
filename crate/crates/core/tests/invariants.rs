//! Randomized checks of the bijections on regions larger than the
//! exhaustive sweeps reach.

use proptest::prelude::*;

use pathlab_core::applications::{exchange_rl_extrema, perm_stats, Permutation};
use pathlab_core::matroid::{
    activities, bltr_single_path, reorder_bijection, tutte_poly, LatticePathMatroid, LinearOrder,
};
use pathlab_core::swap::swapall;
use pathlab_core::tableau::{expected_weight, psi, psi_inv};
use pathlab_core::{ContactWord, Path, PathTuple, Region};

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

fn heights(x: usize, y: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=y, x).prop_map(sorted)
}

fn region_with(x: usize, y: u32, staircase: bool) -> impl Strategy<Value = Region> {
    (heights(x, y), heights(x, y)).prop_map(move |(a, b)| {
        let top: Vec<u32> = if staircase { vec![y; x] } else { a.iter().zip(&b).map(|(p, q)| *p.max(q)).collect() };
        let bottom = a.iter().zip(&b).map(|(p, q)| *p.min(q)).collect();
        Region::from_heights(top, bottom, y).unwrap()
    })
}

fn clamp_into(region: &Region, raw: &[u32]) -> Path {
    let h = raw
        .iter()
        .zip(region.bottom_heights().iter().zip(region.top_heights()))
        .map(|(&v, (&lo, &hi))| v.clamp(lo, hi))
        .collect();
    Path::from_heights(h, region.y())
}

fn region_and_path(max: usize) -> impl Strategy<Value = (Region, Path)> {
    (0..=max, 0..=max as u32)
        .prop_flat_map(|(x, y)| (region_with(x, y, false), heights(x, y)))
        .prop_map(|(r, raw)| {
            let p = clamp_into(&r, &raw);
            (r, p)
        })
}

/// A weakly nested tuple: columnwise order statistics of `k` paths clamped
/// into the region.
fn tuple(max: usize, max_k: usize, staircase: bool) -> impl Strategy<Value = PathTuple> {
    (0..=max, 0..=max as u32, 1..=max_k)
        .prop_flat_map(move |(x, y, k)| {
            (region_with(x, y, staircase), prop::collection::vec(heights(x, y), k))
        })
        .prop_map(|(r, raws)| {
            let paths: Vec<Path> = raws.iter().map(|raw| clamp_into(&r, raw)).collect();
            let x = r.x();
            let mut cols: Vec<Vec<u32>> = (0..x).map(|j| paths.iter().map(|p| p.heights()[j]).collect()).collect();
            for c in &mut cols {
                c.sort_unstable_by(|a, b| b.cmp(a));
            }
            let nested = (0..paths.len())
                .map(|i| Path::from_heights(cols.iter().map(|c| c[i]).collect(), r.y()))
                .collect();
            PathTuple::new(r, nested).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn step_strings_round_trip((_, p) in region_and_path(8)) {
        prop_assert_eq!(Path::parse(&p.to_step_string()).unwrap(), p);
    }

    #[test]
    fn swap_is_a_contact_exchanging_involution((r, p) in region_and_path(8)) {
        let q = swapall(&r, &p).unwrap();
        let (s, t) = (r.contact_stats(&p).unwrap(), r.contact_stats(&q).unwrap());
        prop_assert_eq!((s.t, s.b), (t.b, t.t));
        prop_assert_eq!(p.descent_set(), q.descent_set());
        prop_assert_eq!(r.noncontact_heights(&p).unwrap(), r.noncontact_heights(&q).unwrap());
        prop_assert_eq!(swapall(&r, &q).unwrap(), p);
    }

    #[test]
    fn bottom_left_goes_to_top_right((r, p) in region_and_path(7)) {
        let q = bltr_single_path(&r, &p).unwrap();
        let (s, t) = (r.contact_stats(&p).unwrap(), r.contact_stats(&q).unwrap());
        prop_assert_eq!((s.b, s.l), (t.t, t.r));
    }

    #[test]
    fn switch_inverts(w in "[tb]{0,20}") {
        let w = ContactWord::parse(&w).unwrap();
        // defined only when some top letter is unmatched
        let s = w.switch();
        prop_assume!(s.is_ok());
        prop_assert_eq!(s.unwrap().switch_inv().unwrap(), w);
    }

    #[test]
    fn tutte_polynomial_ignores_the_order(
        (r, seed) in (0..=4usize, 0..=4u32)
            .prop_flat_map(|(x, y)| (region_with(x, y, false), Just(()).prop_perturb(move |_, mut rng| {
                let mut v: Vec<usize> = (1..=x + y as usize).collect();
                for i in (1..v.len()).rev() {
                    v.swap(i, rng.random_range(0..=i));
                }
                v
            })))
    ) {
        let m = r.x() + r.y() as usize;
        let lpm = LatticePathMatroid::new(r);
        let order = LinearOrder::from_ranking(seed).unwrap();
        prop_assert_eq!(
            tutte_poly(&lpm, &order).unwrap(),
            tutte_poly(&lpm, &LinearOrder::natural(m)).unwrap()
        );
        let reversed = LinearOrder::reversed(m);
        for p in pathlab_core::enumerate::monotone_paths(lpm.region()) {
            let b = lpm.base_of_path(&p).unwrap();
            let c = reorder_bijection(&lpm, &order, &reversed, b).unwrap();
            prop_assert_eq!(
                activities(&lpm, b, &order).unwrap().counts(),
                activities(&lpm, c, &reversed).unwrap().counts()
            );
            prop_assert_eq!(reorder_bijection(&lpm, &reversed, &order, c).unwrap(), b);
        }
    }

    #[test]
    fn adjacent_transpositions_exchange_h(t in tuple(7, 3, false), i in 1..=3usize) {
        prop_assume!(i <= t.k());
        let s = t.transpose_h(i).unwrap();
        let (h, g) = (t.h_stats(), s.h_stats());
        prop_assert_eq!((h[i - 1], h[i]), (g[i], g[i - 1]));
        prop_assert_eq!(s.transpose_h(i).unwrap(), t);
    }

    #[test]
    fn permuting_h(t in tuple(6, 3, false)) {
        let n = t.k() + 1;
        let perm: Vec<usize> = (0..n).rev().collect();
        let s = t.apply_perm_h(&perm).unwrap();
        let h = t.h_stats();
        prop_assert_eq!(s.h_stats(), perm.iter().map(|&p| h[p]).collect::<Vec<_>>());
    }

    #[test]
    fn tuple_bottom_left_to_top_right(t in tuple(6, 3, false)) {
        let s = t.bltr().unwrap();
        let k = t.k();
        prop_assert_eq!((t.h_stats()[k], t.v_stats()[0]), (s.h_stats()[0], s.v_stats()[k]));
    }

    #[test]
    fn psi_is_weighted_and_invertible(t in tuple(6, 3, true)) {
        let s = psi(&t).unwrap();
        prop_assert!(s.is_k_flagged() && s.is_semistandard());
        let w = expected_weight(&t);
        prop_assert_eq!(s.weight(w.len()), w);
        prop_assert_eq!(psi_inv(&s, t.region()).unwrap(), t);
    }

    #[test]
    fn permutation_exchange(v in Just((1..=9u32).collect::<Vec<_>>()).prop_shuffle()) {
        let pi = Permutation::new(v).unwrap();
        let sigma = exchange_rl_extrema(&pi).unwrap();
        let (a, b) = (perm_stats(&pi), perm_stats(&sigma));
        prop_assert_eq!((a.rl_min, a.rl_max), (b.rl_max, b.rl_min));
        prop_assert_eq!(a.pattern_positions, b.pattern_positions);
        prop_assert_eq!(exchange_rl_extrema(&sigma).unwrap(), pi);
    }
}
