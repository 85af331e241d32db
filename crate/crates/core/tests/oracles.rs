mod common;

use common::runs;
use golayzcp::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use Sign::{Minus, Plus};

fn direct_aacf(a: &[i8], tau: usize) -> i64 {
    a.iter()
        .zip(&a[tau.min(a.len())..])
        .map(|(&u, &v)| i64::from(u) * i64::from(v))
        .sum()
}

#[test]
fn inserted_aacf_matches_direct_correlation() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    for case in 0..200 {
        let n = 2 * rng.gen_range(1..=40);
        let values: Vec<i64> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let a = BinarySequence::from_values(&values).unwrap();
        let r = [0, n / 2, n][case % 3];
        let x = if rng.gen() { Plus } else { Minus };
        let tau = rng.gen_range(1..=n);
        let longer = a.insert(r, x).unwrap();
        assert_eq!(
            inserted_aacf(&a, r, x, tau).unwrap(),
            direct_aacf(longer.as_slice(), tau),
            "{a} r={r} x={x} τ={tau}"
        );
    }
}

#[test]
fn inserted_aacf_rejects_other_positions() {
    let a: BinarySequence = "++-+".parse().unwrap();
    assert!(inserted_aacf(&a, 1, Plus, 1).is_err());
    assert!(inserted_aacf(&a, 0, Plus, 0).is_err());
    assert!(inserted_aacf(&a, 0, Plus, 5).is_err());
}

#[test]
fn exhaustive_bound_is_tight_for_small_odd_lengths() {
    let config = SearchConfig::default();
    for n in [3, 5, 7, 9] {
        for t in [ZcpType::Type1, ZcpType::Type2] {
            let r = exhaustive_max_zcz(n, t, &config).unwrap();
            assert_eq!(r.max_zcz, n.div_ceil(2), "N={n} {t}");
            assert!(r.witness_count > 0);
            for w in &r.witnesses {
                assert_eq!(classify(w).zcz(t), r.max_zcz);
            }
        }
    }
}

#[test]
fn out_of_zone_floor_small_lengths() {
    let config = SearchConfig::default();
    for n in [3, 5, 7, 9] {
        let floor = out_of_zone_floor(n, &config).unwrap();
        assert!(floor.holds(), "{floor:?}");
        assert!(floor.z_optimal_type1 > 0 && floor.z_optimal_type2 > 0);
    }
    assert!(out_of_zone_floor(6, &config).is_err());
}

#[test]
fn constructed_pairs_reach_the_exhaustive_optimum() {
    let config = SearchConfig::default();
    for recipe in ["K2", "K2*K2", "K2*K2*K2", "K10"] {
        let recipe: GcpRecipe = recipe.parse().unwrap();
        for pos in [InsertionPosition::Front, InsertionPosition::End] {
            for t in [ZcpType::Type1, ZcpType::Type2] {
                let c = construct_obzcp(&recipe, &InsertionSpec::for_target(pos, t)).unwrap();
                let best = exhaustive_max_zcz(c.pair.len(), t, &config).unwrap();
                let predicted = c.prediction.as_ref().unwrap().zcz(t);
                assert_eq!(c.report.zcz(t), predicted);
                // Only the K2-seeded family is Z-optimal; kernel powers fall short.
                if recipe.class() == RecipeClass::BinarySeeded {
                    assert_eq!(predicted, best.max_zcz, "{recipe} {pos} {t}");
                } else {
                    assert!(predicted < best.max_zcz, "{recipe} {pos} {t}");
                }
            }
        }
    }
}

#[test]
fn insertion_search_on_k10_finds_the_unequal_hit() {
    let config = SearchConfig::default();
    let result = insertion_search(&kernel(KernelId::K10), "K10", true, &config).unwrap();
    assert_eq!(result.candidates, 11 * 11 * 4);
    assert!(result.has_hit(5, 4, Plus, Plus, ZcpType::Type2));
    let hit = result
        .hits
        .iter()
        .find(|h| (h.r_first, h.r_second, h.x, h.y) == (5, 4, Plus, Plus))
        .unwrap();
    assert_eq!(
        hit.report.profile.magnitudes(),
        runs(&[(22, 1), (2, 5), (0, 5)])
    );
}

#[test]
fn insertion_search_on_length_twenty() {
    let config = SearchConfig::default();
    let p = build_gcp(&"K2*K10".parse().unwrap()).unwrap();
    let result = insertion_search(&p, "K2*K10", false, &config).unwrap();
    assert_eq!(result.candidates, 21 * 4);
    assert!(result.has_hit(0, 0, Plus, Minus, ZcpType::Type1));
    assert!(result.has_hit(0, 0, Plus, Plus, ZcpType::Type2));
    assert!(result.has_hit(20, 20, Plus, Plus, ZcpType::Type1));
    assert!(result.has_hit(10, 10, Plus, Plus, ZcpType::Type2));
}

#[test]
fn insertion_search_on_length_hundred_has_no_optimal_hit() {
    let config = SearchConfig::default();
    let p = build_gcp(&"K10*K10".parse().unwrap()).unwrap();
    let result = insertion_search(&p, "K10*K10", false, &config).unwrap();
    assert_eq!(result.candidates, 101 * 4);
    assert!(result.hits.is_empty(), "{:?}", result.hits.first());
}

#[test]
fn unequal_grid_on_length_hundred_has_no_optimal_hit() {
    let config = SearchConfig::default();
    let p = build_gcp(&"K10*K10".parse().unwrap()).unwrap();
    let result = insertion_search(&p, "K10*K10", true, &config).unwrap();
    assert_eq!(result.candidates, 101 * 101 * 4);
    assert!(result.hits.is_empty(), "{:?}", result.hits.first());
}
