mod common;

use common::{binary_seeded_recipes, recipes_seeded, runs};
use golayzcp::*;
use InsertionPosition::{End, Front, Middle};
use Sign::{Minus, Plus};

const SIGNS: [(Sign, Sign); 4] = [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)];

fn supported_recipes() -> Vec<GcpRecipe> {
    let mut out = binary_seeded_recipes(2080);
    out.extend((1..=3).map(|p| GcpRecipe::power(KernelId::K10, p)));
    out.extend((1..=2).map(|p| GcpRecipe::power(KernelId::K26, p)));
    out.extend(
        ["K26*K10", "K26*K10*K10"]
            .iter()
            .map(|s| s.parse().unwrap()),
    );
    out
}

#[test]
fn prediction_matches_measurement() {
    for recipe in supported_recipes() {
        for pos in [Front, End] {
            for (x, y) in SIGNS {
                let c = construct_obzcp(&recipe, &InsertionSpec::new(pos, x, y)).unwrap();
                assert_eq!(c.prediction_holds(), Some(true), "{recipe} {pos} {x} {y}");
            }
        }
    }
}

#[test]
fn binary_seeded_front_and_end_are_optimal() {
    for recipe in binary_seeded_recipes(2080) {
        let n = recipe.len();
        for pos in [Front, End] {
            for target in [ZcpType::Type1, ZcpType::Type2] {
                for (x, y) in SIGNS {
                    let spec = InsertionSpec::new(pos, x, y);
                    if spec.symbol_product()
                        != InsertionSpec::for_target(pos, target).symbol_product()
                    {
                        continue;
                    }
                    let c = construct_obzcp(&recipe, &spec).unwrap();
                    assert!(
                        c.report.is_optimal(target),
                        "{recipe} {pos} {x}{y} {target}"
                    );
                    assert_eq!(c.report.zcz(target), n / 2 + 1);
                }
            }
        }
    }
}

#[test]
fn kernel_power_zone_widths() {
    let cases = [
        ("K10", 5),
        ("K10*K10", 41),
        ("K10*K10*K10", 401),
        ("K26", 13),
        ("K26*K26", 313),
        ("K26*K10", 121),
        ("K26*K10*K10", 1201),
    ];
    for (recipe, z) in cases {
        let recipe: GcpRecipe = recipe.parse().unwrap();
        for pos in [Front, End] {
            for target in [ZcpType::Type1, ZcpType::Type2] {
                let c = construct_obzcp(&recipe, &InsertionSpec::for_target(pos, target)).unwrap();
                assert_eq!(
                    c.prediction.as_ref().unwrap().zcz(target),
                    z,
                    "{recipe} {pos} {target}"
                );
                assert_eq!(c.report.zcz(target), z, "{recipe} {pos} {target}");
                assert!(c.report.out_of_zone.get(target).iter().all(|&m| m <= 2));
            }
        }
    }
}

#[test]
fn step_order_does_not_change_k26_mixed_profile() {
    let a = construct_obzcp(
        &"K26*K10*K26".parse().unwrap(),
        &InsertionSpec::for_target(Front, ZcpType::Type1),
    );
    let b = construct_obzcp(
        &"K26*K26*K10".parse().unwrap(),
        &InsertionSpec::for_target(Front, ZcpType::Type1),
    );
    let (a, b) = (a.unwrap(), b.unwrap());
    assert_eq!(a.prediction, b.prediction);
    assert_eq!(a.report.profile.magnitudes(), b.report.profile.magnitudes());
    assert_eq!(a.report.type1_zcz, 12 * 260 + 1);
}

#[test]
fn sign_duality() {
    for recipe in supported_recipes().into_iter().filter(|r| r.len() <= 1040) {
        for pos in [Front, End] {
            let opposite = construct_obzcp(&recipe, &InsertionSpec::new(pos, Plus, Minus)).unwrap();
            let same = construct_obzcp(&recipe, &InsertionSpec::new(pos, Plus, Plus)).unwrap();
            // Flipping the relative sign flips the zero/two pattern away from τ = 0.
            let (o, s) = (
                opposite.report.profile.magnitudes(),
                same.report.profile.magnitudes(),
            );
            assert_eq!(o[0], s[0]);
            for tau in 1..o.len() {
                assert_eq!(o[tau] + s[tau], 2, "{recipe} {pos} τ={tau}");
            }
            let (t_opp, t_same) = match (pos, recipe.class()) {
                (Front, RecipeClass::BinarySeeded) => (ZcpType::Type1, ZcpType::Type2),
                (End, RecipeClass::BinarySeeded) => (ZcpType::Type2, ZcpType::Type1),
                _ => continue,
            };
            assert!(opposite.report.is_optimal(t_opp), "{recipe} {pos}");
            assert!(same.report.is_optimal(t_same), "{recipe} {pos}");
        }
    }
}

#[test]
fn middle_insertion_is_optimal_type2() {
    for recipe in binary_seeded_recipes(1040) {
        let n = recipe.len();
        assert!(
            middle_pair_identities(&build_gcp(&recipe).unwrap()),
            "{recipe}"
        );
        for (x, y) in SIGNS {
            let c = construct_obzcp(&recipe, &InsertionSpec::new(Middle, x, y)).unwrap();
            let expected = runs(&[(2 * (n as u64 + 1), 1), (2, n / 2), (0, n / 2)]);
            assert_eq!(c.report.profile.magnitudes(), expected, "{recipe} {x}{y}");
            assert_eq!(c.prediction_holds(), Some(true));
            assert!(c.report.optimal.type2);
        }
    }
}

#[test]
fn inserted_pairs_match_the_closed_form_sums() {
    for recipe in ["K2*K10", "K10*K10", "K2*K26", "K26"] {
        let p = build_gcp(&recipe.parse().unwrap()).unwrap();
        let n = p.len();
        for (x, y) in SIGNS {
            let front = aacs_profile(&p.insert(0, x, 0, y).unwrap());
            let end = aacs_profile(&p.insert(n, x, n, y).unwrap());
            for tau in 1..=n {
                assert_eq!(
                    front.get(tau),
                    Some(front_insertion_sum(&p, x, y, tau).unwrap())
                );
                assert_eq!(
                    end.get(tau),
                    Some(end_insertion_sum(&p, x, y, tau).unwrap())
                );
            }
        }
    }
}

#[test]
fn unsupported_combinations_are_measured_only() {
    let cases = [
        ("K10*K26", Front),
        ("K10*K2", End),
        ("K10*K10", Middle),
        ("K26", Middle),
    ];
    for (recipe, pos) in cases {
        let recipe: GcpRecipe = recipe.parse().unwrap();
        let spec = InsertionSpec::new(pos, Plus, Plus);
        assert!(!supports_prediction(&recipe, pos));
        assert!(matches!(
            construct_obzcp(&recipe, &spec),
            Err(Error::Unsupported { .. })
        ));
        let m = measure_obzcp(&recipe, &spec).unwrap();
        assert_eq!(m.prediction_holds(), None);
        assert_eq!(m.report.n, recipe.len() + 1);
    }
}

#[test]
fn k10_seeded_mixed_recipes_keep_their_leading_run() {
    for recipe in recipes_seeded(KernelId::K10, 2600) {
        if recipe.class() != RecipeClass::MixedK10Seeded {
            continue;
        }
        let p = build_gcp(&recipe).unwrap();
        let lead = column_sign_profile(&p).leading_same_run();
        assert_eq!(Some(lead), expected_leading_same(&recipe), "{recipe}");
        assert_eq!(lead, 4 * recipe.len() / 10);
    }
}
