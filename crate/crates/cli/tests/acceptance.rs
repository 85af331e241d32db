//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact integers.

use std::process::Command;
use std::time::Instant;

use golayzcp::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use InsertionPosition::{End, Front, Middle};
use Sign::{Minus, Plus};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const SIGNS: [(Sign, Sign); 4] = [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)];
const TYPES: [ZcpType; 2] = [ZcpType::Type1, ZcpType::Type2];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runs(parts: &[(u64, usize)]) -> Vec<u64> {
    parts
        .iter()
        .flat_map(|&(m, k)| std::iter::repeat_n(m, k))
        .collect()
}

fn pair(a: &str, b: &str) -> SequencePair {
    SequencePair::parse(a, b).unwrap()
}

/// K2-seeded recipes up to `max_len`, every step order included.
fn binary_seeded(max_len: usize) -> Vec<GcpRecipe> {
    fn grow(prefix: Vec<KernelId>, len: usize, max_len: usize, out: &mut Vec<GcpRecipe>) {
        out.push(GcpRecipe::new(KernelId::K2, prefix.clone()));
        for k in KernelId::ALL {
            if len * k.len() <= max_len {
                let mut next = prefix.clone();
                next.push(k);
                grow(next, len * k.len(), max_len, out);
            }
        }
    }
    let mut out = Vec::new();
    grow(Vec::new(), 2, max_len, &mut out);
    out
}

fn table_recipes() -> Vec<(GcpRecipe, usize)> {
    [
        ("K10", 5),
        ("K10*K10", 41),
        ("K10*K10*K10", 401),
        ("K26", 13),
        ("K26*K26", 313),
        ("K26*K10", 121),
        ("K26*K10*K10", 1201),
    ]
    .iter()
    .map(|&(r, z)| (r.parse().unwrap(), z))
    .collect()
}

fn printed_len20() -> SequencePair {
    pair("++-+-+--++--+-----++", "++-+-+--++++-+++++--")
}

fn printed_len100() -> SequencePair {
    pair(
        concat!(
            "++-+++++--++-+++++----+--",
            "---++++-+-+--++--+-----++",
            "++-+-+--++--+-----++--+-+",
            "-++--++-+-+--++++-+-+--++",
        ),
        concat!(
            "++-+++++--++-+++++----+--",
            "---++++-+-+--++++-+++++--",
            "++-+-+--++++-+++++--++-+-",
            "+--++--+-+-++----+-+-++--",
        ),
    )
}

struct Golden {
    name: &'static str,
    pair: SequencePair,
    expected: Vec<u64>,
}

fn golden() -> Vec<Golden> {
    let p20 = printed_len20();
    let p100 = printed_len100();
    let k10 = kernel(KernelId::K10);
    let g = |name, pair: SequencePair, expected| Golden {
        name,
        pair,
        expected,
    };
    vec![
        g(
            "length-9 type-I pair",
            pair("+++-++-++", "+++---+-+"),
            vec![18, 0, 0, 0, 0, 2, 2, 2, 2],
        ),
        g(
            "length-9 type-II pair",
            pair("-+++-+-++", "-+++--+--"),
            vec![18, 2, 2, 2, 2, 0, 0, 0, 0],
        ),
        g(
            "length-20 front (+,-)",
            p20.insert(0, Plus, 0, Minus).unwrap(),
            runs(&[(42, 1), (0, 10), (2, 10)]),
        ),
        g(
            "length-20 front (+,+)",
            p20.insert(0, Plus, 0, Plus).unwrap(),
            runs(&[(42, 1), (2, 10), (0, 10)]),
        ),
        g(
            "length-100 front (+,-)",
            p100.insert(0, Plus, 0, Minus).unwrap(),
            runs(&[(202, 1), (0, 40), (2, 10), (0, 10), (2, 40)]),
        ),
        g(
            "length-100 front (+,+)",
            p100.insert(0, Plus, 0, Plus).unwrap(),
            runs(&[(202, 1), (2, 40), (0, 10), (2, 10), (0, 40)]),
        ),
        g(
            "length-20 end (+,+)",
            p20.insert(20, Plus, 20, Plus).unwrap(),
            runs(&[(42, 1), (0, 10), (2, 10)]),
        ),
        g(
            "length-20 middle (+,+)",
            p20.insert(10, Plus, 10, Plus).unwrap(),
            runs(&[(42, 1), (2, 10), (0, 10)]),
        ),
        g(
            "K10 unequal (5,4,+,+)",
            k10.insert(5, Plus, 4, Plus).unwrap(),
            runs(&[(22, 1), (2, 5), (0, 5)]),
        ),
    ]
}

fn criterion_1() -> Check {
    for g in golden() {
        let got = aacs_profile(&g.pair).magnitudes();
        ensure(got == g.expected, || format!("{}: {got:?}", g.name))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let recipes = binary_seeded(2080);
    for recipe in &recipes {
        let z = recipe.len() / 2 + 1;
        for pos in [Front, End] {
            for t in TYPES {
                let c = construct_obzcp(recipe, &InsertionSpec::for_target(pos, t))
                    .map_err(|e| e.to_string())?;
                ensure(c.report.is_optimal(t) && c.report.zcz(t) == z, || {
                    format!("{recipe} {pos} {t}: Z={}", c.report.zcz(t))
                })?;
                ensure(c.report.out_of_zone.get(t).iter().all(|&m| m == 2), || {
                    format!("{recipe} {pos} {t}: out-of-zone not all 2")
                })?;
                ensure(c.prediction_holds() == Some(true), || {
                    format!("{recipe} {pos} {t}: prediction")
                })?;
            }
        }
    }
    ensure(recipes.len() > 20, || "recipe enumeration too small".into())
}

fn criterion_3() -> Check {
    for (recipe, z) in table_recipes() {
        for pos in [Front, End] {
            for (x, y) in SIGNS {
                let c = construct_obzcp(&recipe, &InsertionSpec::new(pos, x, y))
                    .map_err(|e| e.to_string())?;
                let pred = c.prediction.as_ref().unwrap();
                // Four shift segments after the in-phase one.
                let segs = &pred.segments()[1..];
                ensure(segs.len() == 4, || {
                    format!("{recipe}: {} segments", segs.len())
                })?;
                ensure(c.prediction_holds() == Some(true), || {
                    format!("{recipe} {pos} {x}{y}: mismatch")
                })?;
                let t = if (x.value() * y.value() == -1) == (pos == Front) {
                    ZcpType::Type1
                } else {
                    ZcpType::Type2
                };
                ensure(c.report.zcz(t) == z && pred.zcz(t) == z, || {
                    format!("{recipe} {pos} {x}{y}: Z={} expected {z}", c.report.zcz(t))
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for recipe in binary_seeded(1040) {
        let n = recipe.len() / 2;
        let expected = runs(&[(2 * (2 * n as u64 + 1), 1), (2, n), (0, n)]);
        for (x, y) in SIGNS {
            let c = construct_obzcp(&recipe, &InsertionSpec::new(Middle, x, y))
                .map_err(|e| e.to_string())?;
            ensure(
                c.report.profile.magnitudes() == expected && c.report.optimal.type2,
                || format!("{recipe} {x}{y}"),
            )?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut recipes = binary_seeded(2080);
    recipes.extend(table_recipes().into_iter().map(|(r, _)| r));
    for recipe in recipes {
        let p = build_gcp(&recipe).map_err(|e| e.to_string())?;
        let check = block_structure(&p, &recipe).map_err(|e| e.to_string())?;
        ensure(check.holds(), || format!("{recipe}: {check:?}"))?;
        ensure(check.leading_same.is_some(), || {
            format!("{recipe}: no leading-run claim checked")
        })?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let config = SearchConfig {
        cap: 11,
        ..SearchConfig::default()
    };
    for n in [3, 5, 7, 9, 11] {
        for t in TYPES {
            let r = exhaustive_max_zcz(n, t, &config).map_err(|e| e.to_string())?;
            ensure(r.max_zcz == n.div_ceil(2), || {
                format!("N={n} {t}: max Z {}", r.max_zcz)
            })?;
        }
        let floor = out_of_zone_floor(n, &config).map_err(|e| e.to_string())?;
        ensure(floor.holds(), || {
            format!("N={n}: {} floor violations", floor.violations)
        })?;
    }
    let k10 = insertion_search(&kernel(KernelId::K10), "K10", true, &config)
        .map_err(|e| e.to_string())?;
    ensure(k10.has_hit(5, 4, Plus, Plus, ZcpType::Type2), || {
        "K10: (5,4,+,+) missing".into()
    })?;
    let p100 = printed_len100();
    for unequal in [false, true] {
        let r = insertion_search(&p100, "K10*K10", unequal, &config).map_err(|e| e.to_string())?;
        ensure(r.hits.is_empty(), || {
            format!("K10*K10 unequal={unequal}: {} hits", r.hits.len())
        })?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let mut cases: Vec<(SequencePair, SequencePair)> = Vec::new();
    for a in KernelId::ALL {
        for b in KernelId::ALL {
            cases.push((kernel(a), kernel(b)));
        }
    }
    for recipe in binary_seeded(2080) {
        if let Some((&last, rest)) = recipe.steps().split_last() {
            let inner = build_gcp(&GcpRecipe::new(recipe.seed(), rest.to_vec())).unwrap();
            cases.push((kernel(last), inner));
        }
    }
    for (outer, inner) in &cases {
        let whole = turyn(outer, inner).map_err(|e| e.to_string())?;
        for i in 0..whole.len() {
            let (e, f) = turyn_element(outer, inner, i).map_err(|e| e.to_string())?;
            ensure(
                Some(e) == whole.first().sign(i) && Some(f) == whole.second().sign(i),
                || format!("length {} index {i}", whole.len()),
            )?;
        }
    }

    let mut rng = StdRng::seed_from_u64(20_261_016);
    for case in 0..200 {
        let n = 2 * rng.gen_range(1..=50);
        let values: Vec<i64> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
        let a = BinarySequence::from_values(&values).unwrap();
        let r = [0, n / 2, n][case % 3];
        let x = if rng.gen() { Plus } else { Minus };
        let tau = rng.gen_range(1..=n);
        let longer = a.insert(r, x).unwrap();
        let direct = aacf(&longer, tau).unwrap();
        let closed = inserted_aacf(&a, r, x, tau).map_err(|e| e.to_string())?;
        ensure(direct == closed, || {
            format!("{a} r={r} x={x} τ={tau}: {closed} vs {direct}")
        })?;
    }
    Ok(())
}

fn cli(args: &[&str]) -> Result<String, String> {
    let output = Command::new(env!("CARGO_BIN_EXE_golayzcp"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !output.status.success() {
        return Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    String::from_utf8(output.stdout).map_err(|e| e.to_string())
}

fn criterion_8() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let round_trip = |name: &str, text: String, in_process: &ZcpReport| -> Check {
        let file: String = name
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        let path = dir.path().join(format!("{file}.txt"));
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        let via_cli = cli(&["classify", path.to_str().unwrap()])?;
        ensure(via_cli == format!("{}\n", in_process.to_json()), || {
            format!("{name}: report differs")
        })
    };

    for g in golden() {
        let report = classify(&g.pair);
        round_trip(g.name, g.pair.to_text(), &report)?;
    }
    // Pairs produced by the CLI itself.
    let generated = [
        ("K2*K10", "front", "+1", "-1"),
        ("K2*K10", "front", "+1", "+1"),
        ("K10*K10", "front", "+1", "-1"),
        ("K10*K10", "front", "+1", "+1"),
        ("K2*K10", "end", "+1", "+1"),
        ("K2*K10", "middle", "+1", "+1"),
    ];
    for (recipe, pos, x, y) in generated {
        let text = cli(&["zcp", recipe, "--pos", pos, "--x", x, "--y", y])?;
        let spec = InsertionSpec::new(pos.parse().unwrap(), x.parse().unwrap(), y.parse().unwrap());
        let c = construct_obzcp(&recipe.parse().unwrap(), &spec).map_err(|e| e.to_string())?;
        round_trip(&format!("{recipe}-{pos}-{x}{y}"), text, &c.report)?;
        let report = cli(&["zcp", recipe, "--pos", pos, "--x", x, "--y", y, "--report"])?;
        ensure(report == format!("{}\n", c.report.to_json()), || {
            format!("{recipe} {pos}: --report differs")
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden example profiles", criterion_1),
        (
            "K2-seeded front/end insertion sweep up to 2080",
            criterion_2,
        ),
        (
            "kernel-power and K26-mixed four-segment profiles",
            criterion_3,
        ),
        ("middle insertion up to 1040", criterion_4),
        ("column structure of every generated GCP", criterion_5),
        ("exhaustive oracles and insertion searches", criterion_6),
        (
            "element/vector and closed-form/direct agreement",
            criterion_7,
        ),
        ("CLI generate/serialize/classify round trip", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
