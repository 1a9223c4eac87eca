//! Acceptance gate. Every criterion is exact (tolerance zero).
//!
//! Run with `cargo test -p mckay-quiver --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use mckay_quiver::abelian::{det_character, AbRep, FinAbGroup};
use mckay_quiver::chartab::{
    builtin_table, mckay_quiver_table, quaternion_table, table_from_abelian, validate_table, RepSpec, TableError,
};
use mckay_quiver::covering::{build_instance, check_regular_covering, LOCAL_BIJECTION};
use mckay_quiver::cyclotomic::CycloInt;
use mckay_quiver::diagrams::{preset, preset_names};
use mckay_quiver::emit::parse_json;
use mckay_quiver::mckay::{mckay_quiver_abelian, returning_arrow_quiver, returning_character, Quiver, VertexPayload};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const SEED: u64 = 0x6d63_6b61_79;

fn shift(n: usize, steps: &[usize]) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| (0..n).map(|j| steps.iter().filter(|&&s| j == (i + s) % n).count() as u64).collect())
        .collect()
}

fn exponents(q: &Quiver) -> Vec<Vec<u32>> {
    q.vertices()
        .iter()
        .map(|v| match &v.payload {
            VertexPayload::Exponents(e) => e.clone(),
            other => panic!("unexpected payload {other:?}"),
        })
        .collect()
}

fn criterion_1_golden_figures() -> Outcome {
    let doubled_square = vec![vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![1, 0, 0, 1], vec![0, 1, 1, 0]];
    let square_with_diagonals = vec![vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 0, 1], vec![1, 1, 1, 0]];
    let doubled_cube = vec![
        vec![0, 1, 1, 0, 1, 0, 0, 0],
        vec![1, 0, 0, 1, 0, 1, 0, 0],
        vec![1, 0, 0, 1, 0, 0, 1, 0],
        vec![0, 1, 1, 0, 0, 0, 0, 1],
        vec![1, 0, 0, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 0, 1, 0, 0, 1],
        vec![0, 0, 1, 0, 1, 0, 0, 1],
        vec![0, 0, 0, 1, 0, 1, 1, 0],
    ];
    let golden: Vec<(&str, Vec<Vec<u64>>)> = vec![
        ("wuxing-sheng", shift(5, &[1])),
        ("wuxing-ke", shift(5, &[2])),
        ("wuxing-shengke", shift(5, &[1, 2])),
        ("taiji", vec![vec![1]]),
        ("liangyi", vec![vec![0, 1], vec![1, 0]]),
        ("liangyi-sl2", vec![vec![0, 2], vec![2, 0]]),
        ("taijitu", vec![vec![1, 2], vec![2, 1]]),
        ("sixiang", doubled_square),
        ("sixiang-sl3", square_with_diagonals),
        ("bagua", doubled_cube),
    ];
    for (name, expected) in &golden {
        let q = preset(name).map_err(|e| e.to_string())?;
        ensure!(q.mult() == expected.as_slice(), "{name}: got {:?}", q.mult());
    }
    ensure!(preset("bagua").unwrap().arrow_count() == 24, "bagua arrow count");
    Ok(format!("{} preset matrices match", golden.len()))
}

fn criterion_2_hexagrams() -> Outcome {
    let start = Instant::now();
    let q = preset("hexagrams").map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(q.len() == 64, "{} vertices", q.len());
    ensure!(q.arrow_count() == 384, "{} arrows", q.arrow_count());
    for i in 0..64 {
        ensure!(q.out_degree(i) == 6 && q.in_degree(i) == 6, "vertex {i} degrees");
    }
    let tuples = exponents(&q);
    for i in 0..64 {
        for j in 0..64 {
            let hamming = tuples[i].iter().zip(&tuples[j]).filter(|(a, b)| a != b).count();
            ensure!(q.mult()[i][j] == (hamming == 1) as u64, "adjacency ({i},{j})");
        }
    }
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("64 vertices, 384 arrows, 6-regular, one-coordinate adjacency, built in {elapsed:?}"))
}

fn criterion_3_returning_arrows() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let groups = common::small_presentations(36);
    let (mut exhaustive, mut random) = (0usize, 0usize);
    for g in &groups {
        let reps = common::test_reps(g, 50, &mut rng);
        if g.size() <= 8 {
            exhaustive += reps.len();
        } else {
            random += reps.len();
        }
        for v in reps {
            let q = returning_arrow_quiver(g, &v);
            let base = mckay_quiver_abelian(g, &v);
            let det_inv = AbRep::new(g.clone(), vec![returning_character(&v)]).unwrap();
            let perm = mckay_quiver_abelian(g, &det_inv);
            ensure!(perm.is_permutation_matrix(), "{g} {}: det⁻¹ quiver not a permutation", v.describe());
            for i in 0..q.len() {
                for j in 0..q.len() {
                    ensure!(
                        q.mult()[i][j] == base.mult()[i][j] + perm.mult()[i][j],
                        "{g} V={}: entry ({i},{j})",
                        v.describe()
                    );
                }
            }
        }
    }
    ensure!(random >= 200, "only {random} random cases");
    Ok(format!("{} groups, {exhaustive} exhaustive + {random} random (seeded) representations", groups.len()))
}

fn covering_groups() -> Vec<FinAbGroup> {
    let mut groups = common::abelian_isomorphism_types(16);
    for g in common::small_presentations(16) {
        if !groups.contains(&g) {
            groups.push(g);
        }
    }
    groups
}

fn criterion_4_regular_covering() -> Outcome {
    let iso = common::abelian_isomorphism_types(16);
    ensure!(iso.len() == 25, "expected 25 abelian groups of order <= 16, found {}", iso.len());
    let groups = covering_groups();
    let (mut instances, mut controls) = (0usize, 0usize);
    for g in &groups {
        for v in common::all_reps(g, 3) {
            let mut inst = build_instance(g, &v);
            let report = check_regular_covering(&inst);
            ensure!(report.passed, "{g} V={}: {:?}", v.describe(), report.checks);
            ensure!(report.checks.len() == 4, "expected four sub-checks");
            instances += 1;

            if let Some((i, j, _)) = inst.cover.arrows().first().copied() {
                *inst.cover.mult_mut(i, j) -= 1;
                let broken = check_regular_covering(&inst);
                ensure!(!broken.passed, "{g} V={}: negative control passed", v.describe());
                ensure!(
                    !broken.check(LOCAL_BIJECTION).unwrap().passed,
                    "{g} V={}: negative control not caught by local bijection",
                    v.describe()
                );
                controls += 1;
            }
        }
    }
    Ok(format!("{instances} instances over {} groups pass; {controls} negative controls fail check (d)", groups.len()))
}

fn criterion_5_oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut groups = common::abelian_isomorphism_types(16);
    for g in common::small_presentations(16) {
        if !groups.contains(&g) {
            groups.push(g);
        }
    }
    let mut count = 0usize;
    let mut random = 0usize;
    for g in &groups {
        let table = table_from_abelian(g);
        validate_table(&table).map_err(|e| format!("{g}: {e:?}"))?;
        let reps = common::test_reps(g, 20, &mut rng);
        if g.size() > 8 {
            random += reps.len();
        }
        for v in reps {
            // characters are enumerated in the same lex order as the table rows
            let rows = v.summands().iter().map(|s| g.index_of(s.exponents())).collect();
            let oracle = mckay_quiver_table(&table, &RepSpec::new(rows)).map_err(|e| e.to_string())?;
            let fast = mckay_quiver_abelian(g, &v);
            ensure!(oracle.mult() == fast.mult(), "{g} V={}: matrices differ", v.describe());
            count += 1;
        }
    }
    ensure!(random >= 200, "only {random} random cases");
    Ok(format!("{count} (group, V) pairs over {} groups agree ({random} random)", groups.len()))
}

fn criterion_6_ade_anchors() -> Outcome {
    let q8 = quaternion_table();
    let q = mckay_quiver_table(&q8, &RepSpec::new(vec![4])).map_err(|e| e.to_string())?;
    ensure!(q.len() == 5, "Q8 quiver has {} vertices", q.len());
    ensure!(q.loop_count() == 0, "Q8 quiver has loops");
    ensure!(q.in_degree(4) == 4 && q.out_degree(4) == 4, "center degree");
    for leaf in 0..4 {
        ensure!(q.in_degree(leaf) == 1 && q.out_degree(leaf) == 1, "leaf {leaf} degree");
        ensure!(q.mult()[leaf][4] == 1 && q.mult()[4][leaf] == 1, "leaf {leaf} not joined to center");
    }
    for n in 3..=5usize {
        let t = builtin_table(&format!("c{n}")).unwrap();
        let q = mckay_quiver_table(&t, &RepSpec::new(vec![1, n - 1])).map_err(|e| e.to_string())?;
        ensure!(q.mult() == shift(n, &[1, n - 1]).as_slice(), "C{n}: not doubled affine A{}", n - 1);
    }
    Ok("Q8 gives doubled affine D4; C3, C4, C5 give doubled affine A2, A3, A4".into())
}

fn criterion_7_structural_invariants() -> Outcome {
    let mut checked = 0usize;
    let mut check = |q: &Quiver, balanced: bool, what: &str| -> Result<(), String> {
        ensure!(q.row_sum_law_holds(), "{what}: row-sum law fails");
        if balanced {
            ensure!(q.is_balanced(), "{what}: in-degree != out-degree");
        }
        checked += 1;
        Ok(())
    };
    for name in preset_names() {
        let p = mckay_quiver::diagrams::find_preset(name).unwrap();
        let q = p.build();
        let det_trivial = q.meta().construction == "returning_arrow" || det_character(&p.rep).is_trivial();
        check(&q, det_trivial, name)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for g in common::small_presentations(36) {
        for v in common::test_reps(&g, 50, &mut rng) {
            let det_trivial = det_character(&v).is_trivial();
            check(&mckay_quiver_abelian(&g, &v), det_trivial, &format!("{g} V={}", v.describe()))?;
            check(&returning_arrow_quiver(&g, &v), true, &format!("{g} V={} (SL)", v.describe()))?;
        }
    }
    let q8 = quaternion_table();
    let mut tables = vec![("q8", q8)];
    for name in ["c2xc2", "c6", "c12"] {
        tables.push((name, builtin_table(name).unwrap()));
    }
    for (name, t) in &tables {
        let n = t.num_rows();
        for a in 0..n {
            for b in a..n {
                let q = mckay_quiver_table(t, &RepSpec::new(vec![a, b])).map_err(|e| e.to_string())?;
                check(&q, false, &format!("{name} V=rows {a},{b}"))?;
            }
        }
    }
    Ok(format!("{checked} quivers satisfy the row-sum law and SL balance"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    ensure!(out.status.success(), "mckay {args:?} exited with {:?}", out.status.code());
    Ok(out.stdout)
}

fn criterion_8_determinism() -> Outcome {
    let mut runs = 0;
    for name in preset_names() {
        for format in ["dot", "json"] {
            let args = ["preset", name, "--format", format];
            let first = run_cli(&args)?;
            let second = run_cli(&args)?;
            ensure!(first == second, "{name} {format}: outputs differ between runs");
            runs += 2;
            if format == "json" {
                let text = String::from_utf8(first).map_err(|e| e.to_string())?;
                let parsed = parse_json(&text).map_err(|e| e.to_string())?;
                let direct = preset(name).unwrap();
                ensure!(parsed.mult() == direct.mult(), "{name}: json round-trip matrix differs");
                ensure!(parsed.vertices() == direct.vertices(), "{name}: json round-trip vertices differ");
            }
        }
    }
    Ok(format!("{runs} CLI runs byte-identical in pairs; JSON round-trips exactly"))
}

fn criterion_9_table_validation() -> Outcome {
    let mut names = vec!["q8".to_string(), "c2xc2".to_string()];
    names.extend((1..=12).map(|n| format!("c{n}")));
    for name in &names {
        let t = builtin_table(name).ok_or(format!("missing table {name}"))?;
        validate_table(&t).map_err(|e| format!("{name}: {e:?}"))?;
    }
    let mut t = quaternion_table();
    t.rows[1][3] = CycloInt::from_integer(t.root_order, 1);
    let errs = match validate_table(&t) {
        Ok(()) => return Err("perturbed Q8 table validated".into()),
        Err(errs) => errs,
    };
    ensure!(
        errs.iter().any(|e| matches!(e, TableError::Orthogonality { .. })),
        "no orthogonality error in {errs:?}"
    );
    let first = errs.iter().find(|e| matches!(e, TableError::Orthogonality { .. })).unwrap();
    ensure!(first.to_string().starts_with("row orthogonality"), "unnamed error: {first}");
    Ok(format!("{} shipped tables valid; perturbed Q8 rejected with '{first}'", names.len()))
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 figure reproduction", criterion_1_golden_figures),
        ("2 hexagram quiver", criterion_2_hexagrams),
        ("3 returning arrows", criterion_3_returning_arrows),
        ("4 regular covering", criterion_4_regular_covering),
        ("5 oracle equivalence", criterion_5_oracle_equivalence),
        ("6 ADE anchors", criterion_6_ade_anchors),
        ("7 structural invariants", criterion_7_structural_invariants),
        ("8 determinism", criterion_8_determinism),
        ("9 table validation", criterion_9_table_validation),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:?}]", start.elapsed()),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
