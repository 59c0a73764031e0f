//! Acceptance criteria 1-8, run against the built `e6check` binary.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

/// A criterion yields the time it was judged against.
type Criterion<'a> = Box<dyn Fn() -> Result<Duration, String> + 'a>;

struct Run {
    report: Value,
    code: i32,
    elapsed: Duration,
}

fn run(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_e6check"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run {
        report,
        code,
        elapsed,
    }
}

fn checks(r: &Run) -> Vec<&Value> {
    r.report["checks"]
        .as_array()
        .map(|a| a.iter().collect())
        .unwrap_or_default()
}

fn check<'a>(r: &'a Run, id: &str) -> Option<&'a Value> {
    checks(r).into_iter().find(|c| c["check_id"] == id)
}

/// The check exists, passed, and reports `actual`.
fn passes_with(r: &Run, id: &str, actual: &str) -> Result<(), String> {
    let c = check(r, id).ok_or(format!("{id} missing"))?;
    if c["status"] != "pass" || c["actual"] != actual {
        return Err(format!(
            "{id}: status {} actual {}",
            c["status"], c["actual"]
        ));
    }
    Ok(())
}

fn within(elapsed: Duration, limit_ms: u128) -> Result<Duration, String> {
    if elapsed.as_millis() >= limit_ms {
        return Err(format!(
            "took {} ms, limit {limit_ms} ms",
            elapsed.as_millis()
        ));
    }
    Ok(elapsed)
}

fn suffix_checks<'a>(r: &'a Run, suffix: &str) -> Vec<&'a Value> {
    checks(r)
        .into_iter()
        .filter(|c| {
            c["check_id"]
                .as_str()
                .is_some_and(|id| id.ends_with(suffix))
        })
        .collect()
}

fn fermat_rank() -> Result<Duration, String> {
    let r = run(&["fermat"]);
    passes_with(&r, "fermat.nu_rank", "50")?;
    passes_with(&r, "fermat.kernel_dim", "5")?;
    passes_with(&r, "fermat.kernel_vectors", "5")?;
    within(r.elapsed, 1000)
}

fn character_blocks() -> Result<Duration, String> {
    let r = run(&["fermat"]);
    passes_with(&r, "fermat.block_count", "45")?;
    passes_with(&r, "fermat.block_sizes", "40x1,5x3")?;
    passes_with(&r, "fermat.block_ranks", "40x1,5x2")?;
    passes_with(&r, "fermat.block_rank_sum", "50")?;
    within(r.elapsed, 1000)
}

fn sweep(r: &Run) -> Result<Duration, String> {
    if r.code != 0 {
        return Err(format!("exit code {}", r.code));
    }
    let bounds = suffix_checks(r, ".nu_rank_bound");
    if bounds.is_empty() || bounds.iter().any(|c| c["status"] != "pass") {
        return Err("rank(nu) <= 50 violated or never checked".into());
    }
    let summary = check(r, "cubic.rank50_fraction").ok_or("summary missing")?;
    if summary["status"] != "pass" || summary["actual"] != summary["expected"] {
        return Err(format!(
            "rank 50 attained by {} of the smooth samples",
            summary["actual"]
        ));
    }
    within(r.elapsed, 60_000)
}

fn hilbert_and_smoothness(r: &Run, cone: &Path) -> Result<Duration, String> {
    let smooth = suffix_checks(r, ".hilbert_function");
    if smooth.is_empty() {
        return Err("no smooth samples".into());
    }
    for c in &smooth {
        if c["status"] != "pass" || c["actual"] != "1,5,10,10,5,1,0" {
            return Err(format!("{}: {}", c["check_id"], c["actual"]));
        }
    }
    let pairings = suffix_checks(r, ".pairing_r1_r4");
    if pairings.len() != smooth.len() || pairings.iter().any(|c| c["actual"] != "nondegenerate") {
        return Err("pairing R1 x R4 -> R5 degenerate or missing".into());
    }
    let cone_run = run(&["cubic", "--input", cone.to_str().expect("utf-8 path")]);
    let verdict = check(&cone_run, "cubic.f000.smooth").ok_or("cone verdict missing")?;
    if verdict["status"] != "skipped" || verdict["actual"] != "singular" || cone_run.code != 0 {
        return Err(format!(
            "cone reported {} (exit {})",
            verdict["actual"], cone_run.code
        ));
    }
    // Smoothness and pairing work in the sweep plus the whole cone run.
    let ms: u64 = suffix_checks(r, ".smooth")
        .iter()
        .chain(&pairings)
        .map(|c| c["runtime_ms"].as_u64().unwrap_or(0))
        .sum();
    within(Duration::from_millis(ms) + cone_run.elapsed, 5000)
}

fn grassmannian() -> Result<Duration, String> {
    let r = run(&["grassmannian"]);
    passes_with(&r, "grassmannian.d2.tableaux", "50")?;
    passes_with(&r, "grassmannian.d2.plucker", "50")?;
    passes_with(&r, "grassmannian.d2.agree", "50")?;
    within(r.elapsed, 1000)
}

fn branching_table() -> Result<Duration, String> {
    let r = run(&["branching"]);
    if r.code != 0 {
        return Err(format!("exit code {}", r.code));
    }
    for suffix in [".dims", ".sum", ".duality", ".elimination"] {
        let rows = suffix_checks(&r, suffix);
        if rows.len() != 8 || rows.iter().any(|c| c["status"] != "pass") {
            return Err(format!("{suffix}: {} rows, not all passing", rows.len()));
        }
    }
    passes_with(&r, "branching.e6.dim", "27")?;
    passes_with(&r, "branching.e6.self_dual", "not self-dual")?;
    passes_with(&r, "branching.threshold", "13")?;
    passes_with(&r, "branching.at_most_one_big_summand", "true")?;
    within(r.elapsed, 2000)
}

fn higgs_suite() -> Result<Duration, String> {
    let r = run(&["higgs-selftest", "--seed", "1", "--trials", "50"]);
    for name in [
        "commuting",
        "duality_involution",
        "duality_preserves_compatibility",
        "induced_c_roundtrip",
    ] {
        passes_with(&r, &format!("higgs.{name}"), "50/50")?;
    }
    within(r.elapsed, 10_000)
}

/// The report with timings zeroed and the self-hash dropped, as bytes.
fn masked(report: &Value) -> String {
    let mut v = report.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.remove("canonical_sha256");
    }
    if let Some(checks) = v["checks"].as_array_mut() {
        for c in checks {
            c["runtime_ms"] = Value::from(0);
        }
    }
    v.to_string()
}

fn determinism(first_sweep: &Run) -> Result<Duration, String> {
    let start = Instant::now();
    let commands: [&[&str]; 4] = [
        &["fermat"],
        &["grassmannian"],
        &["branching"],
        &["higgs-selftest", "--seed", "1", "--trials", "50"],
    ];
    let mut pairs: Vec<(String, Value, Value)> = commands
        .iter()
        .map(|args| (args.join(" "), run(args).report, run(args).report))
        .collect();
    let again = run(&[
        "cubic",
        "--random",
        "100",
        "--seed",
        "7",
        "--coeff-bound",
        "5",
    ]);
    pairs.push((
        "cubic sweep".into(),
        first_sweep.report.clone(),
        again.report,
    ));
    for (name, a, b) in pairs {
        if a.is_null() || a["canonical_sha256"] != b["canonical_sha256"] || masked(&a) != masked(&b)
        {
            return Err(format!("{name}: reports differ"));
        }
    }
    Ok(start.elapsed())
}

fn main() {
    let dir = std::env::temp_dir().join(format!("e6check-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let cone = dir.join("cone.json");
    std::fs::write(
        &cone,
        r#"{"degree":3,"terms":[{"coeff":"1","exps":[3,0,0,0,0]},{"coeff":"1","exps":[0,3,0,0,0]},{"coeff":"1","exps":[0,0,3,0,0]}],"vars":5}"#,
    )
    .expect("write cone");

    let start = Instant::now();
    let sweep_run = run(&[
        "cubic",
        "--random",
        "100",
        "--seed",
        "7",
        "--coeff-bound",
        "5",
    ]);
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "1 Fermat rank 50, kernel of dimension 5",
            Box::new(fermat_rank),
        ),
        ("2 Fermat character blocks", Box::new(character_blocks)),
        (
            "3 random sweep: rank <= 50, all smooth samples at 50",
            Box::new(|| sweep(&sweep_run)),
        ),
        (
            "4 Hilbert function, pairing, cone singular",
            Box::new(|| hilbert_and_smoothness(&sweep_run, &cone)),
        ),
        (
            "5 Grassmannian sections by two methods",
            Box::new(grassmannian),
        ),
        (
            "6 branching table and elimination",
            Box::new(branching_table),
        ),
        ("7 Higgs property suite", Box::new(higgs_suite)),
        (
            "8 deterministic canonical reports",
            Box::new(|| determinism(&sweep_run)),
        ),
    ];
    let mut failed = 0;
    for (name, criterion) in &criteria {
        match criterion() {
            Ok(t) => println!("PASS criterion {name} ({} ms)", t.as_millis()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    println!(
        "sweep wall time {} ms; total {} ms",
        sweep_run.elapsed.as_millis(),
        start.elapsed().as_millis()
    );
    let _ = std::fs::remove_dir_all(&dir);
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
