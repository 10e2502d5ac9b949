//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fuzzbound::SpaceFile;
use fuzzbound_core::boundary::{boundary, cuchillo_ibanez_boundary, pu_liu_boundary, warren_boundary};
use fuzzbound_core::claims::{claim_by_id, registry};
use fuzzbound_core::search::pool::example_space;
use fuzzbound_core::search::{AuditPlan, AuditReport, NoClock, SearchConfig, Status};
use fuzzbound_core::{FuzzySet, FuzzyTopology, Outcome};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const PROVABLE: [&str; 15] = [
    "T2.1.i",
    "T2.1.ii-leq",
    "T2.1.iii",
    "T2.1.iv",
    "T2.1.v",
    "T2.1.vi",
    "T2.1.vii",
    "T2.1.viii-nonstrict",
    "T2.1.ix",
    "T2.1.x",
    "T2.1.xi",
    "T2.1.xii-fwd",
    "B.1",
    "B.3",
    "B.5",
];

const REFUTED: [&str; 11] = [
    "T3.1",
    "T3.2",
    "T3.3",
    "T2.1.viii-strict",
    "T2.1.xii-conv",
    "B.2",
    "W.1",
    "W.2",
    "W.3",
    "W.6",
    "W.7",
];

fn fixture_space() -> Result<FuzzyTopology, String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/example.space");
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = SpaceFile::parse(&text).map_err(|e| e.to_string())?;
    file.topology().map_err(|v| format!("{v:?}"))
}

fn within(elapsed: Duration, limit: Duration) -> Check {
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(format!("{:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn golden_example() -> Check {
    let started = Instant::now();
    let t = fixture_space()?;
    let a = t.set(&[4, 3]).map_err(|e| e.to_string())?;
    let bd = boundary(&t, &a).map_err(|e| e.to_string())?;
    let closed = t.is_closed(&bd).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure!(bd.values() == [3, 4], "bd = {bd}, expected 3 4");
    ensure!(!closed, "bd (3 4) reported closed");
    ensure!(
        t == example_space(),
        "fixture file differs from the built-in example space"
    );
    Ok(format!(
        "bd(4 3) = 3 4, not closed, {}",
        within(elapsed, Duration::from_secs(1))?
    ))
}

fn boundary_comparison() -> Check {
    let started = Instant::now();
    let t = fixture_space()?;
    let a = t.set(&[4, 3]).map_err(|e| e.to_string())?;
    let bd = boundary(&t, &a).map_err(|e| e.to_string())?;
    let others = [
        ("bdI", warren_boundary(&t, &a)),
        ("bdII", pu_liu_boundary(&t, &a)),
        ("bdIII", cuchillo_ibanez_boundary(&t, &a)),
    ];
    let elapsed = started.elapsed();
    for (name, value) in others {
        let value = value.map_err(|e| e.to_string())?;
        ensure!(value.values() == [7, 6], "{name} = {value}, expected 7 6");
        ensure!(bd.leq(&value).unwrap(), "bd = {bd} not below {name} = {value}");
    }
    Ok(format!(
        "bdI = bdII = bdIII = 7 6 >= bd, {}",
        within(elapsed, Duration::from_secs(1))?
    ))
}

fn suite_config() -> SearchConfig {
    SearchConfig::exhaustive(1..=1, 1..=2)
        .with_exhaustive(2..=2, 1..=1)
        .with_random(2..=2, 10..=10, 1000)
}

fn provable_suite(report: &AuditReport, elapsed: Duration) -> Check {
    for id in PROVABLE {
        let r = report.record(id).ok_or(format!("{id} missing from report"))?;
        ensure!(r.tally.fails == 0, "{id}: {} failures", r.tally.fails);
        ensure!(r.status == Status::VerifiedInBudget, "{id}: {}", r.status);
    }
    Ok(format!(
        "{} claims, 0 failures over {} spaces ({} unary, {} binary instances), {}",
        PROVABLE.len(),
        report.spaces,
        report.unary_instances,
        report.binary_instances,
        within(elapsed, Duration::from_secs(60))?
    ))
}

/// Rebuild a witness from its rendered text and re-evaluate the claim.
fn replays(id: &str, space: &str, args: &[FuzzySet]) -> Result<Outcome, String> {
    let t = SpaceFile::parse(space)
        .map_err(|e| e.to_string())?
        .topology()
        .map_err(|v| format!("{v:?}"))?;
    let args = args
        .iter()
        .map(|a| t.set(a.values()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    claim_by_id(id).unwrap().evaluate(&t, &args).map_err(|e| e.to_string())
}

fn edge_refutations(report: &AuditReport) -> Check {
    for id in REFUTED {
        let r = report.record(id).ok_or(format!("{id} missing from report"))?;
        ensure!(r.status == Status::Refuted, "{id}: {}", r.status);
        let w = r.witness.as_ref().ok_or(format!("{id}: no witness"))?;
        let space = fuzzbound::render(&w.topology);
        ensure!(
            replays(id, &space, &w.args)? == Outcome::Fails,
            "{id}: witness does not replay"
        );
    }
    for id in ["T3.1", "T3.2", "T3.3"] {
        let w = report.record(id).unwrap().witness.as_ref().unwrap();
        ensure!(w.args[0].is_one(), "{id}: witness A = {}, expected 1_X", w.args[0]);
    }
    let w = report.record("T2.1.viii-strict").unwrap().witness.as_ref().unwrap();
    ensure!(w.args[0] == w.args[1], "viii-strict witness has A != B");
    let w = report.record("T2.1.xii-conv").unwrap().witness.as_ref().unwrap();
    ensure!(
        w.topology.carrier().len() == 1 && w.topology.denominator() == 2 && w.topology.len() == 2,
        "xii-conv witness space:\n{}",
        fuzzbound::render(&w.topology)
    );
    ensure!(w.args[0].values() == [1], "xii-conv witness A = {}", w.args[0]);

    let b4 = report.record("B.4").ok_or("B.4 missing from report")?;
    ensure!(b4.status == Status::Witnessed, "B.4: {}", b4.status);
    let example = example_space();
    let a = example.set(&[4, 3]).unwrap();
    ensure!(
        claim_by_id("B.4").unwrap().evaluate(&example, &[a]).unwrap() == Outcome::Holds,
        "B.4 does not hold on the example fixture"
    );
    Ok(format!(
        "{} REFUTED with replayable shrunk witnesses, B.4 WITNESSED",
        REFUTED.len()
    ))
}

fn oracle_equivalence(plan: &AuditPlan) -> Check {
    let pool = plan.pool();
    let mut checked = 0usize;
    for arity in [1, 2] {
        for inst in pool.instances(arity) {
            let t = pool.topology(inst);
            for a in &inst.args {
                // interior as the join of open subsets, closure as the meet of closed supersets
                let mut int = t.bottom();
                for u in t.opens().iter().filter(|u| u.leq(a).unwrap()) {
                    int = int.join(u).unwrap();
                }
                let cl_of = |x: &FuzzySet| {
                    let mut cl = t.top();
                    for c in t.closed_sets().iter().filter(|c| x.leq(c).unwrap()) {
                        cl = cl.meet(c).unwrap();
                    }
                    cl
                };
                let dual = cl_of(&a.complement()).complement();
                ensure!(
                    int == dual,
                    "interior duality fails for A = {a} on\n{}",
                    fuzzbound::render(t)
                );
                ensure!(int == t.interior(a).unwrap(), "library interior differs for A = {a}");

                let cl = cl_of(a);
                let int_cl = t.interior(&cl).unwrap();
                let cl_int = cl_of(&int);
                let expected = int_cl.join(&cl_int).unwrap().complement();
                let got = boundary(t, &a.complement()).unwrap();
                ensure!(
                    got == expected,
                    "complement identity fails for A = {a}: {got} vs {expected}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} argument sets, exact agreement"))
}

fn fuzzbound(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzbound"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "{args:?} exited with {:?}", out.status.code());
    Ok(out.stdout)
}

fn determinism() -> Check {
    let args = [
        "check",
        "--mode",
        "random",
        "--n",
        "1-3",
        "--d",
        "2-10",
        "--samples",
        "300",
        "--seed",
        "20240601",
        "--format",
        "machine",
    ];
    let first = fuzzbound(&args)?;
    let second = fuzzbound(&args)?;
    ensure!(first == second, "two runs differ");
    let mut one = args.to_vec();
    one.extend(["--workers", "1"]);
    let mut four = args.to_vec();
    four.extend(["--workers", "4"]);
    let serial = fuzzbound(&one)?;
    ensure!(serial == fuzzbound(&four)?, "1 and 4 workers differ");
    ensure!(serial == first, "explicit --workers 1 differs from default");
    Ok(format!("{} bytes identical across 2 runs and 1/4 workers", first.len()))
}

fn enumeration_counts() -> Check {
    for (n, d, want) in [("1", "1", 1), ("1", "2", 2), ("2", "1", 4)] {
        let out = fuzzbound(&["enumerate", "--n", n, "--d", d, "--count-only"])?;
        let got = String::from_utf8_lossy(&out).trim().to_owned();
        ensure!(got == want.to_string(), "n={n} d={d}: got {got}, expected {want}");
    }
    Ok("(1,1) -> 1, (1,2) -> 2, (2,1) -> 4".into())
}

fn main() {
    let mut results: Vec<(&str, Check)> = Vec::new();
    results.push(("golden example", golden_example()));
    results.push(("boundary comparison", boundary_comparison()));

    let started = Instant::now();
    let audited = AuditPlan::new(&suite_config(), registry().iter().collect())
        .map_err(|e| e.to_string())
        .and_then(|plan| plan.run(&NoClock).map(|r| (plan, r)).map_err(|e| e.to_string()));
    let elapsed = started.elapsed();
    match &audited {
        Ok((plan, report)) => {
            results.push(("provable-claim suite", provable_suite(report, elapsed)));
            results.push(("edge-case refutations", edge_refutations(report)));
            results.push(("oracle equivalence", oracle_equivalence(plan)));
        }
        Err(e) => {
            for name in ["provable-claim suite", "edge-case refutations", "oracle equivalence"] {
                results.push((name, Err(format!("audit failed: {e}"))));
            }
        }
    }
    results.push(("determinism", determinism()));
    results.push(("enumeration counts", enumeration_counts()));

    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
