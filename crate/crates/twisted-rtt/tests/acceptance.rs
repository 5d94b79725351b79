//! Acceptance criteria 1–11, one PASS/FAIL line each.
//!
//! Criteria 6 and 9 include relation families whose literal displayed form
//! does not hold (see the README); those lines print FAIL together with the
//! failing families and their passing variants.  The test itself fails if
//! any other check fails, or if a literal failure has no passing variant.

use std::io::Write;
use std::time::{Duration, Instant};
use twisted_rtt::currents::check_currents;
use twisted_rtt::exact_algebra::Mode;
use twisted_rtt::gauss::{check_central, check_embed, check_gauss, EvalParam, LOperator};
use twisted_rtt::qseries::check_f_identity;
use twisted_rtt::report::{Check, Status};
use twisted_rtt::repv::{check_drinfeld_relations, RepV};
use twisted_rtt::rmatrix::{check_rank_one_block, check_reduction, check_rhat_annihilation, check_unitarity_crossing, check_ybe};

/// The `N` in a detail of the form `…: N instances, M failing`.
fn instance_count(detail: &str) -> Option<u64> {
    let idx = detail.find(" instances")?;
    let digits: String = detail[..idx].chars().rev().take_while(|c| c.is_ascii_digit()).collect();
    digits.chars().rev().collect::<String>().parse().ok()
}

/// The passing variant reported next to a literal family that fails.
fn literal_variant(id: &str) -> Option<String> {
    if id.starts_with("rep.") && id.contains(".quad.") {
        return Some(id.replacen(".quad.", ".quad_signed.", 1));
    }
    if id.starts_with("rep.") && id.contains(".ax.") {
        return Some(id.replacen(".ax.", ".ax_generators.", 1));
    }
    if id.starts_with("currents.serre_cubic.literal.") {
        return Some(id.replacen(".literal.", ".signed.", 1));
    }
    None
}

struct Criterion {
    number: u32,
    title: &'static str,
    checks: Vec<Check>,
    /// Extra conditions (timings, coverage) with a description when violated.
    problems: Vec<String>,
    elapsed: Duration,
}

impl Criterion {
    fn new(number: u32, title: &'static str) -> Criterion {
        Criterion { number, title, checks: Vec::new(), problems: Vec::new(), elapsed: Duration::ZERO }
    }

    fn timed(&mut self, what: &str, limit: Option<Duration>, run: impl FnOnce() -> Vec<Check>) {
        let start = Instant::now();
        let checks = run();
        let took = start.elapsed();
        self.elapsed += took;
        if let Some(limit) = limit {
            if took > limit {
                self.problems.push(format!("{what} took {took:.1?} (limit {limit:?})"));
            }
        }
        self.checks.extend(checks);
    }

    fn require(&mut self, ids: &[String]) {
        for id in ids {
            match self.checks.iter().find(|c| &c.id == id) {
                Some(c) if c.status == Status::Pass => {}
                Some(c) => self.problems.push(format!("{id} is {}", c.status)),
                None => self.problems.push(format!("{id} missing")),
            }
        }
    }

    fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// Prints the PASS/FAIL line and returns the unexplained problems.
    fn report(&self) -> Vec<String> {
        let failures = self.failures();
        let pass = failures.is_empty() && self.problems.is_empty();
        let mut line = format!("criterion {:2}: {} — {}", self.number, if pass { "PASS" } else { "FAIL" }, self.title);
        let mut unexplained = self.problems.clone();
        let mut literal = Vec::new();
        for f in &failures {
            match literal_variant(&f.id) {
                Some(v) if self.checks.iter().any(|c| c.id == v && c.status == Status::Pass) => literal.push(format!("{} (variant {v} passes)", f.id)),
                _ => unexplained.push(format!("{} failed: {}", f.id, f.counterexample.clone().unwrap_or_default())),
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        line.push_str(&format!(" [{passed} passed, {} failed, {skipped} skipped, {:.1?}]", failures.len(), self.elapsed));
        if !literal.is_empty() {
            line.push_str(&format!("; literal displayed forms failing: {}", literal.join(", ")));
        }
        for p in &unexplained {
            line.push_str(&format!("; {p}"));
        }
        // Written to the process stdout directly so that the lines are shown
        // even when the test harness captures output.
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
        unexplained
    }
}

fn op(n: usize) -> LOperator {
    LOperator::new(n, EvalParam::Symbolic).unwrap()
}

#[test]
fn acceptance_criteria() {
    let minute = Duration::from_secs(60);
    let mut all = Vec::new();

    let mut c = Criterion::new(1, "Yang–Baxter: symbolic n = 1, 2 (< 60 s each), grid n = 3 (< 300 s)");
    c.timed("ybe n=1", Some(minute), || check_ybe(1, Mode::Symbolic));
    c.timed("ybe n=2", Some(minute), || check_ybe(2, Mode::Symbolic));
    c.timed("ybe n=3 grid", Some(5 * minute), || check_ybe(3, Mode::Grid));
    c.require(&["ybe.n1".into(), "ybe.n2".into(), "ybe.n3".into()]);
    all.push(c);

    let mut c = Criterion::new(2, "unitarity and crossing, exactly, n = 2, 3");
    for n in [2, 3] {
        c.timed("unitarity/crossing", None, || check_unitarity_crossing(n, Mode::Symbolic));
        c.require(&[format!("unitarity.n{n}"), format!("crossing.n{n}")]);
    }
    all.push(c);

    let mut c = Criterion::new(3, "rank-one R-matrix equals the displayed block");
    c.timed("rbar1", None, check_rank_one_block);
    c.require(&["rbar1.display".into()]);
    all.push(c);

    let mut c = Criterion::new(4, "reduction identities: n = 2 symbolic, n = 3 grid");
    c.timed("reduction n=2", None, || check_reduction(2, Mode::Symbolic));
    c.timed("reduction n=3 grid", None, || check_reduction(3, Mode::Grid));
    for n in [2, 3] {
        c.require(&[format!("reduction.r23ran.n{n}"), format!("reduction.lanr23.n{n}")]);
    }
    all.push(c);

    let mut c = Criterion::new(5, "f-identity to series order 30, n = 2, 3");
    for n in [2, 3] {
        c.timed("f-identity", None, || check_f_identity(n, 30));
        c.require(&[format!("series.zu.log.n{n}"), format!("series.zu.product.n{n}"), format!("series.crsymr.n{n}")]);
    }
    all.push(c);

    let mut c = Criterion::new(6, "vector-representation relation suite, n = 2, 3, window 3, zero failures");
    for n in [2, 3] {
        c.timed("rep", None, || check_drinfeld_relations(&RepV::new(n).unwrap(), 3).unwrap());
    }
    let uncovered: Vec<String> = c.checks.iter().filter(|k| instance_count(&k.detail).unwrap_or(0) == 0).map(|k| k.id.clone()).collect();
    if !uncovered.is_empty() {
        c.problems.push(format!("families without instances: {}", uncovered.join(", ")));
    }
    all.push(c);

    let mut c = Criterion::new(7, "Gauss suite: n = 2 symbolic, n = 3 grid");
    for (n, mode) in [(2, Mode::Symbolic), (3, Mode::Grid)] {
        c.timed("gauss", None, || check_gauss(&op(n), mode));
        c.timed("embed", None, || check_embed(&op(n), mode));
        c.require(&[
            format!("gauss.gaussdec.fhe.n{n}"),
            format!("gauss.quasi_minor.n{n}"),
            format!("gauss.skewsymm.i.n{n}"),
            format!("gauss.skewsymm.ii.n{n}"),
            format!("gauss.commtoo.n{n}"),
            format!("gauss.embed.rtt.m1.n{n}"),
            format!("gauss.gauss_consist.m1.n{n}"),
            format!("gauss.commu.m1.n{n}"),
            format!("gauss.relmone.m1.n{n}"),
            format!("gauss.relmonf.m1.n{n}"),
        ]);
    }
    c.require(&["gauss.consist.l1m1.n3".into()]);
    all.push(c);

    let mut c = Criterion::new(8, "central suite: n = 2 symbolic, n = 3 grid");
    for (n, mode) in [(2, Mode::Symbolic), (3, Mode::Grid)] {
        c.timed("central", None, || check_central(&op(n), mode));
        c.require(&[format!("gauss.dldl.scalar.n{n}"), format!("gauss.zprod.n{n}"), format!("gauss.eiprei.i1.n{n}"), format!("gauss.en'en.n{n}")]);
    }
    all.push(c);

    let mut c = Criterion::new(9, "currents suite, n = 2, 3, Serre windows of size 2");
    for n in [2, 3] {
        c.timed("currents", None, || check_currents(&op(n), 3, 2));
        c.require(&[format!("currents.hihjmp.n{n}"), format!("currents.xn_odd.n{n}"), format!("currents.xpxm.{n}-{n}.n{n}")]);
    }
    all.push(c);

    let mut c = Criterion::new(10, "R̂(q^-2)|1,1> = 0 exactly");
    for n in 1..=3 {
        c.timed("rhat", None, || check_rhat_annihilation(n));
        c.require(&[format!("rhat.q2.annihilates.n{n}.i1")]);
    }
    all.push(c);

    let mut c = Criterion::new(11, "two `verify all --n 2` runs are byte-identical, each < 15 min");
    let dir = std::env::temp_dir().join(format!("verify-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut reports = Vec::new();
    for run in 0..2 {
        let path = dir.join(format!("all-{run}.json"));
        let start = Instant::now();
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["all", "--n", "2", "--out", path.to_str().unwrap()])
            .output()
            .expect("verify runs")
            .status;
        let took = start.elapsed();
        c.elapsed += took;
        if took > 15 * minute {
            c.problems.push(format!("run {run} took {took:.1?}"));
        }
        if !matches!(status.code(), Some(0 | 1)) {
            c.problems.push(format!("run {run} exited with {status}"));
        }
        reports.push(std::fs::read(&path).unwrap_or_default());
    }
    if reports[0].is_empty() || reports[0] != reports[1] {
        c.problems.push("reports differ or are empty".into());
    }
    all.push(c);

    let unexplained: Vec<String> = all.iter().flat_map(|c| c.report().into_iter().map(move |p| format!("criterion {}: {p}", c.number))).collect();
    assert!(unexplained.is_empty(), "unexplained acceptance problems:\n{}", unexplained.join("\n"));
}
