//! The R-matrix R̄(u): Yang–Baxter, unitarity, crossing, reduction, and the
//! special value R̂(q^-2).
//!
//! Run with `cargo run --release --example rmatrix_identities -- 2 symbolic`
//! (second argument `grid` for deterministic grid evaluation).

use twisted_rtt::exact_algebra::{Mode, Var};
use twisted_rtt::rmatrix::{check_reduction, check_rhat_annihilation, check_unitarity_crossing, check_ybe, RBar};

fn main() -> twisted_rtt::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let mode = if args.next().as_deref() == Some("grid") { Mode::Grid } else { Mode::Symbolic };

    let r = RBar::new(n, Var::U)?;
    println!("<1,1|R(u)|1,1> = {}", r.entry(1, 1, 1, 1));
    println!("<1,{0}|R(u)|{0},1> = {1}", 2 * n, r.entry(1, 2 * n, 2 * n, 1));

    let mut checks = check_ybe(n, mode);
    checks.extend(check_unitarity_crossing(n, mode));
    checks.extend(check_reduction(n, mode));
    checks.extend(check_rhat_annihilation(n));
    for c in checks {
        println!("{:8} {:32} {}", c.status.to_string(), c.id, c.detail);
    }
    Ok(())
}
