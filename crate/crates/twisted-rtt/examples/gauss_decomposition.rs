//! Gauss decomposition L(u) = F(u) H(u) E(u) of the evaluation L-operator by
//! quasideterminants, and the gauss / embed / central suites.
//!
//! Run with `cargo run --release --example gauss_decomposition -- 2`.

use twisted_rtt::exact_algebra::{Env, Mode, RatFunc, Var};
use twisted_rtt::gauss::{check_central, check_embed, check_gauss, gauss_quasideterminant, gauss_schur, EvalParam, LOperator};

fn main() -> twisted_rtt::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let op = LOperator::new(n, EvalParam::Symbolic)?;
    let env = Env::symbolic();
    let l = op.at(&RatFunc::var(Var::U), &env)?;
    let g = gauss_quasideterminant(&l)?;
    println!("h_1(u) entry (1,1) = {}", g.h[0].get(0, 0));
    println!("F H E = L: {}", g.product() == l);
    println!("quasideterminant and Schur-complement routes agree: {}", gauss_schur(&l)? == g);

    let mut checks = check_gauss(&op, Mode::Symbolic);
    checks.extend(check_embed(&op, Mode::Symbolic));
    checks.extend(check_central(&op, Mode::Symbolic));
    for c in checks {
        println!("{:8} {:32} {}", c.status.to_string(), c.id, c.detail);
    }
    Ok(())
}
