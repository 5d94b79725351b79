//! Drinfeld currents extracted from the Gauss factors, their modes, and the
//! level-zero relations between them.
//!
//! Run with `cargo run --release --example drinfeld_currents -- 2`.

use twisted_rtt::currents::{check_currents, Currents};
use twisted_rtt::gauss::{EvalParam, LOperator};
use twisted_rtt::qseries::Sign;

fn main() -> twisted_rtt::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let op = LOperator::new(n, EvalParam::Symbolic)?;
    let c = Currents::new(&op, 3)?;
    for m in -2..=2 {
        let x = c.x(Sign::Plus, 1, m)?;
        let nz: Vec<String> = x.nonzeros().map(|(r, k, v)| format!("({},{}) {v}", r + 1, k + 1)).collect();
        println!("X^+_(1,{m}): {}", nz.join(", "));
    }
    for c in check_currents(&op, 3, 2) {
        println!("{:8} {:40} {}", c.status.to_string(), c.id, c.detail);
    }
    Ok(())
}
