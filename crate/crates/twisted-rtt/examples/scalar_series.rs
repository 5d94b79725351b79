//! The scalar factor f(u) as an exact power series and the functional
//! identity it satisfies.
//!
//! Run with `cargo run --release --example scalar_series -- 2 8`.

use twisted_rtt::exact_algebra::rat;
use twisted_rtt::qseries::{check_f_identity, f_series};

fn main() -> twisted_rtt::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let order: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);

    let symbolic = f_series(n, 3, None)?;
    for k in 0..=3 {
        println!("f(u), u^{k}: {}", symbolic.coeff(k)?);
    }
    let at = f_series(n, order, Some(&rat(3, 2)))?;
    println!("f(u) at q = 3/2, u^{order}: {}", at.coeff(order as i64)?);

    for c in check_f_identity(n, order) {
        println!("{:8} {:24} {}", c.status.to_string(), c.id, c.detail);
    }
    Ok(())
}
