//! Drinfeld generators in the vector representation and the relation suite.
//!
//! Run with `cargo run --release --example vector_representation -- 2 3`.

use twisted_rtt::repv::{check_drinfeld_relations, RepV};

fn main() -> twisted_rtt::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let window: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let rep = RepV::new(n)?;
    let x = rep.x_plus(1, 1)?;
    for (r, c, v) in x.nonzeros() {
        println!("x^+_(1,1): entry ({},{}) = {v}", r + 1, c + 1);
    }
    println!("a_(1,1) diagonal: {:?}", (0..rep.dim()).map(|i| rep.a_mode(1, 1).map(|m| m.get(i, i).to_string())).collect::<Result<Vec<_>, _>>()?);
    for c in check_drinfeld_relations(&rep, window)? {
        println!("{:8} {:28} {}", c.status.to_string(), c.id, c.detail);
    }
    Ok(())
}
