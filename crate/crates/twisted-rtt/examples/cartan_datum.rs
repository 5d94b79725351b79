//! The folded Cartan matrix, symmetrizers, B̃, the sign map and the Z^k
//! matrices of rank n.
//!
//! Run with `cargo run --release --example cartan_datum -- 3`.

use twisted_rtt::cartan::{check_cartan, zmatrix, CartanDatum};

fn main() -> twisted_rtt::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let c = CartanDatum::new(n)?;
    println!("A = {:?}", c.a);
    println!("d = {:?}", c.d);
    println!("Btilde = {:?}", c.btilde.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    println!("o = {:?}", c.o);
    println!("bar = {:?}", c.bar);
    println!("xi = {}", c.xi());
    for k in 1..=2 {
        let z = zmatrix(n, k)?;
        for i in 1..=n {
            let row: Vec<String> = (1..=n).map(|j| z.get(i, j).to_string()).collect();
            println!("Z^{k} row {i}: {}", row.join(" | "));
        }
    }
    for check in check_cartan(n) {
        println!("{:8} {}", check.status.to_string(), check.id);
    }
    Ok(())
}
