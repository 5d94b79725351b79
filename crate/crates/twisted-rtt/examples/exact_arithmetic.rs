//! Exact rational functions in `q, u, v` and deterministic identity testing.
//!
//! Run with `cargo run --release --example exact_arithmetic`.

use twisted_rtt::exact_algebra::{format_point, identity_holds, q_number, DegreeBound, Mode, RatFunc, Var};

fn main() -> twisted_rtt::Result<()> {
    let q = RatFunc::var(Var::Q);
    let u = RatFunc::var(Var::U);

    // (u + q)(u - q) = u^2 - q^2, decided by normalization and on a grid.
    let lhs = u.add(&q).mul(&u.sub(&q));
    let rhs = u.mul(&u).sub(&q.mul(&q));
    let bound = DegreeBound::of_cross_product(&lhs, &rhs);
    for mode in [Mode::Symbolic, Mode::Grid] {
        let out = identity_holds(&lhs, &rhs, mode, &bound)?;
        println!("(u+q)(u-q) = u^2-q^2 [{mode}]: {}", out.holds);
    }

    // A false identity is caught in both modes, with a witness point.
    let wrong = rhs.add(&RatFunc::var_pow(Var::U, 1).mul(&q));
    let bound = DegreeBound::of_cross_product(&lhs, &wrong);
    for mode in [Mode::Symbolic, Mode::Grid] {
        let out = identity_holds(&lhs, &wrong, mode, &bound)?;
        let witness = out.counterexample.as_deref().map(format_point).unwrap_or_default();
        println!("(u+q)(u-q) = u^2-q^2+uq [{mode}]: {} (witness {witness})", out.holds);
    }

    // q-numbers and cancellation in canonical form.
    let three = q_number(3);
    println!("[3]_q = {three}");
    println!("[3]_q (q - q^-1) = {}", three.mul(&q.sub(&q.inv()?)));
    Ok(())
}
