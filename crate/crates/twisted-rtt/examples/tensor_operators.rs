//! Operators on tensor powers of C^N: matrix units, factor embeddings, the
//! flip, partial transposes.
//!
//! Run with `cargo run --release --example tensor_operators`.

use twisted_rtt::exact_algebra::RatFunc;
use twisted_rtt::tensor::TensorOp;

fn main() -> twisted_rtt::Result<()> {
    let n = 2;
    // e_12 on the first factor of C^4 ⊗ C^4 (rank n = 2, 1-based indices).
    let e12: TensorOp<RatFunc> = TensorOp::unit(1, 2, n)?;
    let e12_1 = e12.embed(&[1], 2)?;
    let p: TensorOp<RatFunc> = TensorOp::flip(n);
    // P (e_12 ⊗ 1) P = 1 ⊗ e_12.
    let moved = p.mul(&e12_1).mul(&p);
    println!("P e12_1 P = e12_2: {}", moved == e12.embed(&[2], 2)?);
    println!("P^2 = 1: {}", p.mul(&p) == TensorOp::identity(n, 2));
    println!("P^t (first factor) has {} non-zero entries", p.partial_transpose(1)?.mat.nnz());
    Ok(())
}
