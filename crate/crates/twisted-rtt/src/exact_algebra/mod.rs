//! Exact scalar arithmetic: arbitrary-precision integers and rationals,
//! sparse multivariate polynomials, normalized rational functions,
//! q-combinatorics and deterministic polynomial identity testing.

mod gcd;
mod int;
mod mono;
mod mpoly;
mod pit;
mod qnum;
mod ratfunc;
mod scalar;
mod zpoly;

pub use gcd::{gcd, gcd_cofactors};
pub use int::Int;
pub use mono::{Mono, Var};
pub use mpoly::{BigRat, LExp, MPoly};
pub use pit::{
    decide, format_point, grid_check, grid_check_par, Cleared, Env, Identity, Verdict, grid_value, identity_holds, sample_value, witness, DegreeBound, IdentityOutcome, Mode,
    GRID_RETRIES,
};
pub use qnum::{q_binomial, q_factorial, q_number, q_number_in};
pub use ratfunc::{parse_rat, rat, RatFunc};
pub use scalar::Scalar;
pub use zpoly::ZPoly;
