//! q-numbers and Gaussian binomials.

use super::ratfunc::RatFunc;
use crate::error::{AlgebraError, Result};

/// `[k]_q = (q^k - q^-k) / (q - q^-1)`, a Laurent polynomial in `q`.
pub fn q_number(k: i64) -> RatFunc {
    q_number_in(k, &RatFunc::var(super::Var::Q)).expect("q is not a root of unity")
}

/// `[k]_b = (b^k - b^-k) / (b - b^-1)` for an arbitrary base `b`.
///
/// Fails only when `b - b^-1` vanishes identically (b = ±1).
pub fn q_number_in(k: i64, base: &RatFunc) -> Result<RatFunc> {
    let k32 = i32::try_from(k).map_err(|_| AlgebraError::InvalidArgument(format!("q-number index {k}")))?;
    let binv = base.inv()?;
    let num = &base.pow(k32)? - &binv.pow(k32)?;
    let den = base - &binv;
    num.div(&den)
}

/// `[k]_b!`.
pub fn q_factorial(k: u32, base: &RatFunc) -> Result<RatFunc> {
    let mut acc = RatFunc::one();
    for s in 1..=k as i64 {
        acc = &acc * &q_number_in(s, base)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[k]_b! / ([r]_b! [k-r]_b!)`.
pub fn q_binomial(k: i64, r: i64, base: &RatFunc) -> Result<RatFunc> {
    if k < 0 || r < 0 || r > k {
        return Err(AlgebraError::InvalidArgument(format!(
            "q_binomial requires 0 <= r <= k, got k={k}, r={r}"
        )));
    }
    // Multiplicative form keeps intermediate sizes small.
    let mut acc = RatFunc::one();
    for s in 0..r {
        acc = &acc * &q_number_in(k - s, base)?;
        acc = acc.div(&q_number_in(s + 1, base)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_numbers() {
        assert!(q_number(1).is_one());
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(2).to_string(), "q + q^-1");
        assert_eq!(q_number(-2).to_string(), "-q - q^-1");
        assert_eq!(q_number(3).to_string(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn binomials_in_shifted_base() {
        let q = RatFunc::var(super::super::Var::Q);
        assert_eq!(q_binomial(2, 1, &q).unwrap().to_string(), "q + q^-1");
        assert!(q_binomial(3, 0, &q).unwrap().is_one());
        let q2 = q.pow(2).unwrap();
        assert_eq!(q_binomial(3, 1, &q2).unwrap().to_string(), "q^4 + 1 + q^-4");
        assert!(q_binomial(3, 4, &q).is_err());
        assert!(q_binomial(3, -1, &q).is_err());
    }
}
