//! Packed monomials in the five indeterminates `q, u, v, w, a`.
//!
//! A monomial is a single `u128`: five 20-bit exponent fields with `q` most
//! significant, topped by a 28-bit total degree.  Integer comparison of the
//! packed word is then exactly the graded lexicographic order with
//! `q > u > v > w > a`, and monomial multiplication is integer addition.
//! Exponents are kept below 2^19, so the top bit of each field is a guard that
//! detects overflow after an addition.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the five indeterminates, listed from most to least significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Q,
    U,
    V,
    W,
    A,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Q, Var::U, Var::V, Var::W, Var::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::A => "a",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    fn shift(self) -> u32 {
        FIELD_BITS * (4 - self as u32)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const FIELD_BITS: u32 = 20;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;
const TOTAL_SHIFT: u32 = 5 * FIELD_BITS;
/// Largest exponent a single variable may carry.
pub const MAX_EXP: u32 = (1 << (FIELD_BITS - 1)) - 1;
const GUARD: u128 = {
    let g = 1u128 << (FIELD_BITS - 1);
    g | (g << FIELD_BITS) | (g << (2 * FIELD_BITS)) | (g << (3 * FIELD_BITS)) | (g << (4 * FIELD_BITS))
};

/// A monomial `q^e0 u^e1 v^e2 w^e3 a^e4` with non-negative exponents.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_exps(e: [u32; 5]) -> Mono {
        let mut packed = 0u128;
        let mut total = 0u128;
        for (k, v) in Var::ALL.iter().enumerate() {
            assert!(e[k] <= MAX_EXP, "exponent {} of {} exceeds {}", e[k], v, MAX_EXP);
            packed |= (e[k] as u128) << v.shift();
            total += e[k] as u128;
        }
        Mono(packed | (total << TOTAL_SHIFT))
    }

    pub fn var(v: Var, e: u32) -> Mono {
        let mut x = [0; 5];
        x[v.index()] = e;
        Mono::from_exps(x)
    }

    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & FIELD_MASK) as u32
    }

    pub fn exps(self) -> [u32; 5] {
        let mut e = [0; 5];
        for v in Var::ALL {
            e[v.index()] = self.exp(v);
        }
        e
    }

    pub fn total_degree(self) -> u32 {
        (self.0 >> TOTAL_SHIFT) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Product of monomials.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mono) -> Mono {
        let r = self.0 + other.0;
        assert!(r & GUARD == 0, "monomial exponent overflow");
        Mono(r)
    }

    /// Quotient if `other` divides `self`.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Mono) -> Option<Mono> {
        let mut e = self.exps();
        for v in Var::ALL {
            let o = other.exp(v);
            if e[v.index()] < o {
                return None;
            }
            e[v.index()] -= o;
        }
        Some(Mono(self.0 - other.0))
    }

    pub fn divides(self, other: Mono) -> bool {
        Var::ALL.iter().all(|&v| self.exp(v) <= other.exp(v))
    }

    /// Componentwise minimum (the monomial gcd).
    pub fn gcd(self, other: Mono) -> Mono {
        let a = self.exps();
        let b = other.exps();
        Mono::from_exps(std::array::from_fn(|k| a[k].min(b[k])))
    }

    /// Componentwise maximum (the monomial lcm).
    pub fn lcm(self, other: Mono) -> Mono {
        let a = self.exps();
        let b = other.exps();
        Mono::from_exps(std::array::from_fn(|k| a[k].max(b[k])))
    }

    /// Same monomial with the exponent of `v` replaced.
    pub fn with_exp(self, v: Var, e: u32) -> Mono {
        let mut x = self.exps();
        x[v.index()] = e;
        Mono::from_exps(x)
    }

    /// Bitmask of variables with a positive exponent.
    pub fn support(self) -> u8 {
        let mut s = 0;
        for v in Var::ALL {
            if self.exp(v) > 0 {
                s |= 1 << v.index();
            }
        }
        s
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_order_is_graded_lex() {
        let q = Mono::var(Var::Q, 1);
        let u2 = Mono::var(Var::U, 2);
        let qu = q.mul(Mono::var(Var::U, 1));
        assert!(u2 > q, "higher total degree wins");
        assert!(Mono::var(Var::Q, 2) > qu, "lex tie break with q first");
        assert!(qu > u2, "q u > u^2 under lex with q > u");
    }

    #[test]
    fn multiplication_and_division_roundtrip() {
        let m = Mono::from_exps([3, 1, 0, 2, 5]);
        let n = Mono::from_exps([1, 1, 0, 0, 2]);
        let p = m.mul(n);
        assert_eq!(p.exps(), [4, 2, 0, 2, 7]);
        assert_eq!(p.div(n), Some(m));
        assert_eq!(n.div(m), None);
        assert_eq!(p.total_degree(), 15);
    }

    #[test]
    fn gcd_and_lcm_are_componentwise() {
        let m = Mono::from_exps([3, 0, 1, 2, 0]);
        let n = Mono::from_exps([1, 4, 1, 0, 0]);
        assert_eq!(m.gcd(n).exps(), [1, 0, 1, 0, 0]);
        assert_eq!(m.lcm(n).exps(), [3, 4, 1, 2, 0]);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let m = Mono::var(Var::U, MAX_EXP);
        let _ = m.mul(Mono::var(Var::U, 1));
    }
}
