//! Public Laurent-in-`q` polynomials with rational coefficients.
//!
//! `MPoly` is the interchange and presentation form of a polynomial: exponents
//! of `q` may be negative, all other exponents are non-negative, coefficients
//! are `BigRat`, and terms are kept in a fixed decreasing graded order.  Heavy
//! arithmetic happens on the integer form [`ZPoly`](super::ZPoly); conversion
//! in both directions is exact.

use super::int::Int;
use super::mono::{Mono, Var};
use super::zpoly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type BigRat = BigRational;

/// Exponent vector `(q, u, v, w, a)`; only the `q` entry may be negative.
pub type LExp = [i32; 5];

/// Presentation order: graded by the total degree in `u, v, w, a`, then
/// lexicographic in `u > v > w > a`, then by the (possibly negative) power
/// of `q`.  Grading on the polynomial variables keeps Laurent terms such as
/// `q^-4*u` ahead of constants.
fn grlex(a: &LExp, b: &LExp) -> Ordering {
    let ta: i64 = a[1..].iter().map(|&x| x as i64).sum();
    let tb: i64 = b[1..].iter().map(|&x| x as i64).sum();
    ta.cmp(&tb).then_with(|| a[1..].cmp(&b[1..])).then_with(|| a[0].cmp(&b[0]))
}

/// A Laurent polynomial in `q` (polynomial in `u, v, w, a`) over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(LExp, BigRat)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> MPoly {
        MPoly::from_terms(vec![([0; 5], c)])
    }

    pub fn var(v: Var) -> MPoly {
        let mut e = [0; 5];
        e[v.index()] = 1;
        MPoly::from_terms(vec![(e, BigRat::one())])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    ///
    /// # Panics
    /// If a variable other than `q` carries a negative exponent.
    pub fn from_terms(mut terms: Vec<(LExp, BigRat)>) -> MPoly {
        for (e, _) in &terms {
            assert!(e[1..].iter().all(|&x| x >= 0), "only q may carry negative exponents");
        }
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        let mut out: Vec<(LExp, BigRat)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        MPoly { terms: out }
    }

    pub fn terms(&self) -> &[(LExp, BigRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; 5] && self.terms[0].1.is_one()
    }

    pub fn leading_coefficient(&self) -> BigRat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigRat::zero)
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        MPoly::from_terms(t)
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut t = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                t.push((std::array::from_fn(|k| ea[k] + eb[k]), ca * cb));
            }
        }
        MPoly::from_terms(t)
    }

    pub fn scale(&self, k: &BigRat) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)).collect())
    }

    /// Evaluates at a point; every occurring variable must be assigned and
    /// `q` must be non-zero if it occurs with a negative exponent.
    pub fn eval(&self, point: &[(Var, BigRat)]) -> BigRat {
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let k = e[v.index()];
                if k == 0 {
                    continue;
                }
                let x = &point
                    .iter()
                    .find(|p| p.0 == v)
                    .unwrap_or_else(|| panic!("no value supplied for {v}"))
                    .1;
                t *= num_traits::pow::Pow::pow(x, k);
            }
            acc += t;
        }
        acc
    }

    /// Writes `self = q^shift * p / d` with `p` an integer polynomial with
    /// non-negative exponents and `d` a positive integer.
    pub fn to_zpoly(&self) -> (ZPoly, i32, BigInt) {
        if self.is_zero() {
            return (ZPoly::zero(), 0, BigInt::one());
        }
        let shift = self.terms.iter().map(|t| t.0[0]).min().unwrap_or(0).min(0);
        let den = self.terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.1.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut x = [0u32; 5];
                x[0] = (e[0] - shift) as u32;
                for k in 1..5 {
                    x[k] = e[k] as u32;
                }
                let v = c.numer() * (&den / c.denom());
                (Mono::from_exps(x), Int::from_big(v))
            })
            .collect();
        (ZPoly::from_terms(terms), shift, den)
    }

    /// Inverse of [`MPoly::to_zpoly`]: `q^shift * p * scale`.
    pub fn from_zpoly(p: &ZPoly, shift: i32, scale: &BigRat) -> MPoly {
        MPoly::from_terms(
            p.terms()
                .iter()
                .map(|(m, c)| {
                    let x = m.exps();
                    let e: LExp = [x[0] as i32 + shift, x[1] as i32, x[2] as i32, x[3] as i32, x[4] as i32];
                    (e, BigRat::from_integer(c.to_big()) * scale)
                })
                .collect(),
        )
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &LExp) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let k = e[v.index()];
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text: terms in decreasing graded-lex order, explicit exponents,
/// e.g. `-1/2*q^2*u + q^-1`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if *e == [0; 5] {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn canonical_text() {
        let p = MPoly::from_terms(vec![([-1, 0, 0, 0, 0], r(1, 1)), ([1, 0, 0, 0, 0], r(1, 1))]);
        assert_eq!(p.to_string(), "q + q^-1");
        let p = MPoly::from_terms(vec![([2, 1, 0, 0, 0], r(-1, 2)), ([0; 5], r(3, 1))]);
        assert_eq!(p.to_string(), "-1/2*q^2*u + 3");
        assert_eq!(MPoly::zero().to_string(), "0");
    }

    #[test]
    fn zpoly_roundtrip() {
        let p = MPoly::from_terms(vec![([-2, 1, 0, 0, 0], r(1, 3)), ([1, 0, 0, 0, 1], r(-5, 2))]);
        let (z, s, d) = p.to_zpoly();
        assert_eq!(s, -2);
        assert_eq!(d, BigInt::from(6));
        let back = MPoly::from_zpoly(&z, s, &BigRat::new(BigInt::one(), d));
        assert_eq!(back, p);
    }

    #[test]
    fn evaluation_with_negative_q_power() {
        let p = MPoly::from_terms(vec![([-1, 0, 0, 0, 0], r(1, 1)), ([0, 1, 0, 0, 0], r(2, 1))]);
        let v = p.eval(&[(Var::Q, r(2, 1)), (Var::U, r(1, 4))]);
        assert_eq!(v, r(1, 1));
    }
}
