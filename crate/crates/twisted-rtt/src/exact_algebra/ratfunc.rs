//! Normalized rational functions in `q, u, v, w, a` over the rationals.
//!
//! Internally a `RatFunc` is a pair of integer polynomials `num / den` with
//! `gcd(num, den) = 1` (integer content included) and a positive leading
//! coefficient on `den`.  This form is unique, so structural equality decides
//! equality of rational functions.  Laurent powers of `q` live in the
//! denominator internally; the public [`MPoly`] view moves them back and makes
//! the denominator monic.

use super::gcd::gcd;
use super::int::Int;
use super::mono::{Mono, Var};
use super::mpoly::{BigRat, MPoly};
use super::zpoly::ZPoly;
use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact element of `Q(q, u, v, w, a)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_int(k: i64) -> RatFunc {
        RatFunc { num: ZPoly::constant(Int::from(k)), den: ZPoly::one() }
    }

    pub fn from_bigrat(r: &BigRat) -> RatFunc {
        RatFunc {
            num: ZPoly::constant(Int::from_big(r.numer().clone())),
            den: ZPoly::constant(Int::from_big(r.denom().clone())),
        }
    }

    /// `n / d` for small integers.
    pub fn ratio(n: i64, d: i64) -> Result<RatFunc> {
        if d == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::from_bigrat(&BigRat::new(n.into(), d.into())))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc { num: ZPoly::var(v), den: ZPoly::one() }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> RatFunc {
        RatFunc::var_pow(Var::Q, k)
    }

    /// `x^k` for any integer `k` (negative powers are rational).
    pub fn var_pow(v: Var, k: i32) -> RatFunc {
        let m = ZPoly::monomial(Mono::var(v, k.unsigned_abs()), Int::ONE);
        if k >= 0 {
            RatFunc { num: m, den: ZPoly::one() }
        } else {
            RatFunc { num: ZPoly::one(), den: m }
        }
    }

    pub fn from_zpoly(p: ZPoly) -> RatFunc {
        RatFunc { num: p, den: ZPoly::one() }
    }

    /// Normalizes `num / den`.
    pub fn from_zpolys(num: ZPoly, den: ZPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::normalize(num, den))
    }

    fn normalize(num: ZPoly, den: ZPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.divide(&g).expect("gcd divides"), den.divide(&g).expect("gcd divides"))
        };
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// From public Laurent polynomials `num / den`.
    pub fn from_mpolys(num: &MPoly, den: &MPoly) -> Result<RatFunc> {
        let (pn, sn, dn) = num.to_zpoly();
        let (pd, sd, dd) = den.to_zpoly();
        if pd.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // num/den = q^(sn-sd) * (pn * dd) / (pd * dn)
        let n = pn.scale(&Int::from_big(dd));
        let d = pd.scale(&Int::from_big(dn));
        let shift = sn - sd;
        let r = RatFunc::from_zpolys(n, d)?;
        Ok(&r * &RatFunc::q_pow(shift))
    }

    pub fn from_mpoly(p: &MPoly) -> RatFunc {
        RatFunc::from_mpolys(p, &MPoly::one()).expect("denominator one")
    }

    pub fn znum(&self) -> &ZPoly {
        &self.num
    }

    pub fn zden(&self) -> &ZPoly {
        &self.den
    }

    /// Public numerator: Laurent in `q`, scaled so that [`RatFunc::den`] is monic.
    pub fn num(&self) -> MPoly {
        self.public_parts().0
    }

    /// Public denominator: monic, with no monomial factor of `q`.
    pub fn den(&self) -> MPoly {
        self.public_parts().1
    }

    fn public_parts(&self) -> (MPoly, MPoly) {
        let s = self.den.min_degree(Var::Q) as i32;
        let den = self.den.div_mono(Mono::var(Var::Q, s as u32));
        let den = MPoly::from_zpoly(&den, 0, &BigRat::one());
        let inv = BigRat::one() / den.leading_coefficient();
        (MPoly::from_zpoly(&self.num, -s, &inv), den.scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the value is a polynomial (possibly Laurent in `q`).
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_monomial() && self.den.support() & !1 == 0
    }

    /// The rational constant, if this is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRat::new(n.to_big(), d.to_big()))
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u8 {
        self.num.support() | self.den.support()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.support() & (1 << v.index()) != 0
    }

    /// Degrees of numerator and denominator in `v` (internal integer form).
    pub fn degrees(&self, v: Var) -> (u32, u32) {
        (self.num.degree(v), self.den.degree(v))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.add_general(other, false)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.neg();
        }
        self.add_general(other, true)
    }

    fn add_general(&self, other: &RatFunc, negate: bool) -> RatFunc {
        let combine = |a: &ZPoly, b: &ZPoly| if negate { a.sub(b) } else { a.add(b) };
        if self.den == other.den {
            let n = combine(&self.num, &other.num);
            return RatFunc::normalize(n, self.den.clone());
        }
        if self.den.is_one() {
            // n1 + n2/d2 = (n1 d2 ± n2)/d2 is already reduced.
            let n = combine(&self.num.mul(&other.den), &other.num);
            return RatFunc { num: n, den: other.den.clone() }.fix_zero();
        }
        if other.den.is_one() {
            let n = combine(&self.num, &other.num.mul(&self.den));
            return RatFunc { num: n, den: self.den.clone() }.fix_zero();
        }
        // Henrici: with g = gcd(d1, d2) only gcd(numerator, g) can cancel.
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = combine(&self.num.mul(&other.den), &other.num.mul(&self.den));
            return RatFunc { num: n, den: self.den.mul(&other.den) }.fix_zero();
        }
        let d1 = self.den.divide(&g).expect("gcd divides");
        let d2 = other.den.divide(&g).expect("gcd divides");
        let n = combine(&self.num.mul(&d2), &other.num.mul(&d1));
        let den = self.den.mul(&d2);
        if n.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&n, &g);
        if g2.is_one() {
            RatFunc { num: n, den }
        } else {
            let mut r = RatFunc {
                num: n.divide(&g2).expect("gcd divides"),
                den: den.divide(&g2).expect("gcd divides"),
            };
            if r.den.lc().is_negative() {
                r.num = r.num.neg();
                r.den = r.den.neg();
            }
            r
        }
    }

    /// Sum of many terms.  Terms sharing a denominator are combined before
    /// any gcd is taken, which is the common case for matrix products.
    pub fn sum_all<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> RatFunc {
        let mut index: HashMap<&ZPoly, usize> = HashMap::new();
        let mut groups: Vec<(&ZPoly, ZPoly)> = Vec::new();
        for x in items {
            if x.is_zero() {
                continue;
            }
            match index.get(&x.den) {
                Some(&k) => groups[k].1 = groups[k].1.add(&x.num),
                None => {
                    index.insert(&x.den, groups.len());
                    groups.push((&x.den, x.num.clone()));
                }
            }
        }
        let mut acc = RatFunc::zero();
        for (den, num) in groups {
            if num.is_zero() {
                continue;
            }
            let term = RatFunc::normalize(num, den.clone());
            acc = RatFunc::add(&acc, &term);
        }
        acc
    }

    fn fix_zero(self) -> RatFunc {
        if self.num.is_zero() {
            RatFunc::zero()
        } else {
            self
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: ZPoly::one() };
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents require a non-zero base.
    pub fn pow(&self, k: i32) -> Result<RatFunc> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        // Powers of a reduced fraction stay reduced.
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale_int(&self, k: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(k))
    }

    /// Exact composition `v := r`.
    pub fn substitute(&self, v: Var, r: &RatFunc) -> Result<RatFunc> {
        if !self.depends_on(v) {
            return Ok(self.clone());
        }
        let n = compose(&self.num, v, r);
        let d = compose(&self.den, v, r);
        // n = N'/s^Dn and d = D'/s^Dd with the same s; compose returns
        // the (numerator, power of s) pair.
        let (np, dn) = n;
        let (dp, dd) = d;
        let s = &r.den;
        let (num, den) = if dd >= dn {
            (np.mul(&s.pow(dd - dn)), dp)
        } else {
            (np, dp.mul(&s.pow(dn - dd)))
        };
        RatFunc::from_zpolys(num, den)
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute_value(&self, v: Var, x: &BigRat) -> Result<RatFunc> {
        if !self.depends_on(v) {
            return Ok(self.clone());
        }
        let r = Int::from_big(x.numer().clone());
        let s = Int::from_big(x.denom().clone());
        let (np, dn) = self.num.eval_frac(v, &r, &s);
        let (dp, dd) = self.den.eval_frac(v, &r, &s);
        let (num, den) = if dd >= dn {
            (np.scale(&s.pow(dd - dn)), dp)
        } else {
            (np, dp.scale(&s.pow(dn - dd)))
        };
        if den.is_zero() {
            return Err(AlgebraError::PoleAtSamplePoint { point: format!("{v}={x}") });
        }
        RatFunc::from_zpolys(num, den)
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, point: &[(Var, BigRat)]) -> Result<BigRat> {
        let d = self.den.eval_rat(point);
        if d.is_zero() {
            return Err(AlgebraError::PoleAtSamplePoint { point: format_point(point) });
        }
        Ok(self.num.eval_rat(point) / d)
    }

    /// Numerator and denominator as dense coefficient lists in `v` (lowest
    /// power first), with coefficients in the remaining variables.  The
    /// quotient of the two polynomials in `v` equals `self`.
    pub fn coefficients_in(&self, v: Var) -> (Vec<RatFunc>, Vec<RatFunc>) {
        let dense = |p: &ZPoly| -> Vec<RatFunc> {
            let mut out = vec![RatFunc::zero(); p.degree(v) as usize + 1];
            for (e, c) in p.coefficients_in(v) {
                out[e as usize] = RatFunc::from_zpoly(c);
            }
            out
        };
        (dense(&self.num), dense(&self.den))
    }

    /// Canonical text form, see the [`fmt::Display`] impl.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Removes the common factor of `a` and `b`.
fn cancel(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.divide(&g).expect("gcd divides"), b.divide(&g).expect("gcd divides"))
    }
}

/// For `p` of degree `D` in `v` and `r = r_n / r_d`, returns
/// `(r_d^D * p(r), D)` as a polynomial.
fn compose(p: &ZPoly, v: Var, r: &RatFunc) -> (ZPoly, u32) {
    let parts = p.coefficients_in(v);
    let d = parts.first().map(|t| t.0).unwrap_or(0);
    let mut np = vec![ZPoly::one()];
    let mut sp = vec![ZPoly::one()];
    for k in 1..=d as usize {
        let a = np[k - 1].mul(&r.num);
        np.push(a);
        let b = sp[k - 1].mul(&r.den);
        sp.push(b);
    }
    let mut acc = ZPoly::zero();
    for (e, c) in parts {
        let e = e as usize;
        acc = acc.add(&c.mul(&np[e]).mul(&sp[d as usize - e]));
    }
    (acc, d)
}

fn format_point(point: &[(Var, BigRat)]) -> String {
    point.iter().map(|(v, x)| format!("{v}={x}")).collect::<Vec<_>>().join(", ")
}

/// Canonical serialization: the public numerator alone when the public
/// denominator is 1, otherwise `(num)/(den)`; both in canonical `MPoly` text.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.public_parts();
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({d})")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$m(self, rhs)
            }
        }
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$m(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        RatFunc::from_int(k)
    }
}

impl From<&BigRat> for RatFunc {
    fn from(r: &BigRat) -> Self {
        RatFunc::from_bigrat(r)
    }
}

/// `BigRat` from a small fraction; panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational literal such as `5/3`, `-2` or `7/5`.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    let r = BigRat::new(n, d);
    if r.denom().is_negative() {
        return None;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }
    fn u() -> RatFunc {
        RatFunc::var(Var::U)
    }
    fn k(x: i64) -> RatFunc {
        RatFunc::from_int(x)
    }

    #[test]
    fn cancellation_to_one() {
        let a = &u() - &k(1);
        let b = &(&q() * &u()) - &RatFunc::q_pow(-1);
        let x = a.div(&b).unwrap();
        let y = b.div(&a).unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn substitution_example() {
        let xi = -RatFunc::q_pow(-4);
        let p = &u() - &k(1);
        let s = p.substitute(Var::U, &(&u() * &xi)).unwrap();
        let expected = &(&(-RatFunc::q_pow(-4)) * &u()) - &k(1);
        assert_eq!(s, expected);
        assert_eq!(s.to_string(), "-q^-4*u - 1");
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(RatFunc::zero().inv(), Err(AlgebraError::DivisionByZero));
        assert!(k(3).div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn canonical_text_forms() {
        let two = &q() + &RatFunc::q_pow(-1);
        assert_eq!(two.to_string(), "q + q^-1");
        let r = (&u() - &k(1)).div(&(&(&q() * &u()) - &RatFunc::q_pow(-1))).unwrap();
        assert_eq!(r.to_string(), "(q*u - q)/(q^2*u - 1)");
        let half = RatFunc::ratio(1, 2).unwrap();
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn henrici_addition_reduces() {
        // 1/(u-1) - 1/(u+1) = 2/(u^2-1)
        let a = k(1).div(&(&u() - &k(1))).unwrap();
        let b = k(1).div(&(&u() + &k(1))).unwrap();
        let d = &a - &b;
        let e = k(2).div(&(&(&u() * &u()) - &k(1))).unwrap();
        assert_eq!(d, e);
        // x/(u(u-1)) + y/(u(u+1)) with shared factor u.
        let c = a.div(&u()).unwrap();
        let f = b.div(&u()).unwrap();
        let s = &c - &f;
        assert_eq!(s, e.div(&u()).unwrap());
    }

    #[test]
    fn evaluation_and_poles() {
        let r = k(1).div(&(&u() - &k(2))).unwrap();
        assert_eq!(r.eval(&[(Var::U, rat(3, 1))]).unwrap(), rat(1, 1));
        assert!(matches!(
            r.eval(&[(Var::U, rat(2, 1))]),
            Err(AlgebraError::PoleAtSamplePoint { .. })
        ));
        let sub = r.substitute_value(Var::U, &rat(5, 2)).unwrap();
        assert_eq!(sub, k(2));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("5/3"), Some(rat(5, 3)));
        assert_eq!(parse_rat("-2"), Some(rat(-2, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("abc"), None);
    }
}
