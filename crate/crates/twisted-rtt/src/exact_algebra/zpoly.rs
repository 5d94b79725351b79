//! Sparse multivariate polynomials with integer coefficients.
//!
//! `ZPoly` is the internal workhorse behind [`RatFunc`](super::RatFunc): all
//! exponents are non-negative (Laurent powers of `q` are moved between
//! numerator and denominator by the rational-function layer), and terms are
//! stored sorted by decreasing graded-lex monomial with no zero coefficients.

use super::int::Int;
use super::mono::{Mono, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

/// Multiply-rotate hasher for packed monomial keys.
#[derive(Default)]
pub(crate) struct MonoHasher(u64);

impl Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }
    fn write_u128(&mut self, x: u128) {
        let folded = (x as u64) ^ ((x >> 64) as u64).rotate_left(29);
        self.0 = (self.0.rotate_left(5) ^ folded).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

pub(crate) type MonoMap<V> = HashMap<Mono, V, BuildHasherDefault<MonoHasher>>;

/// A polynomial in `q, u, v, w, a` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    terms: Vec<(Mono, Int)>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn var(v: Var) -> ZPoly {
        ZPoly::monomial(Mono::var(v, 1), Int::ONE)
    }

    pub fn monomial(m: Mono, c: Int) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, Int)>) -> ZPoly {
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        ZPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Int)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Int)> {
        self.terms.first()
    }

    pub fn lc(&self) -> Int {
        self.terms.first().map(|t| t.1.clone()).unwrap_or(Int::ZERO)
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u8 {
        self.terms.iter().fold(0, |s, t| s | t.0.support())
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.total_degree()).max().unwrap_or(0)
    }

    /// Largest coefficient magnitude in bits.
    pub fn max_bits(&self) -> u64 {
        self.terms.iter().map(|t| t.1.bits()).max().unwrap_or(0)
    }

    pub fn max_norm(&self) -> Int {
        self.terms.iter().map(|t| t.1.abs()).max().unwrap_or(Int::ZERO)
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some(first) => it.fold(first.0, |g, t| g.gcd(t.0)),
        }
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits off the integer content, leaving a positive leading coefficient.
    pub fn primitive(&self) -> (Int, ZPoly) {
        if self.is_zero() {
            return (Int::ZERO, ZPoly::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_int(&c))
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, k: &Int) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub fn div_int(&self, k: &Int) -> ZPoly {
        if k.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.div_exact(k))).collect() }
    }

    pub fn mul_mono(&self, m: Mono) -> ZPoly {
        if m.is_one() {
            return self.clone();
        }
        ZPoly { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    /// Divides every monomial by `m`, which must divide them all.
    pub fn div_mono(&self, m: Mono) -> ZPoly {
        if m.is_one() {
            return self.clone();
        }
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial divides every term"), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &ZPoly, negate: bool) -> ZPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        ZPoly { terms: out }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_mono(*m).scale(c);
        }
        if other.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_mono(*m).scale(c);
        }
        let count = self.len() * other.len();
        if count <= 1024 {
            let mut prods = Vec::with_capacity(count);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    prods.push((ma.mul(*mb), ca * cb));
                }
            }
            return ZPoly::from_terms(prods);
        }
        let mut acc: MonoMap<Int> = MonoMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let p = ca * cb;
                acc.entry(ma.mul(*mb))
                    .and_modify(|e| *e = &*e + &p)
                    .or_insert(p);
            }
        }
        let mut terms: Vec<(Mono, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        ZPoly { terms }
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut result = ZPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `Z[q,u,v,w,a]`.
    pub fn divide(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if d.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                out.push((m.div(*dm)?, c.checked_div_exact(dc)?));
            }
            return Some(ZPoly { terms: out });
        }
        // Cheap necessary conditions before the full division.
        let (dlm, dlc) = &d.terms[0];
        let (slm, slc) = &self.terms[0];
        if !dlm.divides(*slm) || slc.checked_div_exact(dlc).is_none() {
            return None;
        }
        for v in Var::ALL {
            if d.degree(v) > self.degree(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<Mono, Int> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Int)> = Vec::new();
        let tail = &d.terms[1..];
        while let Some((&m, c)) = rem.iter().next_back() {
            let qm = m.div(*dlm)?;
            let qc = c.checked_div_exact(dlc)?;
            rem.pop_last();
            for (tm, tc) in tail {
                let key = qm.mul(*tm);
                let delta = &qc * tc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get() - &delta;
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(ZPoly { terms: quot })
    }

    /// Substitutes an integer for one variable.
    pub fn eval_int(&self, v: Var, x: &Int) -> ZPoly {
        let d = self.degree(v);
        if d == 0 {
            return self.clone();
        }
        let mut powers = Vec::with_capacity(d as usize + 1);
        powers.push(Int::ONE);
        for k in 1..=d as usize {
            let p = &powers[k - 1] * x;
            powers.push(p);
        }
        let mut acc: MonoMap<Int> = MonoMap::default();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let val = c * &powers[e as usize];
            if val.is_zero() {
                continue;
            }
            acc.entry(m.with_exp(v, 0))
                .and_modify(|t| *t = &*t + &val)
                .or_insert(val);
        }
        let mut terms: Vec<(Mono, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        ZPoly { terms }
    }

    /// Homogenized substitution `v := r/s`: returns `s^D * p(r/s)` where `D`
    /// is the degree of `p` in `v`, together with `D`.
    pub fn eval_frac(&self, v: Var, r: &Int, s: &Int) -> (ZPoly, u32) {
        let d = self.degree(v);
        if d == 0 {
            return (self.clone(), 0);
        }
        let mut rp = vec![Int::ONE];
        let mut sp = vec![Int::ONE];
        for k in 1..=d as usize {
            let a = &rp[k - 1] * r;
            rp.push(a);
            let b = &sp[k - 1] * s;
            sp.push(b);
        }
        let mut acc: MonoMap<Int> = MonoMap::default();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let val = &(c * &rp[e]) * &sp[d as usize - e];
            if val.is_zero() {
                continue;
            }
            acc.entry(m.with_exp(v, 0))
                .and_modify(|t| *t = &*t + &val)
                .or_insert(val);
        }
        let mut terms: Vec<(Mono, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        (ZPoly { terms }, d)
    }

    /// Evaluates at a rational point (variables absent from `point` must not occur).
    pub fn eval_rat(&self, point: &[(Var, BigRational)]) -> BigRational {
        let mut cache: Vec<Vec<BigRational>> = vec![Vec::new(); 5];
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.to_big());
            for v in Var::ALL {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                let x = &point
                    .iter()
                    .find(|p| p.0 == v)
                    .unwrap_or_else(|| panic!("no value supplied for {v}"))
                    .1;
                let pw = &mut cache[v.index()];
                if pw.is_empty() {
                    pw.push(BigRational::one());
                }
                while pw.len() <= e {
                    let next = pw.last().unwrap() * x;
                    pw.push(next);
                }
                t *= &pw[e];
            }
            acc += t;
        }
        acc
    }

    /// Groups terms by the exponent of `v`: returns `(e, coeff)` pairs,
    /// highest exponent first, where each coefficient is free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<(u32, ZPoly)> {
        let mut groups: BTreeMap<u32, Vec<(Mono, Int)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.exp(v)).or_default().push((m.with_exp(v, 0), c.clone()));
        }
        groups
            .into_iter()
            .rev()
            .map(|(e, ts)| {
                // Removing one variable preserves relative order within a group.
                (e, ZPoly::from_sorted_or_sort(ts))
            })
            .collect()
    }

    fn from_sorted_or_sort(ts: Vec<(Mono, Int)>) -> ZPoly {
        if ts.windows(2).all(|w| w[0].0 > w[1].0) {
            ZPoly { terms: ts }
        } else {
            ZPoly::from_terms(ts)
        }
    }

    /// Reassembles `sum_e coeff_e * v^e`.
    pub fn from_coefficients_in(v: Var, parts: &[(u32, ZPoly)]) -> ZPoly {
        let mut terms = Vec::new();
        for (e, p) in parts {
            let m = Mono::var(v, *e);
            for (pm, c) in &p.terms {
                terms.push((pm.mul(m), c.clone()));
            }
        }
        ZPoly::from_terms(terms)
    }

    /// Coefficients as rationals, for conversion to the public `MPoly` type.
    pub fn to_big_terms(&self) -> Vec<(Mono, BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c.to_big())).collect()
    }
}

impl std::fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    write!(f, "*{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: Var) -> ZPoly {
        ZPoly::var(v)
    }

    fn c(k: i64) -> ZPoly {
        ZPoly::constant(Int::from(k))
    }

    #[test]
    fn arithmetic_basics() {
        let p = x(Var::U).add(&c(1));
        let m = x(Var::U).sub(&c(1));
        let prod = p.mul(&m);
        assert_eq!(prod, x(Var::U).pow(2).sub(&c(1)));
        assert_eq!(prod.divide(&p), Some(m.clone()));
        assert_eq!(prod.divide(&x(Var::U)), None);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn large_products_use_hash_accumulation() {
        let p = (0..40).fold(ZPoly::zero(), |acc, k| acc.add(&x(Var::Q).pow(k)));
        let sq = p.mul(&p);
        assert_eq!(sq.len(), 79);
        assert_eq!(sq.lc(), Int::ONE);
        let mid = sq.terms().iter().find(|t| t.0 == Mono::var(Var::Q, 39)).unwrap();
        assert_eq!(mid.1, Int::from(40));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = x(Var::Q).scale(&Int::from(-6)).add(&c(4));
        let (k, pp) = p.primitive();
        assert_eq!(k, Int::from(-2));
        assert_eq!(pp, x(Var::Q).scale(&Int::from(3)).sub(&c(2)));
    }

    #[test]
    fn evaluation_and_coefficient_split() {
        let p = x(Var::U).mul(&x(Var::Q)).add(&x(Var::U).pow(2)).add(&c(3));
        let e = p.eval_int(Var::U, &Int::from(2));
        assert_eq!(e, x(Var::Q).scale(&Int::from(2)).add(&c(7)));
        let parts = p.coefficients_in(Var::U);
        assert_eq!(parts.len(), 3);
        assert_eq!(ZPoly::from_coefficients_in(Var::U, &parts), p);
    }
}
