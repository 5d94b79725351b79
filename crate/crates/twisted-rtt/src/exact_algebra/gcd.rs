//! Multivariate polynomial gcd over the integers.
//!
//! The main engine is the heuristic gcd (GCDHEU, Char–Geddes–Gonnet): evaluate
//! one variable at a large integer, recurse, and lift the result back by
//! balanced base-ξ expansion.  Every candidate is confirmed by exact trial
//! division, so a returned gcd is always correct; the heuristic can only fail
//! to produce a candidate, in which case a primitive polynomial remainder
//! sequence computes the gcd deterministically.

use super::int::Int;
use super::mono::{Mono, Var};
use super::zpoly::ZPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

const HEU_GCD_TRIES: usize = 6;

/// Greatest common divisor with positive leading coefficient.  The gcd of
/// two zero polynomials is zero.
pub fn gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    gcd_cofactors(f, g).0
}

/// Returns `(h, f/h, g/h)` with `h = gcd(f, g)` normalized to a positive
/// leading coefficient.
pub fn gcd_cofactors(f: &ZPoly, g: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    if f.is_zero() && g.is_zero() {
        return (ZPoly::zero(), ZPoly::zero(), ZPoly::zero());
    }
    if f.is_zero() {
        let s = sign_of(g);
        return (g.scale(&s), ZPoly::zero(), ZPoly::constant(s));
    }
    if g.is_zero() {
        let s = sign_of(f);
        return (f.scale(&s), ZPoly::constant(s), ZPoly::zero());
    }
    if f == g {
        let s = sign_of(f);
        return (f.scale(&s), ZPoly::constant(s.clone()), ZPoly::constant(s));
    }

    let (cf, pf) = f.primitive();
    let (cg, pg) = g.primitive();
    let c = cf.gcd(&cg);
    let mf = pf.monomial_content();
    let mg = pg.monomial_content();
    let m = mf.gcd(mg);
    let pf = pf.div_mono(mf);
    let pg = pg.div_mono(mg);

    let h = gcd_primitive(&pf, &pg);
    let h = h.mul_mono(m).scale(&c);
    let cof_f = f.divide(&h).expect("gcd divides its first argument");
    let cof_g = g.divide(&h).expect("gcd divides its second argument");
    (h, cof_f, cof_g)
}

fn sign_of(p: &ZPoly) -> Int {
    if p.lc().is_negative() {
        Int::from(-1)
    } else {
        Int::ONE
    }
}

/// Gcd of primitive polynomials without monomial content; positive leading
/// coefficient.
fn gcd_primitive(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_constant() || g.is_constant() {
        return ZPoly::one();
    }
    if f == g {
        return f.clone();
    }
    let (sf, sg) = (f.support(), g.support());
    if sf & sg == 0 {
        return ZPoly::one();
    }
    // The gcd cannot involve a variable absent from either argument; project
    // onto the shared variables through the content with respect to the others.
    if let Some(v) = Var::ALL.iter().copied().find(|v| (sf ^ sg) & (1 << v.index()) != 0) {
        return if sf & (1 << v.index()) != 0 {
            gcd(&content_in(f, v), g)
        } else {
            gcd(f, &content_in(g, v))
        };
    }
    // Cheap divisibility shortcuts, very common for rational normalization.
    if g.len() <= f.len() {
        if f.divide(g).is_some() {
            return g.clone();
        }
    } else if g.divide(f).is_some() {
        return f.clone();
    }
    if let Some(h) = heu_gcd(f, g) {
        return h;
    }
    prs_gcd(f, g)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &ZPoly, v: Var) -> ZPoly {
    let mut acc = ZPoly::zero();
    for (_, c) in p.coefficients_in(v) {
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn heu_gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let support = f.support() | g.support();
    let x = Var::ALL
        .iter()
        .copied()
        .filter(|v| support & (1 << v.index()) != 0)
        .max_by_key(|v| (f.degree(*v).max(g.degree(*v)), std::cmp::Reverse(v.index())))?;

    let f_norm = f.max_norm().to_big();
    let g_norm = g.max_norm().to_big();
    let b = f_norm.clone().min(g_norm.clone());
    let lc_f = ground_lc(f, x).to_big().abs();
    let lc_g = ground_lc(g, x).to_big().abs();
    let s = (&b * 99u32).sqrt();
    let mut xi: BigInt = b.clone().min(s);
    let t = 2 * (&f_norm / &lc_f).min(&g_norm / &lc_g);
    if t > xi {
        xi = t;
    }
    xi += 2;

    for _ in 0..HEU_GCD_TRIES {
        let xi_int = Int::from_big(xi.clone());
        let ff = f.eval_int(x, &xi_int);
        let gg = g.eval_int(x, &xi_int);
        if !ff.is_zero() && !gg.is_zero() {
            let (h, cff, cfg) = gcd_cofactors(&ff, &gg);
            let h = interpolate(&h, x, &xi).primitive().1;
            if !h.is_zero() && f.divide(&h).is_some() && g.divide(&h).is_some() {
                return Some(h);
            }
            let cf = interpolate(&cff, x, &xi);
            if !cf.is_zero() {
                if let Some(h) = f.divide(&cf) {
                    let h = h.primitive().1;
                    if g.divide(&h).is_some() {
                        return Some(h);
                    }
                }
            }
            let cg = interpolate(&cfg, x, &xi);
            if !cg.is_zero() {
                if let Some(h) = g.divide(&cg) {
                    let h = h.primitive().1;
                    if f.divide(&h).is_some() {
                        return Some(h);
                    }
                }
            }
        }
        let r = xi.sqrt().sqrt();
        xi = (&xi * 73794u32 * r) / 27011u32;
    }
    None
}

/// Integer leading coefficient in a recursive order with `x` as main variable.
fn ground_lc(p: &ZPoly, x: Var) -> Int {
    let d = p.degree(x);
    p.terms()
        .iter()
        .filter(|t| t.0.exp(x) == d)
        .map(|t| t.1.clone())
        .next()
        .unwrap_or(Int::ZERO)
}

/// Lifts `h(ξ)` back to a polynomial in `x` using balanced base-ξ digits of
/// every integer coefficient.
fn interpolate(h: &ZPoly, x: Var, xi: &BigInt) -> ZPoly {
    let mut terms = Vec::new();
    for (m, c) in h.terms() {
        let mut c = c.to_big();
        let mut k = 0u32;
        while !c.is_zero() {
            let d = Int::from_big(c.clone()).symmetric_mod(xi);
            if !d.is_zero() {
                terms.push((m.mul(Mono::var(x, k)), Int::from_big(d.clone())));
            }
            c = (c - d) / xi;
            k += 1;
        }
    }
    let p = ZPoly::from_terms(terms);
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Primitive polynomial remainder sequence; deterministic fallback.
fn prs_gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let support = f.support() | g.support();
    let x = match Var::ALL.iter().copied().find(|v| support & (1 << v.index()) != 0) {
        Some(x) => x,
        None => return ZPoly::one(),
    };
    let cf = content_in(f, x);
    let cg = content_in(g, x);
    let c = gcd(&cf, &cg);
    let mut a = f.divide(&cf).expect("content divides");
    let mut b = g.divide(&cg).expect("content divides");
    if a.degree(x) < b.degree(x) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree(x) == 0 {
            // b is a non-zero constant in x, so the primitive gcd is trivial.
            let h = c;
            return if h.lc().is_negative() { h.neg() } else { h };
        }
        let r = prem(&a, &b, x);
        if r.is_zero() {
            break;
        }
        a = b;
        let cr = content_in(&r, x);
        b = r.divide(&cr).expect("content divides");
    }
    let h = b.mul(&c);
    let h = h.primitive().1;
    if h.lc().is_negative() {
        h.neg()
    } else {
        h
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `x`.
fn prem(a: &ZPoly, b: &ZPoly, x: Var) -> ZPoly {
    let db = b.degree(x);
    let lcb = lc_in(b, x);
    let mut r = a.clone();
    let mut d = a.degree(x) as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree(x) >= db {
        let dr = r.degree(x);
        let t = lc_in(&r, x).mul_mono(Mono::var(x, dr - db));
        r = r.mul(&lcb).sub(&t.mul(b));
        d -= 1;
    }
    if d > 0 {
        r = r.mul(&lcb.pow(d as u32));
    }
    r
}

fn lc_in(p: &ZPoly, x: Var) -> ZPoly {
    p.coefficients_in(x).into_iter().next().map(|t| t.1).unwrap_or_default()
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
    fn univariate_gcd() {
        let a = x(Var::U).sub(&c(1));
        let b = x(Var::U).add(&c(2));
        let f = a.mul(&b).scale(&Int::from(6));
        let g = a.mul(&a).scale(&Int::from(4));
        assert_eq!(gcd(&f, &g), a.scale(&Int::from(2)));
    }

    #[test]
    fn multivariate_gcd_with_monomial_content() {
        let a = x(Var::Q).mul(&x(Var::U)).sub(&c(1));
        let b = x(Var::U).sub(&x(Var::V));
        let d = x(Var::A).add(&x(Var::Q).pow(3));
        let f = a.mul(&b).mul(&x(Var::Q).pow(2));
        let g = a.mul(&d).mul(&x(Var::Q));
        assert_eq!(gcd(&f, &g), a.mul(&x(Var::Q)));
    }

    #[test]
    fn prs_fallback_agrees_with_heuristic() {
        let a = x(Var::Q).pow(3).sub(&x(Var::U).mul(&x(Var::Q))).add(&c(5));
        let b = x(Var::U).pow(2).add(&x(Var::Q));
        let d = x(Var::U).sub(&x(Var::Q).pow(2));
        let f = a.mul(&b);
        let g = a.mul(&d);
        assert_eq!(prs_gcd(&f, &g), a);
        assert_eq!(gcd(&f, &g), a);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let f = x(Var::U).add(&c(1));
        let g = x(Var::Q).mul(&x(Var::U)).sub(&c(1));
        assert!(gcd(&f, &g).is_one());
    }

    #[test]
    fn cofactors_reconstruct_inputs() {
        let a = x(Var::U).sub(&x(Var::Q).pow(2));
        let f = a.mul(&x(Var::V).add(&c(3))).scale(&Int::from(-3));
        let g = a.mul(&x(Var::V).sub(&c(3)));
        let (h, cf, cg) = gcd_cofactors(&f, &g);
        assert_eq!(h.mul(&cf), f);
        assert_eq!(h.mul(&cg), g);
        assert_eq!(h, a.neg());
    }
}
