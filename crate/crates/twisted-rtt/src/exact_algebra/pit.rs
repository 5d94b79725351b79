//! Deterministic polynomial identity testing.
//!
//! A polynomial of degree at most `d_x` in each variable `x` that vanishes on
//! a product grid with `d_x + 1` distinct values per variable is identically
//! zero.  Grid mode evaluates at the points `k + 3/2 + j/5 (+ shift)`, where
//! `j` is the index of the variable, so a check is exactly reproducible and —
//! given a correct [`DegreeBound`] — a proof.  The per-variable offset keeps
//! distinct spectral variables apart (`u ≠ v` on every grid point), which
//! avoids the poles at `u = v` that many exchange relations carry.

use super::mono::Var;
use super::mpoly::BigRat;
use super::gcd::gcd;
use super::ratfunc::RatFunc;
use super::scalar::Scalar;
use super::zpoly::ZPoly;
use crate::error::{AlgebraError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// How an identity is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact normalization of both sides.
    Symbolic,
    /// Evaluation on a deterministic grid sized by tracked degree bounds.
    Grid,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Grid => "grid",
        })
    }
}

/// Per-variable degree bounds.  Bounds add under multiplication and take the
/// maximum under addition, so they can be propagated through a computation
/// alongside the values they bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBound {
    bounds: BTreeMap<Var, u32>,
}

impl DegreeBound {
    pub fn new() -> DegreeBound {
        DegreeBound::default()
    }

    pub fn with(mut self, v: Var, d: u32) -> DegreeBound {
        self.set(v, d);
        self
    }

    pub fn set(&mut self, v: Var, d: u32) {
        if d == 0 {
            self.bounds.remove(&v);
        } else {
            self.bounds.insert(v, d);
        }
    }

    pub fn get(&self, v: Var) -> u32 {
        self.bounds.get(&v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.bounds.iter().map(|(v, d)| (*v, *d))
    }

    /// Bound of a product.
    pub fn mul(&self, other: &DegreeBound) -> DegreeBound {
        let mut out = self.clone();
        for (v, d) in other.vars() {
            out.set(v, out.get(v) + d);
        }
        out
    }

    /// Bound of a sum.
    pub fn add(&self, other: &DegreeBound) -> DegreeBound {
        let mut out = self.clone();
        for (v, d) in other.vars() {
            out.set(v, out.get(v).max(d));
        }
        out
    }

    /// Bound of `k` copies multiplied together.
    pub fn scale(&self, k: u32) -> DegreeBound {
        let mut out = DegreeBound::new();
        for (v, d) in self.vars() {
            out.set(v, d * k);
        }
        out
    }

    /// Bound on the cross-multiplied numerator `num(l) den(r) - num(r) den(l)`
    /// of two rational functions, read off their normalized forms.
    pub fn of_cross_product(lhs: &RatFunc, rhs: &RatFunc) -> DegreeBound {
        let mut out = DegreeBound::new();
        for v in Var::ALL {
            let (ln, ld) = lhs.degrees(v);
            let (rn, rd) = rhs.degrees(v);
            out.set(v, (ln + rd).max(rn + ld));
        }
        out
    }

    /// Number of grid points this bound requires.
    pub fn grid_size(&self) -> u128 {
        self.vars().map(|(_, d)| d as u128 + 1).product()
    }
}

/// Degree data of a family of rational functions over a common denominator:
/// every member is `p / c` with `deg p ≤ num` and `deg c ≤ den` per variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cleared {
    pub num: DegreeBound,
    pub den: DegreeBound,
}

impl Cleared {
    /// Clears the given functions with the lcm of their denominators.
    pub fn of<'a>(items: impl IntoIterator<Item = &'a RatFunc>) -> Cleared {
        let items: Vec<&RatFunc> = items.into_iter().filter(|x| !x.is_zero()).collect();
        let mut lcm = ZPoly::one();
        for x in &items {
            let d = x.zden();
            if lcm.divide(d).is_none() {
                let g = gcd(&lcm, d);
                lcm = lcm.mul(&d.divide(&g).expect("gcd divides"));
            }
        }
        let mut num = DegreeBound::new();
        let mut den = DegreeBound::new();
        for v in Var::ALL {
            den.set(v, lcm.degree(v));
            let top = items.iter().map(|x| x.znum().degree(v) + lcm.degree(v) - x.zden().degree(v)).max();
            num.set(v, top.unwrap_or(0));
        }
        Cleared { num, den }
    }

    /// Degree data of entrywise products of members of each family (the
    /// common denominator of a matrix product is the product of the factors'
    /// denominators).
    pub fn product(factors: &[&Cleared]) -> Cleared {
        factors.iter().fold(Cleared::default(), |acc, f| Cleared { num: acc.num.mul(&f.num), den: acc.den.mul(&f.den) })
    }

    /// Bound on the cross-multiplied difference `P_l c_r - P_r c_l` deciding
    /// `P_l / c_l = P_r / c_r`.
    pub fn identity_bound(lhs: &Cleared, rhs: &Cleared) -> DegreeBound {
        lhs.num.mul(&rhs.den).add(&rhs.num.mul(&lhs.den))
    }

    /// Bound deciding `P_l / c = P_r / c` when both sides are cleared by the
    /// same denominator (for instance the two sides of the Yang–Baxter
    /// equation, which multiply the same three factors).
    pub fn same_denominator_bound(lhs: &Cleared, rhs: &Cleared) -> DegreeBound {
        lhs.num.add(&rhs.num)
    }
}

/// Result of an identity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub holds: bool,
    /// A point where the two sides differ, when they do.
    pub counterexample: Option<Vec<(Var, BigRat)>>,
}

/// The `k`-th grid value of `v` with the given shift:
/// `k + 3/2 + shift + index(v)/5`.
pub fn grid_value(v: Var, k: u32, shift: u32) -> BigRat {
    BigRat::new((10 * (k as i64 + shift as i64) + 15 + 2 * v.index() as i64).into(), 10.into())
}

/// Default values used when a symbolic check needs a witness point.
pub fn sample_value(v: Var) -> BigRat {
    match v {
        Var::Q => BigRat::new(3.into(), 2.into()),
        Var::U => BigRat::new(2.into(), 1.into()),
        Var::V => BigRat::new(5.into(), 3.into()),
        Var::W => BigRat::new(7.into(), 4.into()),
        Var::A => BigRat::new(7.into(), 5.into()),
    }
}

/// Maximum number of shifted grids tried before giving up on poles.
pub const GRID_RETRIES: u32 = 8;

/// Runs `check` on every point of the grid described by `bound`.
///
/// `check` returns `Ok(true)` when the identity holds at the point,
/// `Ok(false)` when it fails, and `Err(PoleAtSamplePoint)` when some
/// evaluation hits a pole; in that case the whole grid is shifted by one and
/// restarted, up to [`GRID_RETRIES`] times.
pub fn grid_check<F>(bound: &DegreeBound, mut check: F) -> Result<IdentityOutcome>
where
    F: FnMut(&[(Var, BigRat)]) -> Result<bool>,
{
    let vars: Vec<(Var, u32)> = bound.vars().collect();
    'retry: for shift in 0..GRID_RETRIES {
        let mut idx = vec![0u32; vars.len()];
        loop {
            let point: Vec<(Var, BigRat)> =
                vars.iter().zip(&idx).map(|((v, _), &k)| (*v, grid_value(*v, k, shift))).collect();
            match check(&point) {
                Ok(true) => {}
                Ok(false) => return Ok(IdentityOutcome { holds: false, counterexample: Some(point) }),
                Err(AlgebraError::PoleAtSamplePoint { .. })
                | Err(AlgebraError::DivisionByZero)
                | Err(AlgebraError::SingularComplement { .. }) => {
                    continue 'retry;
                }
                Err(e) => return Err(e),
            }
            // Odometer increment.
            let mut pos = 0;
            loop {
                if pos == vars.len() {
                    return Ok(IdentityOutcome { holds: true, counterexample: None });
                }
                if idx[pos] < vars[pos].1 {
                    idx[pos] += 1;
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
    Err(AlgebraError::GridRetriesExhausted { retries: GRID_RETRIES as usize })
}

/// Parallel form of [`grid_check`]: all points of a grid are evaluated
/// concurrently and the outcome is that of the first failing point in
/// odometer order, so the result does not depend on scheduling.
pub fn grid_check_par<F>(bound: &DegreeBound, check: F) -> Result<IdentityOutcome>
where
    F: Fn(&[(Var, BigRat)]) -> Result<bool> + Sync,
{
    use rayon::prelude::*;
    let vars: Vec<(Var, u32)> = bound.vars().collect();
    let total: usize = vars.iter().map(|(_, d)| *d as usize + 1).product();
    for shift in 0..GRID_RETRIES {
        let point_at = |mut k: usize| -> Vec<(Var, BigRat)> {
            vars.iter()
                .map(|(v, d)| {
                    let m = *d as usize + 1;
                    let idx = k % m;
                    k /= m;
                    (*v, grid_value(*v, idx as u32, shift))
                })
                .collect()
        };
        let results: Vec<Result<bool>> = (0..total).into_par_iter().map(|k| check(&point_at(k))).collect();
        let mut pole = false;
        for (k, r) in results.into_iter().enumerate() {
            match r {
                Ok(true) => {}
                Ok(false) => return Ok(IdentityOutcome { holds: false, counterexample: Some(point_at(k)) }),
                Err(AlgebraError::PoleAtSamplePoint { .. })
                | Err(AlgebraError::DivisionByZero)
                | Err(AlgebraError::SingularComplement { .. }) => {
                    pole = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !pole {
            return Ok(IdentityOutcome { holds: true, counterexample: None });
        }
    }
    Err(AlgebraError::GridRetriesExhausted { retries: GRID_RETRIES as usize })
}

/// Decides `lhs = rhs`.
///
/// In symbolic mode the normalized forms are compared.  In grid mode both
/// sides are evaluated on a grid with `bound(x) + 1` points per variable;
/// `bound` must dominate the degrees of the cross-multiplied numerator (see
/// [`DegreeBound::of_cross_product`]).  A failing identity comes with a point
/// where the sides differ.
pub fn identity_holds(lhs: &RatFunc, rhs: &RatFunc, mode: Mode, bound: &DegreeBound) -> Result<IdentityOutcome> {
    match mode {
        Mode::Symbolic => {
            if lhs == rhs {
                return Ok(IdentityOutcome { holds: true, counterexample: None });
            }
            Ok(IdentityOutcome { holds: false, counterexample: Some(witness(lhs, rhs)?) })
        }
        Mode::Grid => {
            let support = lhs.support() | rhs.support();
            for v in Var::ALL {
                if support & (1 << v.index()) != 0 && bound.get(v) == 0 && !constant_in(lhs, rhs, v) {
                    return Err(AlgebraError::Precondition(format!("grid bound omits variable {v}")));
                }
            }
            grid_check(bound, |p| {
                let full = complete_point(p, support);
                Ok(lhs.eval(&full)? == rhs.eval(&full)?)
            })
        }
    }
}

/// Values of the indeterminates `q, u, v, w, a` in some scalar field: the
/// variables themselves (symbolic evaluation) or rationals (grid points).
#[derive(Clone, Debug)]
pub struct Env<F> {
    vals: Vec<F>,
}

impl<F: Scalar> Env<F> {
    pub fn get(&self, v: Var) -> &F {
        &self.vals[v.index()]
    }

    pub fn q(&self) -> &F {
        self.get(Var::Q)
    }
}

impl Env<RatFunc> {
    /// Every variable stands for itself.
    pub fn symbolic() -> Env<RatFunc> {
        Env { vals: Var::ALL.iter().map(|v| RatFunc::var(*v)).collect() }
    }
}

impl Env<BigRat> {
    /// A rational point; unassigned variables take their [`sample_value`].
    pub fn at(point: &[(Var, BigRat)]) -> Env<BigRat> {
        Env {
            vals: Var::ALL
                .iter()
                .map(|v| point.iter().find(|p| p.0 == *v).map(|p| p.1.clone()).unwrap_or_else(|| sample_value(*v)))
                .collect(),
        }
    }
}

/// An identity between two families of values computed by the same
/// algorithm over any scalar field.
pub trait Identity: Sync {
    /// Both sides, flattened in a fixed order, evaluated in `env`.
    fn sides<F: Scalar>(&self, env: &Env<F>) -> Result<(Vec<F>, Vec<F>)>;

    /// A bound dominating the degrees of the cross-multiplied numerators of
    /// all components (used by grid mode only).
    fn bound(&self) -> Result<DegreeBound>;

    /// Human-readable label of a flattened component index.
    fn describe(&self, index: usize) -> String {
        format!("component {index}")
    }
}

/// Decision on an [`Identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Where the sides differ: a component label and a point.
    pub counterexample: Option<String>,
    /// Number of grid points evaluated (grid mode).
    pub points: u128,
}

/// Decides an identity exactly (symbolic) or by deterministic grid PIT.
pub fn decide<I: Identity>(identity: &I, mode: Mode) -> Result<Verdict> {
    match mode {
        Mode::Symbolic => {
            let (l, r) = identity.sides(&Env::symbolic())?;
            if l.len() != r.len() {
                return Err(AlgebraError::Precondition("sides of different shapes".into()));
            }
            match (0..l.len()).find(|&k| l[k] != r[k]) {
                None => Ok(Verdict { holds: true, counterexample: None, points: 0 }),
                Some(k) => {
                    let w = witness(&l[k], &r[k])?;
                    Ok(Verdict {
                        holds: false,
                        counterexample: Some(format!("{} at {}", identity.describe(k), format_point(&w))),
                        points: 0,
                    })
                }
            }
        }
        Mode::Grid => {
            let bound = identity.bound()?;
            let out = grid_check_par(&bound, |p| {
                let (l, r) = identity.sides(&Env::at(p))?;
                Ok(l == r)
            })?;
            let points = bound.grid_size();
            if out.holds {
                return Ok(Verdict { holds: true, counterexample: None, points });
            }
            // Recompute the first differing component at the reported point.
            let point = out.counterexample.expect("failures carry a point");
            let (l, r) = identity.sides(&Env::at(&point))?;
            let k = (0..l.len()).find(|&k| l[k] != r[k]).unwrap_or(0);
            Ok(Verdict {
                holds: false,
                counterexample: Some(format!("{} at {}", identity.describe(k), format_point(&order_witness(point)))),
                points,
            })
        }
    }
}

/// True if the cross-multiplied numerator does not involve `v`.
fn constant_in(lhs: &RatFunc, rhs: &RatFunc, v: Var) -> bool {
    DegreeBound::of_cross_product(lhs, rhs).get(v) == 0
}

/// Adds default values for variables the grid does not vary.
fn complete_point(p: &[(Var, BigRat)], support: u8) -> Vec<(Var, BigRat)> {
    let mut full = p.to_vec();
    for v in Var::ALL {
        if support & (1 << v.index()) != 0 && !p.iter().any(|x| x.0 == v) {
            full.push((v, sample_value(v)));
        }
    }
    full
}

/// Finds a point where two distinct rational functions differ, starting at
/// the default sample point and walking a small deterministic neighbourhood.
pub fn witness(lhs: &RatFunc, rhs: &RatFunc) -> Result<Vec<(Var, BigRat)>> {
    let support = lhs.support() | rhs.support() | 1;
    let vars: Vec<Var> = Var::ALL.iter().copied().filter(|v| support & (1 << v.index()) != 0).collect();
    for shift in 0..64i64 {
        let point: Vec<(Var, BigRat)> = vars
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let bump = BigRat::new((shift * (k as i64 + 1)).into(), 7.into());
                (*v, sample_value(*v) + bump)
            })
            .collect();
        match (lhs.eval(&point), rhs.eval(&point)) {
            (Ok(a), Ok(b)) if a != b => return Ok(order_witness(point)),
            _ => {}
        }
    }
    Err(AlgebraError::Precondition("no separating point found for distinct rational functions".into()))
}

/// Lists spectral variables before `q` for readability.
fn order_witness(mut p: Vec<(Var, BigRat)>) -> Vec<(Var, BigRat)> {
    p.sort_by_key(|(v, _)| if *v == Var::Q { 5 } else { v.index() });
    p
}

/// Formats a point as `u=2, q=3/2`.
pub fn format_point(p: &[(Var, BigRat)]) -> String {
    p.iter().map(|(v, x)| format!("{v}={x}")).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> RatFunc {
        RatFunc::var(Var::U)
    }
    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    #[test]
    fn difference_of_squares_on_grid() {
        let lhs = &(&u() + &q()) * &(&u() - &q());
        let rhs = &(&u() * &u()) - &(&q() * &q());
        let b = DegreeBound::new().with(Var::U, 2).with(Var::Q, 2);
        assert!(identity_holds(&lhs, &rhs, Mode::Grid, &b).unwrap().holds);
        assert!(identity_holds(&lhs, &rhs, Mode::Symbolic, &b).unwrap().holds);
    }

    #[test]
    fn counterexample_reported() {
        let lhs = u();
        let rhs = &u() + &RatFunc::one();
        let out = identity_holds(&lhs, &rhs, Mode::Symbolic, &DegreeBound::new()).unwrap();
        assert!(!out.holds);
        assert_eq!(format_point(&out.counterexample.unwrap()), "u=2, q=3/2");
    }

    #[test]
    fn grid_shifts_around_poles() {
        // 1/(u - 17/10) has a pole at the first grid value of u.
        let pole = RatFunc::one().div(&(&u() - &RatFunc::ratio(17, 10).unwrap())).unwrap();
        let b = DegreeBound::of_cross_product(&pole, &pole);
        assert!(identity_holds(&pole, &pole, Mode::Grid, &b).unwrap().holds);
    }

    #[test]
    fn bound_algebra() {
        let a = DegreeBound::new().with(Var::U, 2).with(Var::Q, 1);
        let b = DegreeBound::new().with(Var::U, 1).with(Var::V, 3);
        assert_eq!(a.mul(&b), DegreeBound::new().with(Var::U, 3).with(Var::Q, 1).with(Var::V, 3));
        assert_eq!(a.add(&b), DegreeBound::new().with(Var::U, 2).with(Var::Q, 1).with(Var::V, 3));
        assert_eq!(a.grid_size(), 6);
    }
}
