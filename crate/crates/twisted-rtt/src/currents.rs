//! Drinfeld currents of the evaluation module and the level-zero relations
//! between them.
//!
//! The Gauss entries `e_{i,i+1}(u)`, `f_{i+1,i}(u)` and `h_i(u)` of
//! `L(u) = F(u) H(u) E(u)` are rational in `u`.  At level zero the `±` series
//! of the algebra are the expansions of the same rational entry at `u = 0`
//! (`+`) and at `u = ∞` (`-`), so a current is the difference of the two
//! expansions: the mode `X_{i,m}` is the coefficient of `u^{-m}` in
//! `(expansion at 0) - (expansion at ∞)`, with the extra factors `u` and
//! `u^{-1}` for `X^+_n` and `X^-_n`.
//!
//! Relations are verified in denominator-cleared form: multiplying a relation
//! `A(u) B(v) = g(u/v) B(v) A(u)` through by the denominator of `g` gives an
//! identity between finitely many modes with polynomial weights, which is
//! independent of any choice of expansion region.  Delta functions are
//! handled by explicit coefficient extraction.  Modes are exact rational
//! functions of `q`.

use crate::cartan::CartanDatum;
use crate::error::{AlgebraError, Result};
use crate::exact_algebra::{q_number_in, Env, RatFunc, Var};
use crate::gauss::{block_inverse, gauss_quasideterminant, LOperator};
use crate::qseries::{expand_matrix, Direction, Sign};
use crate::report::Check;
use crate::tensor::Matrix;
use std::collections::BTreeMap;

/// Modes indexed by `k`: the coefficients of `u^{-k}` at 0 and at ∞.
type ModePairs = BTreeMap<i64, (Matrix<RatFunc>, Matrix<RatFunc>)>;

/// Extra modes computed beyond the relation window, so that every shifted
/// mode a relation instance refers to is known exactly.
const MARGIN: i64 = 3;

/// Mode tables of the currents `X^±_i(u)` and the rational Cartan currents
/// `h_i(u)` of the evaluation module of rank `n`.
#[derive(Clone, Debug)]
pub struct Currents {
    n: usize,
    datum: CartanDatum,
    reach: i64,
    h: Vec<Matrix<RatFunc>>,
    h_inv: Vec<Matrix<RatFunc>>,
    modes: BTreeMap<(Sign, usize, i64), Matrix<RatFunc>>,
}

/// Coefficient of `u^{-m}` in (expansion at 0) − (expansion at ∞), for all
/// `|m| ≤ reach`.
fn bilateral_modes(x: &Matrix<RatFunc>, reach: i64) -> Result<BTreeMap<i64, Matrix<RatFunc>>> {
    let zero = expand_matrix(x, Var::U, Direction::AtZero, reach)?;
    let inf = expand_matrix(x, Var::U, Direction::AtInfinity, reach)?;
    let mut out = BTreeMap::new();
    for m in -reach..=reach {
        out.insert(m, zero.coeff_of_power(-m)?.sub(&inf.coeff_of_power(-m)?));
    }
    Ok(out)
}

impl Currents {
    /// Gauss-decomposes `L(u)` symbolically and tabulates all modes with
    /// `|m| ≤ window + MARGIN`.
    pub fn new(op: &LOperator, window: i64) -> Result<Currents> {
        let n = op.n;
        if n < 2 {
            return Err(AlgebraError::InvalidArgument("currents need n ≥ 2".into()));
        }
        if window < 1 {
            return Err(AlgebraError::InvalidArgument("the mode window must be at least 1".into()));
        }
        let datum = CartanDatum::new(n)?;
        let env = Env::symbolic();
        let g = gauss_quasideterminant(&op.at(env.get(Var::U), &env)?)?;
        let reach = window + MARGIN;
        let mut modes = BTreeMap::new();
        for i in 1..=n {
            // X^+_n(u) = u·(…) and X^-_n(u) = u^{-1}·(…) shift the modes by ∓1.
            let (plus_shift, minus_shift) = if i == n { (1, -1) } else { (0, 0) };
            let e = bilateral_modes(&g.e[&(i - 1, i)], reach + 1)?;
            let f = bilateral_modes(&g.f[&(i, i - 1)], reach + 1)?;
            for m in -reach..=reach {
                modes.insert((Sign::Plus, i, m), e[&(m + plus_shift)].clone());
                modes.insert((Sign::Minus, i, m), f[&(m + minus_shift)].clone());
            }
        }
        let h_inv = g.h.iter().enumerate().map(|(i, h)| block_inverse(h, &format!("h_{}", i + 1))).collect::<Result<Vec<_>>>()?;
        Ok(Currents { n, datum, reach, h: g.h, h_inv, modes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest `|m|` in the mode tables.
    pub fn reach(&self) -> i64 {
        self.reach
    }

    /// The mode `X^±_{i,m}` (1-based node `i`).
    pub fn x(&self, sign: Sign, i: usize, m: i64) -> Result<&Matrix<RatFunc>> {
        self.modes
            .get(&(sign, i, m))
            .ok_or_else(|| AlgebraError::InvalidArgument(format!("mode X^{}_{{{i},{m}}} outside the computed window", sign.symbol())))
    }

    /// `h_i(u)` as a rational matrix (1-based `i ≤ n+1`).
    pub fn h(&self, i: usize) -> &Matrix<RatFunc> {
        &self.h[i - 1]
    }

    /// `q^{-im} X^±_{i,m}`: the modes of `X^±_i(uq^i)`.
    fn y(&self, sign: Sign, i: usize, m: i64) -> Result<Matrix<RatFunc>> {
        Ok(self.x(sign, i, m)?.scale(&RatFunc::q_pow(-(i as i64 * m) as i32)))
    }

    /// Modes `(coefficient of u^{-k} at 0, at ∞)` of `h_i(u)^{-1} h_{i+1}(u)`
    /// for `|k| ≤ reach`.
    fn cartan_ratio_modes(&self, i: usize, reach: i64) -> Result<ModePairs> {
        let a = self.h_inv[i - 1].mul(&self.h[i]);
        let zero = expand_matrix(&a, Var::U, Direction::AtZero, reach)?;
        let inf = expand_matrix(&a, Var::U, Direction::AtInfinity, reach)?;
        let mut out = BTreeMap::new();
        for k in -reach..=reach {
            out.insert(k, (zero.coeff_of_power(-k)?, inf.coeff_of_power(-k)?));
        }
        Ok(out)
    }
}

/// One instance of a mode relation: a label and the two sides.
type Instance = (String, Matrix<RatFunc>, Matrix<RatFunc>);

/// Turns a family of instances into one check, reporting the instance count
/// and the first failing instance.
fn family(id: String, what: &str, instances: Result<Vec<Instance>>) -> Check {
    match instances {
        Err(e) => Check::fail(id, format!("{what}: evaluation error"), e.to_string()),
        Ok(list) if list.is_empty() => Check::skipped(id, format!("{what}: no instances in the window")),
        Ok(list) => {
            let total = list.len();
            let bad: Vec<&Instance> = list.iter().filter(|(_, l, r)| l != r).collect();
            let detail = format!("{what} ({total} instances, {} failing)", bad.len());
            match bad.first() {
                None => Check::pass(id, detail),
                Some((label, l, r)) => {
                    let (row, col) = l.first_difference(r).unwrap_or((0, 0));
                    Check::fail(
                        id,
                        detail,
                        format!("{label}, module entry ({},{}): {} vs {}", row + 1, col + 1, l.get(row, col), r.get(row, col)),
                    )
                }
            }
        }
    }
}

/// `q^k` as displayed in relation descriptions (`1` for `k = 0`).
fn show_q(k: i64) -> String {
    match k {
        0 => "1".into(),
        1 => "q".into(),
        _ => format!("q^{k}"),
    }
}

fn q_pow(k: i64) -> RatFunc {
    RatFunc::q_pow(k as i32)
}

fn commutator(a: &Matrix<RatFunc>, b: &Matrix<RatFunc>) -> Matrix<RatFunc> {
    a.mul(b).sub(&b.mul(a))
}

/// `[h_i(u), h_j(v)] = 0` for all `i, j ≤ n+1`.
pub fn check_hh(c: &Currents) -> Check {
    let n = c.n;
    let instances = (|| {
        let mut out = Vec::new();
        let v = RatFunc::var(Var::V);
        for i in 1..=n + 1 {
            for j in 1..=n + 1 {
                let hv = c.h(j).try_map(|x| x.substitute(Var::U, &v))?;
                let hu = c.h(i);
                out.push((format!("[h_{i}(u), h_{j}(v)]"), hu.mul(&hv), hv.mul(hu)));
            }
        }
        Ok(out)
    })();
    family(format!("currents.hihjmp.n{n}"), "h_i(u) h_j(v) = h_j(v) h_i(u)", instances)
}

/// The cleared form of a Cartan–current relation
/// `(a u^s + b v^s) h(u) X^+(v) = (c u^s + d v^s) X^+(v) h(u)`; for `X^-`
/// the two products are exchanged.
struct HxForm {
    shift: i64,
    weights: [RatFunc; 4],
    what: String,
}

impl Currents {
    fn hx_form(&self, i: usize, j: usize) -> HxForm {
        let n = self.n;
        let one = RatFunc::one;
        let m1 = || RatFunc::from_int(-1);
        if i <= n {
            let e = self.datum.eps_pairing(i, j);
            let shift = if j == n { 2 } else { 1 };
            let p = if j == n { "^2" } else { "" };
            let what = if e == 0 {
                format!("h_{i}(u) X_{j}(v) = X_{j}(v) h_{i}(u)")
            } else {
                format!("({} u{p} - {} v{p}) h_{i}(u) X_{j}(v) = (u{p} - v{p}) X_{j}(v) h_{i}(u)", show_q(e), show_q(-e))
            };
            return HxForm { shift, weights: [q_pow(e), q_pow(-e).neg(), one(), m1()], what };
        }
        if j == n {
            return HxForm {
                shift: 2,
                weights: [q_pow(-2), q_pow(2).neg(), one(), m1()],
                what: format!("(q^-2 u^2 - q^2 v^2) h_{i}(u) X_{j}(v) = (u^2 - v^2) X_{j}(v) h_{i}(u)"),
            };
        }
        if j == n - 1 {
            return HxForm {
                shift: 1,
                weights: [one(), one(), q_pow(-1), q_pow(1)],
                what: format!("(u + v) h_{i}(u) X_{j}(v) = (q^-1 u + q v) X_{j}(v) h_{i}(u)"),
            };
        }
        HxForm { shift: 0, weights: [one(), RatFunc::zero(), one(), RatFunc::zero()], what: format!("h_{i}(u) X_{j}(v) = X_{j}(v) h_{i}(u)") }
    }
}

/// All `h_i`–`X^±_j` relations, one check per `(i, j)`, modes `|m| ≤ window`.
pub fn check_hx(c: &Currents, window: i64) -> Vec<Check> {
    let n = c.n;
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        for j in 1..=n {
            let form = c.hx_form(i, j);
            let instances = (|| {
                let mut list = Vec::new();
                let h = c.h(i);
                let us = RatFunc::var_pow(Var::U, form.shift as i32);
                let [a, b, cc, d] = &form.weights;
                for sign in Sign::BOTH {
                    for m in -window..=window - form.shift {
                        let x = c.x(sign, j, m)?;
                        let xs = c.x(sign, j, m + form.shift)?;
                        // Coefficient of v^{-m}: v^s X(v) contributes X_{m+s}.
                        let (hx, xh) = (h.mul(x), x.mul(h));
                        let (hxs, xsh) = (h.mul(xs), xs.mul(h));
                        let (p, ps, r, rs) = match sign {
                            Sign::Plus => (hx, hxs, xh, xsh),
                            Sign::Minus => (xh, xsh, hx, hxs),
                        };
                        let lhs = p.scale(&a.mul(&us)).add(&ps.scale(b));
                        let rhs = r.scale(&cc.mul(&us)).add(&rs.scale(d));
                        list.push((format!("X^{}, m={m}", sign.symbol()), lhs, rhs));
                    }
                }
                Ok(list)
            })();
            out.push(family(format!("currents.hx.{i}-{j}.n{n}"), &form.what, instances));
        }
    }
    out
}

/// All `X^±_i`–`X^±_j` exchange relations
/// `(u^s - q^{±(α_i,α_j)} v^s) X_i(uq^i) X_j(vq^j) = (q^{±(α_i,α_j)} u^s - v^s) X_j(vq^j) X_i(uq^i)`
/// with `s = 2` when node `n` is involved.
pub fn check_xx(c: &Currents, window: i64) -> Vec<Check> {
    let n = c.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let pairing = c.datum.d(i) * c.datum.a(i, j);
            let s = if i == n || j == n { 2 } else { 1 };
            let instances = (|| {
                let mut list = Vec::new();
                for sign in Sign::BOTH {
                    let cq = q_pow(sign.as_i64() * pairing);
                    for m in -window..=window - s {
                        for l in -window..=window - s {
                            let (a, a_s) = (c.y(sign, i, m)?, c.y(sign, i, m + s)?);
                            let (b, b_s) = (c.y(sign, j, l)?, c.y(sign, j, l + s)?);
                            let lhs = a_s.mul(&b).sub(&a.mul(&b_s).scale(&cq));
                            let rhs = b.mul(&a_s).scale(&cq).sub(&b_s.mul(&a));
                            list.push((format!("X^{}, (m,l)=({m},{l})", sign.symbol()), lhs, rhs));
                        }
                    }
                }
                Ok(list)
            })();
            let (c_plus, c_minus) = (show_q(pairing), show_q(-pairing));
            let p = if s == 2 { "^2" } else { "" };
            let what = format!(
                "(u{p} - c v{p}) X_{i}(uq^{i}) X_{j}(vq^{j}) = (c u{p} - v{p}) X_{j}(vq^{j}) X_{i}(uq^{i}), c = {c_plus} for X^+, {c_minus} for X^-"
            );
            out.push(family(format!("currents.xixj.{i}-{j}.n{n}"), &what, instances));
        }
    }
    out
}

/// `[X^+_{i,m}, X^-_{j,l}] = δ_ij (q_i - q_i^{-1}) (A^∞_{m+l} - A^0_{m+l})` with
/// `A = h_i^{-1} h_{i+1}`; at `i = n` the delta function is `δ((u/v)^2)`,
/// so the `A^∞` term needs `m` even and the `A^0` term needs `l` even.
pub fn check_xpxm(c: &Currents, window: i64) -> Vec<Check> {
    let n = c.n;
    let mut out = Vec::new();
    for i in 1..=n {
        let ratio = c.cartan_ratio_modes(i, 2 * window);
        for j in 1..=n {
            let instances = (|| {
                let mut list = Vec::new();
                let qi = c.datum.q_i(i);
                let factor = qi.sub(&qi.inv()?);
                for m in -window..=window {
                    for l in -window..=window {
                        let lhs = commutator(c.x(Sign::Plus, i, m)?, c.x(Sign::Minus, j, l)?);
                        let rhs = if i != j {
                            Matrix::zeros(lhs.rows(), lhs.cols())
                        } else {
                            let table = ratio.as_ref().map_err(|e| e.clone())?;
                            let (at0, atinf) = &table[&(m + l)];
                            let zero = Matrix::zeros(lhs.rows(), lhs.cols());
                            let inf_term = if i == n && m.rem_euclid(2) == 1 { zero.clone() } else { atinf.clone() };
                            let zero_term = if i == n && l.rem_euclid(2) == 1 { zero } else { at0.clone() };
                            inf_term.sub(&zero_term).scale(&factor)
                        };
                        list.push((format!("(m,l)=({m},{l})"), lhs, rhs));
                    }
                }
                Ok(list)
            })();
            let what = if i != j {
                format!("[X^+_({i},m), X^-_({j},l)] = 0")
            } else if i == n {
                format!("[X^+_({i},m), X^-_({i},l)] = (q_{i} - q_{i}^-1) delta((u/v)^2)-modes of h_{i}^-1 h_{}", i + 1)
            } else {
                format!("[X^+_({i},m), X^-_({i},l)] = (q_{i} - q_{i}^-1) (A^inf - A^0)_(m+l), A = h_{i}^-1 h_{}", i + 1)
            };
            out.push(family(format!("currents.xpxm.{i}-{j}.n{n}"), &what, instances));
        }
    }
    out
}

/// Consequence of the commutator identity: for `i = j` the commutator
/// depends on `m + l` only.  At node `n` only even modes are non-zero, so the
/// shift is `(m, l) → (m + 2, l - 2)` on even modes.
pub fn check_xpxm_shift_invariance(c: &Currents, window: i64) -> Check {
    let n = c.n;
    let instances = (|| {
        let mut list = Vec::new();
        for i in 1..=n {
            let step = c.datum.d(i);
            for m in (-window..=window - step).filter(|m| m.rem_euclid(step) == 0) {
                for l in (-window + step..=window).filter(|l| l.rem_euclid(step) == 0) {
                    let a = commutator(c.x(Sign::Plus, i, m)?, c.x(Sign::Minus, i, l)?);
                    let b = commutator(c.x(Sign::Plus, i, m + step)?, c.x(Sign::Minus, i, l - step)?);
                    list.push((format!("i={i}, (m,l)=({m},{l}) vs ({},{})", m + step, l - step), a, b));
                }
            }
        }
        Ok(list)
    })();
    family(format!("currents.xpxm.shift.n{n}"), "[X^+_(i,m), X^-_(i,l)] depends on m+l only (modes divisible by d_i)", instances)
}

/// `X^±_{n,m} = 0` for odd `m`.
pub fn check_odd_modes(c: &Currents) -> Check {
    let n = c.n;
    let instances = (|| {
        let mut list = Vec::new();
        for sign in Sign::BOTH {
            for m in -c.reach..=c.reach {
                if m.rem_euclid(2) == 1 {
                    let x = c.x(sign, n, m)?;
                    list.push((format!("X^{}_{{{n},{m}}}", sign.symbol()), x.clone(), Matrix::zeros(x.rows(), x.cols())));
                }
            }
        }
        Ok(list)
    })();
    family(format!("currents.xn_odd.n{n}"), "odd modes of X_n vanish", instances)
}

/// The symmetrized Serre relations for `A_ij = -1`:
/// `Σ_{σ∈S_2} (X_i X_i X_j - [2]_{q_i} X_i X_j X_i + X_j X_i X_i) = 0`,
/// all mode triples with `|modes| ≤ window`.
pub fn check_serre(c: &Currents, window: i64) -> Vec<Check> {
    let n = c.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j || c.datum.a(i, j) != -1 {
                continue;
            }
            let instances = (|| {
                let mut list = Vec::new();
                let two = q_number_in(2, &c.datum.q_i(i))?;
                for sign in Sign::BOTH {
                    for m1 in -window..=window {
                        for m2 in -window..=window {
                            for k in -window..=window {
                                let b = c.x(sign, j, k)?;
                                let mut tot = Matrix::zeros(b.rows(), b.cols());
                                for (a1, a2) in [(m1, m2), (m2, m1)] {
                                    let (x1, x2) = (c.x(sign, i, a1)?, c.x(sign, i, a2)?);
                                    tot = tot.add(&x1.mul(x2).mul(b)).sub(&x1.mul(b).mul(x2).scale(&two)).add(&b.mul(x1).mul(x2));
                                }
                                let zero = Matrix::zeros(b.rows(), b.cols());
                                list.push((format!("X^{}, modes ({m1},{m2};{k})", sign.symbol()), tot, zero));
                            }
                        }
                    }
                }
                Ok(list)
            })();
            out.push(family(format!("currents.serrex.{i}-{j}.n{n}"), &format!("Serre relation for (i,j)=({i},{j}), r = 2"), instances));
        }
    }
    out
}

/// Weight of the cubic relation between `X_{n-1}` and `X_n`: the factor
/// `(w_1 u_1 + w_2 u_2)` in front of the symmetrized cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicWeight {
    /// `(q^2 u_1 + u_2)` for both signs, as displayed.
    Literal,
    /// `(q^{±2} u_1 + u_2)` for `X^±`.
    Signed,
}

/// The cubic relation
/// `Σ_σ σ((w_1u_1 + w_2u_2)(X_n X_{n-1} X_{n-1} - [2]_{q^2} X_{n-1} X_n X_{n-1} + X_{n-1} X_{n-1} X_n)) = 0`
/// over mode tuples `(a_1, a_2; k)` with `-window ≤ a_i < window`, `|k| ≤ window`.
pub fn check_weighted_serre(c: &Currents, window: i64, weight: CubicWeight) -> Vec<Check> {
    let n = c.n;
    let (i, j) = (n - 1, n);
    let mut out = Vec::new();
    for sign in Sign::BOTH {
        let w1 = match (weight, sign) {
            (CubicWeight::Signed, Sign::Minus) => q_pow(-2),
            _ => q_pow(2),
        };
        let instances = (|| {
            let mut list = Vec::new();
            let two = q_number_in(2, &q_pow(2))?;
            let t = |a1: i64, a2: i64, k: i64| -> Result<Matrix<RatFunc>> {
                let (x1, x2, b) = (c.x(sign, i, a1)?, c.x(sign, i, a2)?, c.x(sign, j, k)?);
                Ok(b.mul(x1).mul(x2).sub(&x1.mul(b).mul(x2).scale(&two)).add(&x1.mul(x2).mul(b)))
            };
            for m1 in -window..window {
                for m2 in -window..window {
                    for k in -window..=window {
                        let mut tot: Option<Matrix<RatFunc>> = None;
                        for (a1, a2) in [(m1, m2), (m2, m1)] {
                            // Coefficient of u_1^{-a_1} u_2^{-a_2}: u_1 T → T(a_1+1, a_2).
                            let term = t(a1 + 1, a2, k)?.scale(&w1).add(&t(a1, a2 + 1, k)?);
                            tot = Some(match tot {
                                None => term,
                                Some(s) => s.add(&term),
                            });
                        }
                        let tot = tot.expect("two orders");
                        let zero = Matrix::zeros(tot.rows(), tot.cols());
                        list.push((format!("modes ({m1},{m2};{k})"), tot, zero));
                    }
                }
            }
            Ok(list)
        })();
        let (tag, what) = match weight {
            CubicWeight::Literal => ("literal", format!("cubic relation for (X_{i}, X_{j}) with weight (q^2 u1 + u2), X^{}", sign.symbol())),
            CubicWeight::Signed => (
                "signed",
                format!("cubic relation for (X_{i}, X_{j}) with weight (q^{}2 u1 + u2), X^{}", if sign == Sign::Plus { "" } else { "-" }, sign.symbol()),
            ),
        };
        let s = if sign == Sign::Plus { "plus" } else { "minus" };
        out.push(family(format!("currents.serre_cubic.{tag}.{s}.n{n}"), &what, instances));
    }
    out
}

/// The expansions of each `h_i(u)` at `0` and `∞` are invertible series
/// (invertible leading coefficient) and `h_i h_i^{-1} = 1` to the precision.
pub fn check_h_series(c: &Currents) -> Check {
    let n = c.n;
    let instances = (|| {
        let mut list = Vec::new();
        for i in 1..=n + 1 {
            for dir in [Direction::AtZero, Direction::AtInfinity] {
                let s = expand_matrix(c.h(i), Var::U, dir, c.reach)?;
                let inv = s.inverse()?;
                let prod = s.mul(&inv)?;
                let label = format!("h_{i} at {}", if dir == Direction::AtZero { "0" } else { "infinity" });
                for k in prod.lo()..=prod.hi() {
                    let expect = if k == 0 { Matrix::identity(c.h(i).rows()) } else { Matrix::zeros(c.h(i).rows(), c.h(i).cols()) };
                    list.push((format!("{label}, t^{k}"), prod.coeff(k)?, expect));
                }
            }
        }
        Ok(list)
    })();
    family(format!("currents.h_series.n{n}"), "h_i(u) expansions are invertible series", instances)
}

/// Every relation family of the currents suite at rank `op.n`: relation
/// windows `window` for the quadratic families and `serre_window` for the
/// cubic ones.
pub fn check_currents(op: &LOperator, window: i64, serre_window: i64) -> Vec<Check> {
    let n = op.n;
    let c = match Currents::new(op, window.max(serre_window)) {
        Ok(c) => c,
        Err(e) => return vec![Check::fail(format!("currents.extract.n{n}"), "extraction of currents from the Gauss factors", e.to_string())],
    };
    let mut out = vec![check_odd_modes(&c), check_h_series(&c), check_hh(&c), check_xpxm_shift_invariance(&c, window)];
    out.extend(check_hx(&c, window));
    out.extend(check_xx(&c, window));
    out.extend(check_xpxm(&c, window));
    out.extend(check_serre(&c, serre_window));
    out.extend(check_weighted_serre(&c, serre_window, CubicWeight::Literal));
    out.extend(check_weighted_serre(&c, serre_window, CubicWeight::Signed));
    out
}
