//! Checks against independent test-side computations: numerically converging
//! products, hand-written long division, commutative determinant formulas,
//! and identities that must be rejected.

use num_traits::Signed;
use twisted_rtt::currents::Currents;
use twisted_rtt::exact_algebra::{decide, rat, BigRat, DegreeBound, Env, Identity, Mode, RatFunc, Scalar, Var};
use twisted_rtt::gauss::{gauss_quasideterminant, quasideterminant, BlockMatrix, EvalParam, LOperator};
use twisted_rtt::qseries::{f_series, Sign};
use twisted_rtt::rmatrix::rbar_at;
use twisted_rtt::tensor::{Matrix, TensorOp};

// ---------------------------------------------------------------------------
// Truncated power series over the rationals (test-side only).

/// Coefficients `c_0..=c_order` of a power series in `u`.
type Series = Vec<BigRat>;

fn series_mul(a: &Series, b: &Series) -> Series {
    let order = a.len() - 1;
    let mut out = vec![BigRat::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1 - c u`.
fn linear(c: &BigRat, order: usize) -> Series {
    let mut s = vec![BigRat::zero(); order + 1];
    s[0] = BigRat::one();
    if order >= 1 {
        s[1] = -c.clone();
    }
    s
}

/// `1 / (1 - c u) = Σ c^k u^k`.
fn geometric(c: &BigRat, order: usize) -> Series {
    let mut s = Vec::with_capacity(order + 1);
    let mut p = BigRat::one();
    for _ in 0..=order {
        s.push(p.clone());
        p *= c;
    }
    s
}

fn pow(x: &BigRat, k: i32) -> BigRat {
    if k >= 0 {
        (0..k).fold(BigRat::one(), |acc, _| acc * x)
    } else {
        BigRat::one() / pow(x, -k)
    }
}

/// `f(u)` at a numeric `q` from the defining infinite product, cut after
/// `factors` factors; the product converges like `ξ^{2r}`.
fn f_by_product(n: usize, q: &BigRat, factors: usize, order: usize) -> Series {
    let xi = -pow(q, -2 * n as i32);
    let q2 = pow(q, 2);
    let qm2 = pow(q, -2);
    let mut acc = vec![BigRat::zero(); order + 1];
    acc[0] = &xi * &qm2;
    for r in 0..factors as i32 {
        let x = |e: i32| pow(&xi, e);
        for c in [x(2 * r), &qm2 * x(2 * r + 1), &q2 * x(2 * r + 1), x(2 * r + 2)] {
            acc = series_mul(&acc, &linear(&c, order));
        }
        for c in [x(2 * r + 1), x(2 * r + 1), &q2 * x(2 * r + 2), &qm2 * x(2 * r)] {
            acc = series_mul(&acc, &geometric(&c, order));
        }
    }
    acc
}

#[test]
fn f_series_matches_the_converging_product_at_q_3() {
    let q = rat(3, 1);
    let order = 12;
    for n in [2usize, 3] {
        let exact = f_series(n, order as u32, Some(&q)).unwrap();
        // ξ^2 = 3^{-4n}; 12 factors leave a tail below 3^{-96 n + O(1)}.
        let approx = f_by_product(n, &q, 12, order);
        let tolerance = BigRat::new(1.into(), num_bigint::BigInt::from(10).pow(40));
        for (k, a) in approx.iter().enumerate() {
            let e = exact.coeff(k as i64).unwrap().as_constant().expect("numeric coefficient");
            assert!((&e - a).abs() < tolerance, "n = {n}, u^{k}: series {e} vs product {a}");
        }
    }
}

#[test]
fn f_series_symbolic_agrees_with_its_specialization() {
    let order = 4;
    let sym = f_series(2, order, None).unwrap();
    let at = f_series(2, order, Some(&rat(5, 3))).unwrap();
    for k in 0..=order as i64 {
        let s = sym.coeff(k).unwrap().eval(&[(Var::Q, rat(5, 3))]).unwrap();
        assert_eq!(s, at.coeff(k).unwrap().as_constant().unwrap(), "u^{k}");
    }
}

// ---------------------------------------------------------------------------
// Modes of currents by hand-written long division.

/// Univariate Laurent data of a rational function of `u` (numeric `q`):
/// `(numerator, denominator)` as coefficient vectors indexed by the power.
fn univariate(r: &RatFunc) -> (Vec<BigRat>, Vec<BigRat>) {
    let dense = |p: &twisted_rtt::exact_algebra::MPoly| {
        let deg = p.terms().iter().map(|(e, _)| e[1] as usize).max().unwrap_or(0);
        let mut v = vec![BigRat::zero(); deg + 1];
        for (e, c) in p.terms() {
            assert!(e[0] == 0 && e[2..].iter().all(|&x| x == 0), "only u may remain");
            v[e[1] as usize] += c;
        }
        v
    };
    (dense(&r.num()), dense(&r.den()))
}

/// Coefficients of `u^{lo}, …, u^{lo+len-1}` of `num/den` expanded at `u = 0`
/// (`lo` the order of the pole at 0), by long division from the lowest term.
fn expand_at_zero(num: &[BigRat], den: &[BigRat], len: usize) -> (i64, Vec<BigRat>) {
    let dlo = den.iter().position(|c| !c.is_zero()).unwrap();
    let nlo = num.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let lo = nlo as i64 - dlo as i64;
    let d: Vec<BigRat> = den[dlo..].to_vec();
    let mut rem: Vec<BigRat> = num[nlo..].to_vec();
    rem.resize(len + d.len(), BigRat::zero());
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let c = &rem[k] / &d[0];
        for (j, dj) in d.iter().enumerate() {
            if k + j < rem.len() {
                rem[k + j] = &rem[k + j] - &c * dj;
            }
        }
        out.push(c);
    }
    (lo, out)
}

/// Coefficient of `u^p` in the expansion of `num/den` at 0 (`AtZero`) or at
/// infinity (by reversing the coefficient lists, `u ↦ 1/u`).
fn coeff(num: &[BigRat], den: &[BigRat], at_zero: bool, p: i64) -> BigRat {
    if at_zero {
        let (lo, c) = expand_at_zero(num, den, 40);
        if p < lo {
            return BigRat::zero();
        }
        c[(p - lo) as usize].clone()
    } else {
        // num(u)/den(u) = u^{deg num - deg den} · rev(num)(1/u) / rev(den)(1/u)
        let rn: Vec<BigRat> = num.iter().rev().cloned().collect();
        let rd: Vec<BigRat> = den.iter().rev().cloned().collect();
        let shift = (num.len() as i64 - 1) - (den.len() as i64 - 1);
        let (lo, c) = expand_at_zero(&rn, &rd, 40);
        // u^p = u^shift · t^k with t = 1/u, so k = shift - p.
        let k = shift - p;
        if k < lo {
            return BigRat::zero();
        }
        c[(k - lo) as usize].clone()
    }
}

#[test]
fn current_modes_match_long_division_at_q_3_2() {
    let q = rat(3, 2);
    let n = 2;
    let op = LOperator::new(n, EvalParam::Symbolic).unwrap();
    let currents = Currents::new(&op, 3).unwrap();
    let l = op.at(&RatFunc::var(Var::U), &Env::symbolic()).unwrap();
    let g = gauss_quasideterminant(&l).unwrap();
    // (sign, node, Gauss entry, mode shift from the factor u^{±1} at node n)
    let cases = [
        (Sign::Plus, 1usize, g.e[&(0, 1)].clone(), 0i64),
        (Sign::Minus, 1, g.f[&(1, 0)].clone(), 0),
        (Sign::Plus, 2, g.e[&(1, 2)].clone(), 1),
        (Sign::Minus, 2, g.f[&(2, 1)].clone(), -1),
    ];
    for (sign, node, entry, shift) in cases {
        for m in -3..=3i64 {
            let mode = currents.x(sign, node, m).unwrap();
            for r in 0..entry.rows() {
                for c in 0..entry.cols() {
                    let x = entry.get(r, c).substitute_value(Var::Q, &q).unwrap();
                    let expect = if x.is_zero() {
                        BigRat::zero()
                    } else {
                        let (num, den) = univariate(&x);
                        // X_{m} is the u^{-m} coefficient of u^{shift} x(u): u^{-m-shift} of x.
                        let p = -m - shift;
                        coeff(&num, &den, true, p) - coeff(&num, &den, false, p)
                    };
                    let got = mode.get(r, c).eval(&[(Var::Q, q.clone())]).unwrap();
                    assert_eq!(got, expect, "X^{}_({node},{m}) entry ({r},{c})", sign.symbol());
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Quasideterminants.

fn scalar_blocks(rows: &[Vec<i64>]) -> BlockMatrix<BigRat> {
    BlockMatrix::from_fn(rows.len(), 1, |i, j| Matrix::scalar(1, &rat(rows[i][j], 1)))
}

#[test]
fn quasideterminant_of_a_single_entry_is_the_entry() {
    let m = scalar_blocks(&[vec![7]]);
    assert_eq!(quasideterminant(&m, &[0], &[0], 0, 0).unwrap(), Matrix::scalar(1, &rat(7, 1)));
}

#[test]
fn commutative_two_by_two_quasideterminants_are_ratios_of_determinants() {
    let a = [[3i64, 5], [2, 7]];
    let m = scalar_blocks(&[a[0].to_vec(), a[1].to_vec()]);
    let det = rat(a[0][0] * a[1][1] - a[0][1] * a[1][0], 1);
    // |A|_ij = (-1)^{i+j} det A / det A^{ij}
    for i in 0..2 {
        for j in 0..2 {
            let minor = rat(a[1 - i][1 - j], 1);
            let sign = if (i + j) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            let expect = &sign * &det / minor;
            let got = quasideterminant(&m, &[0, 1], &[0, 1], i, j).unwrap();
            assert_eq!(got, Matrix::scalar(1, &expect), "({i},{j})");
        }
    }
}

#[test]
fn sylvester_identity_on_matrix_entries() {
    // A 3×3 block matrix with non-commuting 2×2 entries.
    let entries = [
        [[2, 1, 0, 1], [1, 3, 1, 0], [0, 1, 4, 1]],
        [[1, 0, 2, 1], [3, 1, 1, 2], [1, 1, 0, 3]],
        [[0, 2, 1, 1], [1, 1, 2, 0], [5, 1, 1, 2]],
    ];
    let block = |e: &[i64; 4]| Matrix::from_fn(2, 2, |r, c| rat(e[2 * r + c], 1));
    let a = BlockMatrix::from_fn(3, 2, |i, j| block(&entries[i][j]));
    // B_pq = |A_{{0,p},{0,q}}|_pq, p, q ∈ {1, 2}; then |A|_pq = |B|_pq.
    let b = BlockMatrix::try_from_fn(2, 2, |p, qq| quasideterminant(&a, &[0, p + 1], &[0, qq + 1], p + 1, qq + 1)).unwrap();
    for p in 0..2 {
        for qq in 0..2 {
            let lhs = quasideterminant(&a, &[0, 1, 2], &[0, 1, 2], p + 1, qq + 1).unwrap();
            let rhs = quasideterminant(&b, &[0, 1], &[0, 1], p, qq).unwrap();
            assert_eq!(lhs, rhs, "({},{})", p + 2, qq + 2);
        }
    }
}

// ---------------------------------------------------------------------------
// Negative controls: false identities are rejected in both modes.

/// `R12(u) R13(uv) R23(v) = R23(u) R13(uv) R12(v)` at rank 1, which is false.
struct SwappedYangBaxter;

impl Identity for SwappedYangBaxter {
    fn sides<F: Scalar>(&self, env: &Env<F>) -> twisted_rtt::Result<(Vec<F>, Vec<F>)> {
        let (u, v, q) = (env.get(Var::U), env.get(Var::V), env.q());
        let r = |x: &F| rbar_at(1, x, q);
        let at = |x: &F, pos: [usize; 2]| -> twisted_rtt::Result<TensorOp<F>> { r(x)?.embed(&pos, 3) };
        let uv = u.mul(v);
        let lhs = at(u, [1, 2])?.mul(&at(&uv, [1, 3])?).mul(&at(v, [2, 3])?);
        let rhs = at(u, [2, 3])?.mul(&at(&uv, [1, 3])?).mul(&at(v, [1, 2])?);
        Ok((lhs.mat.into_data(), rhs.mat.into_data()))
    }

    fn bound(&self) -> twisted_rtt::Result<DegreeBound> {
        let (l, r) = self.sides(&Env::symbolic())?;
        Ok(l.iter().zip(&r).fold(DegreeBound::new(), |b, (x, y)| {
            let c = DegreeBound::of_cross_product(x, y);
            let mut out = b.clone();
            for (v, d) in c.vars() {
                out.set(v, out.get(v).max(d));
            }
            out
        }))
    }
}

#[test]
fn a_false_yang_baxter_variant_is_rejected_in_both_modes() {
    for mode in [Mode::Symbolic, Mode::Grid] {
        let verdict = decide(&SwappedYangBaxter, mode).unwrap();
        assert!(!verdict.holds, "{mode}");
        assert!(verdict.counterexample.is_some(), "{mode}");
    }
}

#[test]
fn perturbed_gauss_product_is_detected() {
    let op = LOperator::new(2, EvalParam::Symbolic).unwrap();
    let l = op.at(&RatFunc::var(Var::U), &Env::symbolic()).unwrap();
    let mut g = gauss_quasideterminant(&l).unwrap();
    assert_eq!(g.product(), l);
    let h = &mut g.h[1];
    let x = h.get(0, 0).add(&RatFunc::q_pow(1));
    h.set(0, 0, x);
    assert_ne!(g.product(), l);
}
