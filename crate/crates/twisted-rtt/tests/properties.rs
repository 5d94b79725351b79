//! Property-based tests of the algebraic invariants: field laws of the exact
//! rational functions, agreement of the two identity-testing modes, series
//! arithmetic, tensor embeddings, the combinatorial data, and R-matrix
//! identities at random rational points.

use proptest::prelude::*;
use twisted_rtt::cartan::{check_cartan, zmatrix, CartanDatum};
use twisted_rtt::exact_algebra::{identity_holds, rat, BigRat, DegreeBound, Mode, RatFunc, Scalar, Var};
use twisted_rtt::qseries::{expand, Direction};
use twisted_rtt::report::{Check, Report};
use twisted_rtt::rmatrix::rbar_at;
use twisted_rtt::tensor::{Matrix, TensorOp};

/// A Laurent polynomial in `q` and polynomial in `u` and `v` from terms
/// `(coefficient, q-exponent, u-exponent, v-exponent)`.
fn poly(terms: &[(i64, i32, i32, i32)]) -> RatFunc {
    terms.iter().fold(RatFunc::zero(), |acc, &(c, eq, eu, ev)| {
        acc.add(&RatFunc::from_int(c).mul(&RatFunc::q_pow(eq)).mul(&RatFunc::var_pow(Var::U, eu)).mul(&RatFunc::var_pow(Var::V, ev)))
    })
}

fn terms() -> impl Strategy<Value = Vec<(i64, i32, i32, i32)>> {
    prop::collection::vec((-4i64..=4, -2i32..=2, 0i32..=2, 0i32..=1), 1..4)
}

fn nonzero_poly() -> impl Strategy<Value = RatFunc> {
    terms().prop_map(|t| poly(&t)).prop_filter("non-zero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (terms(), nonzero_poly()).prop_map(|(n, d)| poly(&n).div(&d).unwrap())
}

fn small_rat() -> impl Strategy<Value = BigRat> {
    (1i64..=9, 1i64..=5).prop_map(|(a, b)| rat(a, b) + rat(1, 7))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), q in small_rat(), u in small_rat(), v in small_rat()) {
        let p = [(Var::Q, q), (Var::U, u), (Var::V, v)];
        if let (Ok(x), Ok(y)) = (a.eval(&p), b.eval(&p)) {
            prop_assert_eq!(a.mul(&b).eval(&p).unwrap(), &x * &y);
            prop_assert_eq!(a.add(&b).eval(&p).unwrap(), &x + &y);
        }
    }

    #[test]
    fn series_expansion_respects_products(a in ratfunc(), b in ratfunc(), at_zero in any::<bool>()) {
        let dir = if at_zero { Direction::AtZero } else { Direction::AtInfinity };
        let hi = 6;
        let (sa, sb, sab) = (expand(&a, Var::U, dir, hi), expand(&b, Var::U, dir, hi), expand(&a.mul(&b), Var::U, dir, hi));
        prop_assume!(sa.is_ok() && sb.is_ok() && sab.is_ok());
        let (sa, sb, sab) = (sa.unwrap(), sb.unwrap(), sab.unwrap());
        let prod = sa.mul(&sb).unwrap();
        for k in sab.lo().max(prod.lo())..=sab.hi().min(prod.hi()) {
            prop_assert_eq!(prod.coeff(k).unwrap(), sab.coeff(k).unwrap(), "t^{}", k);
        }
        if !a.is_zero() {
            let inv = sa.inverse().unwrap();
            let one = sa.mul(&inv).unwrap();
            for k in one.lo()..=one.hi() {
                let expect = if k == 0 { RatFunc::one() } else { RatFunc::zero() };
                prop_assert_eq!(one.coeff(k).unwrap(), expect);
            }
        }
    }

    #[test]
    fn flip_moves_tensor_factors(entries in prop::collection::vec(-3i64..=3, 16)) {
        let n = 2;
        let x = Matrix::from_fn(4, 4, |r, c| rat(entries[4 * r + c], 1));
        let op = TensorOp::new(n, 1, x).unwrap();
        let p: TensorOp<BigRat> = TensorOp::flip(n);
        let first = op.embed(&[1], 2).unwrap();
        let second = op.embed(&[2], 2).unwrap();
        prop_assert_eq!(p.mul(&first).mul(&p), second);
        // The partial transpose is an involution.
        let t = first.partial_transpose(1).unwrap().partial_transpose(1).unwrap();
        prop_assert_eq!(t, first);
    }

    #[test]
    fn rbar_unitarity_at_random_points(u in small_rat(), q in small_rat()) {
        for n in 1..=2usize {
            let r = rbar_at(n, &u, &q);
            let r_inv = rbar_at(n, &u.inv().unwrap(), &q);
            prop_assume!(r.is_ok() && r_inv.is_ok());
            let (r, r_inv) = (r.unwrap(), r_inv.unwrap());
            // R12(u) R21(1/u) = 1 with R21 = P R12 P.
            let p: TensorOp<BigRat> = TensorOp::flip(n);
            let r21 = p.mul(&r_inv).mul(&p);
            prop_assert!(r.mul(&r21).mat.is_identity(), "n = {}", n);
        }
    }

    #[test]
    fn report_order_is_independent_of_input_order(ids in prop::collection::vec("[a-z]{1,3}\\.[a-z0-9]{1,3}", 1..12)) {
        let checks: Vec<Check> = ids.iter().map(|id| Check::pass(id.clone(), "x")).collect();
        let mut reversed = checks.clone();
        reversed.reverse();
        let a = Report::new("s", serde_json::json!({}), checks);
        let b = Report::new("s", serde_json::json!({}), reversed);
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert!(a.checks.windows(2).all(|w| w[0].id <= w[1].id));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn symbolic_and_grid_modes_agree(a in ratfunc(), b in ratfunc(), perturb in terms(), make_false in any::<bool>()) {
        let lhs = a.mul(&b);
        let delta = poly(&perturb);
        let rhs = if make_false { b.mul(&a).add(&delta) } else { b.mul(&a) };
        let expected = !make_false || delta.is_zero();
        let bound = DegreeBound::of_cross_product(&lhs, &rhs);
        let sym = identity_holds(&lhs, &rhs, Mode::Symbolic, &bound).unwrap();
        let grid = identity_holds(&lhs, &rhs, Mode::Grid, &bound).unwrap();
        prop_assert_eq!(sym.holds, expected);
        prop_assert_eq!(grid.holds, expected);
        if !expected {
            let p = grid.counterexample.unwrap();
            prop_assert_ne!(lhs.eval(&p).ok(), rhs.eval(&p).ok());
        }
    }
}

#[test]
fn cartan_invariants_for_small_ranks() {
    for n in 1..=4 {
        let c = CartanDatum::new(n).unwrap();
        for i in 1..=2 * n {
            assert_eq!(c.prime(c.prime(i)), i);
            assert_eq!(c.bar(c.prime(i)), -c.bar(i));
        }
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i));
                let expect = if j < n { (i == j) as i64 - (i == j + 1) as i64 } else { 2 * (i == n) as i64 };
                assert_eq!(c.eps_pairing(i, j), expect);
            }
        }
        for k in 1..=6 {
            let z = zmatrix(n, k).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(z.get(i, j).scale_int(c.d(j)), z.get(j, i).scale_int(c.d(i)), "n={n} k={k} ({i},{j})");
                }
            }
        }
        assert!(check_cartan(n).iter().all(Check::passed), "n = {n}");
    }
}
