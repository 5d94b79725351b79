//! Rank-indexed combinatorial data of `A_{2n-1}^{(2)}`: the folded Cartan
//! matrix of type `C_n`, symmetrizers, the inverse symmetrized Cartan matrix,
//! the `Z^k` matrices, the sign map `o`, and the index helpers `i ↦ i'` and
//! `i ↦ ī` used by the R-matrix.
//!
//! Node and vector indices are 1-based throughout the public API, matching
//! the mathematical notation: nodes run over `1..=n`, basis vectors of
//! `C^{2n}` over `1..=2n`.

use crate::error::{AlgebraError, Result};
use crate::exact_algebra::{q_number_in, BigRat, RatFunc};
use crate::report::Check;
use num_traits::{One, Zero};
use serde::Serialize;

/// Combinatorial data for rank `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartanDatum {
    /// Rank.
    pub n: usize,
    /// Dimension `2n` of the vector representation.
    pub dim: usize,
    /// Folded Cartan matrix (type `C_n`), row-major, 0-based storage.
    pub a: Vec<Vec<i64>>,
    /// Symmetrizers `(1, …, 1, 2)`.
    pub d: Vec<i64>,
    /// Inverse of the symmetrized Cartan matrix `diag(d)·A`.
    #[serde(serialize_with = "serialize_rat_matrix")]
    pub btilde: Vec<Vec<BigRat>>,
    /// Signs `o(i) = (-1)^{n+1-i}`.
    pub o: Vec<i64>,
    /// `ī` for `i = 1..=2n`: `(n-1, …, 0, 0, …, -n+1)`.
    pub bar: Vec<i64>,
}

fn serialize_rat_matrix<S: serde::Serializer>(m: &[Vec<BigRat>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    serde::Serialize::serialize(&text, s)
}

/// Entry of the `sl_m` Cartan matrix (tridiagonal), 1-based.
fn sl_cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

impl CartanDatum {
    /// Builds the datum for rank `n ≥ 1` by folding the `sl_{2n}` Cartan
    /// matrix under the diagram involution `σ(i) = 2n - i`.
    pub fn new(n: usize) -> Result<CartanDatum> {
        if n == 0 {
            return Err(AlgebraError::InvalidArgument("rank must be at least 1".into()));
        }
        let sigma = |i: usize| 2 * n - i;
        let mut a = vec![vec![0i64; n]; n];
        for i in 1..=n {
            for j in 1..=n {
                let num = sl_cartan(i, j) + sl_cartan(sigma(i), j);
                let den = sl_cartan(i, i) + sl_cartan(sigma(i), i);
                a[i - 1][j - 1] = 2 * num / den;
            }
        }
        let mut d = vec![1i64; n];
        d[n - 1] = 2;
        let sym: Vec<Vec<BigRat>> = (0..n)
            .map(|i| (0..n).map(|j| BigRat::from_integer((d[i] * a[i][j]).into())).collect())
            .collect();
        let btilde = invert_rational(&sym).expect("the symmetrized Cartan matrix is invertible");
        let o = (1..=n).map(|i| if (n + 1 - i).is_multiple_of(2) { 1 } else { -1 }).collect();
        let mut bar: Vec<i64> = (0..n).map(|k| (n - 1 - k) as i64).collect();
        bar.extend((0..n).map(|k| -(k as i64)));
        Ok(CartanDatum { n, dim: 2 * n, a, d, btilde, o, bar })
    }

    /// `A_{ij}` for nodes `1 ≤ i, j ≤ n`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    /// `d_i`.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    /// `d_{ij} = max(d_i, d_j)`.
    pub fn d_ij(&self, i: usize, j: usize) -> i64 {
        self.d(i).max(self.d(j))
    }

    /// `o(i)`.
    pub fn o(&self, i: usize) -> i64 {
        self.o[i - 1]
    }

    /// `ī` for a vector index `1 ≤ i ≤ 2n`.
    pub fn bar(&self, i: usize) -> i64 {
        self.bar[i - 1]
    }

    /// `i' = 2n + 1 - i`.
    pub fn prime(&self, i: usize) -> usize {
        self.dim + 1 - i
    }

    /// `ξ = -q^{-2n}`.
    pub fn xi(&self) -> RatFunc {
        xi(self.n)
    }

    /// `q_i = q^{d_i}`.
    pub fn q_i(&self, i: usize) -> RatFunc {
        RatFunc::q_pow(self.d(i) as i32)
    }

    /// The pairing `(ε_i, α_j)` in the symplectic weight convention:
    /// `δ_{ij} - δ_{i,j+1}` for `j < n` and `2δ_{in}` for `j = n`.
    pub fn eps_pairing(&self, i: usize, j: usize) -> i64 {
        if j < self.n {
            (i == j) as i64 - (i == j + 1) as i64
        } else {
            2 * (i == self.n) as i64
        }
    }
}

/// `ξ^{[k]} = -q^{-2k}`, the crossing parameter of the rank-`k` R-matrix.
pub fn xi(k: usize) -> RatFunc {
    RatFunc::q_pow(-2 * k as i32).neg()
}

/// Exact inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn invert_rational(m: &[Vec<BigRat>]) -> Option<Vec<Vec<BigRat>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRat>> = m.to_vec();
    let mut inv: Vec<Vec<BigRat>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for k in 0..n {
            a[col][k] = &a[col][k] / &p;
            inv[col][k] = &inv[col][k] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..n {
                    let t = &f * &a[col][k];
                    a[r][k] -= t;
                    let t = &f * &inv[col][k];
                    inv[r][k] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// The matrix `Z^k` over `Q(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZMatrix {
    pub n: usize,
    pub k: u32,
    /// Entries, row-major, 0-based storage.
    pub entries: Vec<Vec<RatFunc>>,
}

impl ZMatrix {
    /// `z^k_{ij}` for nodes `1 ≤ i, j ≤ n`.
    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i - 1][j - 1]
    }
}

/// Builds `Z^k`.  The four-case formula defines the entries with `i ≥ j`;
/// entries with `i < j` follow from the symmetry `z_{ij} d_j = z_{ji} d_i`.
pub fn zmatrix(n: usize, k: u32) -> Result<ZMatrix> {
    if n == 0 || k == 0 {
        return Err(AlgebraError::InvalidArgument("zmatrix requires n ≥ 1 and k ≥ 1".into()));
    }
    let c = CartanDatum::new(n)?;
    let ki = k as i32;
    let base = |e: i32| RatFunc::q_pow(e);
    let qn = |m: i64, b: i32| q_number_in(m, &base(b));
    let lower = |i: usize, j: usize| -> Result<RatFunc> {
        let (ni, ii, jj) = (n as i64, i as i64, j as i64);
        if k % 2 == 1 {
            return qn(ni - ii, ki)?.mul(&qn(jj, ki)?).div(&qn(ni, ki)?);
        }
        let den = qn(2, n as i32 * ki)?;
        if i == n && j == n {
            return qn(ni, ki)?.div(&den);
        }
        if i == n {
            let sign = if (k / 2).is_multiple_of(2) { 2 } else { -2 };
            return qn(jj, ki)?.scale_int(sign).div(&den);
        }
        qn(2, (n - i) as i32 * ki)?.mul(&qn(jj, ki)?).div(&den)
    };
    let mut entries = vec![vec![RatFunc::zero(); n]; n];
    for i in 1..=n {
        for j in 1..=i {
            entries[i - 1][j - 1] = lower(i, j)?;
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            // z_ij = z_ji d_i / d_j
            let r = RatFunc::ratio(c.d(i), c.d(j))?;
            entries[i - 1][j - 1] = entries[j - 1][i - 1].mul(&r);
        }
    }
    Ok(ZMatrix { n, k, entries })
}

/// The `C_n` Cartan matrix written down directly (not by folding):
/// tridiagonal with `A_{n-1,n} = -2`.
fn standard_cn(n: usize, i: usize, j: usize) -> i64 {
    if i == n - 1 && j == n {
        -2
    } else {
        sl_cartan(i, j)
    }
}

/// The invariants of the combinatorial data of rank `n`, and the extension
/// symmetry of `Z^k` for `k = 1..=6`.
pub fn check_cartan(n: usize) -> Vec<Check> {
    let c = match CartanDatum::new(n) {
        Ok(c) => c,
        Err(e) => return vec![Check::fail(format!("cartan.build.n{n}"), "construction of the Cartan datum", e.to_string())],
    };
    let nodes = || (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j)));
    let mut out = Vec::new();

    let bad = nodes().find(|&(i, j)| c.d(i) * c.a(i, j) != c.d(j) * c.a(j, i));
    out.push(Check::from_outcome(format!("cartan.symmetrizable.n{n}"), "d_i A_ij = d_j A_ji", bad.is_none(), || format!("(i,j) = {bad:?}")));

    let bad = nodes().find(|&(i, j)| c.a(i, j) != standard_cn(n, i, j));
    let detail = "the folded sl_2n Cartan matrix is the C_n Cartan matrix";
    out.push(Check::from_outcome(format!("cartan.folding.n{n}"), detail, bad.is_none(), || format!("(i,j) = {bad:?}")));

    let bad = nodes().find(|&(i, j)| {
        let s: BigRat = (1..=n).map(|k| &c.btilde[i - 1][k - 1] * BigRat::from_integer((c.d(k) * c.a(k, j)).into())).sum();
        s != if i == j { BigRat::one() } else { BigRat::zero() }
    });
    out.push(Check::from_outcome(format!("cartan.btilde.n{n}"), "Btilde · diag(d) A = 1", bad.is_none(), || format!("entry {bad:?}")));

    let bad = nodes().find(|&(i, j)| c.a(i, j) < 0 && c.o(i) != -c.o(j));
    let ok = bad.is_none() && c.o(n) == -1;
    out.push(Check::from_outcome(format!("cartan.sign_map.n{n}"), "o(i) = -o(j) for A_ij < 0, o(n) = -1", ok, || format!("(i,j) = {bad:?}, o(n) = {}", c.o(n))));

    let bad = (1..=c.dim).find(|&i| c.prime(c.prime(i)) != i || c.bar(c.prime(i)) != -c.bar(i));
    out.push(Check::from_outcome(format!("cartan.bar_prime.n{n}"), "i'' = i and bar(i') = -bar(i)", bad.is_none(), || format!("i = {bad:?}")));

    for k in 1..=6u32 {
        let id = format!("cartan.zmatrix_symmetry.k{k}.n{n}");
        let what = format!("z^{k}_ij d_j = z^{k}_ji d_i");
        out.push(match zmatrix(n, k) {
            Err(e) => Check::fail(id, what, e.to_string()),
            Ok(z) => {
                let bad = nodes().find(|&(i, j)| z.get(i, j).scale_int(c.d(j)) != z.get(j, i).scale_int(c.d(i)));
                Check::from_outcome(id, what, bad.is_none(), || format!("(i,j) = {bad:?}"))
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;

    #[test]
    fn rank_two_datum() {
        let c = CartanDatum::new(2).unwrap();
        assert_eq!(c.a, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(c.d, vec![1, 2]);
        assert_eq!(c.btilde, vec![vec![rat(1, 1), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(c.o, vec![1, -1]);
        assert_eq!(c.bar, vec![1, 0, 0, -1]);
        assert_eq!(c.xi().to_string(), "-q^-4");
    }

    #[test]
    fn rank_three_bar() {
        let c = CartanDatum::new(3).unwrap();
        assert_eq!(c.bar, vec![2, 1, 0, 0, -1, -2]);
        assert_eq!(c.prime(1), 6);
    }

    #[test]
    fn zmatrix_examples() {
        let z = zmatrix(2, 1).unwrap();
        assert_eq!(z.get(1, 1), &RatFunc::one().div(&q_number_in(2, &RatFunc::q_pow(1)).unwrap()).unwrap());
        let z = zmatrix(2, 2).unwrap();
        let q4 = RatFunc::q_pow(4);
        let two_q4 = q_number_in(2, &q4).unwrap();
        assert_eq!(z.get(2, 2), &q_number_in(2, &RatFunc::q_pow(2)).unwrap().div(&two_q4).unwrap());
        assert_eq!(z.get(2, 1), &RatFunc::from_int(-2).div(&two_q4).unwrap());
    }

    #[test]
    fn cartan_suite_passes() {
        for n in 1..=4 {
            assert!(check_cartan(n).iter().all(|c| c.passed()), "n = {n}");
        }
    }
}
