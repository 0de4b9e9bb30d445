//! The homogeneous lattice `L0 = {a : Σ a_i = 0, Σ a_i s_i ≡ 0 mod n}`.
//!
//! `L0` is stored through its first `r - 1` coordinates (the last one is
//! minus their sum), as the rows of an upper-triangular Hermite normal form.
//! Two networks have the same `L0` iff their bases are equal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::CirculantNetwork;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomogeneousLattice {
    r: usize,
    n: u64,
    /// `Σ a_i s_i` only matters mod `n`, so the reduced steps are kept.
    steps: Vec<u64>,
    basis: Vec<Vec<i64>>,
}

impl PartialEq for HomogeneousLattice {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.basis == other.basis
    }
}

impl Eq for HomogeneousLattice {}

impl HomogeneousLattice {
    pub fn of(net: &CirculantNetwork) -> Result<Self> {
        let r = net.arity();
        let n = net.n() as i128;
        let m = r - 1;
        let last = *net.steps().last().unwrap() as i128;
        // x in Z^m lies in the projection of L0 iff Σ x_i (s_i - s_r) ≡ 0 mod n,
        // i.e. (x, y) is in the kernel of [d_1 .. d_m n] for some y.
        let mut row: Vec<i128> = net.steps()[..m]
            .iter()
            .map(|&s| (s as i128 - last).rem_euclid(n))
            .chain(std::iter::once(n))
            .collect();
        let mut cols: Vec<Vec<i128>> = (0..=m)
            .map(|j| (0..=m).map(|i| (i == j) as i128).collect())
            .collect();
        loop {
            let nonzero: Vec<usize> = (0..=m).filter(|&j| row[j] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&j| row[j].abs()).unwrap();
            for &q in &nonzero {
                if q == p {
                    continue;
                }
                let k = row[q] / row[p];
                row[q] -= k * row[p];
                let (cp, cq) = if p < q {
                    let (a, b) = cols.split_at_mut(q);
                    (&a[p], &mut b[0])
                } else {
                    let (a, b) = cols.split_at_mut(p);
                    (&b[0], &mut a[q])
                };
                for (x, y) in cq.iter_mut().zip(cp.iter()) {
                    *x -= k * y;
                }
            }
        }
        let gens: Vec<Vec<i128>> = (0..=m)
            .filter(|&j| row[j] == 0)
            .map(|j| cols[j][..m].to_vec())
            .collect();
        let hnf = hermite_normal_form(gens, m)?;
        let basis = hnf
            .into_iter()
            .map(|x| {
                let mut v: Vec<i64> = x
                    .iter()
                    .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow("lattice basis")))
                    .collect::<Result<_>>()?;
                let s: i64 = v.iter().sum();
                v.push(-s);
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomogeneousLattice { r, n: net.n(), steps: net.steps().to_vec(), basis })
    }

    pub fn arity(&self) -> usize {
        self.r
    }

    /// Canonical basis of `r - 1` vectors in `Z^r`.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Index of `L0` in the sum-zero lattice, the product of the pivots.
    pub fn index(&self) -> u64 {
        (0..self.basis.len()).map(|i| self.basis[i][i] as u64).product()
    }

    pub fn contains(&self, a: &[i64]) -> Result<bool> {
        if a.len() != self.r {
            return Err(Error::ArityMismatch { expected: self.r, found: a.len() });
        }
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &[i64]) -> bool {
        a.iter().sum::<i64>() == 0 && self.residue(a) == 0
    }

    /// Every non-zero element with `‖a‖₁ <= bound` whose coordinates obey the
    /// sign constraints, sorted lexicographically.
    pub fn points_bounded(&self, signs: &[SignConstraint], bound: u64) -> Vec<Vec<i64>> {
        assert_eq!(signs.len(), self.r);
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.r];
        // Sum-zero vectors have even norm: the positive part carries half.
        let half = (bound / 2) as i64;
        enumerate_signed(signs, 0, half, half, &mut cur, &mut |v| {
            if v.iter().any(|&x| x != 0) && self.contains_unchecked(v) {
                out.push(v.to_vec());
            }
        });
        out.sort();
        out
    }

    /// The modulus `n` of the source network.
    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// The steps of the source network, reduced mod `n`.
    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    /// `Σ a_i s_i mod n`.
    pub fn residue(&self, a: &[i64]) -> u64 {
        let v: i128 = a
            .iter()
            .zip(&self.steps)
            .map(|(&x, &s)| x as i128 * s as i128)
            .sum();
        v.rem_euclid(self.n as i128) as u64
    }

    /// Smallest `m >= 1` with `m * d` in `L0`, for a sum-zero direction `d`.
    pub fn line_multiple(&self, d: &[i64]) -> u64 {
        self.n / crate::arith::gcd_u64(self.n, self.residue(d))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConstraint {
    NonNegative,
    NonPositive,
    Free,
}

/// Enumerates sum-zero vectors whose positive coordinates sum to at most
/// `pos_left` overall and whose negative parts match.
fn enumerate_signed(
    signs: &[SignConstraint],
    i: usize,
    pos_left: i64,
    neg_left: i64,
    cur: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]),
) {
    if i == signs.len() {
        if cur.iter().sum::<i64>() == 0 {
            f(cur);
        }
        return;
    }
    let (lo, hi) = match signs[i] {
        SignConstraint::NonNegative => (0, pos_left),
        SignConstraint::NonPositive => (-neg_left, 0),
        SignConstraint::Free => (-neg_left, pos_left),
    };
    for x in lo..=hi {
        cur[i] = x;
        let (p, q) = if x >= 0 { (pos_left - x, neg_left) } else { (pos_left, neg_left + x) };
        enumerate_signed(signs, i + 1, p, q, cur, f);
    }
    cur[i] = 0;
}

/// Row-style Hermite normal form of a full-rank generating set of `Z^m`
/// sublattice: upper triangular, positive pivots, entries above each pivot
/// reduced into `[0, pivot)`.
pub(crate) fn hermite_normal_form(mut rows: Vec<Vec<i128>>, m: usize) -> Result<Vec<Vec<i128>>> {
    for c in 0..m {
        loop {
            let nonzero: Vec<usize> = (c..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.is_empty() {
                return Err(Error::Inconsistent("lattice is not full rank".into()));
            }
            if nonzero.len() == 1 {
                rows.swap(c, nonzero[0]);
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            let pivot = rows[p].clone();
            for &q in &nonzero {
                if q != p {
                    let k = rows[q][c] / pivot[c];
                    for (x, y) in rows[q].iter_mut().zip(&pivot) {
                        *x -= k * y;
                    }
                }
            }
        }
        if rows[c][c] < 0 {
            rows[c].iter_mut().for_each(|x| *x = -*x);
        }
        let pivot = rows[c].clone();
        for row in rows.iter_mut().take(c) {
            let k = row[c].div_euclid(pivot[c]);
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= k * y;
            }
        }
    }
    rows.truncate(m);
    Ok(rows)
}
