//! Exact feasibility of homogeneous strict systems `c_i · x > 0`.
//!
//! Two independent routes: an angular sweep for the plane and strict
//! Fourier–Motzkin elimination for any dimension. Both return a rational
//! interior point or a minimal infeasible subset of the input rows.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{angle_cmp, cross2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point strictly inside every half-space.
    Feasible(Vec<BigRational>),
    /// Indices of a minimal infeasible subset, ascending.
    Infeasible(Vec<usize>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

fn primitive2(v: (i128, i128)) -> (i128, i128) {
    let g = v.0.gcd(&v.1);
    if g <= 1 {
        v
    } else {
        (v.0 / g, v.1 / g)
    }
}

/// Plane case: the open half-planes meet iff all normals fit in an open
/// half-plane, i.e. some circular gap between consecutive normals exceeds π.
pub fn sweep_2d(normals: &[(i128, i128)]) -> Feasibility {
    assert!(normals.iter().all(|&v| v != (0, 0)), "zero normal");
    let mut dirs: Vec<((i128, i128), usize)> = Vec::new();
    for (i, &v) in normals.iter().enumerate() {
        let p = primitive2(v);
        if !dirs.iter().any(|(d, _)| *d == p) {
            dirs.push((p, i));
        }
    }
    dirs.sort_by(|a, b| angle_cmp(a.0, b.0));
    let point = |v: (i128, i128)| {
        Feasibility::Feasible(vec![
            BigRational::from_integer(v.0.into()),
            BigRational::from_integer(v.1.into()),
        ])
    };
    match dirs.len() {
        0 => return point((1, 0)),
        1 => return point(dirs[0].0),
        _ => {}
    }
    for (d, i) in &dirs {
        if let Some((_, j)) = dirs.iter().find(|(e, _)| *e == (-d.0, -d.1)) {
            let mut pair = vec![*i, *j];
            pair.sort();
            return Feasibility::Infeasible(pair);
        }
    }
    let m = dirs.len();
    for i in 0..m {
        let end = dirs[i].0;
        let start = dirs[(i + 1) % m].0;
        if cross2(end, start) < 0 {
            // Every normal lies in the arc from `start` counter-clockwise to
            // `end`, which is shorter than π. J(start - end) is inside the
            // dual cone, J being the quarter turn.
            let d = (start.0 - end.0, start.1 - end.1);
            return point((-d.1, d.0));
        }
    }
    // All gaps are below π: the first normal, the last one less than π
    // ahead of it, and the next one positively span the plane.
    let first = dirs[0].0;
    let k = (1..m).rev().find(|&k| cross2(first, dirs[k].0) > 0).unwrap();
    let mut triple = vec![dirs[0].1, dirs[k].1, dirs[k + 1].1];
    triple.sort();
    Feasibility::Infeasible(triple)
}

fn normalize(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|x| x / &g).collect()
    }
}

/// Strict Fourier–Motzkin. Returns an interior point or `None`.
pub fn fourier_motzkin(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<BigRational>> {
    let first: BTreeSet<Vec<BigInt>> = rows.iter().cloned().map(normalize).collect();
    let mut stages: Vec<Vec<Vec<BigInt>>> = vec![first.into_iter().collect()];
    for k in 0..dim {
        let cur = stages.last().unwrap();
        if cur.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return None;
        }
        let mut next = BTreeSet::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in cur {
            match r[k].sign() {
                num_bigint::Sign::Plus => pos.push(r),
                num_bigint::Sign::Minus => neg.push(r),
                num_bigint::Sign::NoSign => {
                    next.insert(r.clone());
                }
            }
        }
        for p in &pos {
            for q in &neg {
                let a = -&q[k];
                let b = &p[k];
                let combo: Vec<BigInt> = p.iter().zip(q.iter()).map(|(x, y)| &a * x + b * y).collect();
                next.insert(normalize(combo));
            }
        }
        stages.push(next.into_iter().collect());
    }
    if stages.last().unwrap().iter().any(|r| r.iter().all(Zero::is_zero)) || !stages.last().unwrap().is_empty() {
        return None;
    }
    let mut x = vec![BigRational::zero(); dim];
    for k in (0..dim).rev() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for r in &stages[k] {
            if r[k].is_zero() {
                continue;
            }
            let rest: BigRational = ((k + 1)..dim)
                .map(|j| BigRational::from_integer(r[j].clone()) * &x[j])
                .fold(BigRational::zero(), |s, t| s + t);
            let bound = -rest / BigRational::from_integer(r[k].clone());
            if r[k].is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l: BigRational| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h: BigRational| h.min(bound)));
            }
        }
        let one = BigRational::one();
        x[k] = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l < h);
                (l + h) / BigRational::from_integer(2.into())
            }
            (Some(l), None) => l.floor() + one,
            (None, Some(h)) => h.ceil() - one,
            (None, None) => BigRational::zero(),
        };
    }
    Some(x)
}

/// Feasibility by elimination, with a deletion filter for a minimal
/// infeasible subset. Rows are dropped from the back first, so earlier rows
/// are preferred in the certificate.
pub fn solve_fm(rows: &[Vec<BigInt>], dim: usize) -> Feasibility {
    if let Some(x) = fourier_motzkin(rows, dim) {
        return Feasibility::Feasible(x);
    }
    let mut keep: Vec<usize> = (0..rows.len()).collect();
    for i in (0..rows.len()).rev() {
        let trial: Vec<Vec<BigInt>> = keep
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| rows[j].clone())
            .collect();
        if fourier_motzkin(&trial, dim).is_none() {
            keep.retain(|&j| j != i);
        }
    }
    Feasibility::Infeasible(keep)
}

/// Whether `x` satisfies every row strictly.
pub fn satisfies(rows: &[Vec<BigInt>], x: &[BigRational]) -> bool {
    rows.iter().all(|r| {
        r.iter()
            .zip(x)
            .map(|(c, v)| BigRational::from_integer(c.clone()) * v)
            .fold(BigRational::zero(), |s, t| s + t)
            .is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn to_rows(v: &[(i128, i128)]) -> Vec<Vec<BigInt>> {
        v.iter().map(|&(a, b)| vec![a.into(), b.into()]).collect()
    }

    #[test]
    fn sweep_cases() {
        let cases: Vec<(Vec<(i128, i128)>, bool)> = vec![
            (vec![], true),
            (vec![(1, 0)], true),
            (vec![(1, 0), (0, 1)], true),
            (vec![(1, 0), (-1, 0)], false),
            (vec![(1, 0), (-1, 1), (-1, -1)], false),
            (vec![(1, 0), (-1, 5), (1, 1), (2, 2)], true),
            (vec![(3, 1), (-1, 3), (-2, -1)], false),
            (vec![(1, -1), (1, 1), (0, 1), (-1, 2)], true),
        ];
        for (normals, feasible) in cases {
            let res = sweep_2d(&normals);
            assert_eq!(res.is_feasible(), feasible, "{normals:?}");
            match res {
                Feasibility::Feasible(x) => assert!(satisfies(&to_rows(&normals), &x)),
                Feasibility::Infeasible(idx) => {
                    let sub: Vec<_> = idx.iter().map(|&i| normals[i]).collect();
                    assert!(!sweep_2d(&sub).is_feasible());
                    for skip in 0..sub.len() {
                        let mut s = sub.clone();
                        s.remove(skip);
                        assert!(sweep_2d(&s).is_feasible());
                    }
                }
            }
        }
    }

    #[test]
    fn fm_agrees_with_sweep() {
        let sets: Vec<Vec<(i128, i128)>> = vec![
            vec![(1, 0), (0, 1), (-1, 2)],
            vec![(1, 0), (-1, 1), (-1, -1)],
            vec![(2, 1), (-1, 3), (1, -4)],
            vec![(5, -1), (4, 1), (-1, 0)],
        ];
        for s in sets {
            let fm = solve_fm(&to_rows(&s), 2);
            assert_eq!(fm.is_feasible(), sweep_2d(&s).is_feasible(), "{s:?}");
            if let Feasibility::Feasible(x) = fm {
                assert!(satisfies(&to_rows(&s), &x));
            }
        }
    }

    #[test]
    fn fm_three_dims() {
        let r = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, 3]]);
        let Feasibility::Feasible(x) = solve_fm(&r, 3) else { panic!() };
        assert!(satisfies(&r, &x));
        let r = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1], &[1, 1, 1]]);
        assert_eq!(solve_fm(&r, 3), Feasibility::Infeasible(vec![0, 1, 2, 3]));
    }
}
