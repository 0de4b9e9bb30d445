//! Deciding whether an MDD is the argmin diagram of some weight vector.
//!
//! Every constraint `w · (rival - chosen) > 0` lives in the sum-zero
//! hyperplane, so only `r - 1` coordinates matter. With `α_k` dual to
//! `d_k - d_{k+1}` the weight is recovered as
//! `w = (α_1, α_2 - α_1, …, α_{r-1} - α_{r-2}, -α_{r-1})`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::primitive;
use crate::cone::{solve_fm, sweep_2d, Feasibility};
use crate::error::{Error, Result};
use crate::mdd::Mdd;
use crate::network::{DistanceTable, PathVector};
use crate::weight::{int_dot, WeightVector};

/// The routing `chosen` at `vertex` must weigh strictly less than `rival`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub vertex: u64,
    pub chosen: PathVector,
    pub rival: PathVector,
}

impl Constraint {
    pub fn difference(&self) -> Vec<i64> {
        self.rival
            .to_i64()
            .iter()
            .zip(self.chosen.to_i64())
            .map(|(b, a)| b - a)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    Coherent { witness: WeightVector },
    /// A minimal set of constraints with no common solution.
    NonCoherent { refutation: Vec<Constraint> },
}

impl Coherence {
    pub fn is_coherent(&self) -> bool {
        matches!(self, Coherence::Coherent { .. })
    }
}

pub fn constraints(table: &DistanceTable, mdd: &Mdd) -> Vec<Constraint> {
    let mut out = Vec::new();
    for (i, paths) in table.all_paths().iter().enumerate() {
        let chosen = mdd.cell(i as u64);
        for b in paths {
            if b != chosen {
                out.push(Constraint { vertex: i as u64, chosen: chosen.clone(), rival: b.clone() });
            }
        }
    }
    out
}

pub fn is_coherent(table: &DistanceTable, mdd: &Mdd) -> Result<Coherence> {
    let r = mdd.network().arity();
    if r > 4 {
        return Err(Error::UnsupportedArity { op: "is_coherent", r });
    }
    if table.network() != mdd.network() {
        return Err(Error::Inconsistent("table and MDD belong to different networks".into()));
    }
    let all = constraints(table, mdd);
    // One representative per direction keeps the systems small.
    let mut seen = BTreeMap::new();
    for (idx, c) in all.iter().enumerate() {
        let d = c.difference();
        let red: Vec<i64> = (0..r - 1).map(|k| d[k] - d[k + 1]).collect();
        seen.entry(primitive(&red)).or_insert(idx);
    }
    let mut reps: Vec<(Vec<i64>, usize)> = seen.into_iter().collect();
    reps.sort_by_key(|(_, idx)| *idx);

    let result = if r == 3 {
        let normals: Vec<(i128, i128)> = reps.iter().map(|(v, _)| (v[0] as i128, v[1] as i128)).collect();
        sweep_2d(&normals)
    } else {
        let rows: Vec<Vec<BigInt>> = reps
            .iter()
            .map(|(v, _)| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        solve_fm(&rows, r - 1)
    };
    match result {
        Feasibility::Feasible(alpha) => {
            let mut w = Vec::with_capacity(r);
            for k in 0..r {
                let cur = alpha.get(k).cloned().unwrap_or_else(BigRational::zero);
                let prev = if k == 0 { BigRational::zero() } else { alpha[k - 1].clone() };
                w.push(cur - prev);
            }
            let w = WeightVector::new(w)?;
            let ints = w.scaled_integers();
            let g = ints.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            let g = if g.is_zero() { BigInt::one() } else { g };
            let witness = WeightVector::new(ints.into_iter().map(|x| BigRational::from_integer(x / &g)).collect())?;
            debug_assert!(satisfies_all(&witness, &all));
            Ok(Coherence::Coherent { witness })
        }
        Feasibility::Infeasible(idx) => {
            let mut refutation: Vec<Constraint> = idx.iter().map(|&i| all[reps[i].1].clone()).collect();
            refutation.sort_by(|a, b| (a.vertex, &a.rival).cmp(&(b.vertex, &b.rival)));
            Ok(Coherence::NonCoherent { refutation })
        }
    }
}

fn satisfies_all(w: &WeightVector, cs: &[Constraint]) -> bool {
    let wi = w.scaled_integers();
    cs.iter().all(|c| int_dot(&wi, &c.rival) > int_dot(&wi, &c.chosen))
}

/// Whether `w` strictly prefers every cell of `mdd` over all its rivals.
pub fn witness_is_feasible(table: &DistanceTable, mdd: &Mdd, w: &WeightVector) -> bool {
    w.arity() == mdd.network().arity() && satisfies_all(w, &constraints(table, mdd))
}
