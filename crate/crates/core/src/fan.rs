//! The fan of coherent MDDs of a triple loop network.
//!
//! Weights are taken modulo `(1,1,1)`, i.e. in the plane `H0 = {Σ w_i = 0}`,
//! with coordinates `(α, β)` for `w = α(1,-1,0) + β(0,1,-1)`. Walls are rays
//! of `H0` orthogonal to Hilbert basis elements of the octant semigroups.

use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::{angle_cmp, cross2, cross3, dot, norm1, primitive, split_signs};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hilbert::{principal_hilbert_bases, HilbertBasis, Octant};
use crate::lattice::HomogeneousLattice;
use crate::mdd::{build_coherent_mdd, Mdd, TiePolicy};
use crate::network::{DistanceTable, PathVector};
use crate::weight::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RayCandidate {
    /// Primitive, sum zero, orthogonal to `source`.
    pub ray: Vec<i64>,
    pub source: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub ray: Vec<i64>,
    /// The minimal lattice vector on the ray's orthogonal line, oriented with
    /// a single negative entry.
    pub witness: Vec<i64>,
}

/// Why a ray is not a wall, by the first failing condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rejection {
    /// (0) the source is not the shortest lattice vector orthogonal to the ray.
    NotShortest { shortest: Vec<i64> },
    /// (1) `a₊` is not a minimal routing to its vertex.
    NotMinimalRouting { vertex: u64, norm: u64, dist: u32 },
    /// (2) no orientation of `a` lies in the Hilbert basis of its octant.
    NotInHilbertBasis { witness: Vec<i64> },
    /// (3) some short `b` in the octant has `w0 · b < 0`.
    NegativeOnOctant { witness: Vec<i64>, counterexample: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WallVerdict {
    Wall(Wall),
    Rejected(Rejection),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanSummary {
    /// In counter-clockwise order starting from the `α > 0` axis.
    pub walls: Vec<Wall>,
    /// One generic weight per open sector; sector `i` lies between walls `i` and `i + 1`.
    pub sector_representatives: Vec<WeightVector>,
    pub mdd_count: usize,
    /// Sum of the sizes of the three principal Hilbert bases.
    pub hilbert_total: usize,
    /// The distinct coherent MDDs, sorted.
    pub mdds: Vec<Mdd>,
}

fn plane(w: &[i64]) -> (i128, i128) {
    (w[0] as i128, -(w[2] as i128))
}

fn from_plane(p: (i128, i128)) -> Vec<i64> {
    vec![p.0 as i64, (p.1 - p.0) as i64, -(p.1 as i64)]
}

/// Shared per-network data for wall checks.
pub struct FanContext<'a> {
    table: &'a DistanceTable,
    lattice: HomogeneousLattice,
    bases: Vec<HilbertBasis>,
}

impl<'a> FanContext<'a> {
    pub fn new(table: &'a DistanceTable) -> Result<Self> {
        let r = table.network().arity();
        if r != 3 {
            return Err(Error::UnsupportedArity { op: "fan", r });
        }
        let lattice = HomogeneousLattice::of(table.network())?;
        let bases = principal_hilbert_bases(&lattice)?;
        Ok(FanContext { table, lattice, bases })
    }

    pub fn lattice(&self) -> &HomogeneousLattice {
        &self.lattice
    }

    pub fn hilbert_bases(&self) -> &[HilbertBasis] {
        &self.bases
    }

    /// Both rays orthogonal to each Hilbert basis element, deduplicated.
    pub fn orthogonal_rays(&self) -> Vec<RayCandidate> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in self.bases.iter().flat_map(|b| &b.elements) {
            let d = primitive(&cross3(a, &[1, 1, 1]));
            for ray in [d.clone(), d.iter().map(|x| -x).collect()] {
                if seen.insert(ray.clone()) {
                    out.push(RayCandidate { ray, source: a.clone() });
                }
            }
        }
        out
    }

    /// Orthogonal rays passing the conditions that depend on the lattice
    /// alone, (0), (2) and (3).
    pub fn candidate_rays(&self) -> Vec<RayCandidate> {
        self.orthogonal_rays()
            .into_iter()
            .filter(|c| self.check(c, false).is_ok())
            .collect()
    }

    pub fn verify_wall(&self, cand: &RayCandidate) -> WallVerdict {
        match self.check(cand, true) {
            Ok(witness) => WallVerdict::Wall(Wall { ray: cand.ray.clone(), witness }),
            Err(why) => WallVerdict::Rejected(why),
        }
    }

    fn check(&self, cand: &RayCandidate, routing: bool) -> std::result::Result<Vec<i64>, Rejection> {
        let w0 = &cand.ray;
        // (0) The orthogonal line is spanned by d; its first lattice point is m d.
        let d = primitive(&cross3(w0, &[1, 1, 1]));
        let m = self.lattice.line_multiple(&d) as i64;
        let a: Vec<i64> = d.iter().map(|x| x * m).collect();
        let neg: Vec<i64> = a.iter().map(|x| -x).collect();
        if cand.source != a && cand.source != neg {
            return Err(Rejection::NotShortest { shortest: a });
        }
        // (1)
        if routing {
            let (plus, _) = split_signs(&a);
            let plus = PathVector::new(plus);
            let vertex = self.table.network().vertex_unchecked(plus.coords());
            let dist = self.table.dist()[vertex as usize];
            if plus.norm() != dist as u64 {
                return Err(Rejection::NotMinimalRouting { vertex, norm: plus.norm(), dist });
            }
        }
        // (2) and (3), for each orientation with a single negative entry.
        let mut last = Rejection::NotInHilbertBasis { witness: a.clone() };
        let (first, second) = if cand.source == neg { (&neg, &a) } else { (&a, &neg) };
        for v in [first, second] {
            let Some(oct) = Octant::single_negative_of(v) else { continue };
            let basis = self.bases.iter().find(|b| b.octant == oct).expect("principal octant");
            if basis.elements.binary_search(v).is_err() {
                last = Rejection::NotInHilbertBasis { witness: v.clone() };
                continue;
            }
            let bad = oct
                .points_bounded(&self.lattice, norm1(v))
                .into_iter()
                .find(|b| dot(w0, b) < 0);
            match bad {
                None => return Ok(v.clone()),
                Some(b) => last = Rejection::NegativeOnOctant { witness: v.clone(), counterexample: b },
            }
        }
        Err(last)
    }
}

pub fn candidate_rays(lat: &HomogeneousLattice) -> Result<Vec<RayCandidate>> {
    if lat.arity() != 3 {
        return Err(Error::UnsupportedArity { op: "candidate_rays", r: lat.arity() });
    }
    let net = crate::network::CirculantNetwork::new(
        lat.modulus(),
        &lat.steps().iter().map(|&s| s as i64).collect::<Vec<_>>(),
    )?;
    let table = DistanceTable::new(&net);
    Ok(FanContext::new(&table)?.candidate_rays())
}

pub fn verify_wall(table: &DistanceTable, cand: &RayCandidate) -> Result<WallVerdict> {
    Ok(FanContext::new(table)?.verify_wall(cand))
}

/// Interior points of the open sector swept counter-clockwise from `p` to
/// `q`, coarse ones first.
fn sector_points(p: (i128, i128), q: (i128, i128)) -> impl Iterator<Item = (i128, i128)> {
    let mut queue = VecDeque::from([(p, q)]);
    std::iter::from_fn(move || {
        let (a, b) = queue.pop_front()?;
        let c = if cross2(a, b) > 0 { (a.0 + b.0, a.1 + b.1) } else { (-a.1, a.0) };
        queue.push_back((a, c));
        queue.push_back((c, b));
        Some(c)
    })
}

const REFINE_LIMIT: usize = 4096;

fn sector_mdd(table: &DistanceTable, p: (i128, i128), q: (i128, i128)) -> Result<(WeightVector, Mdd)> {
    for pt in sector_points(p, q).take(REFINE_LIMIT) {
        let w = WeightVector::from_integers(&from_plane(pt))?;
        match build_coherent_mdd(table, &w, TiePolicy::Error) {
            Ok(m) => return Ok((w, m)),
            Err(Error::WeightTie { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Inconsistent("no generic weight found in sector".into()))
}

pub fn coherent_fan(table: &DistanceTable) -> Result<FanSummary> {
    coherent_fan_with(table, Exec::default())
}

pub fn coherent_fan_with(table: &DistanceTable, exec: Exec) -> Result<FanSummary> {
    let ctx = FanContext::new(table)?;
    let cands = ctx.orthogonal_rays();
    let verdicts = exec.map(&cands, |c| ctx.verify_wall(c));
    let mut walls: Vec<Wall> = verdicts
        .into_iter()
        .filter_map(|v| match v {
            WallVerdict::Wall(w) => Some(w),
            WallVerdict::Rejected(_) => None,
        })
        .collect();
    walls.sort_by(|a, b| angle_cmp(plane(&a.ray), plane(&b.ray)));

    let sectors: Vec<((i128, i128), (i128, i128))> = if walls.is_empty() {
        vec![((1, 0), (1, 0))]
    } else {
        (0..walls.len())
            .map(|i| (plane(&walls[i].ray), plane(&walls[(i + 1) % walls.len()].ray)))
            .collect()
    };
    let found = exec.try_map(&sectors, |&(p, q)| sector_mdd(table, p, q))?;
    let (sector_representatives, sector_mdds): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    let mut mdds = sector_mdds;
    mdds.sort();
    mdds.dedup();
    let hilbert_total: usize = ctx.bases.iter().map(|b| b.elements.len()).sum();
    let expected = walls.len().max(1);
    if mdds.len() != expected {
        return Err(Error::Inconsistent(format!(
            "{} walls but {} distinct sector MDDs",
            walls.len(),
            mdds.len()
        )));
    }
    if mdds.len() > hilbert_total.max(1) {
        return Err(Error::Inconsistent(format!(
            "{} coherent MDDs exceed the Hilbert basis total {hilbert_total}",
            mdds.len()
        )));
    }
    Ok(FanSummary { walls, sector_representatives, mdd_count: mdds.len(), hilbert_total, mdds })
}

impl FanSummary {
    /// The sector representatives as exact rationals.
    pub fn representative_components(&self) -> Vec<Vec<BigRational>> {
        self.sector_representatives.iter().map(|w| w.components().to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::CirculantNetwork;

    fn table(n: u64, s: &[i64]) -> DistanceTable {
        DistanceTable::new(&CirculantNetwork::new(n, s).unwrap())
    }

    #[test]
    fn c9_1_4_7_rays_and_walls() {
        let t = table(9, &[1, 4, 7]);
        let ctx = FanContext::new(&t).unwrap();
        let rays: BTreeSet<Vec<i64>> = ctx.candidate_rays().into_iter().map(|c| c.ray).collect();
        assert_eq!(rays.len(), 9);
        for r in [[2, -1, -1], [-1, 2, -1], [0, 1, -1], [0, -1, 1]] {
            assert!(rays.iter().any(|x| x.as_slice() == r.as_slice()), "{r:?}");
        }
        let cand = RayCandidate { ray: vec![2, -1, -1], source: vec![0, 3, -3] };
        assert_eq!(
            ctx.verify_wall(&cand),
            WallVerdict::Wall(Wall { ray: vec![2, -1, -1], witness: vec![0, 3, -3] })
        );
        let fan = coherent_fan(&t).unwrap();
        assert_eq!(fan.walls.len(), 9);
        assert_eq!(fan.mdd_count, 9);
        assert_eq!(fan.sector_representatives.len(), 9);
    }

    #[test]
    fn c8_2_3_7_and_lift() {
        let t = table(8, &[2, 3, 7]);
        let ctx = FanContext::new(&t).unwrap();
        assert_eq!(ctx.hilbert_bases().iter().map(|b| b.elements.len()).sum::<usize>(), 10);
        // (0,-2,2) and (0,2,-2) are both unique shortest elements of their
        // octants and share both orthogonal rays, leaving 8 distinct rays.
        assert_eq!(ctx.candidate_rays().len(), 8);
        assert_eq!(coherent_fan(&t).unwrap().mdd_count, 2);
        // Exhaustive enumeration of the lift also finds 8 MDDs, all coherent.
        let fan = coherent_fan(&table(72, &[19, 28, 64])).unwrap();
        assert_eq!(fan.walls.len(), 8);
        assert_eq!(fan.mdd_count, 8);
    }

    #[test]
    fn c7_1_2_4_rejects_at_routing() {
        let t = table(7, &[1, 2, 4]);
        let ctx = FanContext::new(&t).unwrap();
        let d = primitive(&cross3(&[-3, 1, 2], &[1, 1, 1]));
        let verdicts: Vec<WallVerdict> = [d.clone(), d.iter().map(|x| -x).collect()]
            .into_iter()
            .map(|ray| ctx.verify_wall(&RayCandidate { ray, source: vec![-3, 1, 2] }))
            .collect();
        assert!(verdicts.contains(&WallVerdict::Rejected(Rejection::NotMinimalRouting {
            vertex: 3,
            norm: 3,
            dist: 2
        })));
        let fan = coherent_fan(&t).unwrap();
        assert!(fan.walls.is_empty());
        assert_eq!(fan.mdd_count, 1);
    }

    #[test]
    fn sequential_matches_parallel() {
        let t = table(72, &[19, 28, 64]);
        assert_eq!(
            coherent_fan_with(&t, Exec::Sequential).unwrap(),
            coherent_fan_with(&t, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn arity_guard() {
        assert!(matches!(
            coherent_fan(&table(9, &[1, 4])),
            Err(Error::UnsupportedArity { .. })
        ));
    }
}
