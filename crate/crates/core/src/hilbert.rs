//! Octant semigroups `S^ε = L0 ∩ {ε_i a_i >= 0}` and their Hilbert bases.
//!
//! For three steps `S^ε` is the set of lattice points of a pointed 2-D cone,
//! and its Hilbert basis is the set of lattice points on the lower hull of
//! `S^ε \ {0}`, the boundary chain facing the origin.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{cross2, gcd_u64};
use crate::error::{Error, Result};
use crate::lattice::{HomogeneousLattice, SignConstraint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Pos => Sign::Neg,
        }
    }

    fn factor(self) -> i64 {
        match self {
            Sign::Neg => -1,
            Sign::Pos => 1,
        }
    }
}

/// A sign pattern `ε ∈ {-,+}^r`, written like `-++`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Octant(Vec<Sign>);

impl Octant {
    pub fn new(signs: Vec<Sign>) -> Self {
        Octant(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn negated(&self) -> Octant {
        Octant(self.0.iter().map(|s| s.flip()).collect())
    }

    /// `S^(-,+,+)`, `S^(+,-,+)`, `S^(+,+,-)`: one negative entry each. The
    /// remaining mixed octants are their negatives.
    pub fn principal_three() -> [Octant; 3] {
        use Sign::*;
        [
            Octant(vec![Neg, Pos, Pos]),
            Octant(vec![Pos, Neg, Pos]),
            Octant(vec![Pos, Pos, Neg]),
        ]
    }

    /// The octant with a single negative entry that contains `a`, if any.
    pub fn single_negative_of(a: &[i64]) -> Option<Octant> {
        let negs: Vec<usize> = (0..a.len()).filter(|&i| a[i] < 0).collect();
        if negs.len() != 1 {
            return None;
        }
        Some(Octant(
            (0..a.len())
                .map(|i| if i == negs[0] { Sign::Neg } else { Sign::Pos })
                .collect(),
        ))
    }

    pub fn contains_signs(&self, a: &[i64]) -> bool {
        a.iter().zip(&self.0).all(|(&x, &s)| x * s.factor() >= 0)
    }

    fn constraints(&self) -> Vec<SignConstraint> {
        self.0
            .iter()
            .map(|s| match s {
                Sign::Neg => SignConstraint::NonPositive,
                Sign::Pos => SignConstraint::NonNegative,
            })
            .collect()
    }

    /// All non-zero elements of `S^ε` with `‖a‖₁ <= bound`, sorted.
    pub fn points_bounded(&self, lat: &HomogeneousLattice, bound: u64) -> Vec<Vec<i64>> {
        lat.points_bounded(&self.constraints(), bound)
    }
}

impl fmt::Display for Octant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Neg => "-",
                Sign::Pos => "+",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Octant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '-' => Ok(Sign::Neg),
                '+' => Ok(Sign::Pos),
                _ => Err(Error::Parse(format!("bad sign {c:?} in octant {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Octant)
    }
}

impl Serialize for Octant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Octant {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub octant: Octant,
    /// Sorted lexicographically.
    pub elements: Vec<Vec<i64>>,
}

impl HilbertBasis {
    pub fn max_norm(&self) -> u64 {
        self.elements.iter().map(|e| crate::arith::norm1(e)).max().unwrap_or(0)
    }
}

/// The 2-D parametrisation of a mixed octant for `r = 3`: the odd index `j`
/// (whose sign differs) and the two others `k < l`, with
/// `a_k = ε_k y`, `a_l = ε_l z`, `a_j = -(a_k + a_l)` for `y, z >= 0`.
struct ConeChart {
    k: usize,
    l: usize,
    sk: i64,
    sl: i64,
}

impl ConeChart {
    fn new(oct: &Octant) -> Option<Self> {
        let s = oct.signs();
        let j = (0..3).find(|&i| s[(i + 1) % 3] == s[(i + 2) % 3] && s[i] != s[(i + 1) % 3])?;
        let (k, l) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        Some(ConeChart { k, l, sk: s[k].factor(), sl: s[l].factor() })
    }

    fn point(&self, y: i64, z: i64) -> Vec<i64> {
        let mut a = vec![0i64; 3];
        a[self.k] = self.sk * y;
        a[self.l] = self.sl * z;
        let j = 3 - self.k - self.l;
        a[j] = -(a[self.k] + a[self.l]);
        a
    }
}

/// Lattice points `(y, z)` of the fundamental parallelogram spanned by the
/// minimal points on the two boundary rays, origin excluded.
fn parallelogram_points(lat: &HomogeneousLattice, chart: &ConeChart) -> Vec<(i64, i64)> {
    let ray_u = chart.point(1, 0);
    let ray_v = chart.point(0, 1);
    let cu = lat.line_multiple(&ray_u) as i64;
    let cv = lat.line_multiple(&ray_v) as i64;
    let n = lat.modulus() as i64;
    let a = lat.residue(&ray_u) as i64;
    let b = lat.residue(&ray_v) as i64;
    let g = gcd_u64(n as u64, b as u64) as i64;
    let modulus = n / g;
    debug_assert_eq!(modulus, cv);
    let b_red = (b / g).rem_euclid(modulus);
    let b_inv = if modulus == 1 { 0 } else { mod_inverse(b_red, modulus) };
    let mut pts = Vec::new();
    for y in 0..=cu {
        let rhs = (-(y as i128) * a as i128).rem_euclid(n as i128) as i64;
        if rhs % g != 0 {
            continue;
        }
        let z0 = ((rhs / g) as i128 * b_inv as i128).rem_euclid(modulus as i128) as i64;
        let mut z = z0;
        while z <= cv {
            if y != 0 || z != 0 {
                pts.push((y, z));
            }
            z += modulus;
        }
    }
    pts
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as i64
}

/// Hilbert basis of `S^ε` for `r = 3`, via the lower hull of the lattice
/// points in the fundamental parallelogram.
pub fn hilbert_basis(lat: &HomogeneousLattice, oct: &Octant) -> Result<HilbertBasis> {
    if lat.arity() != 3 || oct.signs().len() != 3 {
        return Err(Error::UnsupportedArity { op: "hilbert_basis", r: lat.arity() });
    }
    let Some(chart) = ConeChart::new(oct) else {
        // (+,+,+) and (-,-,-) meet the sum-zero plane only at the origin.
        return Ok(HilbertBasis { octant: oct.clone(), elements: Vec::new() });
    };
    let mut pts = parallelogram_points(lat, &chart);
    // The far edge above (c_u, 0) never faces the origin.
    let cu = pts.iter().map(|p| p.0).max().unwrap_or(0);
    pts.retain(|&(y, z)| y < cu || z == 0);
    pts.sort();
    pts.dedup();
    let to128 = |p: (i64, i64)| (p.0 as i128, p.1 as i128);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let o = to128(hull[hull.len() - 2]);
            let a = to128(hull[hull.len() - 1]);
            let b = to128(p);
            if cross2((a.0 - o.0, a.1 - o.1), (b.0 - o.0, b.1 - o.1)) <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let on_chain = |p: (i64, i64)| {
        hull.windows(2).any(|w| {
            let (a, b) = (to128(w[0]), to128(w[1]));
            let q = to128(p);
            q.0 >= a.0
                && q.0 <= b.0
                && cross2((b.0 - a.0, b.1 - a.1), (q.0 - a.0, q.1 - a.1)) == 0
        }) || (hull.len() == 1 && hull[0] == p)
    };
    let mut elements: Vec<Vec<i64>> = pts
        .into_iter()
        .filter(|&p| on_chain(p))
        .map(|(y, z)| chart.point(y, z))
        .collect();
    elements.sort();
    Ok(HilbertBasis { octant: oct.clone(), elements })
}

/// Hilbert bases of the three principal octants, in `principal_three` order.
pub fn principal_hilbert_bases(lat: &HomogeneousLattice) -> Result<Vec<HilbertBasis>> {
    Octant::principal_three().iter().map(|o| hilbert_basis(lat, o)).collect()
}
