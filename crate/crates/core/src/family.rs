//! Lifting networks without changing `L0`, and the family built on
//! `C_N(1, q, q²)` with `N = 1 + q + q²`.

use num_integer::Integer;

use crate::enumerate::{enumerate_mdds, EnumMode};
use crate::error::{Error, Result};
use crate::fan::coherent_fan;
use crate::hilbert::{hilbert_basis, HilbertBasis, Octant};
use crate::lattice::HomogeneousLattice;
use crate::network::{CirculantNetwork, DistanceTable};

/// `C_{nk}(t + k s_1, …, t + k s_r)`, which has the same `L0` as `net`.
pub fn lift_network(net: &CirculantNetwork, k: u64, t: u64) -> Result<CirculantNetwork> {
    if k == 0 {
        return Err(Error::BadLiftParams("k must be positive".into()));
    }
    if k.gcd(&net.n()) != 1 {
        return Err(Error::BadLiftParams(format!("gcd(k, n) = gcd({k}, {}) != 1", net.n())));
    }
    if k.gcd(&t) != 1 {
        return Err(Error::BadLiftParams(format!("gcd(k, t) = gcd({k}, {t}) != 1")));
    }
    let n = net.n().checked_mul(k).ok_or(Error::Overflow("lifted size"))?;
    let steps = net
        .steps()
        .iter()
        .map(|&s| {
            s.checked_mul(k)
                .and_then(|x| x.checked_add(t))
                .and_then(|x| i64::try_from(x).ok())
                .ok_or(Error::Overflow("lifted step"))
        })
        .collect::<Result<Vec<i64>>>()?;
    let lifted = CirculantNetwork::new(n, &steps)?;
    if HomogeneousLattice::of(&lifted)? != HomogeneousLattice::of(net)? {
        return Err(Error::Inconsistent(format!("lift of {net} changed the homogeneous lattice")));
    }
    Ok(lifted)
}

/// `σ(a) = (a_3, a_1, a_2)`.
pub fn cyclic_shift(a: &[i64]) -> Vec<i64> {
    vec![a[2], a[0], a[1]]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyNetwork {
    pub q: u64,
    /// `C_N(1, q, q²)`.
    pub base: CirculantNetwork,
    pub k: u64,
    pub t: u64,
    /// `C_{Nk}(t + k, t + qk, t + q²k)`.
    pub network: CirculantNetwork,
    /// Closed-form Hilbert bases of the three principal octants.
    pub predicted_bases: Vec<HilbertBasis>,
    pub predicted_count: u64,
    /// Whether "q is not a multiple of 3" and "q - 1 is not a multiple of 3"
    /// give different answers for this `q`.
    pub conditions_disagree: bool,
}

fn predicted_bases(q: u64) -> Result<Vec<HilbertBasis>> {
    let q = i64::try_from(q).map_err(|_| Error::Overflow("q"))?;
    let n = q
        .checked_mul(q)
        .and_then(|x| x.checked_add(q + 1))
        .ok_or(Error::Overflow("family size"))?;
    let mut first = vec![vec![-n, 0, n]];
    for i in 0..=q {
        first.push(vec![-q - 1 - i * q, 1 + i * (q + 1), q - i]);
    }
    let mut out = Vec::new();
    let mut elems = first;
    for oct in Octant::principal_three() {
        let mut sorted = elems.clone();
        sorted.sort();
        out.push(HilbertBasis { octant: oct, elements: sorted });
        elems = elems.iter().map(|a| cyclic_shift(a)).collect();
    }
    Ok(out)
}

pub fn build_family(q: u64, k: Option<u64>, t: Option<u64>) -> Result<FamilyNetwork> {
    if q < 2 {
        return Err(Error::BadFamilyParams(format!("q = {q} must be at least 2")));
    }
    if (q - 1).is_multiple_of(3) {
        return Err(Error::BadFamilyParams(format!("q - 1 = {} is a multiple of 3", q - 1)));
    }
    let n = q
        .checked_mul(q)
        .and_then(|x| x.checked_add(q + 1))
        .ok_or(Error::Overflow("family size"))?;
    let k = k.unwrap_or(n + 1);
    let t = t.unwrap_or(1);
    if k <= n {
        return Err(Error::BadFamilyParams(format!("k = {k} must exceed N = {n}")));
    }
    if t.gcd(&k) != 1 || k.gcd(&n) != 1 {
        return Err(Error::BadFamilyParams(format!("need gcd(t, k) = gcd(k, N) = 1 for k = {k}, t = {t}, N = {n}")));
    }
    let qq = q.checked_mul(q).ok_or(Error::Overflow("family step"))?;
    let as_i64 = |x: u64| i64::try_from(x).map_err(|_| Error::Overflow("family step"));
    let base = CirculantNetwork::new(n, &[1, as_i64(q)?, as_i64(qq)?])?;
    let network = lift_network(&base, k, t).map_err(|e| match e {
        Error::BadLiftParams(m) => Error::BadFamilyParams(m),
        e => e,
    })?;
    Ok(FamilyNetwork {
        q,
        base,
        k,
        t,
        network,
        predicted_bases: predicted_bases(q)?,
        predicted_count: 3 * (q + 2),
        conditions_disagree: q.is_multiple_of(3) != (q - 1).is_multiple_of(3),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctantCheck {
    pub octant: Octant,
    pub predicted: Vec<Vec<i64>>,
    pub computed: Vec<Vec<i64>>,
}

impl OctantCheck {
    pub fn matches(&self) -> bool {
        self.predicted == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: FamilyNetwork,
    pub octants: Vec<OctantCheck>,
    pub fan_count: usize,
    /// Coherent MDDs found by exhaustive enumeration, when it was run.
    pub enumerated_coherent: Option<usize>,
    /// All MDDs found by exhaustive enumeration, when it was run.
    pub enumerated_all: Option<usize>,
}

impl FamilyReport {
    /// True when every computed quantity agrees with its prediction.
    pub fn consistent(&self) -> bool {
        let n = self.family.predicted_count as usize;
        self.octants.iter().all(OctantCheck::matches)
            && self.fan_count == n
            && self.enumerated_coherent.is_none_or(|c| c == n)
    }
}

/// Largest lifted size for which [`verify_family`] enumerates by default.
pub const DEFAULT_BRUTE_FORCE_LIMIT: u64 = 200;

pub fn verify_family(q: u64, brute_force_limit: u64) -> Result<FamilyReport> {
    let family = build_family(q, None, None)?;
    let lat = HomogeneousLattice::of(&family.base)?;
    let octants = family
        .predicted_bases
        .iter()
        .map(|p| {
            Ok(OctantCheck {
                octant: p.octant.clone(),
                predicted: p.elements.clone(),
                computed: hilbert_basis(&lat, &p.octant)?.elements,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let table = DistanceTable::new(&family.network);
    let fan_count = coherent_fan(&table)?.mdd_count;
    let (enumerated_coherent, enumerated_all) = if family.network.n() <= brute_force_limit {
        let all = enumerate_mdds(&table, EnumMode::All, None)?;
        let coherent = enumerate_mdds(&table, EnumMode::CoherentOnly, None)?;
        (Some(coherent.mdds.len()), Some(all.mdds.len()))
    } else {
        (None, None)
    };
    Ok(FamilyReport { family, octants, fan_count, enumerated_coherent, enumerated_all })
}
