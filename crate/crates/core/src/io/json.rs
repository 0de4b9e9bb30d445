//! Canonical JSON. Field order is fixed by the structs below, cells are
//! sorted by vertex, rationals are `{"num", "den"}` in lowest terms and big
//! counts are decimal strings.

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coherence::{Coherence, Constraint};
use crate::enumerate::Enumeration;
use crate::error::{Error, Result};
use crate::family::FamilyReport;
use crate::fan::FanSummary;
use crate::hilbert::HilbertBasis;
use crate::mdd::Mdd;
use crate::network::{CirculantNetwork, DistanceTable, NetworkStats, PathVector};
use crate::weight::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkJson {
    pub n: u64,
    pub steps: Vec<u64>,
}

impl From<&CirculantNetwork> for NetworkJson {
    fn from(net: &CirculantNetwork) -> Self {
        NetworkJson { n: net.n(), steps: net.steps().to_vec() }
    }
}

impl NetworkJson {
    pub fn build(&self) -> Result<CirculantNetwork> {
        let steps = self
            .steps
            .iter()
            .map(|&s| i64::try_from(s).map_err(|_| Error::Overflow("step")))
            .collect::<Result<Vec<_>>>()?;
        CirculantNetwork::new(self.n, &steps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub vertex: u64,
    pub path: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MddJson {
    pub network: NetworkJson,
    pub cells: Vec<CellJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: Value,
    pub den: Value,
}

fn big_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn value_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

impl From<&BigRational> for RationalJson {
    fn from(x: &BigRational) -> Self {
        RationalJson { num: big_value(x.numer()), den: big_value(x.denom()) }
    }
}

impl RationalJson {
    pub fn value(&self) -> Result<BigRational> {
        let den = value_big(&self.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(value_big(&self.num)?, den))
    }
}

fn ratio_u64(x: &Ratio<u64>) -> RationalJson {
    RationalJson { num: Value::from(*x.numer()), den: Value::from(*x.denom()) }
}

fn weight_json(w: &WeightVector) -> Vec<RationalJson> {
    w.components().iter().map(RationalJson::from).collect()
}

fn big_count(x: &BigUint) -> Value {
    Value::from(x.to_string())
}

fn to_text<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn mdd_json(mdd: &Mdd) -> MddJson {
    MddJson {
        network: mdd.network().into(),
        cells: mdd
            .cells()
            .iter()
            .enumerate()
            .map(|(i, p)| CellJson { vertex: i as u64, path: p.coords().to_vec() })
            .collect(),
    }
}

pub fn encode_mdd(mdd: &Mdd) -> String {
    to_text(&mdd_json(mdd))
}

/// Parses the network and raw cells without validating them. Cells may be
/// listed in any order but every vertex must appear exactly once.
pub fn decode_mdd_parts(text: &str) -> Result<(CirculantNetwork, Vec<PathVector>)> {
    let raw: MddJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let net = raw.network.build()?;
    let mut cells: Vec<Option<PathVector>> = vec![None; net.n() as usize];
    for c in raw.cells {
        let slot = cells
            .get_mut(c.vertex as usize)
            .ok_or_else(|| Error::Parse(format!("vertex {} out of range", c.vertex)))?;
        if slot.is_some() {
            return Err(Error::Parse(format!("vertex {} listed twice", c.vertex)));
        }
        *slot = Some(PathVector::new(c.path));
    }
    let found = cells.iter().filter(|c| c.is_some()).count();
    if found != cells.len() {
        return Err(Error::CellCount { expected: cells.len(), found });
    }
    Ok((net, cells.into_iter().map(Option::unwrap).collect()))
}

/// Parses and validates an MDD.
pub fn decode_mdd(text: &str) -> Result<Mdd> {
    let (net, cells) = decode_mdd_parts(text)?;
    Mdd::validate(&DistanceTable::new(&net), cells)
}

#[derive(Serialize)]
struct TableRowJson<'a> {
    vertex: u64,
    dist: u32,
    paths: Vec<&'a [u32]>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    network: NetworkJson,
    rows: Vec<TableRowJson<'a>>,
}

pub fn encode_distance_table(table: &DistanceTable) -> String {
    to_text(&TableJson {
        network: table.network().into(),
        rows: table
            .all_paths()
            .iter()
            .enumerate()
            .map(|(i, ps)| TableRowJson {
                vertex: i as u64,
                dist: table.dist()[i],
                paths: ps.iter().map(|p| p.coords()).collect(),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct StatsJson<'a> {
    network: NetworkJson,
    arity: usize,
    diameter: u32,
    average_distance: RationalJson,
    volume_bound: Value,
    routing_choice_count: Value,
    dist: &'a [u32],
    path_counts: Vec<usize>,
}

pub fn encode_network_info(table: &DistanceTable, stats: &NetworkStats) -> String {
    to_text(&StatsJson {
        network: table.network().into(),
        arity: table.network().arity(),
        diameter: stats.diameter,
        average_distance: ratio_u64(&stats.average_distance),
        volume_bound: big_count(&stats.volume_bound),
        routing_choice_count: big_count(&table.routing_choice_count()),
        dist: table.dist(),
        path_counts: table.all_paths().iter().map(Vec::len).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub octant: String,
    pub elements: Vec<Vec<i64>>,
}

pub fn encode_hilbert_bases(net: &CirculantNetwork, bases: &[HilbertBasis]) -> String {
    #[derive(Serialize)]
    struct Out {
        network: NetworkJson,
        bases: Vec<HilbertJson>,
        total: usize,
    }
    to_text(&Out {
        network: net.into(),
        bases: bases
            .iter()
            .map(|b| HilbertJson { octant: b.octant.to_string(), elements: b.elements.clone() })
            .collect(),
        total: bases.iter().map(|b| b.elements.len()).sum(),
    })
}

pub fn encode_hilbert_basis(b: &HilbertBasis) -> String {
    to_text(&HilbertJson { octant: b.octant.to_string(), elements: b.elements.clone() })
}

pub fn decode_hilbert_basis(text: &str) -> Result<HilbertBasis> {
    let raw: HilbertJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(HilbertBasis { octant: raw.octant.parse()?, elements: raw.elements })
}

pub fn encode_fan(net: &CirculantNetwork, fan: &FanSummary) -> String {
    #[derive(Serialize)]
    struct WallJson<'a> {
        ray: &'a [i64],
        witness: &'a [i64],
    }
    #[derive(Serialize)]
    struct Out<'a> {
        network: NetworkJson,
        walls: Vec<WallJson<'a>>,
        sector_representatives: Vec<Vec<RationalJson>>,
        mdd_count: usize,
        hilbert_total: usize,
    }
    to_text(&Out {
        network: net.into(),
        walls: fan.walls.iter().map(|w| WallJson { ray: &w.ray, witness: &w.witness }).collect(),
        sector_representatives: fan.sector_representatives.iter().map(weight_json).collect(),
        mdd_count: fan.mdd_count,
        hilbert_total: fan.hilbert_total,
    })
}

pub fn encode_enumeration(net: &CirculantNetwork, e: &Enumeration, coherent_only: bool) -> String {
    #[derive(Serialize)]
    struct Out {
        network: NetworkJson,
        coherent_only: bool,
        count: usize,
        routing_choice_count: Value,
        mdds: Vec<Vec<Vec<u32>>>,
    }
    to_text(&Out {
        network: net.into(),
        coherent_only,
        count: e.mdds.len(),
        routing_choice_count: big_count(&e.routing_choice_count),
        mdds: e
            .mdds
            .iter()
            .map(|m| m.cells().iter().map(|p| p.coords().to_vec()).collect())
            .collect(),
    })
}

#[derive(Serialize)]
struct ConstraintJson<'a> {
    vertex: u64,
    chosen: &'a [u32],
    rival: &'a [u32],
}

impl<'a> From<&'a Constraint> for ConstraintJson<'a> {
    fn from(c: &'a Constraint) -> Self {
        ConstraintJson { vertex: c.vertex, chosen: c.chosen.coords(), rival: c.rival.coords() }
    }
}

pub fn encode_check(net: &CirculantNetwork, coherence: &Coherence) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        network: NetworkJson,
        valid: bool,
        coherent: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<RationalJson>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        refutation: Option<Vec<ConstraintJson<'a>>>,
    }
    let (witness, refutation) = match coherence {
        Coherence::Coherent { witness } => (Some(weight_json(witness)), None),
        Coherence::NonCoherent { refutation } => (None, Some(refutation.iter().map(Into::into).collect())),
    };
    to_text(&Out { network: net.into(), valid: true, coherent: coherence.is_coherent(), witness, refutation })
}

pub fn encode_family_network(f: &crate::family::FamilyNetwork) -> String {
    #[derive(Serialize)]
    struct Out {
        q: u64,
        base: NetworkJson,
        k: u64,
        t: u64,
        network: NetworkJson,
        predicted_bases: Vec<HilbertJson>,
        predicted_count: u64,
        conditions_disagree: bool,
    }
    to_text(&Out {
        q: f.q,
        base: (&f.base).into(),
        k: f.k,
        t: f.t,
        network: (&f.network).into(),
        predicted_bases: f
            .predicted_bases
            .iter()
            .map(|b| HilbertJson { octant: b.octant.to_string(), elements: b.elements.clone() })
            .collect(),
        predicted_count: f.predicted_count,
        conditions_disagree: f.conditions_disagree,
    })
}

pub fn encode_family_report(r: &FamilyReport) -> String {
    #[derive(Serialize)]
    struct OctantJson {
        octant: String,
        predicted: Vec<Vec<i64>>,
        computed: Vec<Vec<i64>>,
        matches: bool,
    }
    #[derive(Serialize)]
    struct Out {
        q: u64,
        base: NetworkJson,
        network: NetworkJson,
        octants: Vec<OctantJson>,
        predicted_count: u64,
        fan_count: usize,
        enumerated_coherent: Option<usize>,
        enumerated_all: Option<usize>,
        conditions_disagree: bool,
        consistent: bool,
    }
    to_text(&Out {
        q: r.family.q,
        base: (&r.family.base).into(),
        network: (&r.family.network).into(),
        octants: r
            .octants
            .iter()
            .map(|o| OctantJson {
                octant: o.octant.to_string(),
                predicted: o.predicted.clone(),
                computed: o.computed.clone(),
                matches: o.matches(),
            })
            .collect(),
        predicted_count: r.family.predicted_count,
        fan_count: r.fan_count,
        enumerated_coherent: r.enumerated_coherent,
        enumerated_all: r.enumerated_all,
        conditions_disagree: r.family.conditions_disagree,
        consistent: r.consistent(),
    })
}

/// `{"error": kind, "message": text}`.
pub fn encode_error(e: &Error) -> String {
    #[derive(Serialize)]
    struct Out {
        error: &'static str,
        message: String,
    }
    to_text(&Out { error: e.kind(), message: e.to_string() })
}
