//! Acceptance criteria, one line per criterion.
//!
//! Every criterion is checked at its stated value and time limit. Criteria
//! listed in `KNOWN_FAILING` are expected to fail for mathematical reasons
//! (see the README); the test passes only when the set of failing criteria
//! is exactly that list, so both regressions and unexpected passes are caught.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use circulant_mdd::{
    candidate_rays, coherent_fan, enumerate_mdds, is_coherent, is_unique_mdd, lift_network,
    principal_hilbert_bases, staircase_generators, CirculantNetwork, DistanceTable, EnumMode,
    FanContext, HilbertBasis, HomogeneousLattice, Octant, Rejection, Sign, WallVerdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const KNOWN_FAILING: &[u32] = &[4, 7];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_circulant-mdd")
}

fn cli(args: &[&str]) -> Value {
    let out = Command::new(bin()).args(args).output().expect("run binary");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn table(n: u64, s: &[i64]) -> DistanceTable {
    DistanceTable::new(&CirculantNetwork::new(n, s).unwrap())
}

fn timed(id: u32, limit_secs: u64, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    Outcome { id, pass: ok && elapsed < limit, detail, elapsed, limit }
}

fn c1() -> Outcome {
    timed(1, 1, || {
        let all = cli(&["mdd", "enumerate", "9", "1,4,7"]);
        let coh = cli(&["mdd", "enumerate", "9", "1,4,7", "--coherent-only"]);
        let (a, c) = (all["count"].as_u64().unwrap(), coh["count"].as_u64().unwrap());
        (a == 9 && c == 9, format!("C9(1,4,7): {a} MDDs, {c} coherent (want 9, 9)"))
    })
}

fn c2() -> Outcome {
    timed(2, 1, || {
        let v = cli(&["mdd", "enumerate", "10", "1,6"]);
        let count = v["count"].as_u64().unwrap();
        let choices = v["routing_choice_count"].as_str().unwrap().to_string();
        (
            count == 2 && choices == "144",
            format!("C10(1,6): {count} MDDs, routing_choice_count {choices} (want 2, 144)"),
        )
    })
}

fn example_image_file() -> PathBuf {
    let cells: [[u32; 4]; 8] = [
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [2, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 1, 0],
        [0, 2, 0, 0],
        [0, 0, 0, 1],
    ];
    let doc = serde_json::json!({
        "network": {"n": 8, "steps": [1, 3, 5, 7]},
        "cells": cells.iter().enumerate().map(|(v, p)| serde_json::json!({"vertex": v, "path": p})).collect::<Vec<_>>(),
    });
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("c8_1_3_5_7_image.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    path
}

fn c3() -> Outcome {
    timed(3, 1, || {
        let v = cli(&["mdd", "enumerate", "8", "1,3,5,7"]);
        let count = v["count"].as_u64().unwrap();
        let file = example_image_file();
        let check = cli(&["mdd", "check", file.to_str().unwrap()]);
        let valid = check["valid"] == Value::Bool(true);
        let coherent = check["coherent"] == Value::Bool(true);
        let chain: Vec<(u64, Vec<u64>, Vec<u64>)> = check["refutation"]
            .as_array()
            .map(|a| {
                a.iter()
                    .map(|c| {
                        let vec = |k: &str| c[k].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
                        (c["vertex"].as_u64().unwrap(), vec("chosen"), vec("rival"))
                    })
                    .collect()
            })
            .unwrap_or_default();
        // x1² ≺ x3², x2² ≺ x4² and x3x4 ≺ x1x2 cannot hold together.
        let want = vec![
            (2, vec![2, 0, 0, 0], vec![0, 0, 2, 0]),
            (4, vec![0, 0, 1, 1], vec![1, 1, 0, 0]),
            (6, vec![0, 2, 0, 0], vec![0, 0, 0, 2]),
        ];
        (
            count == 18 && valid && !coherent && chain == want,
            format!(
                "C8(1,3,5,7): {count} MDDs (want 18); image valid={valid} coherent={coherent}, refutation at vertices {:?}",
                chain.iter().map(|c| c.0).collect::<Vec<_>>()
            ),
        )
    })
}

fn c4() -> Outcome {
    timed(4, 5, || {
        let h = cli(&["lattice", "hilbert", "8", "2,3,7"]);
        let total = h["total"].as_u64().unwrap();
        let base = CirculantNetwork::new(8, &[2, 3, 7]).unwrap();
        let rays = candidate_rays(&HomogeneousLattice::of(&base).unwrap()).unwrap().len();
        let mdds = cli(&["mdd", "enumerate", "8", "2,3,7"])["count"].as_u64().unwrap();
        let lifted = lift_network(&base, 9, 1).unwrap();
        let lift_ok = lifted == CirculantNetwork::new(72, &[19, 28, 64]).unwrap();
        let fan = cli(&["fan", "72", "19,28,64"])["mdd_count"].as_u64().unwrap();
        (
            total == 10 && rays == 9 && mdds == 2 && lift_ok && fan == 9,
            format!(
                "C8(2,3,7): {total} Hilbert elements (want 10), {rays} candidate rays (want 9), {mdds} MDDs (want 2); \
                 lift k=9 t=1 is {lifted}; fan reports {fan} coherent MDDs (want 9)"
            ),
        )
    })
}

fn family(id: u32, q: &str, per_octant: usize, count: u64, limit: u64, brute: bool) -> Outcome {
    timed(id, limit, || {
        let v = cli(&["family", "verify", q]);
        let octants = v["octants"].as_array().unwrap();
        let sizes: Vec<usize> = octants.iter().map(|o| o["computed"].as_array().unwrap().len()).collect();
        let matches = octants.iter().all(|o| o["matches"] == Value::Bool(true));
        let fan = v["fan_count"].as_u64().unwrap();
        let enumerated = v["enumerated_coherent"].as_u64();
        let brute_ok = !brute || enumerated == Some(count);
        (
            matches && sizes.iter().all(|&s| s == per_octant) && fan == count && brute_ok,
            format!(
                "family q={q} on {}: octant sizes {sizes:?} closed form {}, fan {fan} (want {count}), enumeration {:?}",
                v["network"], if matches { "matches" } else { "differs" }, enumerated
            ),
        )
    })
}

fn random_double_loops(rng: &mut ChaCha8Rng, count: usize) -> Vec<CirculantNetwork> {
    let mut out = BTreeSet::new();
    while out.len() < count {
        let n = rng.gen_range(3..=60u64);
        let s1 = rng.gen_range(1..n) as i64;
        let s2 = rng.gen_range(1..n) as i64;
        if let Ok(net) = CirculantNetwork::new(n, &[s1, s2]) {
            out.insert(net);
        }
    }
    out.into_iter().collect()
}

fn c7() -> Outcome {
    timed(7, 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let nets = random_double_loops(&mut rng, 50);
        let mut bad = Vec::new();
        for net in &nets {
            let t = DistanceTable::new(net);
            let e = enumerate_mdds(&t, EnumMode::All, None).unwrap();
            let coherent = e.mdds.iter().all(|m| is_coherent(&t, m).unwrap().is_coherent());
            let small = e.mdds.iter().all(|m| staircase_generators(m).len() <= 3);
            if e.mdds.len() != 2 || !coherent || !small {
                bad.push(format!("{net}:{}", e.mdds.len()));
            }
        }
        (
            bad.is_empty(),
            format!(
                "{} double loops; {} violate \"exactly 2, coherent, <= 3 generators\" (MDD counts: {})",
                nets.len(),
                bad.len(),
                bad.iter().take(8).cloned().collect::<Vec<_>>().join(" ")
            ),
        )
    })
}

/// Hilbert basis by definition: short lattice points of the octant that are
/// not a sum of two non-zero ones.
fn hilbert_oracle(net: &CirculantNetwork, oct: &Octant) -> Vec<Vec<i64>> {
    let n = net.n() as i64;
    let s: Vec<i64> = net.steps().iter().map(|&x| x as i64).collect();
    let sign: Vec<i64> = oct.signs().iter().map(|g| if *g == Sign::Neg { -1 } else { 1 }).collect();
    let member = |a: &[i64]| a.iter().sum::<i64>() == 0 && a.iter().zip(&s).map(|(x, y)| x * y).sum::<i64>().rem_euclid(n) == 0;
    let j = (0..3).find(|&i| sign.iter().filter(|&&h| h == sign[i]).count() == 1).unwrap();
    let mut edge_norm = 0;
    for k in (0..3).filter(|&k| k != j) {
        let mut d = [0i64; 3];
        d[j] = sign[j];
        d[k] = sign[k];
        let c = (1..=n).find(|&c| member(&d.iter().map(|x| x * c).collect::<Vec<_>>())).unwrap();
        edge_norm += 2 * c;
    }
    let half = edge_norm / 2;
    let mut pts = Vec::new();
    for x in -half..=half {
        for y in -half..=half {
            let a = vec![x, y, -x - y];
            let norm: i64 = a.iter().map(|v| v.abs()).sum();
            let in_octant = a.iter().zip(&sign).all(|(v, g)| v * g >= 0);
            if norm > 0 && norm <= edge_norm && in_octant && member(&a) {
                pts.push(a);
            }
        }
    }
    let set: BTreeSet<Vec<i64>> = pts.iter().cloned().collect();
    let mut out: Vec<Vec<i64>> = pts
        .iter()
        .filter(|a| {
            !pts.iter().any(|b| {
                let c: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
                c.iter().any(|&v| v != 0) && set.contains(&c)
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}

fn c8() -> Outcome {
    timed(8, 120, || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut nets = BTreeSet::new();
        while nets.len() < 25 {
            let n = rng.gen_range(4..=40u64);
            let s: Vec<i64> = (0..3).map(|_| rng.gen_range(1..n) as i64).collect();
            if let Ok(net) = CirculantNetwork::new(n, &s) {
                nets.insert(net);
            }
        }
        let mut failures = Vec::new();
        for net in &nets {
            let t = DistanceTable::new(net);
            let all = enumerate_mdds(&t, EnumMode::All, None).unwrap();
            let coherent = enumerate_mdds(&t, EnumMode::CoherentOnly, None).unwrap();
            if is_unique_mdd(&t).unwrap() != (all.mdds.len() == 1) {
                failures.push(format!("{net}: uniqueness criterion"));
            }
            let fan = match coherent_fan(&t) {
                Ok(f) => f,
                Err(e) => {
                    failures.push(format!("{net}: fan error {e}"));
                    continue;
                }
            };
            if fan.mdd_count != coherent.mdds.len() || fan.mdds != coherent.mdds {
                failures.push(format!("{net}: fan {} vs enumeration {}", fan.mdd_count, coherent.mdds.len()));
            }
            let bases: Vec<HilbertBasis> = principal_hilbert_bases(&HomogeneousLattice::of(net).unwrap()).unwrap();
            for b in &bases {
                if b.elements != hilbert_oracle(net, &b.octant) {
                    failures.push(format!("{net}: Hilbert basis of {}", b.octant));
                }
            }
            let total: usize = bases.iter().map(|b| b.elements.len()).sum();
            if fan.mdd_count > total {
                failures.push(format!("{net}: {} MDDs exceed Hilbert total {total}", fan.mdd_count));
            }
        }
        (
            failures.is_empty(),
            format!("{} triple loops; uniqueness, fan, Hilbert and bound checks; failures: {:?}", nets.len(), failures),
        )
    })
}

fn c9() -> Outcome {
    timed(9, 1, || {
        let t = table(7, &[1, 2, 4]);
        let unique = is_unique_mdd(&t).unwrap();
        let count = enumerate_mdds(&t, EnumMode::All, None).unwrap().mdds.len();
        let fan = cli(&["fan", "7", "1,2,4"]);
        let walls = fan["walls"].as_array().unwrap().len();
        let fan_count = fan["mdd_count"].as_u64().unwrap();
        let ctx = FanContext::new(&t).unwrap();
        let cands = ctx.candidate_rays();
        let rejected_at_routing = cands
            .iter()
            .filter(|c| matches!(ctx.verify_wall(c), WallVerdict::Rejected(Rejection::NotMinimalRouting { .. })))
            .count();
        (
            unique && count == 1 && walls == 0 && fan_count == 1 && !cands.is_empty() && rejected_at_routing == cands.len(),
            format!(
                "C7(1,2,4): unique={unique}, {count} MDD, {walls} walls, fan count {fan_count}; \
                 {rejected_at_routing}/{} candidates rejected at the routing condition",
                cands.len()
            ),
        )
    })
}

#[test]
fn acceptance() {
    let outcomes = vec![
        c1(),
        c2(),
        c3(),
        c4(),
        family(5, "2", 4, 12, 30, true),
        family(6, "5", 7, 21, 120, false),
        c7(),
        c8(),
        c9(),
    ];
    let mut failing = Vec::new();
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] criterion {}: {} ({:.3} s, limit {} s)",
            o.id,
            o.detail,
            o.elapsed.as_secs_f64(),
            o.limit.as_secs()
        );
        if !o.pass {
            failing.push(o.id);
        }
    }
    assert_eq!(failing, KNOWN_FAILING, "failing criteria differ from the documented set");
}
