//! Exhaustive enumeration of MDDs by backtracking.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;

use crate::coherence::is_coherent;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::mdd::Mdd;
use crate::network::DistanceTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumMode {
    #[default]
    All,
    CoherentOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Sorted, duplicate free.
    pub mdds: Vec<Mdd>,
    /// Number of maps satisfying minimality alone, `Π |P_i|`.
    pub routing_choice_count: BigUint,
}

/// `(vertex, index)` of each immediate predecessor of one candidate.
type Preds = Option<Vec<(usize, usize)>>;

/// Per vertex and candidate: the `(vertex, index)` of every immediate
/// predecessor, or `None` when some predecessor is not minimal.
struct Links {
    order: Vec<usize>,
    preds: Vec<Vec<Preds>>,
}

impl Links {
    fn new(table: &DistanceTable) -> Links {
        let net = table.network();
        let n = net.n();
        let preds = table
            .all_paths()
            .iter()
            .enumerate()
            .map(|(v, paths)| {
                paths
                    .iter()
                    .map(|a| {
                        let mut out = Vec::new();
                        for (j, &s) in net.steps().iter().enumerate() {
                            if let Some(b) = a.minus_unit(j) {
                                let u = ((v as u64 + n - s) % n) as usize;
                                let idx = table.paths(u as u64).binary_search(&b).ok()?;
                                out.push((u, idx));
                            }
                        }
                        Some(out)
                    })
                    .collect()
            })
            .collect();
        Links { order: table.vertex_order().into_iter().map(|v| v as usize).collect(), preds }
    }

    fn allowed(&self, v: usize, k: usize, choice: &[usize]) -> bool {
        match &self.preds[v][k] {
            None => false,
            Some(ps) => ps.iter().all(|&(u, idx)| choice[u] == idx),
        }
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    links: &'a Links,
    nodes: &'a AtomicU64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.budget {
            Some(b) if seen > b => Err(Error::BudgetExceeded { budget: b }),
            _ => Ok(()),
        }
    }

    fn dfs(&self, pos: usize, choice: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        if pos == self.links.order.len() {
            out.push(choice.clone());
            return Ok(());
        }
        let v = self.links.order[pos];
        for k in 0..self.links.preds[v].len() {
            if self.links.allowed(v, k, choice) {
                self.tick()?;
                choice[v] = k;
                self.dfs(pos + 1, choice, out)?;
                choice[v] = UNSET;
            }
        }
        Ok(())
    }

    /// Breadth-first expansion until there are enough independent subtrees.
    fn frontier(&self, target: usize) -> Result<(usize, Vec<Vec<usize>>)> {
        let n = self.links.order.len();
        let mut pos = 0;
        let mut level = vec![vec![UNSET; n]];
        while pos < n && level.len() < target {
            let v = self.links.order[pos];
            let mut next = Vec::new();
            for choice in &level {
                for k in 0..self.links.preds[v].len() {
                    if self.links.allowed(v, k, choice) {
                        self.tick()?;
                        let mut c = choice.clone();
                        c[v] = k;
                        next.push(c);
                    }
                }
            }
            level = next;
            pos += 1;
        }
        Ok((pos, level))
    }
}

pub fn enumerate_mdds(table: &DistanceTable, mode: EnumMode, budget: Option<u64>) -> Result<Enumeration> {
    enumerate_mdds_with(table, mode, budget, Exec::default())
}

pub fn enumerate_mdds_with(
    table: &DistanceTable,
    mode: EnumMode,
    budget: Option<u64>,
    exec: Exec,
) -> Result<Enumeration> {
    let links = Links::new(table);
    let nodes = AtomicU64::new(0);
    let search = Search { links: &links, nodes: &nodes, budget };
    let target = match exec {
        Exec::Sequential => 1,
        Exec::Parallel => 64,
    };
    let (pos, frontier) = search.frontier(target)?;
    let found = exec.try_map(&frontier, |start| {
        let mut out = Vec::new();
        search.dfs(pos, &mut start.clone(), &mut out)?;
        Ok::<_, Error>(out)
    })?;
    let net = table.network();
    let mut mdds: Vec<Mdd> = found
        .into_iter()
        .flatten()
        .map(|choice| {
            let cells = choice
                .iter()
                .enumerate()
                .map(|(v, &k)| table.paths(v as u64)[k].clone())
                .collect();
            Mdd::from_parts(net.clone(), cells)
        })
        .collect();
    if mode == EnumMode::CoherentOnly {
        let keep = exec.try_map(&mdds, |m| is_coherent(table, m).map(|c| c.is_coherent()))?;
        mdds = mdds.into_iter().zip(keep).filter(|(_, k)| *k).map(|(m, _)| m).collect();
    }
    mdds.sort();
    mdds.dedup();
    Ok(Enumeration { mdds, routing_choice_count: table.routing_choice_count() })
}
