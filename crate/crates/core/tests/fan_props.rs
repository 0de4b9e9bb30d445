mod common;

use std::collections::BTreeSet;

use circulant_mdd::fan::FanContext;
use circulant_mdd::{
    build_coherent_mdd, coherent_fan, coherent_fan_with, enumerate_mdds, lift_network, DistanceTable, EnumMode, Exec,
    TiePolicy, WallVerdict,
};
use common::network;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fan_matches_coherent_enumeration(net in network(4, 50, 3)) {
        let t = DistanceTable::new(&net);
        let fan = coherent_fan(&t).unwrap();
        let coh = enumerate_mdds(&t, EnumMode::CoherentOnly, Some(5_000_000)).unwrap();
        prop_assert_eq!(&fan.mdds, &coh.mdds);
        prop_assert_eq!(fan.mdd_count, fan.walls.len().max(1));
        prop_assert!(fan.mdd_count <= fan.hilbert_total);
        prop_assert_eq!(fan.sector_representatives.len(), fan.mdd_count);
        let from_sectors: BTreeSet<_> = fan
            .sector_representatives
            .iter()
            .map(|w| build_coherent_mdd(&t, w, TiePolicy::Error).unwrap())
            .collect();
        prop_assert_eq!(from_sectors.len(), fan.mdd_count);
    }

    #[test]
    fn walls_come_from_candidates(net in network(4, 50, 3)) {
        let t = DistanceTable::new(&net);
        let ctx = FanContext::new(&t).unwrap();
        let fan = coherent_fan(&t).unwrap();
        let raw: BTreeSet<Vec<i64>> = ctx.orthogonal_rays().into_iter().map(|c| c.ray).collect();
        let filtered: BTreeSet<Vec<i64>> = ctx.candidate_rays().into_iter().map(|c| c.ray).collect();
        prop_assert!(filtered.is_subset(&raw));
        for w in &fan.walls {
            prop_assert!(filtered.contains(&w.ray));
            prop_assert_eq!(w.ray.iter().sum::<i64>(), 0);
            prop_assert_eq!(w.witness.iter().zip(&w.ray).map(|(a, b)| a * b).sum::<i64>(), 0);
        }
        prop_assert!(fan.walls.len() <= ctx.hilbert_bases().iter().map(|b| b.elements.len()).sum::<usize>());
    }

    #[test]
    fn lifts_realise_every_candidate(net in network(4, 30, 3)) {
        let n = net.n();
        let Ok(big) = lift_network(&net, n + 1, 1) else { return Ok(()); };
        let t = DistanceTable::new(&big);
        let ctx = FanContext::new(&t).unwrap();
        let fan = coherent_fan(&t).unwrap();
        let walls: BTreeSet<Vec<i64>> = fan.walls.iter().map(|w| w.ray.clone()).collect();
        let verified: BTreeSet<Vec<i64>> = ctx
            .candidate_rays()
            .iter()
            .filter_map(|c| match ctx.verify_wall(c) {
                WallVerdict::Wall(w) => Some(w.ray),
                WallVerdict::Rejected(_) => None,
            })
            .collect();
        prop_assert_eq!(walls, verified);
    }

    #[test]
    fn fan_exec_strategies_agree(net in network(4, 60, 3)) {
        let t = DistanceTable::new(&net);
        prop_assert_eq!(
            coherent_fan_with(&t, Exec::Sequential).unwrap(),
            coherent_fan_with(&t, Exec::Parallel).unwrap()
        );
    }
}
