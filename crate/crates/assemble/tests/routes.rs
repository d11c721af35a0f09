//! End-to-end checks of the dispatcher: one test per construction route,
//! pinning the designs' sizes and intervals.

use sb_assemble::{construct, construct_with_manifest, td_template, AssembleError};
use sb_core::{pair_frequencies, verify, Admissibility};

fn interval_of(d: &sb_core::Design) -> (u64, u64) {
    let f = pair_frequencies(&d.blocks, &d.grouping).unwrap();
    let v = f.value_multiset();
    (v[0], *v.last().unwrap())
}

#[test]
fn stored_two_group_designs() {
    for (u, triples, end) in [(4usize, 92u64, 23u64), (6, 590, 59), (8, 2072, 111)] {
        let d = construct(2, u, 0).unwrap();
        assert!(verify(&d).pass);
        assert_eq!(d.blocks.total_multiplicity(), triples, "2^{u}");
        assert_eq!(interval_of(&d), (0, end));
    }
}

#[test]
fn two_five_is_incomplete_plus_hole_filling() {
    let d = construct(2, 5, 0).unwrap();
    assert!(verify(&d).pass);
    assert_eq!(d.blocks.total_multiplicity(), 260);
    assert_eq!(interval_of(&d), (0, 39));
}

#[test]
fn stored_designs_lift() {
    for (u, mu) in [(4usize, 3u64), (6, 5), (8, 6)] {
        let d = construct(2, u, mu).unwrap();
        assert!(verify(&d).pass);
        let len = 4 * (u * (u - 1) / 2) as u64;
        assert_eq!(interval_of(&d), (mu, mu + len - 1));
    }
}

#[test]
fn cube_route_with_lift() {
    for g in 2..=6 {
        for mu in [0u64, 4] {
            let d = construct(g, 3, mu).unwrap();
            assert!(verify(&d).pass);
            assert_eq!(interval_of(&d), (mu, mu + 3 * (g * g) as u64 - 1));
        }
    }
}

#[test]
fn td_templates_on_seven_groups() {
    for k in [4usize, 5, 6] {
        let d = td_template(k, 7, 0).unwrap();
        assert!(verify(&d).pass);
        let pairs = (k * (k - 1) / 2 * 49) as u64;
        assert_eq!(interval_of(&d), (0, pairs - 1));
    }
}

#[test]
fn fano_tiles_cover_zero_to_eightythree() {
    let b = construct_with_manifest(2, 7, 0).unwrap();
    assert_eq!(b.manifest.strategy, "pbd-closure");
    assert_eq!(interval_of(&b.design), (0, 83));
}

#[test]
fn three_six_layers() {
    for mu in 0..=3 {
        let d = construct(3, 6, mu).unwrap();
        assert!(verify(&d).pass);
        assert_eq!(interval_of(&d), (mu, mu + 134));
    }
}

#[test]
fn gdd_inflation_routes() {
    // orders with no transversal design of the needed width
    for (g, u) in [(6usize, 4usize), (6, 5), (4, 6), (6, 6), (4, 8), (6, 8)] {
        let d = construct(g, u, 0).unwrap();
        assert!(verify(&d).pass, "{g}^{u}");
    }
}

#[test]
fn incomplete_route_beyond_the_sweep() {
    // weight 2 on TD(5,5): size-5 blocks go through the hole machinery
    for mu in [0u64, 3] {
        let d = construct(10, 5, mu).unwrap();
        assert!(verify(&d).pass);
    }
}

#[test]
fn strategy_names() {
    for (g, u, mu, name) in [
        (2usize, 4usize, 0u64, "direct-catalog"),
        (2, 4, 2, "lift-variant"),
        (5, 3, 1, "sb-cube"),
        (4, 4, 0, "td-template"),
        (6, 4, 0, "gdd-inflation"),
        (2, 9, 1, "pbd-closure"),
        (3, 6, 1, "tile-assembly"),
    ] {
        let b = construct_with_manifest(g, u, mu).unwrap();
        assert_eq!(b.manifest.strategy, name, "{g}^{u} mu={mu}");
    }
}

#[test]
fn manifest_replay_reproduces_the_design() {
    let b = construct_with_manifest(4, 8, 3).unwrap();
    let again = b.manifest.replay().unwrap();
    assert_eq!(
        sb_core::format::to_text(&b.design),
        sb_core::format::to_text(&again)
    );
}

#[test]
fn inadmissible_parameters_are_refused_with_reason() {
    for (g, u, mu) in [(1usize, 3usize, 0u64), (1, 4, 0), (2, 5, 1), (4, 8, 2), (5, 11, 4)] {
        match construct(g, u, mu) {
            Err(AssembleError::Nonexistent(_)) => {}
            other => panic!("{g}^{u} mu={mu}: expected refusal, got {other:?}"),
        }
    }
}

#[test]
fn admissibility_matches_constructibility_at_desk_scale() {
    for g in 1..=4usize {
        for u in 3..=9usize {
            for mu in 0..=4u64 {
                let adm = sb_core::admissible(g as u64, u as u64, mu);
                match (adm, construct(g, u, mu)) {
                    (Admissibility::Admissible, Ok(d)) => {
                        assert!(verify(&d).pass, "{g}^{u} mu={mu}")
                    }
                    (Admissibility::Nonexistent(_), Err(AssembleError::Nonexistent(_))) => {}
                    (a, r) => panic!("{g}^{u} mu={mu}: {a:?} vs {r:?}"),
                }
            }
        }
    }
}
