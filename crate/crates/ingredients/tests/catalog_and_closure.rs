//! Catalog integrity and closure of the ingredient families used by the
//! assembler.

use sb_core::{pair_frequencies, verify};
use sb_ingredients::{
    catalog, certify_sbts4_0_infeasible, igdd3_5, k6xk3_cover, lambda_gdd3, pbd_345, sb_cube,
    sbts, td, IngredientError,
};

#[test]
fn catalog_loads_and_every_entry_checks() {
    let cat = catalog::global().expect("catalog loads");
    assert_eq!(cat.len(), 29);
    for e in cat.iter() {
        catalog::check_entry(e.id, &e.design)
            .unwrap_or_else(|m| panic!("{}: {m}", e.id));
    }
}

#[test]
fn appendix_designs_have_the_published_sizes() {
    for (id, triples) in [
        ("sbgdd_2_4", 92u64),
        ("isbgdd_2_5", 245),
        ("sbgdd_2_6", 590),
        ("sbgdd_2_8", 2072),
    ] {
        let d = catalog::global().unwrap().design(id).unwrap();
        assert_eq!(d.blocks.total_multiplicity(), triples, "{id}");
    }
}

#[test]
fn k6xk3_cover_spans_ninety_values() {
    let d = k6xk3_cover().unwrap();
    assert_eq!(d.blocks.total_multiplicity(), 1335);
    let f = pair_frequencies(&d.blocks, &d.grouping).unwrap();
    let mut nonzero_span: Vec<u64> = f
        .iter()
        .filter(|(&(a, b), _)| a.slot != b.slot)
        .map(|(_, &v)| v)
        .collect();
    nonzero_span.sort_unstable();
    assert_eq!(nonzero_span, (0..90).collect::<Vec<u64>>());
}

#[test]
fn cubes_have_the_known_entry_sums() {
    for (n, triples) in [(2usize, 22u64), (3, 117), (4, 376)] {
        let d = sb_cube(n).unwrap();
        assert!(verify(&d).pass);
        assert_eq!(d.blocks.total_multiplicity(), triples);
    }
}

#[test]
fn order_one_cube_is_refused() {
    assert!(matches!(sb_cube(1), Err(IngredientError::Nonexistent(_))));
}

#[test]
fn pbd_closure_covers_the_range() {
    for u in (3..=30).filter(|u| ![6, 8].contains(u)) {
        let d = pbd_345(u).unwrap_or_else(|e| panic!("PBD({u}): {e}"));
        assert!(verify(&d).pass, "PBD({u})");
    }
    for u in [6usize, 8] {
        assert!(matches!(pbd_345(u), Err(IngredientError::Nonexistent(_))));
    }
}

#[test]
fn triple_system_family_is_complete_up_to_twelve() {
    for v in 4..=12usize {
        for mu in 0..=6u64 {
            let admissible = sb_core::sbts_admissible(v as u64, mu).is_admissible();
            match sbts(v, mu) {
                Ok(d) => {
                    assert!(admissible, "sbts({v},{mu}) should not exist");
                    assert!(verify(&d).pass, "sbts({v},{mu})");
                }
                Err(IngredientError::Nonexistent(_)) => assert!(!admissible),
                Err(e) => panic!("sbts({v},{mu}): {e}"),
            }
        }
    }
}

#[test]
fn no_interval_from_zero_on_four_points() {
    assert!(certify_sbts4_0_infeasible());
}

#[test]
fn constant_index_gdds_verify() {
    for (m, u, lambda) in [
        (2usize, 4usize, 1u64),
        (4, 4, 1),
        (3, 5, 1),
        (2, 6, 1),
        (2, 8, 3),
        (6, 5, 1),
    ] {
        let d = lambda_gdd3(m, u, lambda).unwrap();
        assert!(verify(&d).pass, "({m},{u},{lambda})");
    }
}

#[test]
fn incomplete_gdds_leave_the_hole_open() {
    for m in [2usize, 4, 5, 7] {
        let d = igdd3_5(m).unwrap();
        assert!(verify(&d).pass, "({m};1)^5");
    }
}

#[test]
fn transversal_designs_from_fields_products_and_stored_squares() {
    for (k, n) in [(4usize, 3usize), (4, 9), (4, 10), (5, 7), (6, 7), (4, 15)] {
        let d = td(k, n).unwrap();
        assert!(verify(&d).pass, "TD({k},{n})");
    }
    assert!(matches!(td(4, 6), Err(IngredientError::Nonexistent(_))));
}
