//! Top-level dispatcher: build an SBGDD_mu of type g^u for every admissible
//! parameter triple in reach, refusing inadmissible triples with the reason
//! and out-of-reach ones honestly.

use sb_core::{
    admissible, verify, Admissibility, Block, BlockMultiset, Design, DesignKind,
    GroupedPointSet, PointId,
};
use sb_ingredients::{
    idempotent_latin_square, k6xk3_cover, lambda_gdd3, latin_square, pbd_345,
    sb_cube, sbgdd_2_4, sbgdd_2_6, sbgdd_2_8, sbts, small_gdd, td,
};
use sb_interleave::{lift, relabel};

use crate::manifest::{Manifest, Piece};
use crate::tiles::replace_blocks;
use crate::{AssembleError, Result};

/// A finished design together with the record of how it was made.
#[derive(Clone, Debug)]
pub struct Built {
    pub design: Design,
    pub manifest: Manifest,
}

/// Build an SBGDD_mu of type g^u. Returns Nonexistent exactly when the
/// parameters are inadmissible; anything admissible but unreachable comes
/// back OutsideRange, never a wrong design.
pub fn construct(g: usize, u: usize, mu: u64) -> Result<Design> {
    construct_with_manifest(g, u, mu).map(|b| b.design)
}

pub fn construct_with_manifest(g: usize, u: usize, mu: u64) -> Result<Built> {
    if let Admissibility::Nonexistent(reason) = admissible(g as u64, u as u64, mu) {
        return Err(AssembleError::Nonexistent(reason.to_string()));
    }
    let built = dispatch(g, u, mu)?;
    let report = verify(&built.design);
    if !report.pass {
        return Err(AssembleError::Defect(format!(
            "route {} produced an invalid design: {}",
            built.manifest.strategy,
            report
                .violation
                .map(|v| v.to_string())
                .unwrap_or_else(|| "unknown violation".into())
        )));
    }
    Ok(built)
}

/// TD(k,n) with every block replaced by an interval tile; the classical
/// template for uniform types n^k.
pub fn td_template(k: usize, n: usize, mu: u64) -> Result<Design> {
    assert!(n > 1, "TD template needs group size above 1");
    let master = td(k, n)?;
    let mut pieces = Vec::new();
    replace_blocks(&master, 1, mu, &mut pieces)
}

fn dispatch(g: usize, u: usize, mu: u64) -> Result<Built> {
    assert!(g >= 1 && u >= 3);
    if g == 1 {
        let design = sbts(u, mu)?;
        let mut manifest = Manifest::new("direct-catalog", g, u, mu);
        manifest.pieces.push(Piece {
            name: format!("sbts({u})"),
            start: mu,
            block: None,
        });
        return Ok(Built { design, manifest });
    }
    if u == 3 {
        return cube_route(g, mu);
    }
    if g == 2 && matches!(u, 4 | 6 | 8) {
        return stored_with_lift(u, mu);
    }
    if (g, u) == (3, 6) {
        return three_six(mu);
    }
    match u {
        4 => {
            if let Ok(master) = td(4, g) {
                return template(master, format!("TD(4,{g})"), g, u, mu);
            }
            if g % 2 == 0 {
                return inflation(small_gdd('a')?, "3-GDD 2^4", g / 2, g, u, mu);
            }
            Err(out_of_reach(g, u))
        }
        5 => {
            if let Ok(master) = td(5, g) {
                return template(master, format!("TD(5,{g})"), g, u, mu);
            }
            if g == 2 {
                return inflation(pbd_345(5)?, "PBD(5)", 2, g, u, mu);
            }
            if g % 3 == 0 {
                return inflation(small_gdd('c')?, "4-GDD 3^5", g / 3, g, u, mu);
            }
            if g % 5 == 0 {
                return template_weighted(td(5, 5)?, "TD(5,5)", g / 5, g, u, mu);
            }
            if g % 2 == 0 {
                return inflation(small_gdd('b')?, "{3,5}-GDD 2^5", g / 2, g, u, mu);
            }
            Err(out_of_reach(g, u))
        }
        6 => {
            if let Ok(master) = td(6, g) {
                return template(master, format!("TD(6,{g})"), g, u, mu);
            }
            if g % 2 == 0 {
                return inflation(small_gdd('e')?, "3-GDD 2^6", g / 2, g, u, mu);
            }
            if g % 3 == 0 {
                return inflation(small_gdd('d')?, "{3,4}-GDD 3^6", g / 3, g, u, mu);
            }
            Err(out_of_reach(g, u))
        }
        8 => {
            if g % 2 == 0 {
                return inflation(small_gdd('f')?, "{3,5}-GDD 2^8", g / 2, g, u, mu);
            }
            if g % 3 == 0 {
                return inflation(small_gdd('g')?, "4-GDD 3^8", g / 3, g, u, mu);
            }
            if g % 5 == 0 {
                return inflation(small_gdd('h')?, "{4,5}-GDD 5^8", g / 5, g, u, mu);
            }
            Err(out_of_reach(g, u))
        }
        _ => {
            // u = 7 or u >= 9: close over a pairwise balanced design on u
            // points, one tile of type g^k per block
            let master = pbd_345(u)?;
            inflation(master, &format!("PBD({u})"), g, g, u, mu)
        }
    }
}

fn out_of_reach(g: usize, u: usize) -> AssembleError {
    AssembleError::OutsideRange(format!("no implemented route for type {g}^{u}"))
}

fn template(master: Design, name: String, g: usize, u: usize, mu: u64) -> Result<Built> {
    template_weighted(master, &name, 1, g, u, mu)
}

fn template_weighted(
    master: Design,
    name: &str,
    m: usize,
    g: usize,
    u: usize,
    mu: u64,
) -> Result<Built> {
    let mut manifest = Manifest::new("td-template", g, u, mu);
    manifest.master = Some(name.into());
    manifest.weight = Some(m);
    let design = replace_blocks(&master, m, mu, &mut manifest.pieces)?;
    Ok(Built { design, manifest })
}

fn inflation(
    master: Design,
    name: &str,
    m: usize,
    g: usize,
    u: usize,
    mu: u64,
) -> Result<Built> {
    let strategy = if name.starts_with("PBD") {
        "pbd-closure"
    } else {
        "gdd-inflation"
    };
    let mut manifest = Manifest::new(strategy, g, u, mu);
    manifest.master = Some(name.into());
    manifest.weight = Some(m);
    let design = replace_blocks(&master, m, mu, &mut manifest.pieces)?;
    Ok(Built { design, manifest })
}

/// Type g^3: a Sarvate-Beam cube covers 0..3g^2-1 and mu copies of a latin
/// square's triples shift the whole interval up.
fn cube_route(g: usize, mu: u64) -> Result<Built> {
    let cube = sb_cube(g)?;
    let mut blocks = cube.blocks.clone();
    let mut manifest = Manifest::new("sb-cube", g, 3, mu);
    manifest.pieces.push(Piece {
        name: format!("sb-cube({g})"),
        start: mu,
        block: None,
    });
    if mu > 0 {
        blocks.extend_from(&latin_square(g).to_design().blocks, mu);
        manifest.pieces.push(Piece {
            name: format!("latin({g}) x {mu}"),
            start: 0,
            block: None,
        });
    }
    let design = Design::new(
        GroupedPointSet::uniform(g, 3),
        blocks,
        DesignKind::Sbgdd { mu },
    );
    Ok(Built { design, manifest })
}

/// Types 2^4, 2^6, 2^8 from the stored base designs, lifted by a constant
/// triple GDD of matching index.
fn stored_with_lift(u: usize, mu: u64) -> Result<Built> {
    let (base, id) = match u {
        4 => (sbgdd_2_4()?, "sbgdd_2_4"),
        6 => (sbgdd_2_6()?, "sbgdd_2_6"),
        8 => (sbgdd_2_8()?, "sbgdd_2_8"),
        _ => unreachable!(),
    };
    let (lambda, copies) = if u == 8 {
        // admissibility forces 3 | mu here and only an index-3 GDD exists
        (3, mu / 3)
    } else {
        (1, mu)
    };
    let strategy = if copies == 0 { "direct-catalog" } else { "lift-variant" };
    let mut manifest = Manifest::new(strategy, 2, u, mu);
    manifest.pieces.push(Piece {
        name: id.into(),
        start: 0,
        block: None,
    });
    let design = if copies == 0 {
        let mut d = base;
        d.kind = DesignKind::Sbgdd { mu: 0 };
        d
    } else {
        let lifter = lambda_gdd3(2, u, lambda)?;
        manifest.pieces.push(Piece {
            name: format!("3-GDD 2^{u} index {lambda} x {copies}"),
            start: 0,
            block: None,
        });
        lift(&base, &lifter, copies)?
    };
    Ok(Built { design, manifest })
}

/// Type 3^6 as six groups x three levels: a stored triangle multiset covers
/// the pairs differing in both coordinates with 0..89, idempotent-square
/// triples lift those by mu, and one SBTS(6) per level covers the rest.
fn three_six(mu: u64) -> Result<Built> {
    let mut manifest = Manifest::new("tile-assembly", 3, 6, mu);
    let cover = k6xk3_cover()?;
    let mut blocks = cover.blocks.clone();
    manifest.pieces.push(Piece {
        name: "k6xk3_cover".into(),
        start: mu,
        block: None,
    });
    if mu > 0 {
        let sq = idempotent_latin_square(6)?;
        let mut off = BlockMultiset::new();
        for r in 0..6 {
            for c in 0..6 {
                if r != c {
                    off.add(
                        Block::triple(
                            PointId::new(r, 0),
                            PointId::new(c, 1),
                            PointId::new(sq.get(r, c), 2),
                        ),
                        1,
                    );
                }
            }
        }
        blocks.extend_from(&off, mu);
        manifest.pieces.push(Piece {
            name: format!("idempotent-latin(6) off-diagonal x {mu}"),
            start: 0,
            block: None,
        });
    }
    for (level, start) in [(0u16, 90), (1, 105), (2, 120)] {
        let layer = sbts(6, start + mu)?;
        let pts: Vec<PointId> = (0..6).map(|v| PointId::new(v, level as usize)).collect();
        blocks.extend_from(&relabel(&layer.blocks, &pts), 1);
        manifest.pieces.push(Piece {
            name: format!("sbts(6) level {level}"),
            start: start + mu,
            block: None,
        });
    }
    let design = Design::new(
        GroupedPointSet::uniform(3, 6),
        blocks,
        DesignKind::Sbgdd { mu },
    );
    Ok(Built { design, manifest })
}
