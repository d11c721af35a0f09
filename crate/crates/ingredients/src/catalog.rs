//! Pinned design catalog. Every entry is stored as text, digest-checked and
//! re-verified at load, so a corrupted or edited file cannot slip through.
//! `SB_CATALOG_DIR` points the loader at an external directory, otherwise
//! the copies embedded in the binary are used.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use sb_core::format::{from_text, to_text};
use sb_core::{verify, Design, GroupedPointSet, HoleSpec};
use sb_search::{search_design, SearchOutcome, SearchSpec};
use sha2::{Digest, Sha256};

use crate::cube;
use crate::error::{IngredientError, Result};
use crate::mate;
use crate::sbts;
use crate::smallgdd;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Transcribed from a published block list.
    Published,
    /// Found by the bundled searcher and pinned.
    Searched,
    /// Produced by an algebraic construction and pinned.
    Constructed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Published => "published",
            Provenance::Searched => "searched",
            Provenance::Constructed => "constructed",
        };
        f.write_str(s)
    }
}

macro_rules! entry {
    ($id:literal, $prov:expr) => {
        ($id, $prov, include_str!(concat!("../data/", $id, ".txt")))
    };
}

/// Every pinned entry, with its embedded copy.
const ENTRIES: &[(&str, Provenance, &str)] = &[
    entry!("sbgdd_2_4", Provenance::Published),
    entry!("isbgdd_2_5", Provenance::Published),
    entry!("sbgdd_2_6", Provenance::Published),
    entry!("sbgdd_2_8", Provenance::Published),
    entry!("gdd3_2_4", Provenance::Searched),
    entry!("gdd35_2_5", Provenance::Searched),
    entry!("gdd4_3_5", Provenance::Constructed),
    entry!("gdd34_3_6", Provenance::Searched),
    entry!("gdd3_2_6", Provenance::Searched),
    entry!("gdd35_2_8", Provenance::Searched),
    entry!("gdd4_3_8", Provenance::Constructed),
    entry!("gdd45_5_8", Provenance::Constructed),
    entry!("gdd3_3_5", Provenance::Searched),
    entry!("ts_6_2", Provenance::Searched),
    entry!("sb_cube_2", Provenance::Searched),
    entry!("sb_cube_3", Provenance::Searched),
    entry!("sb_cube_4", Provenance::Searched),
    entry!("sb_cube_5", Provenance::Searched),
    entry!("sb_cube_6", Provenance::Searched),
    entry!("k6xk3_cover", Provenance::Searched),
    entry!("isbgdd_4_5", Provenance::Searched),
    entry!("isbgdd_5_5", Provenance::Searched),
    entry!("igdd1_4_5", Provenance::Searched),
    entry!("igdd1_5_5", Provenance::Searched),
    entry!("pbd_11", Provenance::Searched),
    entry!("pbd_14", Provenance::Searched),
    entry!("sbts_6_0", Provenance::Searched),
    entry!("sbts_6_1", Provenance::Searched),
    entry!("td_4_10", Provenance::Searched),
];

const CHECKSUMS: &str = include_str!("../data/checksums.txt");

pub struct Entry {
    pub id: &'static str,
    pub provenance: Provenance,
    pub design: Design,
}

pub struct Catalog {
    entries: BTreeMap<&'static str, Entry>,
}

impl Catalog {
    pub fn design(&self, id: &str) -> Result<Design> {
        self.entries
            .get(id)
            .map(|e| e.design.clone())
            .ok_or_else(|| IngredientError::Corrupt(format!("no catalog entry named {id}")))
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Entry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn sha256_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_checksums(text: &str) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        if let (Some(sum), Some(name)) = (parts.next(), parts.next()) {
            map.insert(name.trim_end_matches(".txt").to_string(), sum.to_string());
        }
    }
    map
}

/// Entry-specific soundness check run on every load.
pub fn check_entry(id: &str, d: &Design) -> std::result::Result<(), String> {
    match id {
        "k6xk3_cover" => cube::check_k6xk3(d)
            .map_err(|e| format!("catalog entry {id} fails verification: {e}")),
        _ if verify(d).pass => Ok(()),
        _ => Err(format!("catalog entry {id} fails verification")),
    }
}

fn load() -> std::result::Result<Catalog, String> {
    let dir = std::env::var_os("SB_CATALOG_DIR");
    let (sums_text, read) = match &dir {
        Some(d) => {
            let dir = Path::new(d);
            let sums = std::fs::read_to_string(dir.join("checksums.txt"))
                .map_err(|e| format!("cannot read checksums.txt in catalog dir: {e}"))?;
            (sums, Some(dir.to_path_buf()))
        }
        None => (CHECKSUMS.to_string(), None),
    };
    let sums = parse_checksums(&sums_text);
    let mut entries = BTreeMap::new();
    for &(id, provenance, builtin) in ENTRIES {
        let text = match &read {
            Some(dir) => std::fs::read_to_string(dir.join(format!("{id}.txt")))
                .map_err(|e| format!("cannot read catalog entry {id}: {e}"))?,
            None => builtin.to_string(),
        };
        let expect = sums
            .get(id)
            .ok_or_else(|| format!("no checksum recorded for catalog entry {id}"))?;
        let got = sha256_hex(&text);
        if &got != expect {
            return Err(format!(
                "catalog entry {id} digest mismatch: recorded {expect}, file has {got}"
            ));
        }
        let design =
            from_text(&text).map_err(|e| format!("catalog entry {id} does not parse: {e}"))?;
        check_entry(id, &design)?;
        entries.insert(
            id,
            Entry {
                id,
                provenance,
                design,
            },
        );
    }
    Ok(Catalog { entries })
}

static GLOBAL: OnceLock<std::result::Result<Catalog, String>> = OnceLock::new();

pub fn global() -> Result<&'static Catalog> {
    match GLOBAL.get_or_init(load) {
        Ok(c) => Ok(c),
        Err(e) => Err(IngredientError::Corrupt(e.clone())),
    }
}

/// Incomplete Sarvate-Beam GDD of type (m;1)^5: hole pairs stay uncovered,
/// the other cross pairs receive the interval starting at 10.
fn gen_isbgdd_5(m: usize) -> Result<Design> {
    let grouping = GroupedPointSet::uniform(m, 5);
    let hole = HoleSpec::new(grouping.points().filter(|p| p.slot == 0).collect());
    let mut spec = SearchSpec::interval(grouping, 10, 0x15b0 + m as u64);
    spec.hole = Some(hole);
    match search_design(&spec) {
        SearchOutcome::Found(d) => Ok(d),
        _ => Err(IngredientError::OutsideRange(format!(
            "incomplete interval design ({m};1)^5 search failed"
        ))),
    }
}

/// Rebuild one entry from scratch. Published entries are returned verbatim
/// from the embedded copy; everything else is regenerated.
fn generate(id: &str, builtin: &str, provenance: Provenance) -> Result<String> {
    if provenance == Provenance::Published {
        return Ok(builtin.to_string());
    }
    let design = match id {
        "gdd3_2_4" => smallgdd::gen_gdd3_2_4()?,
        "gdd35_2_5" => smallgdd::gen_gdd35_2_5()?,
        "gdd4_3_5" => smallgdd::gen_gdd4_3_5()?,
        "gdd34_3_6" => smallgdd::gen_gdd34_3_6()?,
        "gdd3_2_6" => smallgdd::gen_gdd3_2_6()?,
        "gdd35_2_8" => smallgdd::gen_gdd35_2_8()?,
        "gdd4_3_8" => smallgdd::gen_gdd4_3_8()?,
        "gdd45_5_8" => smallgdd::gen_gdd45_5_8()?,
        "gdd3_3_5" => smallgdd::gen_gdd3_3_5()?,
        "ts_6_2" => sbts::gen_ts_6_2()?,
        "sb_cube_2" => cube::gen_sb_cube(2)?,
        "sb_cube_3" => cube::gen_sb_cube(3)?,
        "sb_cube_4" => cube::gen_sb_cube(4)?,
        "sb_cube_5" => cube::gen_sb_cube(5)?,
        "sb_cube_6" => cube::gen_sb_cube(6)?,
        "k6xk3_cover" => cube::gen_k6xk3_cover()?,
        "isbgdd_4_5" => gen_isbgdd_5(4)?,
        "isbgdd_5_5" => gen_isbgdd_5(5)?,
        "igdd1_4_5" => smallgdd::gen_igdd1_5(4)?,
        "igdd1_5_5" => smallgdd::gen_igdd1_5(5)?,
        "pbd_11" => smallgdd::gen_pbd_base(11, &[3, 4, 5], 101)?,
        "pbd_14" => smallgdd::gen_pbd_base(14, &[3, 4, 5], 141)?,
        "sbts_6_0" => sbts::gen_sbts6_base(0)?,
        "sbts_6_1" => sbts::gen_sbts6_base(1)?,
        "td_4_10" => mate::gen_td_4_10()?,
        _ => {
            return Err(IngredientError::Corrupt(format!(
                "no generator for catalog entry {id}"
            )))
        }
    };
    Ok(to_text(&design))
}

/// Regenerate every entry into `dir`, verifying each, and write a fresh
/// checksums.txt. The data directory of this crate is produced this way.
pub fn regenerate(dir: &Path) -> Result<Vec<(String, Provenance)>> {
    std::fs::create_dir_all(dir)
        .map_err(|e| IngredientError::Corrupt(format!("cannot create {}: {e}", dir.display())))?;
    let mut sums = String::new();
    let mut written = Vec::new();
    for &(id, provenance, builtin) in ENTRIES {
        let text = generate(id, builtin, provenance)?;
        let design = from_text(&text)
            .map_err(|e| IngredientError::Corrupt(format!("regenerated {id} does not parse: {e}")))?;
        check_entry(id, &design).map_err(IngredientError::Corrupt)?;
        let path = dir.join(format!("{id}.txt"));
        std::fs::write(&path, &text)
            .map_err(|e| IngredientError::Corrupt(format!("cannot write {id}: {e}")))?;
        sums.push_str(&format!("{}  {id}.txt\n", sha256_hex(&text)));
        written.push((id.to_string(), provenance));
    }
    std::fs::write(dir.join("checksums.txt"), sums)
        .map_err(|e| IngredientError::Corrupt(format!("cannot write checksums.txt: {e}")))?;
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads_and_verifies() {
        let cat = global().expect("catalog loads");
        assert_eq!(cat.len(), ENTRIES.len());
        for e in cat.iter() {
            assert!(check_entry(e.id, &e.design).is_ok());
        }
    }

    #[test]
    fn digest_tampering_is_detected() {
        let text = ENTRIES[0].2;
        let mut corrupted = text.to_string();
        corrupted.push('\n');
        assert_ne!(sha256_hex(text), sha256_hex(&corrupted));
    }
}
