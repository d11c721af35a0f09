use crate::types::{
    Block, BlockMultiset, Design, DesignKind, GroupedPointSet, HoleSpec, PointId,
};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Bad { line: usize, message: String },
    #[error("empty input")]
    Empty,
}

fn bad(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Bad {
        line,
        message: message.into(),
    }
}

/// Label for a point: group letter plus prime marks (the convention used for
/// small designs), falling back to `g<group>.<slot>` past 26 groups.
pub fn point_label(grouping: &GroupedPointSet, p: PointId) -> String {
    if grouping.num_groups() <= 26 {
        let letter = (b'a' + p.group as u8) as char;
        let primes = "'".repeat(p.slot as usize);
        format!("{letter}{primes}")
    } else {
        format!("g{}.{}", p.group, p.slot)
    }
}

fn parse_label(s: &str) -> Option<PointId> {
    if let Some(rest) = s.strip_prefix('g') {
        if let Some((g, sl)) = rest.split_once('.') {
            if let (Ok(g), Ok(sl)) = (g.parse::<u16>(), sl.parse::<u16>()) {
                return Some(PointId { group: g, slot: sl });
            }
        }
    }
    let mut chars = s.chars();
    let first = chars.next()?;
    if !first.is_ascii_lowercase() {
        return None;
    }
    let rest: String = chars.collect();
    if !rest.chars().all(|c| c == '\'') {
        return None;
    }
    Some(PointId::new((first as u8 - b'a') as usize, rest.len()))
}

fn kind_header(kind: &DesignKind) -> (String, u64) {
    match kind {
        DesignKind::Sbgdd { mu } => ("sbgdd".into(), *mu),
        DesignKind::Sbts { mu } => ("sbts".into(), *mu),
        DesignKind::SbCube => ("sbcube".into(), 0),
        DesignKind::Gdd { lambda, sizes } => (
            format!(
                "gdd{{{}}}",
                sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
            ),
            *lambda,
        ),
        DesignKind::Pbd { sizes } => (
            format!(
                "pbd{{{}}}",
                sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
            ),
            1,
        ),
        DesignKind::Td { k } => (format!("td{k}"), 1),
        DesignKind::Igdd { lambda, .. } => ("igdd".into(), *lambda),
        DesignKind::IncompleteSbgdd { mu, .. } => ("isbgdd".into(), *mu),
    }
}

fn hole_of(kind: &DesignKind) -> Option<&HoleSpec> {
    match kind {
        DesignKind::Igdd { hole, .. } | DesignKind::IncompleteSbgdd { hole, .. } => Some(hole),
        _ => None,
    }
}

/// Canonical text rendering: header `kind type mu-or-lambda`, one line per
/// group listing point labels (hole points marked `*`), then one line per
/// block `multiplicity p1 p2 p3 [p4 p5]` in canonical block order.
pub fn to_text(d: &Design) -> String {
    let (kind, param) = kind_header(&d.kind);
    let hole = hole_of(&d.kind);
    let mut out = format!("{kind} {} {param}\n", d.grouping.type_string());
    for (g, &size) in d.grouping.group_sizes().iter().enumerate() {
        let labels: Vec<String> = (0..size)
            .map(|s| {
                let p = PointId::new(g, s);
                let star = hole.map(|h| h.contains(p)).unwrap_or(false);
                format!("{}{}", point_label(&d.grouping, p), if star { "*" } else { "" })
            })
            .collect();
        out.push_str(&format!("group {}\n", labels.join(" ")));
    }
    for (b, &m) in d.blocks.iter() {
        let labels: Vec<String> = b
            .points()
            .iter()
            .map(|&p| point_label(&d.grouping, p))
            .collect();
        out.push_str(&format!("{m} {}\n", labels.join(" ")));
    }
    out
}

/// Parse the canonical text format back into a design.
pub fn from_text(text: &str) -> Result<Design, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hno, header) = lines.next().ok_or(ParseError::Empty)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(bad(hno + 1, "header must be `kind type mu/lambda`"));
    }
    let kind_tok = parts[0];
    let param: u64 = parts[2]
        .parse()
        .map_err(|_| bad(hno + 1, "mu/lambda must be an integer"))?;

    let mut group_sizes: Vec<usize> = Vec::new();
    let mut holes: Vec<PointId> = Vec::new();
    let mut label_map: HashMap<String, PointId> = HashMap::new();
    let mut block_lines: Vec<(usize, &str)> = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("group ") {
            let g = group_sizes.len();
            let mut size = 0usize;
            for tok in rest.split_whitespace() {
                let (name, is_hole) = match tok.strip_suffix('*') {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let p = PointId::new(g, size);
                label_map.insert(name.to_string(), p);
                if is_hole {
                    holes.push(p);
                }
                size += 1;
            }
            if size == 0 {
                return Err(bad(no + 1, "empty group"));
            }
            group_sizes.push(size);
        } else {
            block_lines.push((no, line));
        }
    }
    if group_sizes.is_empty() {
        return Err(ParseError::Empty);
    }
    let grouping = GroupedPointSet::new(group_sizes);
    let mut blocks = BlockMultiset::new();
    for (no, line) in block_lines {
        let mut toks = line.split_whitespace();
        let mult: u64 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad(no + 1, "block line must start with a multiplicity"))?;
        let mut pts = Vec::new();
        for tok in toks {
            let p = label_map
                .get(tok)
                .copied()
                .or_else(|| parse_label(tok))
                .ok_or_else(|| bad(no + 1, format!("unknown point label `{tok}`")))?;
            pts.push(p);
        }
        if !(3..=8).contains(&pts.len()) {
            return Err(bad(no + 1, format!("block size {} out of range", pts.len())));
        }
        blocks.add(Block::new(pts), mult);
    }

    let kind = parse_kind(kind_tok, param, &holes)
        .ok_or_else(|| bad(1, format!("unknown kind `{kind_tok}`")))?;
    Ok(Design::new(grouping, blocks, kind))
}

fn parse_kind(tok: &str, param: u64, holes: &[PointId]) -> Option<DesignKind> {
    let sizes_of = |tok: &str, prefix: &str| -> Option<Vec<usize>> {
        let rest = tok.strip_prefix(prefix)?;
        let rest = rest.strip_prefix('{')?.strip_suffix('}')?;
        rest.split(',').map(|s| s.parse().ok()).collect()
    };
    match tok {
        "sbgdd" => Some(DesignKind::Sbgdd { mu: param }),
        "sbts" => Some(DesignKind::Sbts { mu: param }),
        "sbcube" => Some(DesignKind::SbCube),
        "igdd" => Some(DesignKind::Igdd {
            lambda: param,
            hole: HoleSpec::new(holes.to_vec()),
        }),
        "isbgdd" => Some(DesignKind::IncompleteSbgdd {
            mu: param,
            hole: HoleSpec::new(holes.to_vec()),
        }),
        _ => {
            if let Some(sizes) = sizes_of(tok, "gdd") {
                Some(DesignKind::Gdd { lambda: param, sizes })
            } else if let Some(sizes) = sizes_of(tok, "pbd") {
                Some(DesignKind::Pbd { sizes })
            } else if let Some(k) = tok.strip_prefix("td").and_then(|s| s.parse().ok()) {
                Some(DesignKind::Td { k })
            } else {
                None
            }
        }
    }
}

/// JSON rendering with the same canonical ordering as the text format.
pub fn to_json(d: &Design) -> serde_json::Value {
    let (kind, param) = kind_header(&d.kind);
    let hole = hole_of(&d.kind);
    let groups: Vec<Vec<String>> = d
        .grouping
        .group_sizes()
        .iter()
        .enumerate()
        .map(|(g, &size)| {
            (0..size)
                .map(|s| point_label(&d.grouping, PointId::new(g, s)))
                .collect()
        })
        .collect();
    let blocks: Vec<serde_json::Value> = d
        .blocks
        .iter()
        .map(|(b, &m)| {
            let labels: Vec<String> = b
                .points()
                .iter()
                .map(|&p| point_label(&d.grouping, p))
                .collect();
            serde_json::json!({ "multiplicity": m, "points": labels })
        })
        .collect();
    let mut obj = serde_json::json!({
        "kind": kind,
        "type": d.grouping.type_string(),
        "parameter": param,
        "groups": groups,
        "blocks": blocks,
    });
    if let Some(h) = hole {
        let labels: Vec<String> = h
            .points()
            .iter()
            .map(|&p| point_label(&d.grouping, p))
            .collect();
        obj["hole"] = serde_json::json!(labels);
    }
    obj
}

/// Parse the JSON rendering.
pub fn from_json(v: &serde_json::Value) -> Result<Design, ParseError> {
    let err = |m: &str| bad(0, m);
    let kind_tok = v["kind"].as_str().ok_or_else(|| err("missing kind"))?;
    let param = v["parameter"].as_u64().ok_or_else(|| err("missing parameter"))?;
    let groups = v["groups"].as_array().ok_or_else(|| err("missing groups"))?;
    let mut label_map: HashMap<String, PointId> = HashMap::new();
    let mut sizes = Vec::new();
    for (g, grp) in groups.iter().enumerate() {
        let labels = grp.as_array().ok_or_else(|| err("group must be an array"))?;
        for (s, l) in labels.iter().enumerate() {
            let name = l.as_str().ok_or_else(|| err("label must be a string"))?;
            label_map.insert(name.to_string(), PointId::new(g, s));
        }
        sizes.push(labels.len());
    }
    let grouping = GroupedPointSet::new(sizes);
    let mut holes = Vec::new();
    if let Some(hl) = v.get("hole").and_then(|h| h.as_array()) {
        for l in hl {
            let name = l.as_str().ok_or_else(|| err("hole label must be a string"))?;
            holes.push(*label_map.get(name).ok_or_else(|| err("unknown hole label"))?);
        }
    }
    let mut blocks = BlockMultiset::new();
    for blk in v["blocks"].as_array().ok_or_else(|| err("missing blocks"))? {
        let m = blk["multiplicity"].as_u64().ok_or_else(|| err("missing multiplicity"))?;
        let mut pts = Vec::new();
        for l in blk["points"].as_array().ok_or_else(|| err("missing points"))? {
            let name = l.as_str().ok_or_else(|| err("point label must be a string"))?;
            pts.push(*label_map.get(name).ok_or_else(|| err("unknown point label"))?);
        }
        blocks.add(Block::new(pts), m);
    }
    let kind = parse_kind(kind_tok, param, &holes).ok_or_else(|| err("unknown kind"))?;
    Ok(Design::new(grouping, blocks, kind))
}
