use crate::types::{BlockMultiset, FrequencyTable, GroupedPointSet};
use crate::verify::{StructuralError, Violation};

/// Frequency of every cross-group pair: the sum of multiplicities of blocks
/// containing both points. Blocks with two points of one group are rejected
/// so the table stays defined exactly on cross pairs.
pub fn pair_frequencies(
    blocks: &BlockMultiset,
    grouping: &GroupedPointSet,
) -> Result<FrequencyTable, StructuralError> {
    let mut table = FrequencyTable::new();
    for (a, b) in grouping.cross_pairs() {
        table.set(a, b, 0);
    }
    for (block, &mult) in blocks.iter() {
        for p in block.points() {
            if !grouping.contains(*p) {
                return Err(StructuralError::PointOutOfRange { point: *p });
            }
        }
        for (a, b) in block.pairs() {
            if a.group == b.group {
                return Err(StructuralError::WithinGroupBlock {
                    first: a,
                    second: b,
                });
            }
            table.set(a, b, table.get(a, b) + mult);
        }
    }
    Ok(table)
}

/// Like pair_frequencies but tolerates within-group co-occurrence, reporting
/// it as a violation instead. Used by verifiers that must classify defects
/// rather than abort.
pub fn pair_frequencies_lenient(
    blocks: &BlockMultiset,
    grouping: &GroupedPointSet,
) -> Result<(FrequencyTable, Option<Violation>), StructuralError> {
    let mut table = FrequencyTable::new();
    for (a, b) in grouping.cross_pairs() {
        table.set(a, b, 0);
    }
    let mut within: Option<Violation> = None;
    for (block, &mult) in blocks.iter() {
        for p in block.points() {
            if !grouping.contains(*p) {
                return Err(StructuralError::PointOutOfRange { point: *p });
            }
        }
        for (a, b) in block.pairs() {
            if a.group == b.group {
                within.get_or_insert(Violation::WithinGroupPair { first: a, second: b });
            } else {
                table.set(a, b, table.get(a, b) + mult);
            }
        }
    }
    Ok((table, within))
}
