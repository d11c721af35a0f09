use std::collections::BTreeMap;
use std::fmt;

/// A point of the design: group index plus slot within the group.
/// The derived ordering (group, slot) is the canonical point order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointId {
    pub group: u16,
    pub slot: u16,
}

impl PointId {
    pub fn new(group: usize, slot: usize) -> Self {
        PointId {
            group: group as u16,
            slot: slot as u16,
        }
    }
}

/// Point set partitioned into groups. Group sizes carry multiset semantics;
/// a uniform type g^u has all sizes equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupedPointSet {
    sizes: Vec<usize>,
}

impl GroupedPointSet {
    pub fn new(sizes: Vec<usize>) -> Self {
        assert!(!sizes.is_empty(), "need at least one group");
        assert!(sizes.iter().all(|&s| s > 0), "group sizes must be positive");
        GroupedPointSet { sizes }
    }

    pub fn uniform(g: usize, u: usize) -> Self {
        GroupedPointSet::new(vec![g; u])
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn num_groups(&self) -> usize {
        self.sizes.len()
    }

    pub fn num_points(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn contains(&self, p: PointId) -> bool {
        (p.group as usize) < self.sizes.len() && (p.slot as usize) < self.sizes[p.group as usize]
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> + '_ {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(g, &s)| (0..s).map(move |i| PointId::new(g, i)))
    }

    /// All unordered cross-group pairs, in canonical order.
    pub fn cross_pairs(&self) -> Vec<(PointId, PointId)> {
        let pts: Vec<PointId> = self.points().collect();
        let mut out = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if pts[i].group != pts[j].group {
                    out.push((pts[i], pts[j]));
                }
            }
        }
        out
    }

    pub fn num_cross_pairs(&self) -> usize {
        let v: usize = self.num_points();
        let within: usize = self.sizes.iter().map(|&s| s * (s - 1) / 2).sum();
        v * (v - 1) / 2 - within
    }

    /// Some((g, u)) when the type is uniform g^u.
    pub fn uniform_type(&self) -> Option<(usize, usize)> {
        let g = self.sizes[0];
        if self.sizes.iter().all(|&s| s == g) {
            Some((g, self.sizes.len()))
        } else {
            None
        }
    }

    /// Type string in exponential notation, e.g. "2^6" or "5^4,2^1".
    pub fn type_string(&self) -> String {
        let mut sorted = self.sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for s in sorted {
            match parts.last_mut() {
                Some((size, count)) if *size == s => *count += 1,
                _ => parts.push((s, 1)),
            }
        }
        parts
            .iter()
            .map(|(s, c)| format!("{s}^{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Sorted list of 3 to 8 distinct points. Final SBGDD outputs only ever
/// use triples; the larger sizes appear in master designs (PBD and TD
/// blocks) that get replaced during assembly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Block {
    points: Vec<PointId>,
}

impl Block {
    pub fn new(mut points: Vec<PointId>) -> Self {
        points.sort_unstable();
        assert!(
            (3..=8).contains(&points.len()),
            "block size must be 3..=8, got {}",
            points.len()
        );
        assert!(
            points.windows(2).all(|w| w[0] != w[1]),
            "block points must be distinct"
        );
        Block { points }
    }

    pub fn triple(a: PointId, b: PointId, c: PointId) -> Self {
        Block::new(vec![a, b, c])
    }

    pub fn points(&self) -> &[PointId] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pairs(&self) -> impl Iterator<Item = (PointId, PointId)> + '_ {
        let pts = &self.points;
        (0..pts.len())
            .flat_map(move |i| (i + 1..pts.len()).map(move |j| (pts[i], pts[j])))
    }
}

/// Blocks with positive multiplicities, canonically ordered.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BlockMultiset {
    blocks: BTreeMap<Block, u64>,
}

impl BlockMultiset {
    pub fn new() -> Self {
        BlockMultiset::default()
    }

    pub fn add(&mut self, block: Block, multiplicity: u64) {
        if multiplicity > 0 {
            *self.blocks.entry(block).or_insert(0) += multiplicity;
        }
    }

    pub fn extend_from(&mut self, other: &BlockMultiset, copies: u64) {
        if copies == 0 {
            return;
        }
        for (b, &m) in other.iter() {
            self.add(b.clone(), m * copies);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Block, &u64)> {
        self.blocks.iter()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total multiplicity over all blocks.
    pub fn total_multiplicity(&self) -> u64 {
        self.blocks.values().sum()
    }
}

impl FromIterator<(Block, u64)> for BlockMultiset {
    fn from_iter<T: IntoIterator<Item = (Block, u64)>>(iter: T) -> Self {
        let mut ms = BlockMultiset::new();
        for (b, m) in iter {
            ms.add(b, m);
        }
        ms
    }
}

/// Frequency of every cross-group pair. Within-group pairs are implicitly
/// zero and never stored, so verifiers can tell interval defects apart from
/// structural (within-group) defects.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FrequencyTable {
    freqs: BTreeMap<(PointId, PointId), u64>,
}

impl FrequencyTable {
    pub fn new() -> Self {
        FrequencyTable::default()
    }

    pub fn set(&mut self, a: PointId, b: PointId, value: u64) {
        let key = if a < b { (a, b) } else { (b, a) };
        self.freqs.insert(key, value);
    }

    pub fn get(&self, a: PointId, b: PointId) -> u64 {
        let key = if a < b { (a, b) } else { (b, a) };
        *self.freqs.get(&key).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(PointId, PointId), &u64)> {
        self.freqs.iter()
    }

    pub fn len(&self) -> usize {
        self.freqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs.is_empty()
    }

    /// Sorted multiset of all stored frequencies.
    pub fn value_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.freqs.values().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Interval of consecutive target frequencies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FrequencyInterval {
    pub start: u64,
    pub length: u64,
}

impl FrequencyInterval {
    pub fn new(start: u64, length: u64) -> Self {
        assert!(length > 0, "interval length must be positive");
        FrequencyInterval { start, length }
    }

    pub fn end(&self) -> u64 {
        self.start + self.length - 1
    }

    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.start..self.start + self.length
    }
}

impl fmt::Display for FrequencyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end())
    }
}

/// One designated hole point per group (incomplete designs).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoleSpec {
    holes: Vec<PointId>,
}

impl HoleSpec {
    /// One hole point per group, given in group order.
    pub fn new(holes: Vec<PointId>) -> Self {
        for (g, p) in holes.iter().enumerate() {
            assert_eq!(p.group as usize, g, "one hole point per group, in order");
        }
        HoleSpec { holes }
    }

    /// Hole at slot 0 of every group.
    pub fn first_slots(num_groups: usize) -> Self {
        HoleSpec::new((0..num_groups).map(|g| PointId::new(g, 0)).collect())
    }

    pub fn points(&self) -> &[PointId] {
        &self.holes
    }

    pub fn contains(&self, p: PointId) -> bool {
        self.holes.get(p.group as usize) == Some(&p)
    }

    /// Both endpoints are hole points (necessarily from distinct groups).
    pub fn is_hole_pair(&self, a: PointId, b: PointId) -> bool {
        self.contains(a) && self.contains(b)
    }
}

/// What a design claims to be; verifiers check exactly these claims.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DesignKind {
    /// Cross frequencies are the consecutive integers mu..mu+L-1.
    Sbgdd { mu: u64 },
    /// Every cross pair has frequency lambda; block sizes restricted.
    Gdd { lambda: u64, sizes: Vec<usize> },
    /// Transversal design: k groups, blocks meet every group once.
    Td { k: usize },
    /// Every pair (all groups singletons) covered once; sizes restricted.
    Pbd { sizes: Vec<usize> },
    /// GDD with a hole: hole pairs at 0, all other cross pairs at lambda.
    Igdd { lambda: u64, hole: HoleSpec },
    /// SBGDD with a hole: hole pairs at 0, other cross pairs form the interval.
    IncompleteSbgdd { mu: u64, hole: HoleSpec },
    /// SBGDD on singleton groups.
    Sbts { mu: u64 },
    /// SBGDD_0 of type n^3 viewed as an n-cube of triangle multiplicities.
    SbCube,
}

/// A block multiset with its grouping and claimed kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Design {
    pub grouping: GroupedPointSet,
    pub blocks: BlockMultiset,
    pub kind: DesignKind,
}

impl Design {
    pub fn new(grouping: GroupedPointSet, blocks: BlockMultiset, kind: DesignKind) -> Self {
        Design {
            grouping,
            blocks,
            kind,
        }
    }
}

/// Latin square of order n on symbols 0..n-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square array required");
        LatinSquare {
            n,
            cells: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.n + col]
    }

    /// Triples (row, column, symbol) as a 3-GDD of type n^3.
    pub fn to_design(&self) -> Design {
        let grouping = GroupedPointSet::uniform(self.n, 3);
        let mut blocks = BlockMultiset::new();
        for r in 0..self.n {
            for c in 0..self.n {
                blocks.add(
                    Block::triple(
                        PointId::new(0, r),
                        PointId::new(1, c),
                        PointId::new(2, self.get(r, c)),
                    ),
                    1,
                );
            }
        }
        Design::new(
            grouping,
            blocks,
            DesignKind::Gdd {
                lambda: 1,
                sizes: vec![3],
            },
        )
    }
}
