use crate::types::{FrequencyInterval, GroupedPointSet};

/// Why a parameter triple admits no design.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NonexistenceReason {
    /// u = 2 mod 3 with 3 not dividing g or mu: interval sum not divisible by 3.
    DivisibilityObstruction,
    /// The single exception (g,u,mu) = (1,4,0).
    ExceptionOneFour,
    /// (g,u) = (1,3): only one triple is possible on three points, so the
    /// three pair frequencies are forced equal and can never be consecutive.
    DegenerateTriple,
    /// SBTS on fewer than 4 points.
    TooFewPoints,
    /// Cube of order 1: the three line sums through the single cell coincide.
    CubeOrderOne,
}

impl std::fmt::Display for NonexistenceReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NonexistenceReason::DivisibilityObstruction => write!(
                f,
                "interval sum not divisible by 3 (u = 2 mod 3 and neither g nor mu divisible by 3)"
            ),
            NonexistenceReason::ExceptionOneFour => {
                write!(f, "the exceptional case g=1, u=4, mu=0 has no design")
            }
            NonexistenceReason::DegenerateTriple => write!(
                f,
                "g=1, u=3: the only possible triple forces equal pair frequencies"
            ),
            NonexistenceReason::TooFewPoints => write!(f, "need more than 3 points"),
            NonexistenceReason::CubeOrderOne => {
                write!(f, "order-1 cube: the three line sums coincide")
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Admissibility {
    Admissible,
    Nonexistent(NonexistenceReason),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

/// Whether an SBGDD_mu of type g^u exists: yes iff 3 | g, 3 | mu, or
/// u = 0,1 (mod 3), excluding (1,4,0) and all of (1,3).
pub fn admissible(g: u64, u: u64, mu: u64) -> Admissibility {
    assert!(g >= 1 && u >= 3, "need g >= 1, u >= 3");
    if g == 1 && u == 3 {
        return Admissibility::Nonexistent(NonexistenceReason::DegenerateTriple);
    }
    if g == 1 && u == 4 && mu == 0 {
        return Admissibility::Nonexistent(NonexistenceReason::ExceptionOneFour);
    }
    if g % 3 == 0 || mu % 3 == 0 || u % 3 != 2 {
        Admissibility::Admissible
    } else {
        Admissibility::Nonexistent(NonexistenceReason::DivisibilityObstruction)
    }
}

/// Whether an SBTS_mu(v) exists: v > 3, (v = 0,1 mod 3 or 3 | mu), and
/// (v,mu) != (4,0).
pub fn sbts_admissible(v: u64, mu: u64) -> Admissibility {
    assert!(v >= 3, "need v >= 3");
    if v == 3 {
        return Admissibility::Nonexistent(NonexistenceReason::DegenerateTriple);
    }
    admissible(1, v, mu)
}

/// Target interval for a grouping: start mu, length = number of cross pairs.
pub fn interval_for(grouping: &GroupedPointSet, mu: u64) -> FrequencyInterval {
    assert!(grouping.num_groups() >= 2, "need at least two groups");
    FrequencyInterval::new(mu, grouping.num_cross_pairs() as u64)
}
