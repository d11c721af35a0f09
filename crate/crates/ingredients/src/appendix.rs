//! Pinned small Sarvate-Beam GDDs of types 2^4, (2;1)^5, 2^6 and 2^8,
//! loaded from the catalog.

use sb_core::Design;

use crate::catalog;
use crate::error::Result;

/// Sarvate-Beam GDD of type 2^4 with frequencies {0,...,23}.
pub fn sbgdd_2_4() -> Result<Design> {
    catalog::global()?.design("sbgdd_2_4")
}

/// Incomplete Sarvate-Beam GDD of type (2;1)^5: off-hole frequencies
/// {10,...,39}, hole pairs untouched.
pub fn isbgdd_2_5() -> Result<Design> {
    catalog::global()?.design("isbgdd_2_5")
}

/// Sarvate-Beam GDD of type 2^6 with frequencies {0,...,59}.
pub fn sbgdd_2_6() -> Result<Design> {
    catalog::global()?.design("sbgdd_2_6")
}

/// Sarvate-Beam GDD of type 2^8 with frequencies {0,...,111}.
pub fn sbgdd_2_8() -> Result<Design> {
    catalog::global()?.design("sbgdd_2_8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use sb_core::verify;

    #[test]
    fn pinned_designs_verify_with_expected_counts() {
        let cases = [
            (sbgdd_2_4().unwrap(), 92u64),
            (isbgdd_2_5().unwrap(), 245),
            (sbgdd_2_6().unwrap(), 590),
            (sbgdd_2_8().unwrap(), 2072),
        ];
        for (d, triples) in cases {
            assert!(verify(&d).pass);
            assert_eq!(d.blocks.total_multiplicity(), triples);
        }
    }
}
