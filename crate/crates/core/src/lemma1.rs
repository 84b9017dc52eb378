//! A family `X_1..X_s` of subsets of a finite set `X`, and the search for a
//! member all of whose elements also occur in some other member.
//!
//! When `s > |X|/2` and every `|X_i| ≥ s`, such a member always exists for
//! even `|X|`. For odd `|X|` it can fail: `X = {1,2,3}` with subsets
//! `{1,2}` and `{2,3}` meets both conditions, yet each subset owns an element
//! nobody else has. [`SetFamily::find_covered_subset`] therefore returns an
//! `Option` instead of asserting existence.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily {
    universe: BTreeSet<u32>,
    subsets: Vec<BTreeSet<u32>>,
}

/// Elements of `X` split by how many members of the family contain them.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Decomposition {
    /// In exactly one subset.
    pub once: BTreeSet<u32>,
    /// In two or more subsets.
    pub repeated: BTreeSet<u32>,
}

impl SetFamily {
    /// Requires every subset to lie inside `universe`.
    pub fn new(universe: BTreeSet<u32>, subsets: Vec<BTreeSet<u32>>) -> Result<Self> {
        for (i, subset) in subsets.iter().enumerate() {
            if let Some(e) = subset.iter().find(|e| !universe.contains(e)) {
                return Err(Error::Lemma1Precondition(format!(
                    "subset {i} contains {e}, which is not in X"
                )));
            }
        }
        Ok(SetFamily { universe, subsets })
    }

    pub fn universe(&self) -> &BTreeSet<u32> {
        &self.universe
    }

    pub fn subsets(&self) -> &[BTreeSet<u32>] {
        &self.subsets
    }

    /// Checks `2s > |X|` and `|X_i| ≥ s` for every `i`.
    pub fn check_preconditions(&self) -> Result<()> {
        let s = self.subsets.len();
        let x = self.universe.len();
        if 2 * s <= x {
            return Err(Error::Lemma1Precondition(format!(
                "need s > |X|/2, got s = {s}, |X| = {x}"
            )));
        }
        if let Some((i, small)) = self.subsets.iter().enumerate().find(|(_, xi)| xi.len() < s) {
            return Err(Error::Lemma1Precondition(format!(
                "subset {i} has {} elements, fewer than s = {s}",
                small.len()
            )));
        }
        Ok(())
    }

    pub fn decompose(&self) -> Decomposition {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for e in self.subsets.iter().flatten() {
            *counts.entry(*e).or_default() += 1;
        }
        let mut out = Decomposition::default();
        for (e, k) in counts {
            if k == 1 {
                out.once.insert(e);
            } else {
                out.repeated.insert(e);
            }
        }
        out
    }

    /// Zero-based index of the first subset disjoint from the elements that
    /// occur only once, if any.
    pub fn find_covered_subset(&self) -> Result<Option<usize>> {
        self.check_preconditions()?;
        let once = self.decompose().once;
        Ok(self.subsets.iter().position(|xi| xi.is_disjoint(&once)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(x: &[u32], subsets: &[&[u32]]) -> SetFamily {
        SetFamily::new(
            x.iter().copied().collect(),
            subsets
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        )
        .unwrap()
    }

    fn set(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn decompose_examples() {
        let d = family(&[1, 2, 3], &[&[1, 2], &[2, 3]]).decompose();
        assert_eq!(d.once, set(&[1, 3]));
        assert_eq!(d.repeated, set(&[2]));

        let d = family(&[1, 2, 3], &[&[1, 2, 3], &[1, 2, 3]]).decompose();
        assert!(d.once.is_empty());

        let d = family(&[1, 2], &[&[1, 2]]).decompose();
        assert_eq!(d.once, set(&[1, 2]));
        assert!(d.repeated.is_empty());
    }

    #[test]
    fn covered_subset_examples() {
        let f = family(&[1, 2], &[&[1, 2], &[1, 2]]);
        assert_eq!(f.find_covered_subset().unwrap(), Some(0));

        let f = family(&[1, 2, 3, 4], &[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4]]);
        assert_eq!(f.find_covered_subset().unwrap(), Some(0));

        let f = family(&[1, 2, 3], &[&[1, 2], &[2, 3]]);
        assert_eq!(f.find_covered_subset().unwrap(), None);
    }

    #[test]
    fn precondition_errors() {
        // s = 1 is not > 4/2
        let f = family(&[1, 2, 3, 4], &[&[1, 2, 3, 4]]);
        assert!(matches!(
            f.find_covered_subset(),
            Err(Error::Lemma1Precondition(_))
        ));
        // |X_2| = 1 < s = 2
        let f = family(&[1, 2], &[&[1, 2], &[1]]);
        assert!(matches!(
            f.find_covered_subset(),
            Err(Error::Lemma1Precondition(_))
        ));
        assert!(matches!(
            SetFamily::new(set(&[1]), vec![set(&[2])]),
            Err(Error::Lemma1Precondition(_))
        ));
    }
}
