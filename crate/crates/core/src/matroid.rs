//! Exact rank, span and support oracles for linear and partition matroids.
//!
//! Sets of elements are passed as slices of ids and treated as multisets:
//! naming the same id twice makes the set dependent.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Index of an element in a matroid's ground set.
pub type ElementId = usize;

/// A matroid represented by vectors over GF(p); element `i` is `elements[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMatroid {
    field: FieldSpec,
    dim: usize,
    elements: Vec<Vec<u32>>,
}

impl LinearMatroid {
    pub fn new(field: FieldSpec, dim: usize, elements: Vec<Vec<u32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let p = field.modulus();
        for (index, v) in elements.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    got: v.len(),
                    dim,
                });
            }
            if let Some(&value) = v.iter().find(|&&x| x >= p) {
                return Err(Error::ResidueOutOfRange { index, value, p });
            }
        }
        Ok(LinearMatroid {
            field,
            dim,
            elements,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn vector(&self, id: ElementId) -> &[u32] {
        &self.elements[id]
    }
}

/// A partition matroid with capacity one per class: a set is independent iff
/// its members have pairwise distinct classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionMatroid {
    class_of: Vec<u32>,
}

impl PartitionMatroid {
    pub fn new(class_of: Vec<u32>) -> Self {
        PartitionMatroid { class_of }
    }

    pub fn class_of(&self, id: ElementId) -> u32 {
        self.class_of[id]
    }

    pub fn classes(&self) -> &[u32] {
        &self.class_of
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Matroid {
    Linear(LinearMatroid),
    Partition(PartitionMatroid),
}

impl From<LinearMatroid> for Matroid {
    fn from(m: LinearMatroid) -> Self {
        Matroid::Linear(m)
    }
}

impl From<PartitionMatroid> for Matroid {
    fn from(m: PartitionMatroid) -> Self {
        Matroid::Partition(m)
    }
}

impl Matroid {
    /// Size of the ground set.
    pub fn len(&self) -> usize {
        match self {
            Matroid::Linear(m) => m.elements.len(),
            Matroid::Partition(m) => m.class_of.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn check_ids(&self, ids: &[ElementId]) -> Result<()> {
        let len = self.len();
        match ids.iter().find(|&&id| id >= len) {
            Some(&id) => Err(Error::UnknownElement { id, len }),
            None => Ok(()),
        }
    }

    pub(crate) fn rank_unchecked(&self, ids: &[ElementId]) -> usize {
        match self {
            Matroid::Linear(m) => {
                let rows: Vec<&[u32]> = ids.iter().map(|&id| m.vector(id)).collect();
                m.field.rank(&rows, m.dim)
            }
            Matroid::Partition(m) => ids
                .iter()
                .map(|&id| m.class_of[id])
                .collect::<HashSet<_>>()
                .len(),
        }
    }

    pub fn rank(&self, ids: &[ElementId]) -> Result<usize> {
        self.check_ids(ids)?;
        Ok(self.rank_unchecked(ids))
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        let all: Vec<ElementId> = (0..self.len()).collect();
        self.rank_unchecked(&all)
    }

    pub fn is_independent(&self, ids: &[ElementId]) -> Result<bool> {
        Ok(self.rank(ids)? == ids.len())
    }

    pub(crate) fn is_independent_unchecked(&self, ids: &[ElementId]) -> bool {
        self.rank_unchecked(ids) == ids.len()
    }

    /// Whether `x` lies in the closure of `spanning`.
    pub fn spans(&self, spanning: &[ElementId], x: ElementId) -> Result<bool> {
        self.check_ids(spanning)?;
        self.check_ids(&[x])?;
        Ok(self.spans_unchecked(spanning, x))
    }

    pub(crate) fn spans_unchecked(&self, spanning: &[ElementId], x: ElementId) -> bool {
        match self {
            Matroid::Partition(m) => spanning.iter().any(|&id| m.class_of[id] == m.class_of[x]),
            Matroid::Linear(_) => {
                let mut with_x = spanning.to_vec();
                with_x.push(x);
                self.rank_unchecked(&with_x) == self.rank_unchecked(spanning)
            }
        }
    }

    /// The unique minimal subset of the independent set `basis` whose closure
    /// contains `x`, listed in the order the members appear in `basis`.
    ///
    /// For a linear matroid these are the members with a nonzero coefficient
    /// in the expansion of `x` over `basis`.
    pub fn support(&self, basis: &[ElementId], x: ElementId) -> Result<Vec<ElementId>> {
        self.check_ids(basis)?;
        self.check_ids(&[x])?;
        if !self.is_independent_unchecked(basis) {
            return Err(Error::DependentSet);
        }
        self.support_unchecked(basis, x)
    }

    pub(crate) fn support_unchecked(
        &self,
        basis: &[ElementId],
        x: ElementId,
    ) -> Result<Vec<ElementId>> {
        match self {
            Matroid::Partition(m) => basis
                .iter()
                .find(|&&id| m.class_of[id] == m.class_of[x])
                .map(|&id| vec![id])
                .ok_or(Error::NotSpanned(x)),
            Matroid::Linear(m) => {
                let vectors: Vec<&[u32]> = basis.iter().map(|&id| m.vector(id)).collect();
                let coeffs = m
                    .field
                    .solve(&vectors, m.vector(x))
                    .ok_or(Error::NotSpanned(x))?;
                Ok(basis
                    .iter()
                    .zip(coeffs)
                    .filter(|&(_, c)| c != 0)
                    .map(|(&id, _)| id)
                    .collect())
            }
        }
    }

    /// Smallest subset of the independent set `basis` spanning every element
    /// of `targets`: the union of their supports, in `basis` order.
    pub fn min_spanning_subset(
        &self,
        basis: &[ElementId],
        targets: &[ElementId],
    ) -> Result<Vec<ElementId>> {
        self.check_ids(basis)?;
        self.check_ids(targets)?;
        if !self.is_independent_unchecked(basis) {
            return Err(Error::DependentSet);
        }
        let mut keep = vec![false; basis.len()];
        for &x in targets {
            for id in self.support_unchecked(basis, x)? {
                let pos = basis
                    .iter()
                    .position(|&b| b == id)
                    .expect("support ⊆ basis");
                keep[pos] = true;
            }
        }
        Ok(basis
            .iter()
            .zip(keep)
            .filter(|&(_, k)| k)
            .map(|(&id, _)| id)
            .collect())
    }
}
