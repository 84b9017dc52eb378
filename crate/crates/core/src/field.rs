//! Arithmetic and elimination over the prime field GF(p).
//!
//! Residues are stored as `u32` in `[0, p)`; products are formed in `u64`
//! so any prime below 2^31 is safe.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`FieldSpec::new`].
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    p: u32,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u32 })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Multiplicative inverse by Fermat's little theorem. `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    /// Row rank of `rows`, each of length `dim`.
    ///
    /// Fraction-free elimination: pivots are taken column by column, choosing
    /// the lowest remaining row with a nonzero entry, and each later row `r`
    /// is replaced by `pivot * r - r[c] * pivot_row`.
    pub fn rank<R: AsRef<[u32]>>(self, rows: &[R], dim: usize) -> usize {
        let mut m: Vec<Vec<u32>> = rows.iter().map(|r| r.as_ref().to_vec()).collect();
        let mut rank = 0;
        for col in 0..dim {
            if rank == m.len() {
                break;
            }
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let (head, tail) = m.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pv = pivot_row[col];
            for row in tail.iter_mut() {
                let a = row[col];
                if a == 0 {
                    continue;
                }
                for k in col..dim {
                    row[k] = self.sub(self.mul(pv, row[k]), self.mul(a, pivot_row[k]));
                }
            }
            rank += 1;
        }
        rank
    }

    /// Coefficients `c` with `sum_j c[j] * basis[j] == target`, if any.
    ///
    /// When `basis` is linearly independent the solution is unique.
    pub fn solve<R: AsRef<[u32]>>(self, basis: &[R], target: &[u32]) -> Option<Vec<u32>> {
        let k = basis.len();
        let dim = target.len();
        // One equation per coordinate, unknowns in columns 0..k, right-hand side in column k.
        let mut m: Vec<Vec<u32>> = (0..dim)
            .map(|i| {
                let mut row: Vec<u32> = basis.iter().map(|b| b.as_ref()[i]).collect();
                row.push(target[i]);
                row
            })
            .collect();
        let mut pivots = Vec::with_capacity(k);
        let mut rank = 0;
        for col in 0..k {
            let Some(pivot) = (rank..dim).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv(m[rank][col]);
            for v in m[rank][col..].iter_mut() {
                *v = self.mul(*v, inv);
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || row[col] == 0 {
                    continue;
                }
                let a = row[col];
                for (v, &q) in row[col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                    *v = self.sub(*v, self.mul(a, q));
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        if m[rank..].iter().any(|row| row[k] != 0) {
            return None;
        }
        let mut coeffs = vec![0; k];
        for (row, col) in pivots {
            coeffs[col] = m[row][k];
        }
        Some(coeffs)
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.p as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_small() {
        for p in [0, 1, 4, 9, 15, 91] {
            assert!(FieldSpec::new(p).is_err(), "{p}");
        }
        for p in [2, 3, 5, 7, 11, 65537] {
            assert_eq!(FieldSpec::new(p).unwrap().modulus() as u64, p);
        }
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 13] {
            let f = FieldSpec::new(p).unwrap();
            for a in 1..p as u32 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn rank_small() {
        let f = FieldSpec::new(5).unwrap();
        let rows = [vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]];
        assert_eq!(f.rank(&rows, 3), 2);
        assert_eq!(f.rank::<Vec<u32>>(&[], 3), 0);
        assert_eq!(f.rank(&[vec![0, 0, 0]], 3), 0);
        // 2*(1,2) = (2,4) mod 5
        assert_eq!(f.rank(&[vec![1, 2], vec![2, 4]], 2), 1);
        // but over GF(3), (1,2) and (2,4)=(2,1) are independent
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(f3.rank(&[vec![1, 2], vec![2, 1]], 2), 1);
        assert_eq!(f3.rank(&[vec![1, 2], vec![1, 1]], 2), 2);
    }

    #[test]
    fn solve_expands_over_basis() {
        let f = FieldSpec::new(5).unwrap();
        let basis = [vec![1, 0], vec![1, 4]]; // e1, e1 - e2
        let c = f.solve(&basis, &[0, 1]).unwrap();
        assert_eq!(c, vec![1, 4]); // e2 = e1 - (e1 - e2)
        assert!(f.solve(&[vec![1, 0]], &[0, 1]).is_none());
    }
}
