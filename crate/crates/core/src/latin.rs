//! Classical Latin squares over the symbols `1..=n`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Line, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    rows: Vec<Vec<u32>>,
}

impl LatinSquare {
    /// Checks that `rows` is an n×n array in which every symbol of `1..=n`
    /// occurs once per row and once per column.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedGrid("empty square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedGrid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            check_line(row.iter().copied(), n, Line::Row, i)?;
        }
        for j in 0..n {
            check_line(rows.iter().map(|r| r[j]), n, Line::Column, j)?;
        }
        Ok(LatinSquare { rows })
    }

    /// The Cayley table of Z_n, shifted to symbols `1..=n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let rows = (0..n)
            .map(|r| (0..n).map(|c| ((r + c) % n) as u32 + 1).collect())
            .collect();
        LatinSquare { rows }
    }

    /// A Latin square drawn by row-wise backtracking: cells are filled in
    /// row-major order and each cell tries the symbols in an order shuffled
    /// by a ChaCha8 stream seeded with `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        assert!(n >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut grid = vec![0u32; n * n];
        let mut row_used = vec![vec![false; n + 1]; n];
        let mut col_used = vec![vec![false; n + 1]; n];
        // candidates[k] holds the untried symbols of cell k, tried from the back
        let mut candidates: Vec<Vec<u32>> = vec![Vec::new(); n * n];
        let mut k = 0;
        let mut fresh = true;
        while k < n * n {
            let (r, c) = (k / n, k % n);
            if fresh {
                let mut order: Vec<u32> = (1..=n as u32).collect();
                order.shuffle(&mut rng);
                order.reverse();
                candidates[k] = order;
            } else {
                let s = grid[k] as usize;
                row_used[r][s] = false;
                col_used[c][s] = false;
                grid[k] = 0;
            }
            let mut placed = false;
            while let Some(s) = candidates[k].pop() {
                let si = s as usize;
                if !row_used[r][si] && !col_used[c][si] {
                    grid[k] = s;
                    row_used[r][si] = true;
                    col_used[c][si] = true;
                    placed = true;
                    break;
                }
            }
            if placed {
                k += 1;
                fresh = true;
            } else {
                assert!(k > 0, "a Latin square of every order exists");
                k -= 1;
                fresh = false;
            }
        }
        LatinSquare {
            rows: grid.chunks(n).map(<[u32]>::to_vec).collect(),
        }
    }

    /// Every Latin square of order `n`, in lexicographic row-major order.
    ///
    /// There are 1, 2, 12, 576 and 161280 of orders 1 through 5; order 6
    /// already has over 8·10^8, so callers should guard `n`.
    pub fn enumerate(n: usize) -> Vec<LatinSquare> {
        fn go(
            k: usize,
            n: usize,
            grid: &mut [u32],
            row_used: &mut [Vec<bool>],
            col_used: &mut [Vec<bool>],
            out: &mut Vec<LatinSquare>,
        ) {
            if k == n * n {
                out.push(LatinSquare {
                    rows: grid.chunks(n).map(<[u32]>::to_vec).collect(),
                });
                return;
            }
            let (r, c) = (k / n, k % n);
            for s in 1..=n {
                if row_used[r][s] || col_used[c][s] {
                    continue;
                }
                row_used[r][s] = true;
                col_used[c][s] = true;
                grid[k] = s as u32;
                go(k + 1, n, grid, row_used, col_used, out);
                row_used[r][s] = false;
                col_used[c][s] = false;
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        go(
            0,
            n,
            &mut vec![0; n * n],
            &mut vec![vec![false; n + 1]; n],
            &mut vec![vec![false; n + 1]; n],
            &mut out,
        );
        out
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

fn check_line(
    symbols: impl Iterator<Item = u32>,
    n: usize,
    line: Line,
    index: usize,
) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for s in symbols {
        if s == 0 || s as usize > n {
            return Err(Error::NotLatin {
                line,
                index,
                reason: format!("has symbol {s} outside 1..={n}"),
            });
        }
        if std::mem::replace(&mut seen[s as usize], true) {
            return Err(Error::NotLatin {
                line,
                index,
                reason: format!("repeats symbol {s}"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(LatinSquare::new(vec![vec![1]]).is_ok());
        assert!(LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).is_ok());
        let err = LatinSquare::new(vec![vec![1, 2], vec![1, 2]]).unwrap_err();
        assert!(
            matches!(
                err,
                Error::NotLatin {
                    line: Line::Column,
                    index: 0,
                    ..
                }
            ),
            "{err}"
        );
        assert!(matches!(
            LatinSquare::new(vec![vec![1, 1], vec![2, 2]]),
            Err(Error::NotLatin {
                line: Line::Row,
                index: 0,
                ..
            })
        ));
        assert!(matches!(
            LatinSquare::new(vec![vec![1, 3], vec![3, 1]]),
            Err(Error::NotLatin { .. })
        ));
        assert!(matches!(
            LatinSquare::new(vec![vec![1, 2]]),
            Err(Error::MalformedGrid(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| LatinSquare::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 12, 576]);
    }

    #[test]
    fn random_squares_are_latin_and_deterministic() {
        assert_eq!(LatinSquare::random(1, 9).rows(), &[vec![1]]);
        for n in 1..=9 {
            for seed in 0..5 {
                let sq = LatinSquare::random(n, seed);
                assert!(LatinSquare::new(sq.rows().to_vec()).is_ok());
                assert_eq!(sq, LatinSquare::random(n, seed));
            }
        }
        assert_ne!(LatinSquare::random(5, 1), LatinSquare::random(5, 2));
    }

    #[test]
    fn cyclic_diagonal() {
        let sq = LatinSquare::cyclic(3);
        let diag: Vec<u32> = (0..3).map(|i| sq.get(i, i)).collect();
        assert_eq!(diag, vec![1, 3, 2]);
    }
}
