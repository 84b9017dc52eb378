//! Matroidal Latin squares: n×n grids of matroid elements whose rows and
//! columns are all bases.

use std::fmt;
use std::ops::Range;

use rand::Rng;

use crate::error::{Error, Line, Result};
use crate::field::FieldSpec;
use crate::latin::LatinSquare;
use crate::matroid::{ElementId, LinearMatroid, Matroid, PartitionMatroid};

/// Zero-based `(row, column)` coordinates of a grid cell.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mls {
    n: usize,
    matroid: Matroid,
    grid: Vec<ElementId>,
}

/// One reason a grid fails to be a matroidal Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A row or column whose elements have rank below `n`.
    NotBase {
        line: Line,
        index: usize,
        rank: usize,
        n: usize,
    },
    /// The matroid itself does not have rank `n`, so no line can be a base.
    MatroidRank { rank: usize, n: usize },
}

impl Violation {
    pub fn deficit(&self) -> usize {
        match *self {
            Violation::NotBase { rank, n, .. } => n - rank,
            Violation::MatroidRank { rank, n } => n.abs_diff(rank),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBase {
                line,
                index,
                rank,
                n,
            } => write!(f, "{line} {index} has rank {rank}, deficit {}", n - rank),
            Violation::MatroidRank { rank, n } => {
                write!(f, "matroid has rank {rank}, degree is {n}")
            }
        }
    }
}

impl Mls {
    /// Builds a grid, checking only its shape and that every id exists.
    /// Use [`Mls::validate`] for the base conditions.
    pub fn new(matroid: impl Into<Matroid>, rows: Vec<Vec<ElementId>>) -> Result<Self> {
        let matroid = matroid.into();
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedGrid("empty grid".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedGrid(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let grid: Vec<ElementId> = rows.into_iter().flatten().collect();
        matroid.check_ids(&grid)?;
        Ok(Mls { n, matroid, grid })
    }

    /// [`Mls::new`] followed by [`Mls::validate`].
    pub fn new_validated(matroid: impl Into<Matroid>, rows: Vec<Vec<ElementId>>) -> Result<Self> {
        Mls::new(matroid, rows)?.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let violations = self.validate();
        if violations.is_empty() {
            return Ok(self);
        }
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::NotAnMls(text.join("; ")))
    }

    /// Lists every row and column that is not a base. Empty means the grid
    /// is a matroidal Latin square.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n;
        let mut out = Vec::new();
        let rank = self.matroid.full_rank();
        if rank != n {
            out.push(Violation::MatroidRank { rank, n });
        }
        for i in 0..n {
            let rank = self.matroid.rank_unchecked(&self.row_ids(i));
            if rank < n {
                out.push(Violation::NotBase {
                    line: Line::Row,
                    index: i,
                    rank,
                    n,
                });
            }
        }
        for j in 0..n {
            let rank = self.matroid.rank_unchecked(&self.col_ids(j));
            if rank < n {
                out.push(Violation::NotBase {
                    line: Line::Column,
                    index: j,
                    rank,
                    n,
                });
            }
        }
        out
    }

    /// The partition-matroid encoding of a Latin square: one ground-set
    /// element per cell (id `row * n + col`) whose class is the cell's symbol.
    pub fn from_latin_square(square: &LatinSquare) -> Mls {
        let n = square.n();
        let classes = square.rows().iter().flatten().copied().collect();
        Mls {
            n,
            matroid: PartitionMatroid::new(classes).into(),
            grid: (0..n * n).collect(),
        }
    }

    /// Validates `rows` as a Latin square and encodes it as in
    /// [`Mls::from_latin_square`].
    pub fn from_latin_rows(rows: Vec<Vec<u32>>) -> Result<Mls> {
        Ok(Mls::from_latin_square(&LatinSquare::new(rows)?))
    }

    /// Realizes a Latin square linearly: the element in cell `(r, c)` is the
    /// basis column assigned to its symbol, `basis[symbol - 1]`.
    ///
    /// Like the partition encoding, every cell gets its own id; cells with
    /// the same symbol hold parallel copies of one vector.
    pub fn embed_latin(square: &LatinSquare, field: FieldSpec, basis: &[Vec<u32>]) -> Result<Mls> {
        let n = square.n();
        if basis.len() != n {
            return Err(Error::MalformedGrid(format!(
                "basis has {} columns, expected {n}",
                basis.len()
            )));
        }
        let basis = LinearMatroid::new(field, n, basis.to_vec())?;
        if field.rank(basis.elements(), n) < n {
            return Err(Error::SingularBasis { p: field.modulus() });
        }
        let elements = square
            .rows()
            .iter()
            .flatten()
            .map(|&s| basis.vector(s as usize - 1).to_vec())
            .collect();
        Ok(Mls {
            n,
            matroid: LinearMatroid::new(field, n, elements)?.into(),
            grid: (0..n * n).collect(),
        })
    }

    /// The grid with `v_1` on the whole diagonal and `v_i - v_j` in cell
    /// `(i, j)` off it, where `v_i` are the standard basis vectors of GF(p)^n.
    ///
    /// Id 0 is the single shared `v_1`; off-diagonal cells get ids
    /// `1..=n(n-1)` in row-major order even when two cells carry equal
    /// vectors (as `v_i - v_j` and `v_j - v_i` do over GF(2)).
    pub fn theorem2(n: usize, field: FieldSpec) -> Mls {
        assert!(n >= 1);
        let minus_one = field.neg(1);
        let mut v1 = vec![0; n];
        v1[0] = 1;
        let mut elements = vec![v1];
        let mut grid = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    grid.push(0);
                } else {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[j] = minus_one;
                    grid.push(elements.len());
                    elements.push(v);
                }
            }
        }
        let matroid = LinearMatroid::new(field, n, elements).expect("residues are reduced");
        Mls {
            n,
            matroid: matroid.into(),
            grid,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn id(&self, (row, col): Cell) -> ElementId {
        self.grid[row * self.n + col]
    }

    pub fn ids(&self, cells: &[Cell]) -> Vec<ElementId> {
        cells.iter().map(|&c| self.id(c)).collect()
    }

    pub fn row_ids(&self, row: usize) -> Vec<ElementId> {
        self.grid[row * self.n..(row + 1) * self.n].to_vec()
    }

    pub fn col_ids(&self, col: usize) -> Vec<ElementId> {
        (0..self.n).map(|r| self.id((r, col))).collect()
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.grid
            .chunks(self.n)
            .map(<[ElementId]>::to_vec)
            .collect()
    }

    /// Permutes rows and columns so that `cells[k]` lands on diagonal
    /// position `(k, k)`. Remaining rows and columns follow in increasing
    /// order. The grid itself is not touched.
    pub fn block_decompose(&self, cells: &[Cell]) -> Result<BlockView> {
        check_partial_transversal(self.n, cells)?;
        let n = self.n;
        let t = cells.len();
        let mut row_perm: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut col_perm: Vec<usize> = cells.iter().map(|c| c.1).collect();
        row_perm.extend((0..n).filter(|r| !cells.iter().any(|c| c.0 == *r)));
        col_perm.extend((0..n).filter(|col| !cells.iter().any(|c| c.1 == *col)));
        Ok(BlockView {
            n,
            t,
            row_perm,
            col_perm,
        })
    }
}

/// Checks that `cells` lie in an n×n grid with pairwise distinct rows and
/// columns.
pub(crate) fn check_partial_transversal(n: usize, cells: &[Cell]) -> Result<()> {
    let mut rows = vec![false; n];
    let mut cols = vec![false; n];
    for &(r, c) in cells {
        if r >= n || c >= n {
            return Err(Error::InvalidTransversal(format!(
                "cell ({r}, {c}) outside a {n}×{n} grid"
            )));
        }
        if std::mem::replace(&mut rows[r], true) {
            return Err(Error::InvalidTransversal(format!("row {r} used twice")));
        }
        if std::mem::replace(&mut cols[c], true) {
            return Err(Error::InvalidTransversal(format!("column {c} used twice")));
        }
    }
    Ok(())
}

/// Draws uniformly random n×n matrices over GF(p) until one is invertible,
/// returning its columns.
pub fn random_invertible<R: Rng>(n: usize, field: FieldSpec, rng: &mut R) -> Vec<Vec<u32>> {
    let p = field.modulus();
    loop {
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if field.rank(&cols, n) == n {
            return cols;
        }
    }
}

/// The four blocks of a grid once a transversal of size `t` has been moved
/// onto the leading diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// t×t, holds the transversal on its diagonal.
    B,
    /// t×(n−t)
    C,
    /// (n−t)×t
    D,
    /// (n−t)×(n−t), the cells in rows and columns the transversal misses.
    E,
}

/// A row and column permutation of an MLS. Frame position `(i, j)` shows
/// the original cell `(row_perm[i], col_perm[j])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    n: usize,
    t: usize,
    row_perm: Vec<usize>,
    col_perm: Vec<usize>,
}

impl BlockView {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn row_perm(&self) -> &[usize] {
        &self.row_perm
    }

    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    /// Original coordinates of frame position `(i, j)`.
    pub fn original(&self, (i, j): Cell) -> Cell {
        (self.row_perm[i], self.col_perm[j])
    }

    /// Frame position of an original cell.
    pub fn frame(&self, (r, c): Cell) -> Cell {
        let i = self
            .row_perm
            .iter()
            .position(|&x| x == r)
            .expect("row in range");
        let j = self
            .col_perm
            .iter()
            .position(|&x| x == c)
            .expect("column in range");
        (i, j)
    }

    /// Frame row and column ranges of a block.
    pub fn region(&self, region: Region) -> (Range<usize>, Range<usize>) {
        let (n, t) = (self.n, self.t);
        match region {
            Region::B => (0..t, 0..t),
            Region::C => (0..t, t..n),
            Region::D => (t..n, 0..t),
            Region::E => (t..n, t..n),
        }
    }

    /// Original coordinates of a block's cells, in frame row-major order.
    pub fn region_cells(&self, region: Region) -> Vec<Cell> {
        let (rows, cols) = self.region(region);
        rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
            .map(|f| self.original(f))
            .collect()
    }
}
