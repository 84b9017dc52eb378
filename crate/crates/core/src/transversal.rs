//! Independent partial transversal solvers.
//!
//! * [`greedy_maximal`] builds a maximal independent transversal.
//! * [`augment_step`] grows a maximal transversal of size `t` to size `t + 1`
//!   by exchanging one diagonal element of the block frame for two new cells.
//! * [`two_thirds_solve`] alternates the two until the size reaches
//!   `⌈2n/3⌉`.
//! * [`exact_max`] is a depth-first branch and bound for the optimum.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::ElementId;
use crate::mls::{check_partial_transversal, Cell, Mls, Region};

/// Default node budget for [`exact_max`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// `⌈2n/3⌉`
pub fn two_thirds_bound(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// `⌈n/2⌉`
pub fn maximality_floor(n: usize) -> usize {
    n.div_ceil(2)
}

/// A set of cells with pairwise distinct rows and columns, kept sorted by
/// row, together with the element ids they reference.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Transversal {
    cells: Vec<Cell>,
    ids: Vec<ElementId>,
}

impl Transversal {
    /// Checks rows and columns are distinct; does not check independence.
    pub fn new(mls: &Mls, mut cells: Vec<Cell>) -> Result<Self> {
        check_partial_transversal(mls.n(), &cells)?;
        cells.sort_unstable();
        let ids = mls.ids(&cells);
        Ok(Transversal { cells, ids })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.ids
    }

    pub fn is_independent(&self, mls: &Mls) -> bool {
        mls.matroid().is_independent_unchecked(&self.ids)
    }

    fn with(&self, mls: &Mls, cell: Cell) -> Transversal {
        let mut cells = self.cells.clone();
        cells.push(cell);
        cells.sort_unstable();
        let ids = mls.ids(&cells);
        Transversal { cells, ids }
    }

    fn free_rows(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|r| !self.cells.iter().any(|c| c.0 == *r))
            .collect()
    }

    fn free_cols(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|col| !self.cells.iter().any(|c| c.1 == *col))
            .collect()
    }
}

/// True iff `cells` lie in the grid, use distinct rows and columns, and
/// reference an independent multiset of elements.
pub fn is_valid_transversal(mls: &Mls, cells: &[Cell]) -> bool {
    check_partial_transversal(mls.n(), cells).is_ok()
        && mls.matroid().is_independent_unchecked(&mls.ids(cells))
}

fn require_independent(mls: &Mls, t: &Transversal) -> Result<()> {
    if !is_valid_transversal(mls, t.cells()) {
        return Err(Error::InvalidTransversal(format!(
            "cells {:?} are not an independent partial transversal",
            t.cells()
        )));
    }
    Ok(())
}

/// Some free cell (lowest row, then lowest column) that can be added to `t`
/// keeping it independent.
fn direct_extension(mls: &Mls, t: &Transversal) -> Option<Cell> {
    let n = mls.n();
    let cols = t.free_cols(n);
    t.free_rows(n).into_iter().find_map(|r| {
        cols.iter()
            .map(|&c| (r, c))
            .find(|&cell| !mls.matroid().spans_unchecked(t.ids(), mls.id(cell)))
    })
}

/// True iff `t` is an independent transversal admitting no single-cell
/// extension.
pub fn is_maximal(mls: &Mls, t: &Transversal) -> bool {
    t.is_independent(mls) && direct_extension(mls, t).is_none()
}

fn scan_order(n: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols = rows.clone();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
    }
    (rows, cols)
}

/// Extends `start` to a maximal independent transversal by a single
/// row-major pass in the row and column order fixed by `seed` (seed 0 is the
/// identity order).
///
/// One pass suffices: a cell rejected earlier stays spanned as the
/// transversal grows.
pub fn greedy_extend(mls: &Mls, start: &Transversal, seed: u64) -> Transversal {
    let n = mls.n();
    let (rows, cols) = scan_order(n, seed);
    let mut row_used = vec![false; n];
    let mut col_used = vec![false; n];
    for &(r, c) in start.cells() {
        row_used[r] = true;
        col_used[c] = true;
    }
    let mut cells = start.cells().to_vec();
    let mut ids = start.ids().to_vec();
    for &r in &rows {
        for &c in &cols {
            if row_used[r] || col_used[c] {
                continue;
            }
            let id = mls.id((r, c));
            if !mls.matroid().spans_unchecked(&ids, id) {
                cells.push((r, c));
                ids.push(id);
                row_used[r] = true;
                col_used[c] = true;
            }
        }
    }
    cells.sort_unstable();
    let ids = mls.ids(&cells);
    Transversal { cells, ids }
}

pub fn greedy_maximal(mls: &Mls, seed: u64) -> Transversal {
    greedy_extend(mls, &Transversal::empty(), seed)
}

/// One exchange step on a maximal independent transversal `t`.
///
/// With `t` moved onto the leading diagonal (see [`Mls::block_decompose`]),
/// every cell of block E is spanned by `t`. The step looks for a diagonal
/// position `j` whose element `a_jj` lies in the support of some `x` in E,
/// and an element `y` in column `j` of block D, outside the span of `t` and
/// in a different row from `x`. Then `t - a_jj + x + y` is independent: `y`
/// is independent of `t`, and `t - a_jj + y` cannot span `x` since the
/// expansion of `x` over `t` needs `a_jj`.
///
/// Search order is lowest `j`, then `x` in frame row-major order, then `y` by
/// lowest frame row. If `t` is not maximal the lowest direct extension is
/// returned instead. `Ok(None)` means no exchange configuration exists.
pub fn augment_step(mls: &Mls, t: &Transversal) -> Result<Option<Transversal>> {
    require_independent(mls, t)?;
    let n = mls.n();
    if t.len() == n {
        return Err(Error::NothingToAugment(n));
    }
    if let Some(cell) = direct_extension(mls, t) {
        return Ok(Some(t.with(mls, cell)));
    }
    let matroid = mls.matroid();
    let view = mls.block_decompose(t.cells())?;
    let diag_ids = t.ids();
    let size = t.len();

    // support of each E element, as flags over diagonal positions
    let e_cells = view.region_cells(Region::E);
    let mut e_support = Vec::with_capacity(e_cells.len());
    for &x in &e_cells {
        let support = matroid.support_unchecked(diag_ids, mls.id(x))?;
        let flags: Vec<bool> = diag_ids.iter().map(|id| support.contains(id)).collect();
        e_support.push(flags);
    }

    for j in 0..size {
        if !e_support.iter().any(|flags| flags[j]) {
            continue; // a_jj is outside the minimal subset spanning E
        }
        let unspanned: Vec<Cell> = (size..n)
            .map(|i| view.original((i, j)))
            .filter(|&cell| !matroid.spans_unchecked(diag_ids, mls.id(cell)))
            .collect();
        if unspanned.is_empty() {
            continue;
        }
        for (&x, flags) in e_cells.iter().zip(&e_support) {
            if !flags[j] {
                continue;
            }
            let Some(&y) = unspanned.iter().find(|y| y.0 != x.0) else {
                continue;
            };
            let removed = view.original((j, j));
            let mut cells: Vec<Cell> = t
                .cells()
                .iter()
                .copied()
                .filter(|&c| c != removed)
                .collect();
            cells.push(x);
            cells.push(y);
            if !is_valid_transversal(mls, &cells) {
                return Err(Error::ExchangeAnomaly(format!(
                    "removing {removed:?} and adding {x:?}, {y:?} to {:?}",
                    t.cells()
                )));
            }
            return Transversal::new(mls, cells).map(Some);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Greedy,
    Augment,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::Augment => "augment",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub method: Method,
    pub transversal: Transversal,
    /// Set only when the search space was exhausted or the size reached `n`.
    pub optimal: bool,
    /// Branch-and-bound nodes; for the augmenting solver, exchanges
    /// performed plus any fallback search nodes.
    pub nodes: u64,
    /// The augmenting solver got stuck below `⌈2n/3⌉` and needed the
    /// exact fallback.
    pub anomaly: bool,
}

impl SolveReport {
    pub fn size(&self) -> usize {
        self.transversal.len()
    }
}

/// Greedy maximal transversal (seed 0) as a report.
pub fn greedy_solve(mls: &Mls, seed: u64) -> SolveReport {
    let transversal = greedy_maximal(mls, seed);
    SolveReport {
        method: Method::Greedy,
        optimal: transversal.len() == mls.n(),
        transversal,
        nodes: 0,
        anomaly: false,
    }
}

/// Runs greedy + exchange steps, re-greedifying after each exchange, until
/// the size reaches `target` or no exchange applies. Returns the final
/// transversal and the number of exchanges.
pub fn augment_until(mls: &Mls, target: usize) -> Result<(Transversal, u64)> {
    let mut t = greedy_maximal(mls, 0);
    let mut steps = 0;
    while t.len() < target && t.len() < mls.n() {
        match augment_step(mls, &t)? {
            Some(next) => {
                t = greedy_extend(mls, &next, 0);
                steps += 1;
            }
            None => break,
        }
    }
    Ok((t, steps))
}

/// An independent transversal of size at least `⌈2n/3⌉`.
///
/// If exchanges stall below the bound, an exact search for a transversal of
/// that size runs instead and the report is flagged as an anomaly. If that
/// search proves no such transversal exists the result is
/// [`Error::TheoremViolation`].
pub fn two_thirds_solve(mls: &Mls) -> Result<SolveReport> {
    let n = mls.n();
    let target = two_thirds_bound(n);
    let (t, steps) = augment_until(mls, target)?;
    if t.len() >= target {
        return Ok(SolveReport {
            method: Method::Augment,
            optimal: t.len() == n,
            transversal: t,
            nodes: steps,
            anomaly: false,
        });
    }
    let fallback = exact_search(mls, 0, Some(target));
    if fallback.size() < target {
        return Err(Error::TheoremViolation {
            n,
            optimum: fallback.size(),
            target,
        });
    }
    Ok(SolveReport {
        method: Method::Augment,
        optimal: fallback.optimal,
        transversal: fallback.transversal,
        nodes: steps + fallback.nodes,
        anomaly: true,
    })
}

/// Maximum independent partial transversal by branch and bound.
///
/// Rows are decided in increasing order: place a cell in a free column
/// (increasing column) or leave the row empty. A node with `t` cells at row
/// `r` is pruned when `t + min(n - r, n - t, rank(T ∪ F) - t)` cannot beat
/// the incumbent, where `F` holds the cells in rows `r..n` and free columns.
/// Depth-first order visits equal-size cell sets lexicographically, so the
/// reported optimum is the lexicographically least one.
///
/// `node_budget` 0 means unbounded; when the budget runs out the best found
/// so far is reported with `optimal = false`.
pub fn exact_max(mls: &Mls, node_budget: u64) -> SolveReport {
    exact_search(mls, node_budget, None)
}

/// [`exact_max`] that also stops as soon as a transversal of size
/// `target` is found.
pub fn exact_search(mls: &Mls, node_budget: u64, target: Option<usize>) -> SolveReport {
    let n = mls.n();
    let mut search = Search {
        mls,
        n,
        budget: node_budget,
        target: target.unwrap_or(n).min(n),
        nodes: 0,
        stopped: false,
        best: Vec::new(),
        cells: Vec::with_capacity(n),
        ids: Vec::with_capacity(n),
        col_used: vec![false; n],
    };
    search.visit(0);
    let best = search.best;
    let optimal = best.len() == n || !search.stopped;
    let ids = mls.ids(&best);
    SolveReport {
        method: Method::Exact,
        transversal: Transversal { cells: best, ids },
        optimal,
        nodes: search.nodes,
        anomaly: false,
    }
}

struct Search<'a> {
    mls: &'a Mls,
    n: usize,
    budget: u64,
    target: usize,
    nodes: u64,
    stopped: bool,
    best: Vec<Cell>,
    cells: Vec<Cell>,
    ids: Vec<ElementId>,
    col_used: Vec<bool>,
}

impl Search<'_> {
    fn visit(&mut self, row: usize) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.budget > 0 && self.nodes > self.budget {
            self.stopped = true;
            return;
        }
        let t = self.cells.len();
        if t > self.best.len() {
            self.best = self.cells.clone();
            if t >= self.target {
                self.stopped = true;
                return;
            }
        }
        if row == self.n {
            return;
        }
        let cheap = (self.n - row).min(self.n - t);
        if t + cheap <= self.best.len() || t + self.contracted_rank(row) <= self.best.len() {
            return;
        }
        let matroid = self.mls.matroid();
        for c in 0..self.n {
            if self.col_used[c] {
                continue;
            }
            let id = self.mls.id((row, c));
            if matroid.spans_unchecked(&self.ids, id) {
                continue;
            }
            self.cells.push((row, c));
            self.ids.push(id);
            self.col_used[c] = true;
            self.visit(row + 1);
            self.col_used[c] = false;
            self.ids.pop();
            self.cells.pop();
            if self.stopped {
                return;
            }
        }
        self.visit(row + 1);
    }

    /// Rank of the cells still available below `row`, contracted by the
    /// current partial transversal.
    fn contracted_rank(&self, row: usize) -> usize {
        let mut ids = self.ids.clone();
        for r in row..self.n {
            for c in 0..self.n {
                if !self.col_used[c] {
                    ids.push(self.mls.id((r, c)));
                }
            }
        }
        self.mls.matroid().rank_unchecked(&ids) - self.ids.len()
    }
}

/// True iff `t`, a maximal independent transversal, has size at least
/// `⌈n/2⌉`. A `false` answer contradicts the maximality argument.
pub fn maximality_floor_check(mls: &Mls, t: &Transversal) -> Result<bool> {
    require_independent(mls, t)?;
    if !is_maximal(mls, t) {
        return Err(Error::InvalidTransversal(format!(
            "{:?} is not maximal",
            t.cells()
        )));
    }
    Ok(t.len() >= maximality_floor(mls.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::latin::LatinSquare;

    fn theorem2(n: usize, p: u64) -> Mls {
        Mls::theorem2(n, FieldSpec::new(p).unwrap())
    }

    #[test]
    fn bounds() {
        let twothirds: Vec<usize> = (1..=9).map(two_thirds_bound).collect();
        assert_eq!(twothirds, vec![1, 2, 2, 3, 4, 4, 5, 6, 6]);
        let half: Vec<usize> = (1..=5).map(maximality_floor).collect();
        assert_eq!(half, vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn validity_examples() {
        let mls = theorem2(3, 5);
        assert!(is_valid_transversal(&mls, &[]));
        assert!(!is_valid_transversal(&mls, &[(0, 0), (1, 1)]));
        assert!(!is_valid_transversal(&mls, &[(0, 1), (1, 2), (2, 0)]));
        assert!(is_valid_transversal(&mls, &[(0, 0), (1, 2)]));
        assert!(!is_valid_transversal(&mls, &[(0, 0), (0, 1)]));
        assert!(!is_valid_transversal(&mls, &[(3, 0)]));
    }

    #[test]
    fn greedy_examples() {
        let t = greedy_maximal(&theorem2(3, 5), 0);
        assert_eq!(t.cells(), &[(0, 0), (1, 2)]);

        let one = Mls::from_latin_square(&LatinSquare::cyclic(1));
        assert_eq!(greedy_maximal(&one, 0).len(), 1);

        let cyc = Mls::from_latin_square(&LatinSquare::cyclic(3));
        assert_eq!(greedy_maximal(&cyc, 0).cells(), &[(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn greedy_is_maximal_for_any_seed() {
        let mls = theorem2(5, 3);
        for seed in 0..20 {
            let t = greedy_maximal(&mls, seed);
            assert!(is_maximal(&mls, &t), "seed {seed}");
            assert!(maximality_floor_check(&mls, &t).unwrap());
        }
    }

    #[test]
    fn augment_errors_and_none() {
        let mls = theorem2(3, 5);
        let t = Transversal::new(&mls, vec![(0, 0), (1, 2)]).unwrap();
        assert_eq!(augment_step(&mls, &t).unwrap(), None);

        let one = Mls::from_latin_square(&LatinSquare::cyclic(1));
        let full = Transversal::new(&one, vec![(0, 0)]).unwrap();
        assert!(matches!(
            augment_step(&one, &full),
            Err(Error::NothingToAugment(1))
        ));

        let dependent = Transversal::new(&mls, vec![(0, 0), (1, 1)]).unwrap();
        assert!(matches!(
            augment_step(&mls, &dependent),
            Err(Error::InvalidTransversal(_))
        ));
    }

    #[test]
    fn augment_returns_direct_extension_when_not_maximal() {
        let mls = theorem2(3, 5);
        let t = Transversal::new(&mls, vec![(0, 0)]).unwrap();
        let next = augment_step(&mls, &t).unwrap().unwrap();
        assert_eq!(next.cells(), &[(0, 0), (1, 2)]);
    }

    #[test]
    fn two_thirds_examples() {
        assert!(two_thirds_solve(&theorem2(3, 5)).unwrap().size() >= 2);
        let one = Mls::from_latin_square(&LatinSquare::cyclic(1));
        assert_eq!(two_thirds_solve(&one).unwrap().size(), 1);
    }

    #[test]
    fn order_two_contradicts_two_thirds_bound() {
        // ⌈4/3⌉ = 2, but both diagonals of an order-2 Latin square repeat a symbol
        let mls = Mls::from_latin_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert!(matches!(
            two_thirds_solve(&mls),
            Err(Error::TheoremViolation {
                n: 2,
                optimum: 1,
                target: 2
            })
        ));
    }

    #[test]
    fn exact_examples() {
        let r = exact_max(&theorem2(3, 5), DEFAULT_NODE_BUDGET);
        assert_eq!(r.size(), 2);
        assert!(r.optimal);

        let two = Mls::from_latin_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let r = exact_max(&two, 0);
        assert_eq!(r.size(), 1);
        assert!(r.optimal);
        assert_eq!(r.transversal.cells(), &[(0, 0)]);
    }

    #[test]
    fn exact_reports_lexicographically_least_optimum() {
        let r = exact_max(&theorem2(3, 5), 0);
        assert_eq!(r.transversal.cells(), &[(0, 0), (1, 2)]);
        let r = exact_max(&Mls::from_latin_square(&LatinSquare::cyclic(3)), 0);
        assert_eq!(r.transversal.cells(), &[(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn exact_budget_exhaustion() {
        let r = exact_max(&theorem2(6, 5), 3);
        assert!(!r.optimal);
        assert!(r.nodes <= 4);
        assert!(is_valid_transversal(&theorem2(6, 5), r.transversal.cells()));
    }

    #[test]
    fn floor_check_examples() {
        let one = Mls::from_latin_square(&LatinSquare::cyclic(1));
        let t = Transversal::new(&one, vec![(0, 0)]).unwrap();
        assert!(maximality_floor_check(&one, &t).unwrap());

        let two = Mls::from_latin_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let t = Transversal::new(&two, vec![(0, 0)]).unwrap();
        assert!(maximality_floor_check(&two, &t).unwrap());

        let mls = theorem2(3, 5);
        let t = Transversal::new(&mls, vec![(0, 0)]).unwrap();
        assert!(maximality_floor_check(&mls, &t).is_err());
    }
}
