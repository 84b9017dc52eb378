//! Test-only oracles and the instance corpus shared by the integration tests.
//!
//! The oracles enumerate candidate transversals exhaustively and share
//! nothing with the branch-and-bound search beyond the matroid rank oracle.

#![allow(dead_code)]

use mlt_core::harness::generate::random_embedding;
use mlt_core::{FieldSpec, LatinSquare, Mls};

/// Largest independent partial transversal by trying every injective
/// partial map from rows to columns.
pub fn brute_force_max(mls: &Mls) -> usize {
    fn go(mls: &Mls, row: usize, used: &mut Vec<bool>, ids: &mut Vec<usize>, best: &mut usize) {
        let n = mls.n();
        if row == n {
            if ids.len() > *best && mls.matroid().is_independent(ids).unwrap() {
                *best = ids.len();
            }
            return;
        }
        go(mls, row + 1, used, ids, best);
        for c in 0..n {
            if used[c] {
                continue;
            }
            used[c] = true;
            ids.push(mls.id((row, c)));
            go(mls, row + 1, used, ids, best);
            ids.pop();
            used[c] = false;
        }
    }
    let mut best = 0;
    go(
        mls,
        0,
        &mut vec![false; mls.n()],
        &mut Vec::new(),
        &mut best,
    );
    best
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of full transversals (one cell per row and column) that are
/// independent.
pub fn independent_full_transversals(mls: &Mls) -> usize {
    permutations(mls.n())
        .iter()
        .filter(|perm| {
            let ids: Vec<usize> = perm
                .iter()
                .enumerate()
                .map(|(r, &c)| mls.id((r, c)))
                .collect();
            mls.matroid().is_independent(&ids).unwrap()
        })
        .count()
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub mls: Mls,
}

fn instance(label: String, mls: Mls) -> Instance {
    assert!(mls.validate().is_empty(), "{label} is not an MLS");
    Instance { label, mls }
}

/// Every Latin square of orders `orders` in partition encoding.
pub fn all_latin(orders: std::ops::RangeInclusive<usize>) -> Vec<Instance> {
    orders
        .flat_map(|n| {
            LatinSquare::enumerate(n)
                .into_iter()
                .enumerate()
                .map(move |(i, sq)| {
                    instance(format!("latin n={n} #{i}"), Mls::from_latin_square(&sq))
                })
        })
        .collect()
}

/// `count` random Latin squares embedded over GF(p); instance `i` has order
/// `5 + i % 3`, prime `[2, 3, 5, 7][i % 4]` and seed `i`.
pub fn random_embedded(count: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = 5 + i % 3;
            let p = [2, 3, 5, 7][i % 4];
            let seed = i as u64;
            let mls = random_embedding(&LatinSquare::random(n, seed), gf(p), seed).unwrap();
            instance(format!("embed n={n} p={p} seed={seed}"), mls)
        })
        .collect()
}

pub fn theorem2_family(orders: std::ops::RangeInclusive<usize>, primes: &[u64]) -> Vec<Instance> {
    orders
        .flat_map(|n| {
            primes
                .iter()
                .map(move |&p| instance(format!("theorem2 n={n} p={p}"), Mls::theorem2(n, gf(p))))
        })
        .collect()
}

/// The main corpus: all Latin squares of orders 2–4, 200 random embedded
/// instances of orders 5–7 and the theorem2 grids of orders 1–7 over GF(2)
/// and GF(5).
pub fn corpus() -> Vec<Instance> {
    let mut out = all_latin(2..=4);
    out.extend(random_embedded(200));
    out.extend(theorem2_family(1..=7, &[2, 5]));
    out
}
