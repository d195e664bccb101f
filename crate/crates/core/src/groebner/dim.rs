use super::{buchberger, GroebnerBasis};
use crate::polyring::Submodule;

/// Krull dimension of `F / span(G)`: the largest dimension of `R / LT_c`
/// over the components `c`, with `-1` for the whole module.
pub fn krull_dim(g: &GroebnerBasis) -> i64 {
    let n = g.ring().nvars();
    let lts = g.leading_terms();
    let mut best = -1;
    for c in 0..g.rank() {
        let mons: Vec<Vec<u32>> = lts
            .iter()
            .filter(|(k, _)| *k == c)
            .map(|(_, e)| e.clone())
            .collect();
        best = best.max(monomial_dimension(&mons, n).0);
    }
    best
}

pub fn dimension(a: &Submodule) -> i64 {
    krull_dim(&buchberger(a))
}

/// `n - dim`; the whole module gets `n + 1`.
pub fn codim(a: &Submodule) -> i64 {
    a.ring().nvars() as i64 - dimension(a)
}

/// Dimension of `R / <mons>` and a largest set of variables independent
/// modulo the monomials. Returns `(-1, [])` when some monomial is 1.
pub fn monomial_dimension(mons: &[Vec<u32>], n: usize) -> (i64, Vec<usize>) {
    let supports: Vec<u64> = mons
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    if supports.iter().any(|&s| s == 0) {
        return (-1, Vec::new());
    }
    let mut best = (0usize, 0u64);
    search(n, n, 0, 0, &supports, &mut best);
    let set: Vec<usize> = (0..n).filter(|&i| best.1 & (1 << i) != 0).collect();
    (best.0 as i64, set)
}

// Variables are tried from the last to the first, including before
// excluding, so among sets of maximal size the one using late variables
// wins.
fn search(n: usize, i: usize, set: u64, size: usize, supports: &[u64], best: &mut (usize, u64)) {
    if size > best.0 {
        *best = (size, set);
    }
    if i == 0 || size + i <= best.0 {
        return;
    }
    let v = i - 1;
    let with = set | 1 << v;
    if supports.iter().all(|&s| s & !with != 0) {
        search(n, v, with, size + 1, supports, best);
    }
    search(n, v, set, size, supports, best);
}

/// Maximal independent set of variables modulo the leading ideal of a
/// rank-one basis.
pub fn independent_set(g: &GroebnerBasis) -> Vec<usize> {
    let mons: Vec<Vec<u32>> = g.leading_terms().into_iter().map(|(_, e)| e).collect();
    monomial_dimension(&mons, g.ring().nvars()).1
}
