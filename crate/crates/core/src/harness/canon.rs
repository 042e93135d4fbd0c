//! Canonical labelling for small graphs and isomorphism-free enumeration of
//! triangle-free graphs.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest order [`canonical_code`] supports (upper triangle fits in a `u64`).
pub const MAX_CANON_N: usize = 11;

/// An isomorphism invariant: equal codes iff isomorphic graphs of the same order.
///
/// Vertices are grouped into cells by (degree, sorted neighbour degrees);
/// the code is the largest upper-triangle adjacency word over all
/// relabellings that list cells in invariant order.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANON_N,
        "canonical_code supports n <= {MAX_CANON_N}"
    );
    let mut keyed: Vec<((usize, Vec<usize>), usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            ((g.degree(v), nd), v)
        })
        .collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<&(usize, Vec<usize>)> = None;
    for (key, v) in &keyed {
        if last != Some(key) {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed").push(*v);
        last = Some(key);
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut used = VertexSet::empty(n);
    search(g, &cells, 0, &mut order, &mut used, &mut best);
    best
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = (code << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

fn search(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    used: &mut VertexSet,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).max(code_of(g, order));
        return;
    }
    let placed_in_cell = order.len() - cells[..cell].iter().map(Vec::len).sum::<usize>();
    if placed_in_cell == cells[cell].len() {
        search(g, cells, cell + 1, order, used, best);
        return;
    }
    for &v in &cells[cell] {
        if used.contains(v) {
            continue;
        }
        used.insert(v);
        order.push(v);
        search(g, cells, cell, order, used, best);
        order.pop();
        used.remove(v);
    }
}

/// One representative per isomorphism class of triangle-free graphs on `n`
/// vertices, ordered by canonical code.
///
/// Grows classes one vertex at a time: every triangle-free graph on `k + 1`
/// vertices is a triangle-free graph on `k` vertices plus a vertex joined to
/// a stable set.
pub fn triangle_free_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANON_N);
    if n == 0 {
        return vec![Graph::edgeless(0)];
    }
    let mut level: Vec<Graph> = vec![Graph::edgeless(1)];
    for k in 1..n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for stable in stable_subsets(g) {
                let mut adj: Vec<VertexSet> = (0..k)
                    .map(|v| {
                        let mut row = VertexSet::empty(k + 1);
                        for u in g.neighbors(v).iter() {
                            row.insert(u);
                        }
                        if stable.contains(&v) {
                            row.insert(k);
                        }
                        row
                    })
                    .collect();
                adj.push(VertexSet::from_iter_n(k + 1, stable.iter().copied()));
                let h = Graph::from_adjacency(adj);
                next.entry(canonical_code(&h)).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}

fn stable_subsets(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for v in 0..g.n() {
        let extended: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.iter().all(|&u| !g.has_edge(u, v)))
            .map(|s| {
                let mut t = s.clone();
                t.push(v);
                t
            })
            .collect();
        out.extend(extended);
    }
    out
}
