//! Chordality machinery over index graphs: lexicographic breadth-first
//! search, the perfect elimination check on its reversal, and maximal clique
//! extraction from the elimination structure.

use std::collections::BTreeSet;

/// Visit order of a lexicographic BFS. Each vertex's label collects the
/// priorities of its already-visited neighbors, earlier visits counting
/// more; ties go to the smallest index, so the order is canonical.
pub(crate) fn lex_bfs(adj: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            match best {
                Some(b) if labels[v] <= labels[b] => {}
                _ => best = Some(v),
            }
        }
        let v = best.expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Positions of each vertex in `order`.
fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Whether the reversal of a lex-BFS `order` eliminates perfectly, which
/// holds exactly for chordal graphs. It suffices to test, for each vertex,
/// that its earlier neighbors minus the latest of them are all adjacent to
/// that latest one; induction then makes every earlier-neighbor set a clique.
pub(crate) fn is_perfect_elimination(adj: &[BTreeSet<usize>], order: &[usize]) -> bool {
    let pos = positions(order);
    for &v in order {
        let earlier: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        let Some(&latest) = earlier.iter().max_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &w in &earlier {
            if w != latest && !adj[latest].contains(&w) {
                return false;
            }
        }
    }
    true
}

/// Maximal cliques of a chordal graph, at most one per vertex, given an
/// `order` whose reversal passed `is_perfect_elimination`. Every maximal
/// clique arises as some vertex together with its earlier neighbors; the
/// containment filter keeps exactly the maximal candidates.
pub(crate) fn maximal_cliques(adj: &[BTreeSet<usize>], order: &[usize]) -> Vec<BTreeSet<usize>> {
    let pos = positions(order);
    let candidates: Vec<BTreeSet<usize>> = order
        .iter()
        .map(|&v| {
            let mut c: BTreeSet<usize> =
                adj[v].iter().copied().filter(|&u| pos[u] < pos[v]).collect();
            c.insert(v);
            c
        })
        .collect();
    candidates
        .iter()
        .filter(|c| {
            candidates
                .iter()
                .all(|other| *c == other || !c.is_subset(other))
        })
        .cloned()
        .collect()
}
