//! Independent sets in small graphs.

use serde::Serialize;

/// Graphs up to this size are solved exactly.
pub const EXACT_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub vertices: Vec<usize>,
    /// `true` when the set is a maximum independent set.
    pub exact: bool,
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b && !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    adj
}

pub fn independent_set(n: usize, edges: &[(usize, usize)]) -> IndependentSet {
    if n <= EXACT_LIMIT {
        IndependentSet { vertices: maximum(n, edges), exact: true }
    } else {
        IndependentSet { vertices: greedy_coloring_class(n, edges), exact: false }
    }
}

/// Branch and bound over bitmasks.
pub fn maximum(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    assert!(n <= 64, "bitmask search handles at most 64 vertices");
    let adj = adjacency(n, edges);
    let nbr: Vec<u64> = adj.iter().map(|l| l.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    search(all, 0, &nbr, &mut best);
    (0..n).filter(|&v| best >> v & 1 == 1).collect()
}

fn search(cand: u64, chosen: u64, nbr: &[u64], best: &mut u64) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let degree = |v: usize| (nbr[v] & cand).count_ones();
    let verts = (0..64).filter(|&v| cand >> v & 1 == 1);
    let v = verts.clone().min_by_key(|&v| degree(v)).expect("non-empty");
    if degree(v) <= 1 {
        // some maximum set contains a vertex of degree at most one
        search(cand & !(nbr[v] | 1 << v), chosen | 1 << v, nbr, best);
        return;
    }
    let u = verts.max_by_key(|&v| degree(v)).expect("non-empty");
    search(cand & !(nbr[u] | 1 << u), chosen | 1 << u, nbr, best);
    search(cand & !(1 << u), chosen, nbr, best);
}

/// Largest colour class of a greedy colouring along a smallest-last order.
pub fn greedy_coloring_class(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let adj = adjacency(n, edges);
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("vertex left");
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: Vec<usize> = adj[v].iter().map(|&w| color[w]).filter(|&c| c != usize::MAX).collect();
        color[v] = (0..).find(|c| !used.contains(c)).expect("a free colour exists");
    }
    let colors = color.iter().copied().max().map_or(0, |m| m + 1);
    let best = (0..colors).max_by_key(|&c| (color.iter().filter(|&&x| x == c).count(), usize::MAX - c)).unwrap_or(0);
    (0..n).filter(|&v| color[v] == best).collect()
}

pub fn is_independent(set: &[usize], edges: &[(usize, usize)]) -> bool {
    edges.iter().all(|&(a, b)| !(set.contains(&a) && set.contains(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(maximum(5, &cycle(5)).len(), 2);
        assert_eq!(maximum(6, &cycle(6)).len(), 3);
        assert_eq!(maximum(0, &[]).len(), 0);
        assert_eq!(maximum(3, &[]).len(), 3);
        let path: Vec<_> = (0..9).map(|i| (i, i + 1)).collect();
        assert_eq!(maximum(10, &path).len(), 5);
    }

    #[test]
    fn greedy_is_independent() {
        let edges = cycle(50);
        let s = independent_set(50, &edges);
        assert!(!s.exact);
        assert!(is_independent(&s.vertices, &edges));
        assert!(s.vertices.len() >= 50 / 3);
    }

    #[test]
    fn complete_graph() {
        let edges: Vec<_> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
        assert_eq!(maximum(6, &edges).len(), 1);
    }
}
