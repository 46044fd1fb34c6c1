//! Small simple graphs: stable sets, maximal cliques, the fractional
//! stable-set polytope, and a desk-scale perfectness test.
//!
//! Vertex counts are capped at 24 so adjacency fits in `u32` bitmasks.
//! Perfectness uses the strong characterization: a graph is perfect iff
//! neither it nor its complement contains an induced odd cycle of length
//! at least five.

use crate::error::Error;
use crate::polytope::HPolytope;
use crate::Result;

pub const GRAPH_CAP: usize = 24;

/// Simple undirected graph with a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(num_vertices: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if num_vertices > GRAPH_CAP {
            return Err(Error::GraphCap(num_vertices, GRAPH_CAP));
        }
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.0 == e.1 || e.1 >= num_vertices {
                return Err(Error::Parse(format!("bad edge ({}, {})", e.0, e.1)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![0u32; num_vertices];
        for &(u, v) in &edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { num_vertices, edges, adj })
    }

    /// Path on `k` vertices: edges i -- i+1.
    pub fn path(k: usize) -> Result<Self> {
        Graph::new(k, (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect())
    }

    /// Cycle on `k` vertices.
    pub fn cycle(k: usize) -> Result<Self> {
        let mut e: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        e.push((k - 1, 0));
        Graph::new(k, e)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.num_vertices {
            for v in (u + 1)..self.num_vertices {
                if self.adj[u] & (1 << v) == 0 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.num_vertices, edges).expect("complement within cap")
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    fn neighbors_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }
}

/// All stable sets (including the empty set), as sorted vertex lists in
/// deterministic order.
pub fn stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.num_vertices;
    let mut out: Vec<u32> = Vec::new();
    // Backtracking over vertices: include v only when no chosen neighbor.
    fn rec(g: &Graph, v: usize, chosen: u32, out: &mut Vec<u32>) {
        if v == g.num_vertices {
            out.push(chosen);
            return;
        }
        rec(g, v + 1, chosen, out);
        if g.neighbors_mask(v) & chosen == 0 {
            rec(g, v + 1, chosen | (1 << v), out);
        }
    }
    rec(g, 0, 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out.iter().map(|&m| mask_to_vec(m, n)).collect();
    sets.sort();
    sets
}

fn mask_to_vec(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Maximal cliques by Bron--Kerbosch with pivoting, sorted deterministically.
pub fn max_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<u32> = Vec::new();
    let full: u32 = if g.num_vertices == 32 { u32::MAX } else { (1u32 << g.num_vertices) - 1 };
    fn bk(g: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p | x with most neighbors in p
        let mut pivot = usize::MAX;
        let mut best = -1i32;
        let mut px = p | x;
        while px != 0 {
            let v = px.trailing_zeros() as usize;
            px &= px - 1;
            let score = (g.neighbors_mask(v) & p).count_ones() as i32;
            if score > best {
                best = score;
                pivot = v;
            }
        }
        let mut candidates = p & !g.neighbors_mask(pivot);
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let nv = g.neighbors_mask(v);
            bk(g, r | (1 << v), p & nv, x & nv, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    bk(g, 0, full, 0, &mut out);
    let mut cliques: Vec<Vec<usize>> = out.iter().map(|&m| mask_to_vec(m, g.num_vertices)).collect();
    cliques.sort();
    cliques
}

/// The fractional stable-set polytope: one row per *maximal* clique
/// (dominated clique rows are redundant).
pub fn qstab(g: &Graph) -> HPolytope {
    let cliques = max_cliques(g);
    let rows = cliques
        .iter()
        .map(|q| {
            let mut a = vec![0i64; g.num_vertices];
            for &v in q {
                a[v] = 1;
            }
            (a, 1i64)
        })
        .collect();
    HPolytope::new(g.num_vertices, rows)
}

/// Search for an induced cycle of odd length >= 5. Enumerates chordless
/// cycles whose smallest vertex is the anchor; dense graphs prune fast.
fn has_odd_hole(g: &Graph) -> bool {
    let n = g.num_vertices;
    for s in 0..n {
        // path = s, v1, ..., vk with all vertices > s, no chords
        let mut path = vec![s];
        if dfs_hole(g, s, &mut path) {
            return true;
        }
    }
    false
}

fn dfs_hole(g: &Graph, s: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    for v in (s + 1)..g.num_vertices {
        if path.contains(&v) || !g.adjacent(last, v) {
            continue;
        }
        // chordlessness against interior path vertices (s handled below)
        let chord = path.iter().skip(1).any(|&u| u != last && g.adjacent(v, u));
        if chord {
            continue;
        }
        if path.len() >= 2 && g.adjacent(v, s) {
            // closes a cycle of length path.len() + 1; any extension past v
            // would carry the chord (v, s), so stop this branch either way
            if path.len() + 1 >= 5 && (path.len() + 1) % 2 == 1 {
                return true;
            }
            continue;
        }
        path.push(v);
        if dfs_hole(g, s, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Perfectness at desk scale: no induced odd cycle of length >= 5 in the
/// graph or its complement.
pub fn is_perfect_desk(g: &Graph) -> Result<bool> {
    if g.num_vertices > GRAPH_CAP {
        return Err(Error::GraphCap(g.num_vertices, GRAPH_CAP));
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// The edge graph of a triangulation: grid points as vertices, triangulation
/// edges as edges.
pub fn edge_graph(t: &crate::tri::Triangulation) -> Result<Graph> {
    let edges = t.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    Graph::new(t.config.num_points(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::lattice_count;

    #[test]
    fn stable_sets_of_p3() {
        let g = Graph::path(3).unwrap();
        let sets = stable_sets(&g);
        assert_eq!(sets.len(), 5);
        assert!(sets.contains(&vec![]));
        assert!(sets.contains(&vec![0, 2]));
        assert!(!sets.contains(&vec![0, 1]));
    }

    #[test]
    fn max_cliques_of_path_are_edges() {
        let g = Graph::path(4).unwrap();
        let cliques = max_cliques(&g);
        assert_eq!(cliques, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn qstab_of_path_is_chain_polytope() {
        for n in 1..=4 {
            let g = Graph::path(n + 1).unwrap();
            let q = qstab(&g);
            let p = HPolytope::chain(n).unwrap();
            assert_eq!(q, p);
        }
    }

    #[test]
    fn qstab_counts_match_stable_sets_at_t1() {
        // lattice points of 1 * QSTAB are exactly the stable-set vectors
        let g = Graph::path(5).unwrap();
        assert_eq!(lattice_count(&qstab(&g), 1).unwrap() as usize, stable_sets(&g).len());
    }

    #[test]
    fn perfectness_small_cases() {
        assert!(is_perfect_desk(&Graph::path(7).unwrap()).unwrap());
        assert!(!is_perfect_desk(&Graph::cycle(5).unwrap()).unwrap());
        assert!(is_perfect_desk(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_perfect_desk(&Graph::cycle(6).unwrap()).unwrap());
        assert!(!is_perfect_desk(&Graph::cycle(7).unwrap()).unwrap());
        // complement of C7 has an odd antihole
        assert!(!is_perfect_desk(&Graph::cycle(7).unwrap().complement()).unwrap());
    }

    #[test]
    fn isolated_vertices_get_singleton_clique_rows() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        let q = qstab(&g);
        assert_eq!(q.rows.len(), 2); // {0,1} and {2}
        assert!(q.rows.contains(&(vec![0, 0, 1], 1)));
    }
}
