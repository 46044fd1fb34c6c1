// scratch: vertex enumeration timing at dim 12 + stable-set cross-check
use diffjets_core::graph::{edge_graph, max_cliques, qstab, stable_sets, is_perfect_desk};
use diffjets_core::polytope::{enumerate_vertices, is_binary_point};
use diffjets_core::tri::{placing_triangulation, GridConfig};
use std::time::Instant;

fn main() {
    for m in [2usize, 3] {
        let t = placing_triangulation(GridConfig::new(m, 2)).unwrap();
        let g = edge_graph(&t).unwrap();
        println!("T_{{{m},2}} edge graph: {} vertices {} edges, perfect={}",
            g.num_vertices, g.edges.len(), is_perfect_desk(&g).unwrap());
        let cliques = max_cliques(&g);
        println!("  max cliques = {} (triangles = {})", cliques.len(), t.triangles.len());
        let q = qstab(&g);
        let t0 = Instant::now();
        let verts = enumerate_vertices(&q).unwrap();
        let stables = stable_sets(&g);
        let binary = verts.iter().filter(|v| is_binary_point(v)).count();
        println!("  qstab vertices={} (binary {}) stable sets={} in {:?}",
            verts.len(), binary, stables.len(), t0.elapsed());
    }
}
