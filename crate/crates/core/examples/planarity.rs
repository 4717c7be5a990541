//! Planarity certificates: a combinatorial embedding or a Kuratowski subgraph.
use std::collections::BTreeSet;

use aqc_codes::graphs::planarity::{planarity, PlanarityWitness};

fn report(name: &str, n: usize, edges: &[(usize, usize)]) {
    let vertices: BTreeSet<usize> = (0..n).collect();
    let result = planarity(&vertices, edges);
    match &result.witness {
        PlanarityWitness::Embedding(e) => {
            println!("{name}: planar, embedding valid = {}", e.is_valid_for(edges));
            for (v, order) in e.rotation.iter().take(3) {
                println!("  around {v}: {order:?}");
            }
        }
        PlanarityWitness::Kuratowski(w) => println!(
            "{name}: non-planar, {:?} on branch vertices {:?} ({} edges, valid = {})",
            w.kind,
            w.branch_vertices,
            w.edges.len(),
            w.is_valid_for(edges)
        ),
    }
}

fn main() {
    let k5: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    let petersen = vec![
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    ];
    let cube = vec![
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ];
    report("K5", 5, &k5);
    report("K3,3", 6, &k33);
    report("Petersen", 10, &petersen);
    report("cube", 8, &cube);
}
