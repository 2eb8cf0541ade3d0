//! Vertex extendability: if deleting some vertex lands in the target
//! family and the minimum pattern degree is high enough, does the whole
//! graph land there too?
//!
//! ```bash
//! cargo run --release --example vertex_extendability
//! ```

use turan_cycles::{vertex_extendability_check, vertex_extendability_scan, Graph, Pattern, Rat};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();
    let k3 = Graph::complete(3).unwrap();

    // Single instance: the octahedron, deleting vertex 0.
    let octahedron = Graph::turan(6, 3).unwrap();
    let r = vertex_extendability_check(&octahedron, 0, &pentagon, &[k4.clone()], &k3, Rat::zero()).unwrap();
    println!("T(6,3), vertex 0, ratio 0:");
    println!("  family-free {}, min degree {} vs threshold {}", r.family_free, r.min_degree, r.threshold);
    println!("  minus-vertex colorable {}, hypothesis met {}, conclusion holds {}", r.minus_vertex_colorable, r.hypothesis_met, r.conclusion_holds);

    // A pentagon with an isolated vertex: the conclusion holds but the
    // degree leg of the hypothesis fails at any positive ratio.
    let dangling = Graph::cycle(5).unwrap().add_vertex(0).unwrap();
    let c5 = Graph::cycle(5).unwrap();
    let k3pat = Pattern::new(Graph::complete(3).unwrap()).unwrap();
    let r = vertex_extendability_check(&dangling, 5, &pentagon, &[k3pat.clone()], &c5, Rat::new(1, 2)).unwrap();
    println!("\nC5 + isolated vertex, deleting it, ratio 1/2:");
    println!("  min degree {} (threshold {}), hypothesis met {}, conclusion holds {}", r.min_degree, r.threshold, r.hypothesis_met, r.conclusion_holds);

    // Batch over every K4-free class and vertex at n = 6.
    for ratio in [Rat::new(9, 10), Rat::new(1, 2)] {
        let batch = vertex_extendability_scan(6, &pentagon, &[k4.clone()], &k3, ratio).unwrap();
        println!(
            "\nbatch n = 6, ratio {}: {} instances, hypothesis met {}, violations {}",
            ratio, batch.instances_checked, batch.hypothesis_met_total, batch.violations.len()
        );
        for v in batch.violations.iter().take(5) {
            println!("  violation: {} at vertex {}", v.graph6, v.vertex);
        }
    }
}
