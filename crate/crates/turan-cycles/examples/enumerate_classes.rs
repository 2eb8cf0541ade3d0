//! Isomorph-free enumeration: class counts, freeness filters, spooling.
//!
//! ```bash
//! cargo run --release --example enumerate_classes
//! ```

use turan_cycles::{all_graphs, all_graphs_filtered, random_graphs, Graph, Pattern};

fn main() {
    println!("isomorphism classes by order:");
    for n in 1..=7usize {
        println!("  n = {n}: {}", all_graphs(n).unwrap().count());
    }

    let k3 = Pattern::new(Graph::complete(3).unwrap()).unwrap();
    let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();
    println!("\ntriangle-free classes:");
    for n in 1..=7usize {
        println!("  n = {n}: {}", all_graphs_filtered(n, &[k3.clone()]).unwrap().count());
    }
    println!("\nK4-free classes:");
    for n in 1..=7usize {
        println!("  n = {n}: {}", all_graphs_filtered(n, &[k4.clone()]).unwrap().count());
    }

    // Spool the triangle-free classes on 5 vertices as graph6 lines.
    let mut buffer = Vec::new();
    let written = all_graphs_filtered(5, &[k3]).unwrap().spool_graph6(&mut buffer).unwrap();
    println!("\n{written} triangle-free classes on 5 vertices, graph6:");
    print!("{}", String::from_utf8(buffer).unwrap());

    // Reproducible sampled stream.
    let sizes: Vec<usize> = random_graphs(12, 0.3, 7, 5).unwrap().map(|g| g.edge_count()).collect();
    println!("\nedge counts of five G(12, 0.3) samples at seed 7: {sizes:?}");
}
