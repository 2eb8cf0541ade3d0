//! Exact extremal values: the most pentagon embeddings a graph can carry
//! under a forbidden subgraph, over every isomorphism class at one order.
//!
//! ```bash
//! cargo run --release --example extremal
//! ```

use turan_cycles::{extremal_search, Graph, Pattern};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let k3 = Pattern::new(Graph::complete(3).unwrap()).unwrap();
    let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();

    println!("maximum pentagon embeddings in triangle-free graphs:");
    for n in 5..=7usize {
        let result = extremal_search(n, &pentagon, &[k3.clone()]).unwrap();
        println!(
            "  n = {n}: {} over {} classes, density {}, witnesses: {}",
            result.value,
            result.classes_scanned,
            result.density,
            result.witnesses.iter().map(|w| w.graph6.as_str()).collect::<Vec<_>>().join(" ")
        );
    }

    println!("\nmaximum pentagon embeddings in K4-free graphs:");
    for n in 5..=7usize {
        let result = extremal_search(n, &pentagon, &[k4.clone()]).unwrap();
        println!(
            "  n = {n}: {} over {} classes, witnesses: {}",
            result.value,
            result.classes_scanned,
            result.witnesses.iter().map(|w| w.graph6.as_str()).collect::<Vec<_>>().join(" ")
        );
    }

    // The heptagon case shows a small-order surprise: the maximizer among
    // C5-free graphs on 7 vertices is not the heptagon itself.
    let heptagon = Pattern::new(Graph::cycle(7).unwrap()).unwrap();
    let c5 = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let result = extremal_search(7, &heptagon, &[c5]).unwrap();
    println!(
        "\nmaximum C7 embeddings in C5-free graphs at n = 7: {} (C7 itself carries 14)",
        result.value
    );
    for w in &result.witnesses {
        println!("  witness: {}", w.graph6);
    }
}
