//! Counting homomorphisms, embeddings, and unlabeled copies.
//!
//! ```bash
//! cargo run --release --example counting
//! ```

use turan_cycles::{copy_count, count_hom, count_inj, Graph, Pattern, PartSpec};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let triangle = Pattern::new(Graph::complete(3).unwrap()).unwrap();

    let hosts = [
        ("C5", Graph::cycle(5).unwrap()),
        ("T(6,3)", Graph::turan(6, 3).unwrap()),
        ("blowup(C5,[2,2,2,2,2])", Graph::cycle(5).unwrap().blowup(&PartSpec::uniform(5, 2).unwrap()).unwrap()),
        ("petersen", petersen()),
    ];

    println!("pattern C5 (|Aut| = {}):", pentagon.aut_count());
    println!("{:<24} {:>8} {:>8} {:>8}", "host", "hom", "inj", "copies");
    for (name, host) in &hosts {
        println!(
            "{:<24} {:>8} {:>8} {:>8}",
            name,
            count_hom(&pentagon, host).unwrap(),
            count_inj(&pentagon, host).unwrap(),
            copy_count(&pentagon, host).unwrap(),
        );
    }

    println!("\npattern K3 (|Aut| = {}):", triangle.aut_count());
    println!("{:<24} {:>8} {:>8} {:>8}", "host", "hom", "inj", "copies");
    for (name, host) in &hosts {
        println!(
            "{:<24} {:>8} {:>8} {:>8}",
            name,
            count_hom(&triangle, host).unwrap(),
            count_inj(&triangle, host).unwrap(),
            copy_count(&triangle, host).unwrap(),
        );
    }
}

/// Outer pentagon, inner pentagram, five spokes.
fn petersen() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap()
}
