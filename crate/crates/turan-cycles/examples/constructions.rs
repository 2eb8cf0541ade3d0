//! The standard constructions and their encodings.
//!
//! ```bash
//! cargo run --release --example constructions
//! ```

use turan_cycles::io::{to_graph6, write_edge_list};
use turan_cycles::{canonical_form, Graph, PartSpec};

fn main() {
    let graphs = [
        ("K5", Graph::complete(5).unwrap()),
        ("C7", Graph::cycle(7).unwrap()),
        ("T(7,3)", Graph::turan(7, 3).unwrap()),
        ("T(10,4)", Graph::turan(10, 4).unwrap()),
        (
            "blowup(C5,[2,2,2,2,2])",
            Graph::cycle(5).unwrap().blowup(&PartSpec::uniform(5, 2).unwrap()).unwrap(),
        ),
    ];
    for (name, g) in &graphs {
        println!("{name}: n = {}, edges = {}, graph6 = {}", g.n(), g.edge_count(), to_graph6(g));
        println!("  certificate: {}", canonical_form(g).hex());
    }

    // Blowing up K3 by [2,2,2] is the octahedron, alias T(6,3).
    let via_blowup = Graph::complete(3).unwrap().blowup(&PartSpec::uniform(3, 2).unwrap()).unwrap();
    let direct = Graph::turan(6, 3).unwrap();
    println!(
        "\nblowup(K3,[2,2,2]) == T(6,3) up to isomorphism: {}",
        canonical_form(&via_blowup) == canonical_form(&direct)
    );

    println!("\nT(5,3) as an edge list:\n{}", write_edge_list(&Graph::turan(5, 3).unwrap()));
}
