//! Pattern-degree profiles: how many pentagon embeddings cover each vertex.
//!
//! ```bash
//! cargo run --release --example degree_profiles
//! ```

use turan_cycles::{degree_profile, Graph, PartSpec, Pattern};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();

    // An unbalanced pentagon blowup: the heavier parts sit in more copies.
    let lopsided = Graph::cycle(5)
        .unwrap()
        .blowup(&PartSpec::new(vec![3, 1, 2, 1, 2]).unwrap())
        .unwrap();

    for (name, host) in [
        ("T(5,3)", Graph::turan(5, 3).unwrap()),
        ("T(6,3)", Graph::turan(6, 3).unwrap()),
        ("blowup(C5,[3,1,2,1,2])", lopsided),
    ] {
        let profile = degree_profile(&pentagon, &host).unwrap();
        println!("{name}: per-vertex {:?}", profile.per_vertex());
        println!(
            "  min = {}, max = {}, avg = {} ({:.3})\n",
            profile.min(),
            profile.max(),
            profile.avg(),
            profile.avg().approx()
        );
    }
}
