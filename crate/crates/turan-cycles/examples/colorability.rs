//! Odd-cycle colorability and edit distance to colorability.
//!
//! A graph maps homomorphically into C_{2r+1} only if its odd girth is at
//! least 2r+1, so the table below is triangular.
//!
//! ```bash
//! cargo run --release --example colorability
//! ```

use turan_cycles::{edit_distance_to_colorable, is_colorable, Graph, DEFAULT_EDIT_BUDGET};

fn main() {
    println!("source \\ target   C3   C5   C7   C9");
    for k in 1..=4usize {
        let source = Graph::cycle(2 * k + 1).unwrap();
        print!("C{:<16}", 2 * k + 1);
        for j in 1..=4usize {
            let target = Graph::cycle(2 * j + 1).unwrap();
            let mark = if is_colorable(&source, &target).is_some() { "yes" } else { " no" };
            print!("  {mark}");
        }
        println!();
    }

    // A pentagon with a chord has odd girth 3, so it cannot map into C5;
    // deleting the chord restores it.
    let chorded = Graph::cycle(5).unwrap().with_edge(0, 2).unwrap();
    let c5 = Graph::cycle(5).unwrap();
    let d = edit_distance_to_colorable(&chorded, &c5, DEFAULT_EDIT_BUDGET).unwrap();
    println!("\nC5 + chord -> C5: colorable = {}, edit distance = {}", is_colorable(&chorded, &c5).is_some(), d.distance);
    println!("witness map after deletions: {:?}", d.witness);

    // K4 needs one deletion to become 3-colorable.
    let d = edit_distance_to_colorable(&Graph::complete(4).unwrap(), &Graph::complete(3).unwrap(), DEFAULT_EDIT_BUDGET).unwrap();
    println!("K4 -> K3: edit distance = {}", d.distance);

    // A heptagon folds onto a pentagon.
    let map = is_colorable(&Graph::cycle(7).unwrap(), &c5).unwrap();
    println!("C7 -> C5 witness: {map:?}");
}
