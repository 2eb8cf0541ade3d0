//! Degree-stability scans: normalized minimum pattern-degree against
//! target-colorability, class by class.
//!
//! The critical ratio is the largest normalized degree of any class
//! outside the target family. Classes strictly above it are all
//! target-colorable, so it is the empirical threshold at this order.
//!
//! ```bash
//! cargo run --release --example stability_scan
//! ```

use turan_cycles::{degree_stability_scan, Graph, Pattern};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();

    // Pentagon counts in K4-free graphs against 3-colorability.
    let scan = degree_stability_scan(6, &pentagon, &[k4], &Graph::complete(3).unwrap()).unwrap();
    println!(
        "scan n = {}: {} K4-free classes, extremal value {}",
        scan.n, scan.classes_scanned, scan.extremal_value
    );
    match scan.critical_ratio {
        Some(r) => println!("critical ratio {} with {} non-3-colorable classes", r, scan.noncolorable_total),
        None => println!("every class is 3-colorable"),
    }
    println!("top of the table:");
    println!("{:<12} {:>10} {:>10} {:>9}  colorable", "graph6", "embeddings", "min-degree", "ratio");
    for row in scan.rows.iter().take(12) {
        println!(
            "{:<12} {:>10} {:>10} {:>9}  {}",
            row.graph6, row.embeddings, row.min_degree, row.ratio.to_string(), row.colorable
        );
    }

    // The heptagon analogue at n = 7: C5-free graphs against C7-colorability.
    let heptagon = Pattern::new(Graph::cycle(7).unwrap()).unwrap();
    let c5 = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let scan = degree_stability_scan(7, &heptagon, &[c5], &Graph::cycle(7).unwrap()).unwrap();
    println!(
        "\nscan n = 7 (C7 in C5-free graphs vs C7-colorability): {} classes, critical ratio {:?}",
        scan.classes_scanned,
        scan.critical_ratio.map(|r| r.to_string())
    );
    println!("the empirical threshold sits at the extremal class itself here:");
    for row in scan.rows.iter().take(3) {
        println!(
            "  {} embeddings {}, ratio {}, C7-colorable {}",
            row.graph6, row.embeddings, row.ratio, row.colorable
        );
    }
}
