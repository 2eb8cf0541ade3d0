//! Edge stability: how many edge deletions near-extremal classes need to
//! reach the target family.
//!
//! ```bash
//! cargo run --release --example edge_stability
//! ```

use turan_cycles::{edge_stability_measure, Graph, Pattern, Rat, DEFAULT_EDIT_BUDGET};

fn main() {
    let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
    let k3 = Pattern::new(Graph::complete(3).unwrap()).unwrap();
    let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();
    let c5 = Graph::cycle(5).unwrap();

    // Triangle-free classes against pentagon-colorability, tightening the
    // nearness threshold.
    for near in [Rat::zero(), Rat::new(1, 2), Rat::new(9, 10)] {
        let report = edge_stability_measure(5, &pentagon, &[k3.clone()], &c5, near, DEFAULT_EDIT_BUDGET).unwrap();
        println!(
            "n = 5, triangle-free vs C5, near = {}: {} of {} classes, max distance {} ({} of n^2)",
            near, report.considered, report.classes_scanned, report.max_distance, report.max_normalized
        );
        for bin in &report.histogram {
            println!("    distance {:>2}: {:>3} classes", bin.distance, bin.classes);
        }
    }

    // K4-free classes against 3-colorability at n = 6.
    let report = edge_stability_measure(
        6,
        &pentagon,
        &[k4],
        &Graph::complete(3).unwrap(),
        Rat::new(1, 2),
        DEFAULT_EDIT_BUDGET,
    )
    .unwrap();
    println!(
        "\nn = 6, K4-free vs K3, near = 1/2: {} classes considered, max distance {}",
        report.considered, report.max_distance
    );
    for bin in &report.histogram {
        println!("    distance {:>2}: {:>3} classes", bin.distance, bin.classes);
    }
}
