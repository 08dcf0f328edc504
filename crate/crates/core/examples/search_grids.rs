//! Prints the first verifying pattern found for each lattice and kind.
//!
//! `cargo run --release --example search_grids`

use num_rational::Ratio;
use redold::grids::{search_patterns, search_sheared_patterns, Lattice};
use redold::Kind;
use std::time::Instant;

fn main() {
    let targets = [
        (Lattice::Sq, Kind::Old, Ratio::new(2, 5)),
        (Lattice::Sq, Kind::RedOld, Ratio::new(1, 2)),
        (Lattice::Hex, Kind::Old, Ratio::new(1, 2)),
        (Lattice::Hex, Kind::RedOld, Ratio::new(2, 3)),
        (Lattice::Tri, Kind::Old, Ratio::new(4, 13)),
        (Lattice::Tri, Kind::RedOld, Ratio::new(3, 8)),
        (Lattice::King, Kind::Old, Ratio::new(1, 4)),
        (Lattice::King, Kind::RedOld, Ratio::new(1, 3)),
    ];
    for (lat, kind, target) in targets {
        let t = Instant::now();
        let found = search_patterns(lat, kind, (6, 6), target).or_else(|| {
            let area = *target.denom() as usize;
            (1..=4).find_map(|m| search_sheared_patterns(lat, kind, area * m, target))
        });
        println!("{lat} {kind} target {target} ({:.2?})", t.elapsed());
        match found {
            Some(p) => {
                println!("  period {:?} density {}", p.period(), redold::grids::density(&p));
                for r in p.to_rows() {
                    println!("  \"{r}\",");
                }
            }
            None => println!("  none found"),
        }
    }
}
