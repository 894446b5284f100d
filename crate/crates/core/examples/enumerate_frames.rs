//! Counts Routley information frames by size, labeled and up to
//! isomorphism, and reports how many are linear or involutive.
//!
//!     cargo run --release --example enumerate_frames -- 6

use std::time::Instant;

use routley::frame::{enumerate_routley_ifs, meet_semilattice_orders};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    println!(
        "{:>2} {:>7} {:>9} {:>6} {:>7} {:>11} {:>9}",
        "n", "orders", "labeled", "iso", "linear", "involutive", "time"
    );
    for n in 2..=max {
        let start = Instant::now();
        let labeled = match enumerate_routley_ifs(n, false) {
            Ok(frames) => frames.count(),
            Err(e) => {
                println!("{n:>2} {e}");
                break;
            }
        };
        let reps: Vec<_> = enumerate_routley_ifs(n, true).expect("size checked above").collect();
        let linear = reps.iter().filter(|f| f.is_linear()).count();
        let involutive = reps.iter().filter(|f| f.is_involutive()).count();
        println!(
            "{n:>2} {:>7} {labeled:>9} {:>6} {linear:>7} {involutive:>11} {:>8.2?}",
            meet_semilattice_orders(n).len(),
            reps.len(),
            start.elapsed()
        );
    }
}
