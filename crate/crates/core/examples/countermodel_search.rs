//! Searches frames of increasing size for a countermodel to each pair and
//! prints the first one found as a reusable JSON record.
//!
//!     cargo run --release --example countermodel_search -- "~~p |- p" 6

use routley::formula::parse_pair;
use routley::semantics::find_countermodel;

fn main() {
    let mut args = std::env::args().skip(1);
    let pairs = match args.next() {
        Some(p) => vec![p],
        None => vec![
            "~~p |- p".to_owned(),
            "p & (q | r) |- p & q | p & r".to_owned(),
            "~(p & q) |- ~p | ~q".to_owned(),
            "p & ~p |- q".to_owned(),
            "p & q |- q & p".to_owned(),
        ],
    };
    let max: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);

    for text in pairs {
        let pair = match parse_pair(&text) {
            Ok(pair) => pair,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        match find_countermodel(&pair, max).expect("size within enumeration limits") {
            None => println!("{text}: no countermodel with at most {max} states"),
            Some(cm) => {
                assert!(cm.refutes(&pair));
                println!("{text}: refuted on {} states at {}", cm.frame.size(), cm.frame.name(cm.witness));
                let record = serde_json::to_string_pretty(&cm.to_record()).expect("records serialize");
                println!("{record}");
            }
        }
        println!();
    }
}
