//! Proves pairs in several systems, prints the derivation text, and
//! re-checks it with the independent derivation checker.
//!
//!     cargo run --release --example proof_search -- DLLR "~(p | q) |- ~p & ~q"

use routley::calculus::{check_derivation, prove_with, Derivation, ProofOutcome, SearchLimits, System};
use routley::formula::parse_pair;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let jobs: Vec<(System, String)> = match args.as_slice() {
        [system, pair] => vec![(system.parse().expect("system name"), pair.clone())],
        _ => vec![
            (System::Dll, "p & q |- q | r".to_owned()),
            (System::Dllr, "~(p | q) |- ~p & ~q".to_owned()),
            (System::Dll, "~(p | q) |- ~p & ~q".to_owned()),
            (System::DllrDn, "~~p & q |- p".to_owned()),
            (System::Classical, "p |- q | ~q".to_owned()),
            (System::Lrif, "~~p |- p".to_owned()),
        ],
    };

    for (system, text) in jobs {
        let pair = parse_pair(&text).expect("pair parses");
        println!("{system} ⊢? {text}");
        match prove_with(system, &pair, SearchLimits::new(4, 3)) {
            ProofOutcome::Unknown => println!("  unknown within limits"),
            ProofOutcome::Proved(d) => {
                println!("  proved, height {} size {}", d.height(), d.size());
                for line in d.to_text().lines() {
                    println!("    {line}");
                }
                let reread = Derivation::from_text(&d.to_text()).expect("own text parses");
                println!("  checker: {:?}", check_derivation(system, &reread, 3).map_err(|e| e.len()));
            }
        }
        println!();
    }
}
