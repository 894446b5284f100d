//! Decides KL on a handful of pairs, cross-checks each verdict against
//! all involutive linear frames of up to six states, and tries proof
//! search in the KL calculus.

use routley::calculus::{decide_kl, prove, System};
use routley::formula::parse_pair;
use routley::frame::enumerate_routley_ifs;
use routley::semantics::valid_in_frame;

fn main() {
    let frames: Vec<_> = (2..=6)
        .flat_map(|n| enumerate_routley_ifs(n, true).expect("small sizes"))
        .filter(|f| f.is_linear() && f.is_involutive())
        .collect();
    println!("{} involutive linear frames up to six states", frames.len());

    for text in [
        "~~p |- p",
        "p & ~p |- q | ~q",
        "p & ~p |- q",
        "p |- q | ~q",
        "~(p & q) |- ~p | ~q",
        "p | (q & r) |- (p | q) & (p | r)",
    ] {
        let pair = parse_pair(text).expect("fixed pair");
        let kl = decide_kl(&pair);
        let everywhere = frames.iter().all(|f| valid_in_frame(f, &pair).is_valid());
        let proof = prove(System::Kl, &pair, 4, 2);
        println!(
            "{text:<34} KL {:<7} frames agree {:<5} proof {}",
            if kl { "valid" } else { "invalid" },
            kl == everywhere,
            proof.derivation().map_or("none within depth 4".to_owned(), |d| format!("height {}", d.height())),
        );
    }
}
