//! Walks through the built-in frames: their order, star, proper filters,
//! and the pairs each one refutes with the witnessing valuation.

use routley::formula::parse_pair;
use routley::frame::builtin;
use routley::semantics::{valid_in_frame, FrameVerdict};

const PAIRS: &[&str] = &[
    "~~p |- p",
    "p |- ~~p",
    "~p & ~q |- ~(p | q)",
    "~(p | q) |- ~p & ~q",
    "p & (q | r) |- p & q | p & r",
    "p & ~p |- q",
    "p |- q | ~q",
];

fn main() {
    for name in ["fig1_left", "fig1_right", "fig2_n5", "ikl", "chain_involutive(1)"] {
        let frame = builtin(name).expect("built-in frame");
        println!("== {name} ({} states)", frame.size());
        let order: Vec<String> =
            frame.hasse().iter().map(|&(a, b)| format!("{}<{}", frame.name(a), frame.name(b))).collect();
        let star: Vec<String> =
            frame.states().map(|s| format!("{}*={}", frame.name(s), frame.name(frame.star(s)))).collect();
        println!("  order  {}", order.join(" "));
        println!("  star   {}", star.join(" "));
        let filters: Vec<String> = frame.proper_filters().iter().map(|f| frame.render_set(f.members())).collect();
        println!("  proper filters {}", filters.join(" "));
        println!("  linear {}  involutive {}", frame.is_linear(), frame.is_involutive());
        for text in PAIRS {
            let pair = parse_pair(text).expect("fixed pair");
            match valid_in_frame(&frame, &pair) {
                FrameVerdict::Valid => println!("  valid   {text}"),
                FrameVerdict::Invalid { valuation, witness } => {
                    let vals: Vec<String> =
                        valuation.iter().map(|(a, f)| format!("{a}={}", frame.render_set(f.members()))).collect();
                    println!("  fails   {text}  at {} under {}", frame.name(witness), vals.join(", "));
                }
            }
        }
        println!();
    }
}
