//! Checks, over every Routley frame up to five states, that each frame
//! condition holds exactly when its characteristic pair is valid.

use routley::frame::enumerate_routley_ifs;
use routley::semantics::{check_condition, valid_in_frame, Condition};

fn main() {
    let frames: Vec<_> = (2..=5).flat_map(|n| enumerate_routley_ifs(n, false).expect("small sizes")).collect();
    println!("{} labeled frames", frames.len());
    for cond in Condition::ALL {
        let pair = cond.characteristic_pair();
        let (mut holds, mut mismatches) = (0, 0);
        for frame in &frames {
            let by_condition = check_condition(frame, cond);
            let by_pair = valid_in_frame(frame, &pair).is_valid();
            holds += by_condition as usize;
            if by_condition != by_pair {
                mismatches += 1;
            }
        }
        println!("{cond:?}: {:<22} holds on {holds:>3}, mismatches {mismatches}", pair.render());
    }
}
