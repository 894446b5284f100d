use super::{FrameError, RoutleyFrame};
use crate::states::StateId;

pub const BUILTIN_NAMES: &[&str] = &["fig1_left", "fig1_right", "fig2_n5", "ikl", "chain_involutive(k)"];

/// Named example frames. `chain_involutive(k)` (also `chain_involutive:k`)
/// is the `2k+2`-element chain whose star swaps the `j`-th state from the
/// bottom with the `j`-th from the top.
pub fn builtin(name: &str) -> Result<RoutleyFrame, FrameError> {
    let name = name.trim();
    match name {
        "fig1_left" => Ok(diamond_frame("v")),
        "fig1_right" => Ok(diamond_frame("s")),
        "fig2_n5" => Ok(n5()),
        "ikl" => Ok(ikl()),
        _ => match chain_index(name) {
            Some(k) => chain_involutive(k),
            None => Err(FrameError::UnknownBuiltin(name.to_owned())),
        },
    }
}

fn chain_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("chain_involutive")?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).or_else(|| rest.strip_prefix(':'))?;
    digits.trim().parse().ok()
}

fn labels(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// e < s < {t, u} < v < i with every interior state starred onto `target`.
fn diamond_frame(target: &str) -> RoutleyFrame {
    let names = labels(&["e", "s", "t", "u", "v", "i"]);
    let target = names.iter().position(|n| n == target).unwrap();
    let covers = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)];
    let star = vec![5, target, target, target, target, 0];
    RoutleyFrame::from_hasse(names, &covers, star, 0, 5).expect("diamond frame is a semilattice")
}

/// The pentagon N5: e < s < t < u < i and s < w < v < u.
fn n5() -> RoutleyFrame {
    let names = labels(&["e", "s", "t", "w", "v", "u", "i"]);
    let covers = [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (2, 5), (5, 6)];
    let star = vec![6, 5, 5, 5, 5, 5, 0];
    RoutleyFrame::from_hasse(names, &covers, star, 0, 6).expect("N5 is a semilattice")
}

/// e < t < s < i with s ↔ t and i ↔ e.
fn ikl() -> RoutleyFrame {
    let names = labels(&["e", "t", "s", "i"]);
    let covers = [(0, 1), (1, 2), (2, 3)];
    RoutleyFrame::from_hasse(names, &covers, vec![3, 2, 1, 0], 0, 3).expect("chain is a semilattice")
}

fn chain_involutive(k: usize) -> Result<RoutleyFrame, FrameError> {
    let n = 2 * k + 2;
    if n > crate::states::MAX_STATES {
        return Err(FrameError::Malformed(format!("chain_involutive({k}) exceeds the state limit")));
    }
    let mut names = vec!["e".to_string()];
    names.extend((1..=2 * k).map(|j| format!("c{j}")));
    names.push("i".into());
    let covers: Vec<(StateId, StateId)> = (1..n).map(|j| (j - 1, j)).collect();
    let star = (0..n).map(|j| n - 1 - j).collect();
    RoutleyFrame::from_hasse(names, &covers, star, 0, n - 1)
}
