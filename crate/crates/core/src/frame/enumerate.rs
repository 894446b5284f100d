//! Exhaustive generation of small frames.
//!
//! States are labeled `0..n` with `e = 0` and `i = n - 1` fixed; both are
//! determined by the structure, so "labeled" here means labeled interior
//! states. Generation runs in two stages: first the partial orders on the
//! interior whose bounded extension is a meet-semilattice with `e`
//! meet-irreducible, then the star maps, assigned state by state with the
//! antitone and meet conditions checked as soon as their states are fixed.

use itertools::Itertools;

use super::{FrameError, RoutleyFrame};
use crate::states::{StateId, StateSet};

pub const ENUMERATION_LIMIT_ENV: &str = "ROUTLEY_MAX_STATES";
pub const HARD_ENUMERATION_LIMIT: usize = 8;
const DEFAULT_LIMIT: usize = 7;

/// `ROUTLEY_MAX_STATES` if set to a number in `2..=8`, else 7.
pub fn default_enumeration_limit() -> usize {
    std::env::var(ENUMERATION_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|n| (2..=HARD_ENUMERATION_LIMIT).contains(n))
        .unwrap_or(DEFAULT_LIMIT)
}

fn state_names(n: usize) -> Vec<String> {
    let mut names = vec!["e".to_string()];
    names.extend((1..n - 1).map(|j| format!("s{j}")));
    names.push("i".into());
    names
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Unknown,
    Less,
    Greater,
    Incomparable,
}

/// Strict-order backtracking over unordered interior pairs.
struct PosetSearch {
    k: usize,
    rel: Vec<Rel>,
    pairs: Vec<(usize, usize)>,
    out: Vec<Vec<StateSet>>,
}

impl PosetSearch {
    fn get(&self, a: usize, b: usize) -> Rel {
        if a < b {
            self.rel[a * self.k + b]
        } else {
            match self.rel[b * self.k + a] {
                Rel::Less => Rel::Greater,
                Rel::Greater => Rel::Less,
                other => other,
            }
        }
    }

    fn less(&self, a: usize, b: usize) -> Option<bool> {
        match self.get(a, b) {
            Rel::Unknown => None,
            r => Some(r == Rel::Less),
        }
    }

    /// Transitivity over every triple containing the pair just assigned.
    fn consistent(&self, a: usize, b: usize) -> bool {
        (0..self.k).filter(|&c| c != a && c != b).all(|c| {
            let triple = [a, b, c];
            triple.iter().permutations(3).all(|p| {
                let (x, y, z) = (*p[0], *p[1], *p[2]);
                match (self.less(x, y), self.less(y, z), self.less(x, z)) {
                    (Some(true), Some(true), Some(xz)) => xz,
                    _ => true,
                }
            })
        })
    }

    fn run(&mut self, idx: usize) {
        if idx == self.pairs.len() {
            // below[x] over interior indices, reflexive
            let below = (0..self.k)
                .map(|x| (0..self.k).filter(|&y| y == x || self.less(y, x) == Some(true)).collect())
                .collect();
            self.out.push(below);
            return;
        }
        let (a, b) = self.pairs[idx];
        for r in [Rel::Less, Rel::Greater, Rel::Incomparable] {
            self.rel[a * self.k + b] = r;
            if self.consistent(a, b) {
                self.run(idx + 1);
            }
        }
        self.rel[a * self.k + b] = Rel::Unknown;
    }
}

/// Flat `n × n` meet tables of every labeled order on `n` states with
/// bottom `0` and top `n - 1` satisfying the proto-frame laws.
pub fn meet_semilattice_orders(n: usize) -> Vec<Vec<StateId>> {
    assert!(n >= 2);
    let k = n - 2;
    let mut search = PosetSearch {
        k,
        rel: vec![Rel::Unknown; k * k],
        pairs: (0..k).tuple_combinations().collect(),
        out: Vec::new(),
    };
    search.run(0);
    let (e, i) = (0, n - 1);
    search
        .out
        .into_iter()
        .filter_map(|below| {
            let mut meet = vec![0; n * n];
            for s in 0..n {
                meet[s * n + i] = s;
                meet[i * n + s] = s;
                meet[s * n + e] = e;
                meet[e * n + s] = e;
            }
            for a in 0..k {
                for b in 0..k {
                    let lower: StateSet = below[a].intersection(below[b]);
                    // an empty lower set would make the meet e, breaking e-primeness
                    let glb = lower.iter().find(|&c| lower.is_subset(below[c]))?;
                    meet[(a + 1) * n + (b + 1)] = glb + 1;
                }
            }
            Some(meet)
        })
        .collect()
}

/// Streams frames built from precomputed orders, one order at a time.
pub struct FrameEnumerator {
    n: usize,
    up_to_iso: bool,
    orders: std::vec::IntoIter<Vec<StateId>>,
    buffer: std::vec::IntoIter<RoutleyFrame>,
}

impl Iterator for FrameEnumerator {
    type Item = RoutleyFrame;

    fn next(&mut self) -> Option<RoutleyFrame> {
        loop {
            if let Some(frame) = self.buffer.next() {
                return Some(frame);
            }
            let meet = self.orders.next()?;
            let mut frames = Vec::new();
            let mut star = vec![0; self.n];
            star[0] = self.n - 1;
            star[self.n - 1] = 0;
            let base = RoutleyFrame::from_flat(state_names(self.n), meet, star.clone(), 0, self.n - 1);
            assign_stars(&base, &mut star, 1, &mut frames);
            if self.up_to_iso {
                frames.retain(is_canonical);
            }
            self.buffer = frames.into_iter();
        }
    }
}

fn assign_stars(base: &RoutleyFrame, star: &mut Vec<StateId>, next: StateId, out: &mut Vec<RoutleyFrame>) {
    let n = base.size();
    if next == n - 1 {
        out.push(RoutleyFrame::from_flat(base.names().to_vec(), base.meet_flat().to_vec(), star.clone(), 0, n - 1));
        return;
    }
    let assigned = |s: StateId| s == 0 || s == n - 1 || s <= next;
    for value in 0..n {
        star[next] = value;
        let x = next;
        let antitone = (0..n).filter(|&y| assigned(y)).all(|y| {
            (!base.leq(x, y) || base.leq(star[y], star[x])) && (!base.leq(y, x) || base.leq(star[x], star[y]))
        });
        if !antitone {
            continue;
        }
        let meet_ok = (0..n).filter(|&t| assigned(t)).all(|t| {
            (0..n).filter(|&u| assigned(u)).all(|u| {
                let m = base.meet(t, u);
                if !(t == x || u == x || m == x) || !assigned(m) {
                    return true;
                }
                base.leq(star[m], star[t]) || base.leq(star[m], star[u])
            })
        });
        if meet_ok {
            assign_stars(base, star, next + 1, out);
        }
    }
}

/// Every Routley frame on `n` states (`e = 0`, `i = n - 1`), each labeled
/// frame once, or one representative per isomorphism class.
pub fn enumerate_routley_ifs(n: usize, up_to_iso: bool) -> Result<FrameEnumerator, FrameError> {
    enumerate_routley_ifs_with_limit(n, up_to_iso, default_enumeration_limit())
}

pub fn enumerate_routley_ifs_with_limit(
    n: usize,
    up_to_iso: bool,
    limit: usize,
) -> Result<FrameEnumerator, FrameError> {
    let limit = limit.min(HARD_ENUMERATION_LIMIT);
    if !(2..=limit).contains(&n) {
        return Err(FrameError::LimitExceeded { size: n, limit });
    }
    Ok(FrameEnumerator { n, up_to_iso, orders: meet_semilattice_orders(n).into_iter(), buffer: Vec::new().into_iter() })
}

/// Every proto-frame on `n` states: all proto-valid orders times all
/// `n^n` star maps, including ones moving `e` and `i`.
pub fn enumerate_proto_ifs(n: usize) -> Result<impl Iterator<Item = RoutleyFrame>, FrameError> {
    let limit = default_enumeration_limit().min(5);
    if !(2..=limit).contains(&n) {
        return Err(FrameError::LimitExceeded { size: n, limit });
    }
    let names = state_names(n);
    Ok(meet_semilattice_orders(n).into_iter().flat_map(move |meet| {
        let names = names.clone();
        (0..n)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(move |star| RoutleyFrame::from_flat(names.clone(), meet.clone(), star, 0, n - 1))
    }))
}

fn encode(frame: &RoutleyFrame, perm: &[StateId]) -> Vec<u8> {
    let n = frame.size();
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let mut code = Vec::with_capacity(n * n + n);
    for a in 0..n {
        for b in 0..n {
            code.push(perm[frame.meet(inverse[a], inverse[b])] as u8);
        }
    }
    code.extend((0..n).map(|a| perm[frame.star(inverse[a])] as u8));
    code
}

fn relabelings(frame: &RoutleyFrame) -> impl Iterator<Item = Vec<StateId>> + '_ {
    let n = frame.size();
    let (e, i) = (frame.bottom(), frame.top());
    let interior: Vec<StateId> = frame.states().filter(|&s| s != e && s != i).collect();
    let k = interior.len();
    (0..k).permutations(k).map(move |targets| {
        let mut perm = vec![0; n];
        perm[e] = 0;
        perm[i] = n - 1;
        for (slot, &old) in interior.iter().enumerate() {
            perm[old] = targets[slot] + 1;
        }
        perm
    })
}

/// Lexicographically least table encoding over relabelings that send
/// `e ↦ 0` and `i ↦ n - 1`. Equal forms iff isomorphic frames.
pub fn canonical_form(frame: &RoutleyFrame) -> Vec<u8> {
    relabelings(frame).map(|perm| encode(frame, &perm)).min().expect("at least one relabeling")
}

fn is_canonical(frame: &RoutleyFrame) -> bool {
    let identity: Vec<StateId> = frame.states().collect();
    let own = encode(frame, &identity);
    relabelings(frame).all(|perm| encode(frame, &perm) >= own)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_states_fully_forced() {
        let frames: Vec<_> = enumerate_routley_ifs(2, false).unwrap().collect();
        assert_eq!(frames.len(), 1);
        assert!(frames[0].is_routley_if());
    }

    #[test]
    fn small_order_counts() {
        // two incomparable interior states would meet in e
        assert_eq!(meet_semilattice_orders(2).len(), 1);
        assert_eq!(meet_semilattice_orders(3).len(), 1);
        assert_eq!(meet_semilattice_orders(4).len(), 2);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            enumerate_routley_ifs_with_limit(8, false, 7),
            Err(FrameError::LimitExceeded { size: 8, limit: 7 })
        ));
        assert!(enumerate_routley_ifs(1, false).is_err());
    }

    #[test]
    fn iso_representatives_are_canonical_and_distinct() {
        for n in 2..=5 {
            let labeled: Vec<_> = enumerate_routley_ifs(n, false).unwrap().collect();
            let reps: Vec<_> = enumerate_routley_ifs(n, true).unwrap().collect();
            let mut forms: Vec<_> = labeled.iter().map(canonical_form).collect();
            forms.sort();
            forms.dedup();
            let mut rep_forms: Vec<_> = reps.iter().map(canonical_form).collect();
            rep_forms.sort();
            assert_eq!(rep_forms, forms, "n = {n}");
            assert!(reps.len() <= labeled.len());
        }
    }
}
