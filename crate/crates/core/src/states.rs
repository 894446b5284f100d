use std::fmt;

/// Index of a state in a finite frame.
pub type StateId = usize;

/// Largest supported carrier.
pub const MAX_STATES: usize = 32;

/// A subset of a frame's carrier, one bit per state.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(u32);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn from_bits(bits: u32) -> Self {
        StateSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(s: StateId) -> Self {
        StateSet(1 << s)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            StateSet(u32::MAX)
        } else {
            StateSet((1u32 << n) - 1)
        }
    }

    pub fn contains(self, s: StateId) -> bool {
        self.0 & (1 << s) != 0
    }

    pub fn insert(&mut self, s: StateId) {
        self.0 |= 1 << s;
    }

    pub fn remove(&mut self, s: StateId) {
        self.0 &= !(1 << s);
    }

    pub fn with(mut self, s: StateId) -> Self {
        self.insert(s);
        self
    }

    pub fn union(self, other: StateSet) -> StateSet {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> StateSet {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: StateSet) -> StateSet {
        StateSet(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> StateSet {
        StateSet(!self.0 & StateSet::full(n).0)
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member.
    pub fn first(self) -> Option<StateId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as StateId)
    }

    pub fn iter(self) -> StateIter {
        StateIter(self.0)
    }
}

impl FromIterator<StateId> for StateSet {
    fn from_iter<I: IntoIterator<Item = StateId>>(iter: I) -> Self {
        let mut set = StateSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl IntoIterator for StateSet {
    type Item = StateId;
    type IntoIter = StateIter;

    fn into_iter(self) -> StateIter {
        self.iter()
    }
}

pub struct StateIter(u32);

impl Iterator for StateIter {
    type Item = StateId;

    fn next(&mut self) -> Option<StateId> {
        if self.0 == 0 {
            return None;
        }
        let s = self.0.trailing_zeros() as StateId;
        self.0 &= self.0 - 1;
        Some(s)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
