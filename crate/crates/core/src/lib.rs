//! Support semantics with Routley-star negation over finite information
//! frames, together with the Hilbert-style systems it validates.

pub mod calculus;
pub mod cli;
pub mod formula;
pub mod frame;
pub mod random;
pub mod semantics;
pub mod standard;
pub mod states;

pub use formula::{parse_formula, parse_pair, ConsequencePair, Formula, ParseError};
pub use frame::{builtin, FrameError, ProperFilter, RoutleyFrame};
pub use semantics::{find_countermodel, valid_in_frame, InfoModel, Valuation};
pub use states::{StateId, StateSet};
