//! Builds the standard (truth-at-a-world) frame of a Routley frame and
//! compares extensions with information-frame propositions.

use std::collections::BTreeMap;

use routley::formula::parse_formula;
use routley::frame::builtin;
use routley::semantics::{InfoModel, Valuation};
use routley::standard::{StandardFrame, StandardModel};

fn main() {
    let frame = builtin("fig1_right").expect("built-in frame");
    let standard = StandardFrame::from_routley(&frame).expect("Routley frames convert");
    println!("{} worlds, {} upsets", standard.size(), standard.upsets().len());
    for w in standard.worlds() {
        println!("  {}* = {}", standard.name(w), standard.name(standard.star(w)));
    }

    let p = standard.upset(standard.world("t").expect("world t"));
    let q = standard.upset(standard.world("u").expect("world u"));
    let model = StandardModel::new(&standard, BTreeMap::from([("p".to_owned(), p), ("q".to_owned(), q)]))
        .expect("valuation is upward closed");
    let info = InfoModel::new(
        &frame,
        Valuation::new()
            .with("p", frame.principal_upset(frame.state("t").unwrap()).unwrap())
            .with("q", frame.principal_upset(frame.state("u").unwrap()).unwrap()),
    );

    for text in ["p", "~p", "p | q", "~(p | q)", "~p & ~q", "~~p", "p | ~p"] {
        let f = parse_formula(text).expect("fixed formula");
        let ext = model.extension(&f).expect("atoms valued");
        let prop = info.proposition(&f).expect("atoms valued").members();
        println!("{text:<10} standard {:<14} info {}", standard_render(&standard, ext), frame.render_set(prop));
    }
}

fn standard_render(frame: &StandardFrame, set: routley::StateSet) -> String {
    let names: Vec<&str> = frame.worlds().filter(|&w| set.contains(w)).map(|w| frame.name(w)).collect();
    format!("{{{}}}", names.join(", "))
}
