//! Parses formulas and consequence pairs in ASCII or Unicode notation and
//! prints their canonical rendering, atoms, depth and JSON form.
//!
//!     cargo run --example parse_and_render -- "¬(p ∨ q) ⊢ ¬p ∧ ¬q"

use routley::formula::{parse_formula, parse_pair};

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["((p ∧ q)) ∨ ¬r".to_owned(), "~(p | q) |- ~p & ~q".to_owned(), "p & (q | r".to_owned()]
    } else {
        inputs
    };
    for text in &inputs {
        println!("input:  {text}");
        if text.contains("|-") || text.contains('⊢') {
            match parse_pair(text) {
                Ok(pair) => {
                    println!("pair:   {}", pair.render());
                    println!("atoms:  {:?}", pair.atoms());
                }
                Err(e) => println!("error:  {e}"),
            }
        } else {
            match parse_formula(text) {
                Ok(f) => {
                    println!("render: {}", f.render());
                    println!("depth {} size {} atoms {:?}", f.depth(), f.size(), f.atoms());
                    println!("json:   {}", serde_json::to_string(&f).expect("formulas serialize"));
                }
                Err(e) => println!("error:  {e}"),
            }
        }
        println!();
    }
}
