//! Coboundary candidate scanning, automatic seed selection, and reduced
//! universal groups.

use ybq::biquandle::FiniteBiquandle;
use ybq::presentation::{gamma_candidates, reduced_universal_group, suggest_s0, universal_group};

fn show(name: &str, b: &FiniteBiquandle) {
    println!("== {name} ==");
    for c in gamma_candidates(b) {
        println!(
            "  candidate [ {}, [{},{}], {} ]",
            c.class_of_first + 1,
            c.pair.0 + 1,
            c.pair.1 + 1,
            c.class_of_output + 1
        );
    }
    let s0 = suggest_s0(b);
    let pretty: Vec<String> = s0.iter().map(|&(x, y)| format!("[{},{}]", x + 1, y + 1)).collect();
    println!("  seed: {{{}}}", pretty.join(", "));
    let p = reduced_universal_group(b, &s0);
    let t = p.tietze_simplified(p.tietze_budget());
    println!(
        "  universal group: {} generators; reduced: {}; simplified: {} with {} relations",
        universal_group(b).generators.len(),
        p.generators.len(),
        t.generators.len(),
        t.relations.len()
    );
}

fn main() {
    show("dihedral(3)", &FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap());
    show("alexander(4,-1,1)", &FiniteBiquandle::alexander(4, -1, 1).unwrap());
    show("alexander(8,-1,1)", &FiniteBiquandle::alexander(8, -1, 1).unwrap());
    show(
        "4-cycles of S4",
        &FiniteBiquandle::from_quandle(&FiniteBiquandle::four_cycles_quandle(), false).unwrap(),
    );
}
