//! Concrete 2-cocycles: brute-force enumeration, verification, and the
//! factorization through the computed presentation.

use ybq::biquandle::FiniteBiquandle;
use ybq::cocycle::{enumerate_type_i_cocycles, factor_through, verify_cocycle, FiniteGroup};
use ybq::presentation::universal_group;

fn main() {
    let b = FiniteBiquandle::wada_cyclic(3).inverse_solution();
    let p = universal_group(&b);
    println!("group presentation:\n{}", p.display_text());

    for k in [2usize, 3] {
        let g = FiniteGroup::cyclic(k);
        let all = enumerate_type_i_cocycles(&b, &g, None);
        println!("type-I cocycles into Z{k}: {}", all.len());
        for f in &all {
            assert!(verify_cocycle(&b, f).unwrap().is_none());
            let assign = factor_through(&p, f).expect("factors through the presentation");
            let gens: Vec<String> = p
                .generators
                .iter()
                .map(|gc| format!("{} -> {}", p.label_of(gc.label), assign[gc.label]))
                .collect();
            println!("  {}", gens.join(", "));
        }
    }
}
