//! Presentations of the universal cocycle group, Tietze simplification and
//! abelianization.

use ybq::biquandle::FiniteBiquandle;
use ybq::presentation::universal_group;

fn main() {
    let wada = FiniteBiquandle::wada_cyclic(3);
    let p = universal_group(&wada);
    println!("wada(Z3):\n{}", p.display_text());
    let t = p.tietze_simplified(p.tietze_budget());
    println!("after simplification: {} generators, {} relations", t.generators.len(), t.relations.len());
    println!("abelianization: {}\n", t.abelianization());

    let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
    let p = universal_group(&d3);
    println!("dihedral(3):\n{}", p.display_text());
    let t = p.tietze_simplified(p.tietze_budget());
    println!(
        "after simplification: {} generators, {} relations (free group)",
        t.generators.len(),
        t.relations.len()
    );

    // the inverse dihedral solution has a trivial group
    let p = universal_group(&d3.inverse_solution());
    println!("\ninverse dihedral(3): trivial group: {}", p.is_trivial_group());
}
