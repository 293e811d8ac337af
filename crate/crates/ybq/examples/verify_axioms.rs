//! Axiom verification: classify raw tables as solution / birack / biquandle
//! and show witnesses for violations.

use ybq::biquandle::{verify, FiniteBiquandle};

fn main() {
    // a valid biquandle passes every axiom
    let wada = FiniteBiquandle::wada_cyclic(3);
    let report = verify(&wada.tables());
    println!("wada(Z3): classification {:?}", report.classification);
    println!("  diagonal map: {:?}", wada.diagonal_map());

    // corrupt one entry of the dihedral solution and see which axiom breaks
    let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
    let mut tables = d3.tables();
    tables.sigma2[0][1] = (tables.sigma2[0][1] + 1) % 3;
    let report = verify(&tables);
    println!("corrupted dihedral: classification {:?}", report.classification);
    for f in &report.failures {
        println!("  {} fails at {:?}", f.axiom, f.witness);
    }

    // out-of-range entries are malformed, not axiom failures
    tables.sigma1[2][2] = 9;
    let report = verify(&tables);
    println!("malformed entries: {:?}", report.malformed);
}
