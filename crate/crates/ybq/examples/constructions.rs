//! The standard biquandle constructions and isomorphism testing.

use ybq::biquandle::FiniteBiquandle;

fn main() {
    let flip = FiniteBiquandle::flip(3);
    let antiflip = FiniteBiquandle::antiflip();
    println!("flip(3) diagonal: {:?}", flip.diagonal_map());
    println!("antiflip diagonal: {:?}", antiflip.diagonal_map());

    // a quandle induces σ(x,y) = (y, x◁y); the inverse solution differs
    let d3 = FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false).unwrap();
    let d3_inv = d3.inverse_solution();
    println!("dihedral solution σ(1,0) = {:?}", d3.sigma(1, 0));
    println!("inverse solution σ(1,0) = {:?}", d3_inv.sigma(1, 0));
    println!("D3 vs inverse isomorphic: {:?}", d3.is_isomorphic(&d3_inv).unwrap().is_some());

    // Wada's solution of a cyclic group equals an Alexander switch
    let wada = FiniteBiquandle::wada_cyclic(3);
    let alex = FiniteBiquandle::alexander(3, -1, 1).unwrap();
    println!("wada(Z3) == alex(3,-1,1): {}", wada.tables() == alex.tables());

    // bijection biquandles are involutive, and conjugate bijections give
    // isomorphic solutions
    let shift = FiniteBiquandle::from_bijection(&[1, 2, 0]).unwrap();
    let shift2 = FiniteBiquandle::from_bijection(&[2, 0, 1]).unwrap();
    println!("shift involutive: order {}", shift.sigma_order());
    println!("conjugate shifts isomorphic: {}", shift.is_isomorphic(&shift2).unwrap().is_some());
}
