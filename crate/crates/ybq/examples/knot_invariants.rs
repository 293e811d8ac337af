//! The conjugacy cocycle invariant on the catalog links.

use ybq::biquandle::FiniteBiquandle;
use ybq::catalog::{self, weight_presentation};
use ybq::invariant::{invariant, Mode};

fn main() {
    // the 4-cycle conjugation quandle distinguishes the trefoil from its
    // mirror through its reduced group
    let s4 = catalog::biquandle("S4_4cycles").unwrap();
    let p = weight_presentation(&s4, true, None);
    let trefoil = catalog::diagram("3_1").unwrap();
    let m = invariant(&trefoil, &s4, &p, Mode::Cyclic);
    println!("trefoil:\n{}", m.display(&p));
    let mm = invariant(&trefoil.mirror(), &s4, &p, Mode::Cyclic);
    println!("mirror trefoil:\n{}", mm.display(&p));

    // Whitehead link against the Alexander switch on Z8
    let a8 = FiniteBiquandle::alexander(8, -1, 1).unwrap();
    let p = weight_presentation(&a8, true, None);
    let wh = catalog::diagram("whitehead").unwrap();
    println!("whitehead over alexander(8,-1,1):\n{}", invariant(&wh, &a8, &p, Mode::Cyclic).display(&p));

    // Borromean rings against the Alexander switch on Z4
    let a4 = FiniteBiquandle::alexander(4, -1, 1).unwrap();
    let p = weight_presentation(&a4, true, None);
    let bor = catalog::diagram("borromean").unwrap();
    println!("borromean over alexander(4,-1,1):\n{}", invariant(&bor, &a4, &p, Mode::Cyclic).display(&p));
}
