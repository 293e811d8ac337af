//! Link diagrams: builders, validation, writhe, linking numbers, mirrors and
//! kink insertion.

use ybq::catalog;
use ybq::diagram::build::{braid_closure, rational_link};

fn main() {
    let trefoil = braid_closure(2, &[1, 1, 1], Some("3_1".into())).unwrap();
    println!("trefoil: writhe {}, arcs {}", trefoil.writhe(), trefoil.num_arcs());
    println!("mirror writhe: {}", trefoil.mirror().writhe());

    let kinked = trefoil.r1_insert("a1", -1, true).unwrap();
    println!("after a negative kink: {} crossings, writhe {}", kinked.crossings().len(), kinked.writhe());

    let whitehead = rational_link(&[2, 1, 2], Some("whitehead".into())).unwrap();
    println!(
        "whitehead: {} components, linking number {}",
        whitehead.components().len(),
        whitehead.linking_number(0, 1).unwrap()
    );

    let hopf = catalog::diagram("hopf").unwrap();
    println!("hopf linking number: {}", hopf.linking_number(0, 1).unwrap());

    // round-trip through the JSON schema
    let text = whitehead.to_json();
    let back = ybq::LinkDiagram::from_json(&text).unwrap();
    println!("serialization round-trip: {}", back.to_json() == text);
}
