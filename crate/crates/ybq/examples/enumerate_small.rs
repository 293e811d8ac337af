//! Exhaustive enumeration of biquandles of order at most three, up to
//! isomorphism, with their group-theoretic signatures.

use ybq::biquandle::FiniteBiquandle;
use ybq::presentation::universal_group;

fn main() {
    for n in 1..=3 {
        let all = FiniteBiquandle::enumerate(n).unwrap();
        println!("order {n}: {} classes", all.len());
        for (i, b) in all.iter().enumerate() {
            let p = universal_group(b);
            println!(
                "  #{i}: sigma order {}, diagonal fixed {}, generators {}, relations {}",
                b.sigma_order(),
                b.diagonal_fixed_points(),
                p.generators.len(),
                p.relations.len(),
            );
        }
    }
}
