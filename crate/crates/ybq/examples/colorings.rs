//! Counting biquandle colorings of the catalog knots.

use ybq::catalog;
use ybq::coloring::enumerate_colorings;

fn main() {
    let knots = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_4"];
    let entries = ["BQ3_1", "BQ3_2", "BQ3_4", "BQ3_8", "BQ3_10"];
    print!("{:8}", "");
    for k in knots {
        print!(" {k:>5}");
    }
    println!();
    for name in entries {
        let b = catalog::biquandle(name).unwrap();
        print!("{name:8}");
        for k in knots {
            let d = catalog::diagram(k).unwrap();
            print!(" {:>5}", enumerate_colorings(&d, &b).len());
        }
        println!();
    }
}
