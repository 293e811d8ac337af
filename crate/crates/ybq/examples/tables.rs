//! The three summary tables over the catalog. Point YBQ_CATALOG at
//! data/external to include the derived entries.

fn main() {
    println!("universal groups:\n{}", ybq::catalog::render_group_table(&ybq::catalog::table_universal(), false));
    println!("reduced groups:\n{}", ybq::catalog::render_group_table(&ybq::catalog::table_reduced(), true));
    match ybq::catalog::table_knots() {
        Ok(rows) => println!("knots:\n{}", ybq::catalog::render_knot_table(&rows)),
        Err(e) => println!("knot table unavailable: {e}"),
    }
}
