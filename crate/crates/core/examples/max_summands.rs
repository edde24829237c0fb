//! Worst-case enumeration cost: the largest number of tables that can share
//! column margins for given row totals.

use genassoc::tables::{count_tables, max_summands, Margins};

fn main() -> genassoc::Result<()> {
    for (n1, n2) in [(500, 500), (500, 1000), (1000, 1000), (1000, 2000), (5000, 5000), (5000, 10000), (5000, 15000)] {
        println!("n1={n1:<5} n2={n2:<6} max tables {:>9}", max_summands(n1, n2));
    }
    // Margins typical of MAF 0.1 are far from the worst case.
    let typical = Margins::new([1620, 360, 20], 1000)?;
    println!("{typical}: {} tables", count_tables(&typical));
    Ok(())
}
