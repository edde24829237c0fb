//! List every table sharing a set of margins, with its null probability and
//! the resulting exact p-value of the Pearson statistic.

use genassoc::exact::{exact_p, hypergeometric_prob, EnumerationOptions, LogFactorialTable};
use genassoc::statistics::pearson;
use genassoc::tables::{count_tables, enumerate_tables, Margins};
use genassoc::StatisticKind;

fn main() -> genassoc::Result<()> {
    let margins = Margins::new([6, 5, 3], 7)?;
    let lf = LogFactorialTable::new(margins.total());
    println!("{margins}: {} tables", count_tables(&margins));
    let mut total = 0.0;
    for z in enumerate_tables(&margins, None) {
        let p = hypergeometric_prob(&z, &lf)?;
        let exact = exact_p(StatisticKind::Pearson, &z, &EnumerationOptions::full(), &lf)?;
        total += p;
        println!("{z:<20} prob {p:.6}  Pearson {:>7.4}  p {:.6}", pearson(&z), exact.value().unwrap());
    }
    println!("probabilities sum to {total:.12}");
    Ok(())
}
