//! Test one genotype table with every statistic, asymptotically and exactly.
//!
//! ```bash
//! cargo run --example single_table -- 10,20,30,30,20,10
//! ```

use genassoc::asymptotic::{asymptotic_p_all, QuadratureSpec};
use genassoc::exact::{exact_p_all, EnumerationOptions, LogFactorialTable};
use genassoc::statistics::table_statistics;
use genassoc::{ContingencyTable, StatisticKind};

fn main() -> genassoc::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "10,20,30,30,20,10".into());
    let table: ContingencyTable = arg.parse()?;
    let stats = table_statistics(&table);
    let asymptotic = asymptotic_p_all(&table, &QuadratureSpec::default());
    let lf = LogFactorialTable::new(table.total());
    let exact = exact_p_all(&table, &EnumerationOptions::full(), &lf)?;

    println!("cases {:?}  controls {:?}  score region {:?}", table.cases(), table.controls(), stats.score);
    println!("{:<10} {:>10} {:>14} {:>14}", "statistic", "value", "asymptotic p", "exact p");
    for kind in StatisticKind::ALL {
        let a = match &asymptotic[kind.index()] {
            Ok(p) => format!("{p:.4e}"),
            Err(e) => format!("n/a ({e})"),
        };
        let c = exact.get(kind).value().map_or("aborted".into(), |p| format!("{p:.4e}"));
        println!("{:<10} {:>10.4} {a:>14} {c:>14}", kind.name(), stats.value(kind));
    }
    println!("{} tables enumerated", exact.summands);
    Ok(())
}
