//! Simulated permutation p-values approach the exact conditional p-values
//! as the number of permutations grows.

use genassoc::exact::{exact_p_all, permutation_p_all, EnumerationOptions, LogFactorialTable};
use genassoc::{ContingencyTable, StatisticKind};

fn main() -> genassoc::Result<()> {
    let table = ContingencyTable::new([22, 31, 9], [35, 24, 4])?;
    let lf = LogFactorialTable::new(table.total());
    let exact = exact_p_all(&table, &EnumerationOptions::full(), &lf)?;
    println!("table {table}");
    print!("{:<10} {:>10}", "statistic", "exact");
    let budgets = [1_000u64, 10_000, 100_000, 1_000_000];
    for b in budgets {
        print!(" {:>10}", format!("b={b}"));
    }
    println!();
    let perms: Vec<[f64; 7]> = budgets
        .iter()
        .map(|&b| permutation_p_all(&table, b, 2024))
        .collect::<genassoc::Result<_>>()?;
    for kind in StatisticKind::ALL {
        print!("{:<10} {:>10.5}", kind.name(), exact.get(kind).value().unwrap());
        for p in &perms {
            print!(" {:>10.5}", p[kind.index()]);
        }
        println!();
    }
    Ok(())
}
