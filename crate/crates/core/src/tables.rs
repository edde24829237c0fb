//! 2×3 case–control tables, their margins, and enumeration of all tables
//! sharing a set of margins.
//!
//! Genotypes are indexed 0, 1, 2 for `aa`, `aA`, `AA`. Row 1 holds cases,
//! row 2 controls.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Header accepted (and skipped) at the top of table CSV input.
pub const CSV_HEADER: &str = "x0,x1,x2,y0,y1,y2";

/// Observed genotype counts for cases (`x`) and controls (`y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContingencyTable {
    x: [u32; 3],
    y: [u32; 3],
}

impl ContingencyTable {
    /// Builds a table, requiring at least one case and one control.
    pub fn new(cases: [u32; 3], controls: [u32; 3]) -> Result<Self> {
        let t = Self {
            x: cases,
            y: controls,
        };
        if t.n1() == 0 || t.n2() == 0 {
            return Err(Error::InvalidTable(format!(
                "need n1 >= 1 and n2 >= 1, got n1={} n2={}",
                t.n1(),
                t.n2()
            )));
        }
        Ok(t)
    }

    /// Case row `(x0, x1, x2)`.
    pub fn cases(&self) -> [u32; 3] {
        self.x
    }

    /// Control row `(y0, y1, y2)`.
    pub fn controls(&self) -> [u32; 3] {
        self.y
    }

    pub fn n1(&self) -> u64 {
        self.x.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn n2(&self) -> u64 {
        self.y.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn total(&self) -> u64 {
        self.n1() + self.n2()
    }

    pub fn margins(&self) -> Margins {
        margins_of(self)
    }

    /// Swaps the two homozygote columns (`x0 <-> x2`, `y0 <-> y2`).
    pub fn swap_homozygotes(&self) -> Self {
        Self {
            x: [self.x[2], self.x[1], self.x[0]],
            y: [self.y[2], self.y[1], self.y[0]],
        }
    }

    /// Swaps the case and control rows.
    pub fn swap_rows(&self) -> Self {
        Self {
            x: self.y,
            y: self.x,
        }
    }
}

impl fmt::Display for ContingencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.x[0], self.x[1], self.x[2], self.y[0], self.y[1], self.y[2]
        )
    }
}

impl FromStr for ContingencyTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let fields: Vec<&str> = s.trim().split(',').map(str::trim).collect();
        if fields.len() != 6 {
            return Err(parse_err(format!("expected 6 fields, found {}", fields.len())));
        }
        let mut v = [0u32; 6];
        for (slot, field) in v.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|e| parse_err(format!("field {field:?}: {e}")))?;
        }
        Self::new([v[0], v[1], v[2]], [v[3], v[4], v[5]]).map_err(|e| parse_err(e.to_string()))
    }
}

/// True for the optional CSV header line.
pub fn is_csv_header(line: &str) -> bool {
    line.chars().filter(|c| !c.is_whitespace()).collect::<String>() == CSV_HEADER
}

/// Parses table CSV text. Blank lines and a header are skipped; each parsed
/// entry carries its 1-based line number.
pub fn parse_table_lines(text: &str) -> Vec<(usize, Result<ContingencyTable>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty() && !is_csv_header(line))
        .map(|(i, line)| (i + 1, line.parse()))
        .collect()
}

/// Column totals plus row totals. Conditioning on these makes the genotype
/// frequencies drop out of the null distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Margins {
    m: [u32; 3],
    n1: u32,
    n2: u32,
}

impl Margins {
    /// Column totals `m` and case count `n1`; `n2 = N - n1` must be ≥ 1.
    pub fn new(m: [u32; 3], n1: u32) -> Result<Self> {
        let total: u64 = m.iter().map(|&v| u64::from(v)).sum();
        if n1 == 0 || u64::from(n1) >= total {
            return Err(Error::InvalidMargins(format!(
                "need 1 <= n1 < N, got n1={n1} N={total}"
            )));
        }
        let n2 = u32::try_from(total - u64::from(n1))
            .map_err(|_| Error::InvalidMargins(format!("N={total} too large")))?;
        Ok(Self { m, n1, n2 })
    }

    pub fn columns(&self) -> [u32; 3] {
        self.m
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn total(&self) -> u64 {
        u64::from(self.n1) + u64::from(self.n2)
    }

    /// Feasible values of `x0`.
    pub fn x0_range(&self) -> RangeInclusive<u32> {
        let [m0, m1, m2] = self.m;
        let lo = u64::from(self.n1).saturating_sub(u64::from(m1) + u64::from(m2)) as u32;
        lo..=m0.min(self.n1)
    }

    /// Feasible values of `x1` once `x0` is fixed.
    pub fn x1_range(&self, x0: u32) -> RangeInclusive<u32> {
        let rest = self.n1 - x0;
        rest.saturating_sub(self.m[2])..=self.m[1].min(rest)
    }

    /// The table with case row `(x0, x1, n1 - x0 - x1)`. No feasibility check.
    pub fn table_at(&self, x0: u32, x1: u32) -> ContingencyTable {
        let x2 = self.n1 - x0 - x1;
        ContingencyTable {
            x: [x0, x1, x2],
            y: [self.m[0] - x0, self.m[1] - x1, self.m[2] - x2],
        }
    }

    /// Order in which `x0` slices are visited. Without an anchor this is
    /// ascending; with one it runs from the anchor up to the maximum, then
    /// from anchor − 1 down to the minimum.
    pub fn x0_order(&self, anchor: Option<u32>) -> impl Iterator<Item = u32> {
        let range = self.x0_range();
        let (lo, hi) = (*range.start(), *range.end());
        let start = anchor.map_or(lo, |a| a.clamp(lo, hi));
        (start..=hi).chain((lo..start).rev())
    }
}

impl fmt::Display for Margins {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m=({},{},{}) n1={} n2={}",
            self.m[0], self.m[1], self.m[2], self.n1, self.n2
        )
    }
}

pub fn margins_of(t: &ContingencyTable) -> Margins {
    Margins {
        m: [t.x[0] + t.y[0], t.x[1] + t.y[1], t.x[2] + t.y[2]],
        n1: t.n1() as u32,
        n2: t.n2() as u32,
    }
}

/// Lazily yields every table with margins `m`, each exactly once.
///
/// With `anchor = None` the order is lexicographic in `(x0, x1)`; otherwise
/// `x0` slices follow [`Margins::x0_order`].
pub fn enumerate_tables(
    m: &Margins,
    anchor: Option<u32>,
) -> impl Iterator<Item = ContingencyTable> + '_ {
    m.x0_order(anchor)
        .flat_map(move |x0| m.x1_range(x0).map(move |x1| m.table_at(x0, x1)))
}

// Nonnegative integer solutions of a + b + c = n.
fn compositions3(n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        (n + 2) * (n + 1) / 2
    }
}

fn bounded_count(n1: i64, m: [i64; 3]) -> i64 {
    // Inclusion–exclusion over the upper bounds x_i <= m_i.
    let [a, b, c] = [m[0] + 1, m[1] + 1, m[2] + 1];
    compositions3(n1) - compositions3(n1 - a) - compositions3(n1 - b) - compositions3(n1 - c)
        + compositions3(n1 - a - b)
        + compositions3(n1 - a - c)
        + compositions3(n1 - b - c)
        - compositions3(n1 - a - b - c)
}

/// Number of tables [`enumerate_tables`] yields for `m`.
pub fn count_tables(m: &Margins) -> u64 {
    let cols = m.columns().map(i64::from);
    bounded_count(i64::from(m.n1()), cols) as u64
}

/// Maximum of [`count_tables`] over all column margins with row totals
/// `(n1, n2)`. Symmetric in its arguments.
pub fn max_summands(n1: u32, n2: u32) -> u64 {
    let (n1, n2) = if n1 <= n2 { (n1, n2) } else { (n2, n1) };
    if u64::from(n2) >= 2 * u64::from(n1) {
        return compositions3(i64::from(n1)) as u64;
    }
    let n = i64::from(n1) + i64::from(n2);
    let n1 = i64::from(n1);
    let mut best = 0;
    // The count is symmetric in the columns, so scan m0 <= m1 <= m2 only.
    for m0 in 0..=n / 3 {
        for m1 in m0..=(n - m0) / 2 {
            let m2 = n - m0 - m1;
            best = best.max(bounded_count(n1, [m0, m1, m2]));
        }
    }
    best as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn t(x: [u32; 3], y: [u32; 3]) -> ContingencyTable {
        ContingencyTable::new(x, y).unwrap()
    }

    #[test]
    fn margins_examples() {
        let m = margins_of(&t([10, 20, 30], [30, 20, 10]));
        assert_eq!((m.columns(), m.n1(), m.n2()), ([40, 40, 40], 60, 60));
        let m = margins_of(&t([2, 0, 0], [0, 1, 1]));
        assert_eq!((m.columns(), m.n1(), m.n2()), ([2, 1, 1], 2, 2));
        let m = margins_of(&t([500, 0, 0], [0, 0, 500]));
        assert_eq!((m.columns(), m.n1(), m.n2()), ([500, 0, 500], 500, 500));
    }

    #[test]
    fn enumerate_small_margins() {
        let m = Margins::new([2, 1, 1], 2).unwrap();
        let got: HashSet<_> = enumerate_tables(&m, None).map(|t| t.cases()).collect();
        let want: HashSet<_> = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]].into();
        assert_eq!(got, want);
        assert_eq!(count_tables(&m), 4);

        let m = Margins::new([1, 1, 0], 1).unwrap();
        let got: Vec<_> = enumerate_tables(&m, None).map(|t| t.cases()).collect();
        assert_eq!(got, vec![[0, 1, 0], [1, 0, 0]]);

        let m = Margins::new([5, 0, 0], 5);
        assert!(m.is_err(), "n2 = 0 is not a valid margin set");
        let m = Margins::new([5, 0, 3], 5).unwrap();
        let got: Vec<_> = enumerate_tables(&m, None).map(|t| t.cases()).collect();
        assert_eq!(got.len() as u64, count_tables(&m));
    }

    #[test]
    fn forced_single_table() {
        let m = Margins::new([5, 0, 0], 2).unwrap();
        assert_eq!(count_tables(&m), 1);
        let only: Vec<_> = enumerate_tables(&m, None).collect();
        assert_eq!(only, vec![t([2, 0, 0], [3, 0, 0])]);
    }

    #[test]
    fn sweep_order_starts_at_anchor() {
        let m = Margins::new([4, 3, 3], 5).unwrap();
        let order: Vec<u32> = m.x0_order(Some(2)).collect();
        assert_eq!(order, vec![2, 3, 4, 1, 0]);
        let swept: HashSet<_> = enumerate_tables(&m, Some(2)).collect();
        let lex: HashSet<_> = enumerate_tables(&m, None).collect();
        assert_eq!(swept, lex);
    }

    #[test]
    fn max_summands_closed_form_region() {
        assert_eq!(max_summands(500, 1000), 125_751);
        assert_eq!(max_summands(1000, 2000), 501_501);
        assert_eq!(max_summands(1000, 5000), 501_501);
        assert_eq!(max_summands(2000, 1000), 501_501);
    }

    #[test]
    fn max_summands_balanced() {
        assert_eq!(max_summands(500, 500), 83_834);
        assert_eq!(max_summands(1000, 1000), 334_334);
    }

    #[test]
    fn max_summands_scan_agrees_with_closed_form() {
        // Force the scan by calling the counting kernel directly.
        for (n1, n2) in [(3i64, 6i64), (7, 14), (10, 25)] {
            let n = n1 + n2;
            let mut best = 0;
            for m0 in 0..=n {
                for m1 in 0..=n - m0 {
                    best = best.max(bounded_count(n1, [m0, m1, n - m0 - m1]));
                }
            }
            assert_eq!(best, compositions3(n1));
        }
    }

    #[test]
    fn parse_tables() {
        let table: ContingencyTable = " 10, 20,30,30,20,10 ".parse().unwrap();
        assert_eq!(table, t([10, 20, 30], [30, 20, 10]));
        assert!("1,2,3".parse::<ContingencyTable>().is_err());
        assert!("1,2,3,4,5,x".parse::<ContingencyTable>().is_err());
        assert!("0,0,0,1,1,1".parse::<ContingencyTable>().is_err());
        assert!("1,2,3,-4,5,6".parse::<ContingencyTable>().is_err());

        let lines = parse_table_lines("x0,x1,x2,y0,y1,y2\n1,1,1,2,2,2\n\nbad\n");
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].0, 2);
        assert!(lines[0].1.is_ok());
        assert_eq!(lines[1].0, 4);
        assert!(lines[1].1.is_err());
    }

    fn margins_strategy() -> impl Strategy<Value = Margins> {
        (0u32..25, 0u32..25, 0u32..25, 0.0f64..1.0)
            .prop_filter("need N >= 2", |(a, b, c, _)| a + b + c >= 2)
            .prop_map(|(a, b, c, f)| {
                let n = a + b + c;
                let n1 = 1 + ((n - 1) as f64 * f) as u32;
                Margins::new([a, b, c], n1.min(n - 1)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn enumeration_matches_count_and_margins(m in margins_strategy(), anchor in 0u32..30) {
            let tables: Vec<_> = enumerate_tables(&m, Some(anchor)).collect();
            prop_assert_eq!(tables.len() as u64, count_tables(&m));
            let distinct: HashSet<_> = tables.iter().collect();
            prop_assert_eq!(distinct.len(), tables.len());
            for t in &tables {
                prop_assert_eq!(margins_of(t), m);
            }
            prop_assert!(count_tables(&m) <= max_summands(m.n1(), m.n2()));
        }
    }
}
