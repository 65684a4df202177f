//! Table generation for the `table` subcommand.
//!
//! Output discipline: big integers render as decimal strings, rationals
//! as "numerator/denominator", rows in a fixed order, LF line endings —
//! identical invocations produce byte-identical files.

use serde::Serialize;

use maex_core::partitions::StatTable;
use maex_core::pell::{s_star, TMultiplicative};
use maex_core::{Error, Rat};

use crate::Budgets;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum StatKind {
    PartitionCount,
    SigmaL,
    SigmaMex,
    SigmaMaex,
    Difference,
    Expectation,
    T,
    SStar,
}

impl StatKind {
    pub fn parse(name: &str) -> Option<StatKind> {
        match name {
            "p" => Some(StatKind::PartitionCount),
            "sigma-L" | "sigma-l" => Some(StatKind::SigmaL),
            "sigma-mex" => Some(StatKind::SigmaMex),
            "sigma-maex" => Some(StatKind::SigmaMaex),
            "diff" => Some(StatKind::Difference),
            "expectation" => Some(StatKind::Expectation),
            "T" | "t" => Some(StatKind::T),
            "S-star" | "s-star" => Some(StatKind::SStar),
            _ => None,
        }
    }

    pub const NAMES: &'static [&'static str] = &[
        "p",
        "sigma-L",
        "sigma-mex",
        "sigma-maex",
        "diff",
        "expectation",
        "T",
        "S-star",
    ];

    /// Column label, equal to the canonical CLI spelling.
    pub fn column(&self) -> &'static str {
        match self {
            StatKind::PartitionCount => "p",
            StatKind::SigmaL => "sigma-L",
            StatKind::SigmaMex => "sigma-mex",
            StatKind::SigmaMaex => "sigma-maex",
            StatKind::Difference => "diff",
            StatKind::Expectation => "expectation",
            StatKind::T => "T",
            StatKind::SStar => "S-star",
        }
    }
}

#[derive(Serialize)]
pub struct TableRow {
    pub n: i64,
    pub value: String,
}

#[derive(Serialize)]
struct TableDoc<'a> {
    stat: &'a str,
    max_n: u32,
    rows: &'a [TableRow],
}

fn rational_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// One row per n in 1..=max_n (or per admissible T-argument: the window
/// n = 24m + 1 for |m| <= max_n).
pub fn build_table(stat: StatKind, max_n: u32, budgets: &Budgets) -> Result<Vec<TableRow>, Error> {
    let mut rows = Vec::new();
    match stat {
        StatKind::T => {
            let mut t = TMultiplicative::new(budgets.pell);
            for m in -i64::from(max_n)..=i64::from(max_n) {
                let n = 24 * m + 1;
                rows.push(TableRow {
                    n,
                    value: t.eval(n)?.to_string(),
                });
            }
        }
        StatKind::SStar => {
            let mut t = TMultiplicative::new(budgets.pell);
            for n in 1..=max_n {
                rows.push(TableRow {
                    n: i64::from(n),
                    value: s_star(n, &mut t)?.to_string(),
                });
            }
        }
        _ => {
            if max_n as usize > budgets.series {
                return Err(Error::BudgetExceeded {
                    what: "series order",
                    requested: i64::from(max_n),
                    limit: budgets.series as i64,
                });
            }
            let table = StatTable::compute(max_n as usize)?;
            for n in 1..=max_n as usize {
                let value = match stat {
                    StatKind::PartitionCount => table.p(n).to_string(),
                    StatKind::SigmaL => table.sigma_l(n).to_string(),
                    StatKind::SigmaMex => table.sigma_mex(n).to_string(),
                    StatKind::SigmaMaex => table.sigma_maex(n).to_string(),
                    StatKind::Difference => table.difference(n).to_string(),
                    StatKind::Expectation => rational_string(&table.expectation(n)),
                    StatKind::T | StatKind::SStar => unreachable!(),
                };
                rows.push(TableRow { n: n as i64, value });
            }
        }
    }
    Ok(rows)
}

pub fn render_csv(stat: StatKind, rows: &[TableRow]) -> String {
    let mut out = format!("n,{}\n", stat.column());
    for row in rows {
        out.push_str(&format!("{},{}\n", row.n, row.value));
    }
    out
}

pub fn render_json(stat: StatKind, max_n: u32, rows: &[TableRow]) -> String {
    let doc = TableDoc {
        stat: stat.column(),
        max_n,
        rows,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("table serialization");
    out.push('\n');
    out
}
