//! Table sweeps, the golden-table diff and the text formats the CLI prints.

mod eval;
mod sweep;
mod table1;

pub use eval::render_comparison;
pub use sweep::{parse_sweep_csv, sweep, Sweep, SweepRow};
pub use table1::{
    diff_rows, golden_rows, parse_block_list, parse_table_rows, write_table_rows, Allowance, Block,
    DiffReport, Mismatch, TableRow, DOCUMENTED_ALLOWANCES, TABLE1_CSV, TABLE1_HEADER,
};

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Csv,
    #[default]
    Text,
    /// One `key=value` record per line.
    Records,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Text => "text",
            Format::Records => "records",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            "records" => Ok(Format::Records),
            other => Err(format!(
                "unknown format `{other}` (expected csv, text or records)"
            )),
        }
    }
}

/// `LO..HI` (inclusive), `LO..=HI`, or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("bad range bound `{t}`"))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("20..30").unwrap(), 20..=30);
        assert_eq!(parse_range("20..=30").unwrap(), 20..=30);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("a..3").is_err());
        assert!(parse_range("3..").is_err());
    }

    #[test]
    fn formats() {
        for f in [Format::Csv, Format::Text, Format::Records] {
            assert_eq!(f.to_string().parse::<Format>().unwrap(), f);
        }
        assert!("json".parse::<Format>().is_err());
    }
}
