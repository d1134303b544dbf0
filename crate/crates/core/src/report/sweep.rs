use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::bounds::{evaluate, BoundId, BoundQuery};
use crate::error::{Error, Result};
use crate::exact::{check_alphabet, RhsVariant};

use super::Format;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub q: u32,
    pub n: u32,
    pub d: u32,
    /// One cell per selected bound, `None` where the bound does not apply.
    pub values: Vec<Option<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub bounds: Vec<BoundId>,
    pub rows: Vec<SweepRow>,
}

/// Evaluate `bounds` on every `(n, d)` with `d <= n`, ascending in `(n, d)`.
pub fn sweep(
    q: u32,
    n_range: RangeInclusive<u32>,
    d_range: RangeInclusive<u32>,
    bounds: &[BoundId],
    variant: RhsVariant,
) -> Result<Sweep> {
    check_alphabet(q)?;
    for r in [&n_range, &d_range] {
        if r.is_empty() || *r.start() == 0 {
            return Err(Error::InvalidRange {
                lo: *r.start(),
                hi: *r.end(),
            });
        }
    }
    let cells: Vec<(u32, u32)> = n_range
        .flat_map(|n| {
            d_range
                .clone()
                .filter(move |&d| d <= n)
                .map(move |d| (n, d))
        })
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(n, d)| {
            let query = BoundQuery::new(n, d, q)?.with_variant(variant);
            let values = bounds
                .iter()
                .map(|&id| evaluate(&query, id).map(|r| r.k_max))
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepRow { q, n, d, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Sweep {
        bounds: bounds.to_vec(),
        rows,
    })
}

fn cell(v: Option<u32>) -> String {
    v.map(|k| k.to_string()).unwrap_or_default()
}

impl Sweep {
    fn header(&self) -> Vec<&'static str> {
        ["q", "n", "d"]
            .into_iter()
            .chain(self.bounds.iter().map(|b| b.column()))
            .collect()
    }

    fn cells(row: &SweepRow) -> Vec<String> {
        [row.q, row.n, row.d]
            .iter()
            .map(u32::to_string)
            .chain(row.values.iter().map(|&v| cell(v)))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(self.header()).expect("in-memory write");
        for row in &self.rows {
            w.write_record(Self::cells(row)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    pub fn to_text(&self) -> String {
        let header = self.header();
        let body: Vec<Vec<String>> = self.rows.iter().map(Self::cells).collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|r| r[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(parts.join("  ").trim_end());
            out.push('\n');
        };
        line(&header);
        for r in &body {
            line(&r.iter().map(String::as_str).collect::<Vec<_>>());
        }
        out
    }

    pub fn to_records(&self) -> String {
        let header = self.header();
        let mut out = String::new();
        for row in &self.rows {
            let fields: Vec<String> = header
                .iter()
                .zip(Self::cells(row))
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(out, "{}", fields.join(" ")).expect("string write");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
            Format::Records => self.to_records(),
        }
    }
}

/// Read back the CSV form of a sweep.
pub fn parse_sweep_csv(text: &str) -> Result<Sweep> {
    let bad = |msg: String| Error::MalformedData(msg);
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if header.len() < 3 || header.iter().take(3).ne(["q", "n", "d"]) {
        return Err(bad("header must start with q,n,d".into()));
    }
    let bounds = header
        .iter()
        .skip(3)
        .map(|col| {
            BoundId::ALL
                .into_iter()
                .find(|b| b.column() == col)
                .ok_or_else(|| bad(format!("unknown column `{col}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| bad(format!("bad number `{s}`")))
        };
        let values = record
            .iter()
            .skip(3)
            .map(|s| {
                if s.is_empty() {
                    Ok(None)
                } else {
                    num(s).map(Some)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(SweepRow {
            q: num(&record[0])?,
            n: num(&record[1])?,
            d: num(&record[2])?,
            values,
        });
    }
    Ok(Sweep { bounds, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::parse_bound_list;

    fn run(q: u32, n: RangeInclusive<u32>, d: RangeInclusive<u32>, bounds: &str) -> Sweep {
        sweep(
            q,
            n,
            d,
            &parse_bound_list(bounds).unwrap(),
            RhsVariant::Weight,
        )
        .unwrap()
    }

    #[test]
    fn single_cell_csv() {
        assert_eq!(
            run(2, 20..=20, 4..=4, "g,a").to_csv(),
            "q,n,d,k_g,k_A\n2,20,4,16,15\n"
        );
    }

    #[test]
    fn ternary_rows() {
        let s = run(3, 6..=7, 3..=3, "g,a");
        assert_eq!(s.to_csv(), "q,n,d,k_g,k_A\n3,6,3,4,3\n3,7,3,5,4\n");
    }

    #[test]
    fn empty_intersection_is_header_only() {
        assert_eq!(run(2, 3..=4, 5..=9, "all").rows, vec![]);
        assert_eq!(run(2, 3..=4, 5..=9, "g").to_csv(), "q,n,d,k_g\n");
    }

    #[test]
    fn ordering_and_blanks() {
        let s = run(2, 5..=6, 1..=6, "p,a");
        let cells: Vec<(u32, u32)> = s.rows.iter().map(|r| (r.n, r.d)).collect();
        let mut sorted = cells.clone();
        sorted.sort();
        assert_eq!(cells, sorted);
        assert_eq!(cells.len(), 11);
        let row = s.rows.iter().find(|r| (r.n, r.d) == (6, 2)).unwrap();
        assert_eq!(row.values, vec![None, None]);
        assert!(s.to_csv().contains("\n2,6,2,,\n"));
    }

    #[test]
    fn formats() {
        let s = run(2, 20..=20, 3..=4, "g,a");
        assert_eq!(
            s.to_text(),
            "q   n  d  k_g  k_A\n2  20  3   17   15\n2  20  4   16   15\n"
        );
        assert_eq!(
            s.to_records(),
            "q=2 n=20 d=3 k_g=17 k_A=15\nq=2 n=20 d=4 k_g=16 k_A=15\n"
        );
    }

    #[test]
    fn csv_round_trip() {
        let s = run(3, 4..=12, 1..=12, "all");
        assert_eq!(parse_sweep_csv(&s.to_csv()).unwrap(), s);
    }

    #[test]
    fn bad_input() {
        let b = [BoundId::A];
        assert_eq!(
            sweep(1, 5..=5, 2..=2, &b, RhsVariant::Weight),
            Err(Error::InvalidAlphabet(1))
        );
        #[allow(clippy::reversed_empty_ranges)]
        let backwards = 6..=5;
        assert!(matches!(
            sweep(2, backwards, 2..=2, &b, RhsVariant::Weight),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            sweep(2, 5..=6, 0..=2, &b, RhsVariant::Weight),
            Err(Error::InvalidRange { .. })
        ));
        assert!(parse_sweep_csv("x,y\n").is_err());
        assert!(parse_sweep_csv("q,n,d,k_z\n").is_err());
    }
}
