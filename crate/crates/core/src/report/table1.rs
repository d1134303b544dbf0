//! The golden comparison table: 72 rows in four blocks, each pairing one
//! competitor bound with Bound A.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{evaluate, BoundId, BoundQuery};
use crate::error::{Error, Result};

/// Embedded golden data.
pub const TABLE1_CSV: &str = include_str!("../../data/table1.csv");

pub const TABLE1_HEADER: [&str; 6] = ["block", "q", "n", "d", "k_competitor", "k_A"];

/// Which competitor bound a block of the table compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    G,
    H,
    L,
    E,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::G, Block::H, Block::L, Block::E];

    pub fn competitor(self) -> BoundId {
        match self {
            Block::G => BoundId::Griesmer,
            Block::H => BoundId::Hamming,
            Block::L => BoundId::Levenshtein,
            Block::E => BoundId::Elias,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Block::G => "g",
            Block::H => "h",
            Block::L => "l",
            Block::E => "e",
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Block {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "g" => Ok(Block::G),
            "h" => Ok(Block::H),
            "l" => Ok(Block::L),
            "e" => Ok(Block::E),
            other => Err(format!("unknown block `{other}` (expected g, h, l or e)")),
        }
    }
}

/// `all` or a comma list of blocks, in table order without duplicates.
pub fn parse_block_list(s: &str) -> std::result::Result<Vec<Block>, String> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if tok == "all" {
            out.extend(Block::ALL);
        } else {
            out.push(tok.parse()?);
        }
    }
    if out.is_empty() {
        return Err("empty block list".into());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableRow {
    pub block: Block,
    pub q: u32,
    pub n: u32,
    pub d: u32,
    pub k_competitor: u32,
    pub k_a: u32,
}

impl TableRow {
    pub fn query(&self) -> Result<BoundQuery> {
        BoundQuery::new(self.n, self.d, self.q)
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={} n={} d={}", self.block, self.q, self.n, self.d)
    }
}

/// Parse rows in the golden CSV layout. The header must match exactly.
pub fn parse_table_rows(text: &str) -> Result<Vec<TableRow>> {
    let bad = |msg: String| Error::MalformedData(msg);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().ne(TABLE1_HEADER) {
        return Err(bad(format!(
            "unexpected header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or("");
        let num = |i: usize| {
            field(i).parse::<u32>().map_err(|_| {
                bad(format!(
                    "row {}: bad {} `{}`",
                    line + 1,
                    TABLE1_HEADER[i],
                    field(i)
                ))
            })
        };
        rows.push(TableRow {
            block: field(0)
                .parse()
                .map_err(|e| bad(format!("row {}: {e}", line + 1)))?,
            q: num(1)?,
            n: num(2)?,
            d: num(3)?,
            k_competitor: num(4)?,
            k_a: num(5)?,
        });
    }
    Ok(rows)
}

pub fn write_table_rows(rows: &[TableRow]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(TABLE1_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.block.tag().to_string(),
            r.q.to_string(),
            r.n.to_string(),
            r.d.to_string(),
            r.k_competitor.to_string(),
            r.k_a.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn golden_rows() -> Vec<TableRow> {
    parse_table_rows(TABLE1_CSV).expect("embedded table is well formed")
}

/// A golden cell that this implementation does not reproduce, with the
/// value it computes instead and why the two differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Allowance {
    pub block: Block,
    pub q: u32,
    pub n: u32,
    pub d: u32,
    pub bound: BoundId,
    pub computed: u32,
    pub note: &'static str,
}

pub const DOCUMENTED_ALLOWANCES: [Allowance; 3] = [
    Allowance {
        block: Block::G,
        q: 2,
        n: 80,
        d: 15,
        bound: BoundId::Griesmer,
        computed: 55,
        note: "the ceiling sum at k=55 equals n exactly; the golden 54 matches neither the ceiling nor the floor form",
    },
    Allowance {
        block: Block::G,
        q: 5,
        n: 120,
        d: 16,
        bound: BoundId::Griesmer,
        computed: 102,
        note: "the ceiling sum at k=102 equals n exactly; the golden 101 matches neither the ceiling nor the floor form",
    },
    Allowance {
        block: Block::H,
        q: 3,
        n: 76,
        d: 68,
        bound: BoundId::A,
        computed: 9,
        note: "k=9 passes every i at n=76; the golden pair (9, 8) is what n=75 gives",
    },
];

fn find_allowance(row: &TableRow, bound: BoundId) -> Option<&'static Allowance> {
    DOCUMENTED_ALLOWANCES.iter().find(|a| {
        a.block == row.block && a.q == row.q && a.n == row.n && a.d == row.d && a.bound == bound
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: TableRow,
    pub bound: BoundId,
    pub expected: u32,
    /// `None` when the bound does not apply to the row.
    pub computed: Option<u32>,
    /// Set when the cell is in the documented-allowances list.
    pub note: Option<&'static str>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let computed = self.computed.map_or("n/a".to_string(), |k| k.to_string());
        write!(
            f,
            "{}: {} expected {} computed {}",
            self.row,
            self.bound.column(),
            self.expected,
            computed
        )?;
        if let Some(note) = self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    pub rows_checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Documented cells excused by `allow_documented`.
    pub documented_allowances: Vec<Mismatch>,
}

impl DiffReport {
    pub fn is_success(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Rows whose every cell matched.
    pub fn rows_matching(&self) -> usize {
        let bad: HashSet<&TableRow> = self
            .mismatches
            .iter()
            .chain(&self.documented_allowances)
            .map(|m| &m.row)
            .collect();
        self.rows_checked - bad.len()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows checked: {}", self.rows_checked)?;
        writeln!(f, "rows matching: {}", self.rows_matching())?;
        writeln!(f, "mismatches: {}", self.mismatches.len())?;
        for m in &self.mismatches {
            writeln!(f, "  {m}")?;
        }
        writeln!(
            f,
            "documented allowances: {}",
            self.documented_allowances.len()
        )?;
        for m in &self.documented_allowances {
            writeln!(f, "  {m}")?;
        }
        write!(
            f,
            "status: {}",
            if self.is_success() { "ok" } else { "mismatch" }
        )
    }
}

/// Recompute both columns of every row in `blocks` (weight variant of
/// Bound A) and diff against the expected values.
///
/// A documented cell whose computed value still equals the documented one is
/// moved to `documented_allowances` when `allow_documented` is set; any other
/// difference is a mismatch.
pub fn diff_rows(
    rows: &[TableRow],
    blocks: &[Block],
    allow_documented: bool,
) -> Result<DiffReport> {
    let selected: Vec<&TableRow> = rows.iter().filter(|r| blocks.contains(&r.block)).collect();
    let computed = selected
        .par_iter()
        .map(|row| {
            let query = row.query()?;
            let competitor = evaluate(&query, row.block.competitor())?.k_max;
            let a = evaluate(&query, BoundId::A)?.k_max;
            Ok((competitor, a))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = DiffReport {
        rows_checked: selected.len(),
        ..DiffReport::default()
    };
    for (row, (competitor, a)) in selected.into_iter().zip(computed) {
        let cells = [
            (row.block.competitor(), row.k_competitor, competitor),
            (BoundId::A, row.k_a, a),
        ];
        for (bound, expected, got) in cells {
            if got == Some(expected) {
                continue;
            }
            let allowance = find_allowance(row, bound).filter(|a| got == Some(a.computed));
            let mismatch = Mismatch {
                row: *row,
                bound,
                expected,
                computed: got,
                note: allowance.map(|a| a.note),
            };
            if allow_documented && allowance.is_some() {
                report.documented_allowances.push(mismatch);
            } else {
                report.mismatches.push(mismatch);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_data_shape() {
        let rows = golden_rows();
        assert_eq!(rows.len(), 72);
        for b in Block::ALL {
            assert_eq!(rows.iter().filter(|r| r.block == b).count(), 18);
        }
        assert!(TABLE1_CSV.starts_with("block,q,n,d,k_competitor,k_A\n"));
        assert!(!TABLE1_CSV.contains('\r'));
        assert!(rows.iter().all(|r| r.k_a < r.k_competitor));
    }

    #[test]
    fn rows_round_trip() {
        let rows = golden_rows();
        assert_eq!(write_table_rows(&rows), TABLE1_CSV);
        assert_eq!(parse_table_rows(&write_table_rows(&rows)).unwrap(), rows);
    }

    #[test]
    fn malformed_data() {
        assert!(matches!(
            parse_table_rows("a,b\n1,2\n"),
            Err(Error::MalformedData(_))
        ));
        let bad = "block,q,n,d,k_competitor,k_A\nx,2,20,4,16,15\n";
        assert!(matches!(
            parse_table_rows(bad),
            Err(Error::MalformedData(_))
        ));
        let bad = "block,q,n,d,k_competitor,k_A\ng,2,twenty,4,16,15\n";
        assert!(matches!(
            parse_table_rows(bad),
            Err(Error::MalformedData(_))
        ));
    }

    #[test]
    fn allowances_point_at_golden_rows() {
        let rows = golden_rows();
        for a in DOCUMENTED_ALLOWANCES {
            let row = rows
                .iter()
                .find(|r| r.block == a.block && r.q == a.q && r.n == a.n && r.d == a.d)
                .expect("allowance refers to a golden row");
            let expected = if a.bound == BoundId::A {
                row.k_a
            } else {
                row.k_competitor
            };
            assert_ne!(expected, a.computed);
        }
    }

    #[test]
    fn block_lists() {
        assert_eq!(parse_block_list("all").unwrap(), Block::ALL);
        assert_eq!(parse_block_list("e,g,e").unwrap(), [Block::G, Block::E]);
        assert!(parse_block_list("x").is_err());
    }

    #[test]
    fn diff_flags_a_planted_error() {
        let mut rows = golden_rows();
        rows.retain(|r| r.block == Block::L);
        rows[0].k_a += 1;
        let report = diff_rows(&rows, &[Block::L], true).unwrap();
        assert_eq!(report.rows_checked, 18);
        assert_eq!(report.mismatches.len(), 1);
        assert_eq!(report.mismatches[0].computed, Some(rows[0].k_a - 1));
        assert!(!report.is_success());
    }

    #[test]
    fn allowance_only_covers_its_computed_value() {
        let row = TableRow {
            block: Block::G,
            q: 2,
            n: 80,
            d: 15,
            k_competitor: 54,
            k_a: 52,
        };
        let strict = diff_rows(&[row], &[Block::G], false).unwrap();
        assert_eq!(strict.mismatches.len(), 1);
        assert!(strict.mismatches[0].note.is_some());
        let lenient = diff_rows(&[row], &[Block::G], true).unwrap();
        assert!(lenient.is_success());
        assert_eq!(lenient.documented_allowances.len(), 1);
        // other cells of a documented row get no slack
        let moved = TableRow { k_a: 53, ..row };
        let report = diff_rows(&[moved], &[Block::G], true).unwrap();
        assert_eq!(report.mismatches.len(), 1);
        assert_eq!(report.mismatches[0].bound, BoundId::A);
    }
}
