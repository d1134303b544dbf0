use crate::bounds::{BoundResult, Comparison};

use super::Format;

fn k_text(r: &BoundResult) -> String {
    r.k_max.map_or("n/a".to_string(), |k| k.to_string())
}

/// Per-bound report for one query, bounds in canonical order.
pub fn render_comparison(cmp: &Comparison, format: Format) -> String {
    let mut results: Vec<&BoundResult> = cmp.results.iter().collect();
    results.sort_by_key(|r| r.bound);
    let witness = |r: &BoundResult| {
        r.witness
            .as_ref()
            .map(|w| w.to_string())
            .unwrap_or_default()
    };
    let size = |r: &BoundResult| {
        r.size_max
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_default()
    };
    let min = cmp.min_k.map_or("n/a".to_string(), |k| k.to_string());
    let q = &cmp.query;
    match format {
        Format::Text => {
            let mut out = format!("q={} n={} d={} variant={}\n", q.q, q.n, q.d, q.variant_a);
            for r in &results {
                let line = format!("{:<12}{:>5}  {}", r.bound.name(), k_text(r), witness(r));
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out.push_str(&format!("{:<12}{:>5}\n", "min", min));
            out
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
            w.write_record(["bound", "k_max", "size_max", "witness"])
                .expect("in-memory write");
            for r in &results {
                let k = r.k_max.map(|k| k.to_string()).unwrap_or_default();
                w.write_record([r.bound.name().to_string(), k, size(r), witness(r)])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
        }
        Format::Records => {
            let mut out = String::new();
            for r in &results {
                out.push_str(&format!(
                    "bound={} k_max={} size_max={} witness=\"{}\"\n",
                    r.bound.name(),
                    k_text(r),
                    size(r),
                    witness(r)
                ));
            }
            out.push_str(&format!("min_k={min}\n"));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{best_upper_k, parse_bound_list, BoundQuery};

    fn compare(n: u32, d: u32, q: u32, bounds: &str) -> Comparison {
        let query = BoundQuery::new(n, d, q).unwrap();
        best_upper_k(&query, &parse_bound_list(bounds).unwrap()).unwrap()
    }

    #[test]
    fn text_report() {
        let out = render_comparison(&compare(20, 4, 2, "griesmer,a"), Format::Text);
        assert_eq!(
            out,
            "q=2 n=20 d=4 variant=weight\n\
             A              15  k=16 refuted at i=1: lhs=16 > rhs=5\n\
             griesmer       16\n\
             min            15\n"
        );
    }

    #[test]
    fn not_applicable() {
        let out = render_comparison(&compare(10, 3, 2, "plotkin"), Format::Text);
        assert!(out.contains("plotkin       n/a\n"));
        assert!(out.ends_with(&format!("{:<14}n/a\n", "min")));
    }

    #[test]
    fn machine_formats() {
        let cmp = compare(7, 3, 2, "h,e");
        assert_eq!(
            render_comparison(&cmp, Format::Csv),
            "bound,k_max,size_max,witness\nhamming,4,16,\nelias,5,37,w=1\n"
        );
        assert_eq!(
            render_comparison(&cmp, Format::Records),
            "bound=hamming k_max=4 size_max=16 witness=\"\"\nbound=elias k_max=5 size_max=37 witness=\"w=1\"\nmin_k=4\n"
        );
    }
}
