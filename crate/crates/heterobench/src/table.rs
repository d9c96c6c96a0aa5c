//! Plain-text tables for `--pretty` output.

use heterobench_core::dedup::LeakageReport;
use heterobench_core::eval::ResultTable;
use heterobench_core::metrics::StatReport;

/// First column left-aligned, the rest right-aligned, two spaces apart.
pub fn render(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (i, cell) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate().take(cols) {
            if i == 0 {
                line.push_str(&format!("{cell:<w$}", w = width[0]));
            } else {
                line.push_str(&format!("  {cell:>w$}", w = width[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One column per dataset, rows in the usual statistics-table order.
pub fn stats_table(reports: &[StatReport]) -> String {
    let header: Vec<String> = std::iter::once(String::new())
        .chain(reports.iter().map(|r| r.name.clone()))
        .collect();
    let f2 = |x: f64| format!("{x:.2}");
    type Cell = Box<dyn Fn(&StatReport) -> String>;
    let rows: Vec<(&str, Cell)> = vec![
        ("nodes", Box::new(|r| r.num_nodes.to_string())),
        ("edges", Box::new(|r| r.num_edges.to_string())),
        ("avg degree", Box::new(move |r| f2(r.avg_degree))),
        (
            "global clustering",
            Box::new(move |r| f2(r.global_clustering)),
        ),
        (
            "avg local clustering",
            Box::new(move |r| f2(r.avg_local_clustering)),
        ),
        (
            "diameter",
            Box::new(|r| {
                if r.connected {
                    r.diameter.to_string()
                } else {
                    format!("{}*", r.diameter)
                }
            }),
        ),
        ("node features", Box::new(|r| r.feature_dim.to_string())),
        ("classes", Box::new(|r| r.num_classes.to_string())),
        ("edge homophily", Box::new(move |r| f2(r.edge_homophily))),
        (
            "adjusted homophily",
            Box::new(move |r| f2(r.adjusted_homophily)),
        ),
        (
            "label informativeness",
            Box::new(move |r| f2(r.label_informativeness)),
        ),
    ];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(name, get)| {
            std::iter::once(name.to_string())
                .chain(reports.iter().map(get))
                .collect()
        })
        .collect();
    let mut out = render(&header, &body);
    if reports.iter().any(|r| !r.connected) {
        out.push_str("* largest connected component only\n");
    }
    out
}

/// Models as rows, datasets as columns, `mean ± std` in percent.
pub fn results_table(table: &ResultTable) -> String {
    let datasets = table.datasets();
    let header: Vec<String> = std::iter::once(String::new())
        .chain(datasets.iter().map(|d| d.to_string()))
        .collect();
    let rows: Vec<Vec<String>> = table
        .models()
        .into_iter()
        .map(|m| {
            std::iter::once(m.to_string())
                .chain(datasets.iter().map(|d| match table.get(m, d) {
                    Some(e) => format!("{:.2} ± {:.2}", 100.0 * e.mean, 100.0 * e.std),
                    None => "-".into(),
                }))
                .collect()
        })
        .collect();
    render(&header, &rows)
}

/// Rank of every model on every dataset, one `a / b / ...` cell per
/// dataset with one entry per input table.
pub fn rank_table(tables: &[ResultTable]) -> String {
    let mut datasets: Vec<String> = Vec::new();
    let mut models: Vec<String> = Vec::new();
    for t in tables {
        for d in t.datasets() {
            if !datasets.iter().any(|x| x == d) {
                datasets.push(d.to_string());
            }
        }
        for m in t.models() {
            if !models.iter().any(|x| x == m) {
                models.push(m.to_string());
            }
        }
    }
    let ranks: Vec<_> = tables.iter().map(ResultTable::ranks).collect();
    let lookup = |ti: usize, d: &str, m: &str| -> String {
        ranks[ti]
            .iter()
            .find(|(ds, _)| ds == d)
            .and_then(|(_, rs)| rs.iter().find(|(model, _)| model == m))
            .map_or("-".into(), |(_, r)| r.to_string())
    };
    let header: Vec<String> = std::iter::once(String::new())
        .chain(datasets.iter().cloned())
        .collect();
    let rows: Vec<Vec<String>> = models
        .iter()
        .map(|m| {
            std::iter::once(m.clone())
                .chain(datasets.iter().map(|d| {
                    (0..tables.len())
                        .map(|ti| lookup(ti, d, m))
                        .collect::<Vec<_>>()
                        .join(" / ")
                }))
                .collect()
        })
        .collect();
    render(&header, &rows)
}

pub fn leakage_table(report: &LeakageReport) -> String {
    let pct = |x: Option<f64>| x.map_or("-".into(), |v| format!("{:.2}", 100.0 * v));
    let header: Vec<String> = [
        "split",
        "on duplicates",
        "on non-duplicates",
        "test dups",
        "test non-dups",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut rows: Vec<Vec<String>> = report
        .per_split
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                pct(c.on_duplicates),
                pct(c.on_non_duplicates),
                c.test_duplicates.to_string(),
                c.test_non_duplicates.to_string(),
            ]
        })
        .collect();
    let summary = |s: Option<heterobench_core::eval::Summary>| {
        s.map_or("-".into(), |s| {
            format!("{:.2} ± {:.2}", 100.0 * s.mean, 100.0 * s.std)
        })
    };
    rows.push(vec![
        "mean".into(),
        summary(report.on_duplicates),
        summary(report.on_non_duplicates),
        String::new(),
        String::new(),
    ]);
    render(&header, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alignment() {
        let t = render(
            &["".into(), "a".into(), "bbb".into()],
            &[vec!["row".into(), "1".into(), "2".into()]],
        );
        assert_eq!(t, "     a  bbb\nrow  1    2\n");
    }
}
