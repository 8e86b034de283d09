//! Report rendering: CSV and an aligned text table.

use std::io;

use super::verify::{CaseResult, Status, VerificationReport};

/// Column names of the CSV report, in order.
pub const CSV_HEADER: [&str; 10] = [
    "kind",
    "op",
    "m",
    "n",
    "witnesses",
    "measured",
    "expected",
    "raw",
    "pass",
    "ms",
];

fn status_label(status: &Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skip(_) => "skip",
    }
}

fn opt(value: Option<usize>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn witnesses(case: &CaseResult) -> String {
    case.witnesses
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}

fn row(case: &CaseResult) -> [String; 10] {
    [
        case.kind.group().to_string(),
        case.kind.op_label().to_string(),
        opt(case.m),
        case.n.to_string(),
        witnesses(case),
        opt(case.measured),
        case.expected.to_string(),
        opt(case.reachable_raw),
        status_label(&case.status).to_string(),
        format!("{:.3}", case.elapsed.as_secs_f64() * 1000.0),
    ]
}

pub fn write_csv<W: io::Write>(report: &VerificationReport, out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for case in &report.cases {
        writer.write_record(row(case))?;
    }
    writer.flush()?;
    Ok(())
}

pub fn to_csv(report: &VerificationReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing CSV to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is UTF-8")
}

/// Human-readable table with one line per case and a summary line.
pub fn to_table(report: &VerificationReport) -> String {
    let header = [
        "kind",
        "op",
        "m",
        "n",
        "measured",
        "expected",
        "raw",
        "status",
        "ms",
        "witnesses",
    ];
    let rows: Vec<Vec<String>> = report
        .cases
        .iter()
        .map(|case| {
            let r = row(case);
            let mut status = r[8].clone();
            if let Some(note) = &case.note {
                status = format!("{status} ({note})");
            }
            if let Status::Skip(reason) = &case.status {
                status = format!("skip: {reason}");
            }
            vec![
                r[0].clone(),
                r[1].clone(),
                r[2].clone(),
                r[3].clone(),
                r[5].clone(),
                r[6].clone(),
                r[7].clone(),
                status,
                r[9].clone(),
                r[4].clone(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let last = cells.len() - 1;
        let mut out = String::new();
        for (i, cell) in cells.into_iter().enumerate() {
            if i == last {
                out.push_str(&cell);
            } else {
                let pad = widths[i] - cell.chars().count();
                // numbers right-aligned, text left-aligned
                if (2..=6).contains(&i) || i == 8 {
                    out.push_str(&" ".repeat(pad));
                    out.push_str(&cell);
                } else {
                    out.push_str(&cell);
                    out.push_str(&" ".repeat(pad));
                }
                out.push_str("  ");
            }
        }
        out.trim_end().to_string()
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out.push_str(&format!(
        "{} cases: {} passed, {} failed, {} skipped\n",
        report.cases.len(),
        report.passed(),
        report.failed(),
        report.skipped()
    ));
    out
}
