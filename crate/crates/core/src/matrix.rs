//! Pairwise distance matrices over a corpus of ccdhs.

use rayon::prelude::*;

use crate::ccdh::Ccdh;
use crate::error::{Result, RhError};
use crate::families;
use crate::rh;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
}

/// Symmetric zero-diagonal matrix of smooth RH distances, with summary
/// statistics over the off-diagonal pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixReport {
    pub names: Vec<String>,
    /// Row-major `n x n` values.
    pub values: Vec<f64>,
    pub summary: MatrixSummary,
}

impl MatrixReport {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }
}

/// Computes all pairwise smooth RH distances (optionally normalized by the
/// maximum attainable at the pair's sizes).
///
/// Pairs are evaluated on the current rayon pool; each entry is a pure
/// function of its two ccdhs and lands at a fixed index, so the output is
/// identical whatever the worker count or schedule.
pub fn pairwise_matrix(entries: &[(String, Ccdh)], normalized: bool) -> Result<MatrixReport> {
    if entries.len() < 2 {
        return Err(RhError::Parameter(
            "a distance matrix needs at least two graphs".into(),
        ));
    }
    let n = entries.len();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let computed: Vec<((usize, usize), f64)> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let d = if normalized {
                families::normalized_ratio(&entries[i].1, &entries[j].1)
            } else {
                Ok(rh::smooth_rh(&entries[i].1, &entries[j].1).distance)
            };
            d.map(|d| ((i, j), d))
        })
        .collect::<Result<_>>()?;

    let mut values = vec![0.0; n * n];
    let mut off_diagonal = Vec::with_capacity(computed.len());
    for ((i, j), d) in computed {
        values[i * n + j] = d;
        values[j * n + i] = d;
        off_diagonal.push(d);
    }
    Ok(MatrixReport {
        names: entries.iter().map(|(name, _)| name.clone()).collect(),
        summary: summarize(&mut off_diagonal),
        values,
    })
}

fn summarize(xs: &mut [f64]) -> MatrixSummary {
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    let median = if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    };
    MatrixSummary {
        min: xs[0],
        max: xs[n - 1],
        mean: xs.iter().sum::<f64>() / n as f64,
        median,
    }
}

/// Renders the matrix as tab-separated text with a name header row and
/// column. Cells use the shortest round-trip float form.
pub fn render_tsv(report: &MatrixReport) -> String {
    let mut out = String::new();
    out.push_str("name");
    for name in &report.names {
        out.push('\t');
        out.push_str(name);
    }
    out.push('\n');
    for (i, name) in report.names.iter().enumerate() {
        out.push_str(name);
        for j in 0..report.len() {
            out.push('\t');
            out.push_str(&report.value(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

/// Parses text produced by [`render_tsv`] back into names and values.
pub fn parse_tsv(text: &str) -> Result<(Vec<String>, Vec<f64>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| RhError::Format("empty matrix".into()))?;
    let names: Vec<String> = header.split('\t').skip(1).map(str::to_string).collect();
    let n = names.len();
    let mut values = Vec::with_capacity(n * n);
    for (i, line) in lines.enumerate() {
        let mut cells = line.split('\t');
        let row_name = cells.next().unwrap_or_default();
        if row_name != names[i] {
            return Err(RhError::Format(format!(
                "row {i} named {row_name:?}, expected {:?}",
                names[i]
            )));
        }
        for cell in cells {
            let v: f64 = cell
                .parse()
                .map_err(|_| RhError::Format(format!("bad matrix cell {cell:?}")))?;
            values.push(v);
        }
    }
    if values.len() != n * n {
        return Err(RhError::Format("matrix is not square".into()));
    }
    Ok((names, values))
}
