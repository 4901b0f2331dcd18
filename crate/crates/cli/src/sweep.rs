//! Numerology sweeps over a grid of multidegrees, streamed in fixed order.

use std::io::Write;

use grassline::coniveau::{dimensions, MultiDegree, NumerologyReport};
use rayon::prelude::*;

use crate::{json, FormatError};

/// Rows are computed in parallel one batch at a time, so memory stays
/// bounded by the batch size.
const BATCH: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub min_n: u32,
    pub max_n: u32,
    pub min_d: u32,
    pub max_d: u32,
    pub max_r: u32,
}

impl Grid {
    /// Multidegrees ordered by `n`, then `r`, then degree tuple
    /// (nondecreasing tuples only).
    pub fn iter(&self) -> impl Iterator<Item = MultiDegree> + '_ {
        let min_d = self.min_d.max(1);
        (self.min_n.max(1)..=self.max_n).flat_map(move |n| {
            (1..=self.max_r).flat_map(move |r| {
                Tuples::new(r as usize, min_d, self.max_d)
                    .map(move |ds| MultiDegree::new(n, ds).expect("grid degrees are positive"))
            })
        })
    }
}

/// Nondecreasing tuples of length `len` over `lo..=hi`, in lexicographic order.
struct Tuples {
    current: Option<Vec<u32>>,
    hi: u32,
}

impl Tuples {
    fn new(len: usize, lo: u32, hi: u32) -> Self {
        let current = (lo <= hi && len > 0).then(|| vec![lo; len]);
        Self { current, hi }
    }
}

impl Iterator for Tuples {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        match cur.iter().rposition(|&x| x < self.hi) {
            Some(i) => {
                let v = cur[i] + 1;
                cur[i..].iter_mut().for_each(|x| *x = v);
            }
            None => self.current = None,
        }
        Some(out)
    }
}

pub const CSV_HEADER: [&str; 13] = [
    "n",
    "degrees",
    "dim_x",
    "dim_f",
    "dim_fg",
    "max_coniveau",
    "coniveau2",
    "fano_index2_degree",
    "plane_bound_holds",
    "plane_bound_slack",
    "equality_case",
    "negative_dimension",
    "has_linear_factor",
];

fn csv_row(r: &NumerologyReport) -> [String; 13] {
    let degrees: Vec<String> = r.multidegree.degrees().iter().map(u32::to_string).collect();
    [
        r.multidegree.n().to_string(),
        degrees.join(";"),
        r.dim_x.to_string(),
        r.dim_f.to_string(),
        r.dim_fg.to_string(),
        r.max_coniveau.to_string(),
        r.coniveau2.to_string(),
        r.fano_index2_degree.to_string(),
        r.plane_bound_holds.to_string(),
        r.plane_bound_slack.to_string(),
        r.equality_case.to_string(),
        r.negative_dimension.to_string(),
        r.has_linear_factor.to_string(),
    ]
}

fn for_each_batch(
    grid: &Grid,
    mut emit: impl FnMut(&NumerologyReport) -> Result<(), FormatError>,
) -> Result<usize, FormatError> {
    let mut rows = grid.iter().peekable();
    let mut count = 0;
    while rows.peek().is_some() {
        let batch: Vec<MultiDegree> = rows.by_ref().take(BATCH).collect();
        let reports: Vec<NumerologyReport> = batch.par_iter().map(dimensions).collect();
        for r in &reports {
            emit(r)?;
        }
        count += reports.len();
    }
    Ok(count)
}

/// Writes the CSV header and one row per multidegree. Returns the row count.
pub fn write_csv<W: Write>(grid: &Grid, out: W) -> Result<usize, FormatError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let count = for_each_batch(grid, |r| {
        w.write_record(csv_row(r))?;
        Ok(())
    })?;
    w.flush()?;
    Ok(count)
}

/// Writes a JSON array with one numerology object per line.
pub fn write_json<W: Write>(grid: &Grid, mut out: W) -> Result<usize, FormatError> {
    out.write_all(b"[")?;
    let mut first = true;
    let count = for_each_batch(grid, |r| {
        out.write_all(if first { b"\n" } else { b",\n" })?;
        first = false;
        serde_json::to_writer(&mut out, &json::numerology(r))?;
        Ok(())
    })?;
    out.write_all(if first { b"]\n" } else { b"\n]\n" })?;
    Ok(count)
}

/// Plain text: one line per multidegree.
pub fn write_text<W: Write>(grid: &Grid, mut out: W) -> Result<usize, FormatError> {
    for_each_batch(grid, |r| {
        writeln!(
            out,
            "n={} degrees={:?} dim_f={} dim_fg={} max_coniveau={} plane_bound_slack={}{}",
            r.multidegree.n(),
            r.multidegree.degrees(),
            r.dim_f,
            r.dim_fg,
            r.max_coniveau,
            r.plane_bound_slack,
            if r.equality_case { " equality" } else { "" }
        )?;
        Ok(())
    })
}
