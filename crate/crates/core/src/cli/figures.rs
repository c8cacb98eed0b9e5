//! Plot data as CSV rows.

use clap::ValueEnum;

use crate::bounds::growth_rate;
use crate::error::{Error, Result};
use crate::refdata::ReferenceData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// Limiting growth rate against `x = f/m`.
    Growth,
    /// `6^{−ℓ/2}` times the stressed depth-3 count.
    Table1Ratio,
    /// `m`-th root of the `(f, m)` counts against `f/m`.
    FmScatter,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureParams {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
    pub ms: Vec<usize>,
}

impl Default for FigureParams {
    fn default() -> Self {
        FigureParams {
            x_min: 0.0,
            x_max: 6.0,
            step: 0.05,
            ms: vec![8, 10, 12, 15],
        }
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.6}")
}

/// Header and rows for `which`.
pub fn emit_figure(
    which: Figure,
    params: &FigureParams,
    data: &ReferenceData,
) -> Result<(Vec<&'static str>, Vec<Vec<String>>)> {
    match which {
        Figure::Growth => {
            if params.step.is_nan()
                || params.step <= 0.0
                || params.x_max < params.x_min
                || params.x_min < 0.0
            {
                return Err(Error::InvalidParameter(format!(
                    "bad grid: x from {} to {} step {}",
                    params.x_min, params.x_max, params.step
                )));
            }
            let n = ((params.x_max - params.x_min) / params.step + 1e-9).floor() as usize;
            let rows = (0..=n)
                .map(|i| {
                    let x = params.x_min + i as f64 * params.step;
                    vec![fmt(x), fmt(growth_rate(x))]
                })
                .collect();
            Ok((vec!["x", "rate"], rows))
        }
        Figure::Table1Ratio => {
            let rows = data
                .stressed3_rows()
                .map(|(ell, c)| {
                    let ratio = c.to_f64() / 6f64.powf(ell as f64 / 2.0);
                    vec![ell.to_string(), c.to_string(), fmt(ratio)]
                })
                .collect();
            Ok((vec!["ell", "count", "ratio"], rows))
        }
        Figure::FmScatter => {
            let rows = data
                .fm_rows()
                .filter(|(_, m, _)| params.ms.contains(m))
                .map(|(f, m, c)| {
                    let root = c.to_f64().powf(1.0 / m as f64);
                    vec![
                        f.to_string(),
                        m.to_string(),
                        fmt(f as f64 / m as f64),
                        c.to_string(),
                        fmt(root),
                    ]
                })
                .collect();
            Ok((vec!["f", "m", "f_over_m", "count", "root"], rows))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reported_points() {
        let data = ReferenceData::embedded();
        let p = FigureParams::default();
        let (_, rows) = emit_figure(Figure::Table1Ratio, &p, &data).unwrap();
        assert_eq!(rows[1][2], "0.333333");
        let (_, rows) = emit_figure(Figure::FmScatter, &p, &data).unwrap();
        let r = rows.iter().find(|r| r[0] == "29" && r[1] == "10").unwrap();
        assert_eq!(r[4], "2.163709");
        let (_, rows) = emit_figure(Figure::Growth, &p, &data).unwrap();
        assert_eq!(rows.len(), 121);
        assert_eq!(rows[40], vec!["2.000000", "2.000000"]);
    }
}
