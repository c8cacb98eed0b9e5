//! CSV series behind the plots, written to stdout.

use kunzlab::cli::{emit_figure, Figure, FigureParams};
use kunzlab::refdata::ReferenceData;

fn main() -> kunzlab::Result<()> {
    let data = ReferenceData::embedded();
    let params = FigureParams {
        step: 0.5,
        ..FigureParams::default()
    };
    for which in [Figure::Growth, Figure::Table1Ratio, Figure::FmScatter] {
        let (header, rows) = emit_figure(which, &params, &data)?;
        println!("# {which:?}");
        let mut out = csv::Writer::from_writer(std::io::stdout());
        out.write_record(&header).unwrap();
        for r in rows.iter().take(8) {
            out.write_record(r).unwrap();
        }
        out.flush().unwrap();
    }
    Ok(())
}
