//! Exact brackets for the normalizing constants and the limiting mean
//! deviations.

use kunzlab::exact::{directed_decimal, rational_to_f64};
use kunzlab::refdata::ReferenceData;
use kunzlab::stats::{backelin_bracket, empirical_mean, mu_gamma_partial, LimitConstant, Parity};
use kunzlab::Engine;

fn main() -> kunzlab::Result<()> {
    let data = ReferenceData::embedded();
    for parity in [Parity::Even, Parity::Odd] {
        for j in [16, 32, 56] {
            let b = backelin_bracket(parity, j, &data)?;
            println!(
                "{parity} j_cut = {j}: [{}, {}]",
                directed_decimal(&b.lower, 4, false),
                directed_decimal(&b.upper, 4, true)
            );
        }
    }

    let engine = Engine::new();
    for kind in LimitConstant::ALL {
        let b = backelin_bracket(kind.parity(), 56, &data)?;
        let iv = mu_gamma_partial(kind, 8, &b, &data)?;
        let (lo, hi) = iv.to_f64();
        let f = if kind.parity() == Parity::Even {
            36
        } else {
            35
        };
        let emp = empirical_mean(&engine, kind, f)?;
        println!(
            "{kind}: [{lo:.3}, {hi:.3}], at f = {f}: {:.4}",
            rational_to_f64(&emp)
        );
    }
    Ok(())
}
