//! Multiplicity and genus distributions at fixed Frobenius number.

use kunzlab::exact::rational_to_f64;
use kunzlab::refdata::ReferenceData;
use kunzlab::stats::{backelin_bracket, genus_stats, limit_mult_mass, mult_distribution, Parity};
use kunzlab::Engine;

fn main() -> kunzlab::Result<()> {
    let engine = Engine::new();
    let data = ReferenceData::embedded();
    let f = 32;
    let dist = mult_distribution(&engine, f)?;
    let bracket = backelin_bracket(Parity::of(f), 56, &data)?;
    println!("f = {f}, {} semigroups", dist.total());
    println!(
        "{:>5} {:>8} {:>8} {:>17}",
        "f-2m", "count", "share", "limit"
    );
    for (&key, c) in dist.support() {
        let share = rational_to_f64(&dist.probability(key));
        let (lo, hi) = limit_mult_mass(key.div_euclid(2), &bracket, &data)?.to_f64();
        println!("{key:>5} {c:>8} {share:>8.4} [{lo:.4}, {hi:.4}]");
    }

    for f in [20, 30, 40] {
        let s = genus_stats(&engine, f)?;
        println!(
            "f = {f}: mean genus - 3f/4 = {:.4}, variance {:.3}, skewness {:.4}, kurtosis {:.3}",
            rational_to_f64(&s.mean_deviation),
            rational_to_f64(&s.variance),
            s.skewness(),
            rational_to_f64(&s.kurtosis())
        );
    }
    Ok(())
}
