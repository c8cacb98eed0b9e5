//! The interval family of depth-q words with a prescribed Frobenius number.

use kunzlab::engine::lower_bound_family;
use kunzlab::{count, CountQuery};

fn main() -> kunzlab::Result<()> {
    let fam = lower_bound_family(4, 7, 3)?;
    println!(
        "q = {}, ell = {}, j = {}, f = {}",
        fam.q,
        fam.ell,
        fam.j,
        fam.frobenius()
    );
    println!("windows: {:?}", fam.windows());
    let words: Vec<_> = fam.words().collect();
    println!("{} words, formula {}", words.len(), fam.formula_count());
    for w in words.iter().take(5) {
        println!("  {w}");
    }

    for q in 3..=6 {
        for ell in [6, 9] {
            let fam = lower_bound_family(q, ell, ell / 2)?;
            let exact = count(
                &CountQuery::new()
                    .frobenius(fam.frobenius())
                    .length(ell)
                    .depth(q),
            )?;
            println!(
                "q = {q}, ell = {ell}: family {} <= exact {exact}",
                fam.formula_count()
            );
        }
    }
    Ok(())
}
