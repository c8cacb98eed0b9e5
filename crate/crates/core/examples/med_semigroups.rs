//! Maximal embedding dimension semigroups: direct counts, lifts and the
//! depth-2 pairing.

use kunzlab::engine::{med2_via_frobenius_sum, med_count, med_count_direct, med_count_via_lift};
use kunzlab::GapSet;

fn main() -> kunzlab::Result<()> {
    println!("{:>3} {:>6} {:>6} {:>6}", "f", "MED", "lift", "q = 2");
    for f in 1..=20 {
        let direct = med_count_direct(f, None)?;
        let lifted = med_count_via_lift(f, None)?;
        let two = med_count(f, Some(2))?;
        assert_eq!(two, med2_via_frobenius_sum(f)?);
        println!("{f:>3} {direct:>6} {lifted:>6} {two:>6}");
    }

    let base: GapSet = "1,2,4".parse()?;
    let lifted = base.med_lift(3)?;
    println!(
        "lift of {{{base}}} by 3: gaps {{{lifted}}}, MED = {}",
        lifted.is_med()
    );
    let (back, m) = lifted.med_drop()?;
    println!("dropped back: gaps {{{back}}}, m = {m}");
    Ok(())
}
