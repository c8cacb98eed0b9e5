//! Tail-heavy words: exact counts and the explicit bound.

use kunzlab::bounds::tail_heavy_bound;
use kunzlab::engine::{is_tail_heavy, tail_heavy_count, TailHeavySpec};

fn main() -> kunzlab::Result<()> {
    let spec = TailHeavySpec::new(9, 4, 3)?;
    println!(
        "ell = 9, t = 4, q = 3, at least {} heavy tail positions",
        spec.n_min
    );
    println!(
        "121133333 heavy: {}",
        is_tail_heavy(&[1, 2, 1, 1, 3, 3, 3, 3, 3], &spec)
    );
    println!(
        "222223333 heavy: {}",
        is_tail_heavy(&[2, 2, 2, 2, 2, 3, 3, 3, 3], &spec)
    );

    println!("{:>4} {:>3} {:>12} {:>14}", "ell", "t", "count", "bound");
    for ell in [8u64, 12, 16] {
        for t in [ell / 4, ell / 2] {
            let c = tail_heavy_count(&TailHeavySpec::new(ell as usize, t as usize, 3)?)?;
            let b = tail_heavy_bound(ell, t, 3)?;
            assert!(b.dominates(c.value()));
            println!("{ell:>4} {t:>3} {c:>12} {:>14.4e}", b.lower.to_f64());
        }
    }
    Ok(())
}
