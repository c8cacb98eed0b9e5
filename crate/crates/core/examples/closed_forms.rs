//! Closed forms for depth 2 and 3 against the enumerator.

use kunzlab::engine::{closed_k2, closed_k3};
use kunzlab::{count, CountQuery};

fn main() -> kunzlab::Result<()> {
    let f = 21;
    println!("f = {f}");
    println!("{:>4} {:>8} {:>8}", "ell", "depth 2", "depth 3");
    for ell in 1..=f {
        let k2 = closed_k2(f, ell);
        let k3 = closed_k3(f, ell);
        let q = CountQuery::new().frobenius(f).length(ell as usize);
        assert_eq!(k2, count(&q.clone().depth(2))?);
        assert_eq!(k3, count(&q.depth(3))?);
        if !k2.is_zero() || !k3.is_zero() {
            println!("{ell:>4} {k2:>8} {k3:>8}");
        }
    }
    Ok(())
}
