//! The constants c_q and the explicit upper bounds.

use kunzlab::bounds::{
    check_c_monotone, cq, frobenius_depth_bound, growth_rate, stressed3_upper_bounds,
};
use kunzlab::engine::count_stressed3;
use kunzlab::{count, CountQuery};
use num_rational::Ratio;

fn main() -> kunzlab::Result<()> {
    for q in 1..=8 {
        let c = cq(q);
        println!("c_{q} = sqrt({}) = {:.6}", c.squared, c.approx);
    }

    let r = check_c_monotone(500, &[Ratio::new(0, 1), Ratio::new(1, 2), Ratio::new(1, 1)])?;
    println!("c_q^(1/(q+r)) decreasing up to q = 500: {}", r.ok());

    for ell in [10u64, 20] {
        let b = stressed3_upper_bounds(ell)?;
        println!(
            "ell = {ell}: exact {}, naive {}, Backelin {:.1}",
            count_stressed3(ell as usize),
            b.naive,
            kunzlab::exact::rational_to_f64(&b.backelin)
        );
    }

    let (f, q) = (24, 3);
    let c = count(&CountQuery::new().frobenius(f).depth(q))?;
    let b = frobenius_depth_bound(f, q)?;
    println!(
        "f = {f}, q = {q}: {c} <= {:.1} ({})",
        b.to_f64(),
        b.bounds_above(c.value())
    );

    for x in [1.5, 2.0, 2.5, 3.0, 4.5] {
        println!("growth rate at f/m = {x}: {:.4}", growth_rate(x));
    }
    Ok(())
}
