//! Stressed depth-3 counts against the shipped reference table.

use kunzlab::engine::{count_stressed3, schur_colorings, stressed3_genus_total};
use kunzlab::refdata::ReferenceData;

fn main() {
    let data = ReferenceData::embedded();
    println!(
        "{:>4} {:>14} {:>9} {:>10}",
        "ell", "count", "table", "6^(-l/2)c"
    );
    for ell in 1..=24 {
        let c = count_stressed3(ell);
        let ok = data.stressed3(ell) == Some(&c);
        let ratio = c.to_f64() / 6f64.powf(ell as f64 / 2.0);
        println!(
            "{ell:>4} {c:>14} {:>9} {ratio:>10.6}",
            if ok { "ok" } else { "MISMATCH" }
        );
    }

    let (n, g) = stressed3_genus_total(12);
    println!("ell = 12: {n} words, total genus {g}");

    for n in [10, 20, 28] {
        let c = schur_colorings(n);
        println!(
            "depth <= 3 words of length {n}: {c} (rate {:.4})",
            c.to_f64().ln() / n as f64
        );
    }
}
