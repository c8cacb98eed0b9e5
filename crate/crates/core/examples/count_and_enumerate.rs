//! Counting and listing semigroups through queries on their Kunz words.

use kunzlab::{CountQuery, Engine};

fn main() -> kunzlab::Result<()> {
    let engine = Engine::new();

    for f in [10, 20, 30, 40] {
        let n = engine.count(&CountQuery::new().frobenius(f))?;
        println!("Fr({f}) = {n}");
    }

    let q = CountQuery::new().frobenius(29).multiplicity(10);
    println!("f = 29, m = 10: {}", engine.count(&q)?);

    println!("f = 7:");
    for w in engine.enumerate(&CountQuery::new().frobenius(7))? {
        println!(
            "  {} (genus {})",
            w.to_compact().unwrap_or_else(|| w.to_string()),
            w.genus()
        );
    }

    let by_depth = engine.tally(&CountQuery::new().frobenius(24), |w| {
        w.iter().copied().max().unwrap_or(0) as i64
    })?;
    println!("f = 24 by depth:");
    for (q, n) in by_depth {
        println!("  q = {q}: {n}");
    }

    let med = engine.count(&CountQuery::new().frobenius(24).med())?;
    let contains = engine.count(&CountQuery::new().frobenius(24).contains(7))?;
    println!("f = 24: {med} MED, {contains} containing 7");

    let single = Engine::with_threads(1).count(&CountQuery::new().frobenius(30))?;
    println!("Fr(30) on one thread: {single}");
    Ok(())
}
