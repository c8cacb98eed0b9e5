//! Kunz words, gap sets and the invariants read off them.

use kunzlab::{GapSet, KunzWord};

fn main() -> kunzlab::Result<()> {
    let w: KunzWord = "31221".parse()?;
    let inv = w.invariants()?;
    println!(
        "word {w}: m = {}, g = {}, q = {}, f = {}",
        inv.multiplicity, inv.genus, inv.depth, inv.frobenius
    );
    println!("stressed: {}, MED: {}", inv.is_stressed(), w.is_med());

    let gaps = w.gaps()?;
    println!("gaps: {gaps}");
    println!("minimal generators: {:?}", gaps.minimal_generators());
    assert_eq!(gaps.to_word(), w);

    let reduced = w.reduce_depth()?;
    println!("capped at depth {}: {reduced}", reduced.depth());

    let g: GapSet = "1,2,3,5,6,9".parse()?;
    let u = g.to_word();
    println!("gaps {g} -> word {u} (Kunz: {})", u.is_kunz());

    for s in ["12", "21", "32"] {
        let v: KunzWord = s.parse()?;
        println!("{s}: Kunz = {}", v.is_kunz());
    }
    Ok(())
}
