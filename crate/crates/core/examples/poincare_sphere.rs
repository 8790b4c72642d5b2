// The SO-complex of the Poincaré sphere `Σ(2,3,5)`: generators, maps,
// axiom check, the assembled tilde complex, and the maps `F_k`.

use std::error::Error;

use socx::socx::{assemble_tilde, build_y1, fk, Y1Gen};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let y1 = build_y1();
    println!("{} has rank {}", y1.name(), y1.rank());
    for g in y1.module().generators() {
        println!("  {}: gr {}, level {}", g.id, g.gr, g.iota);
    }
    for (name, map) in [("U", y1.u()), ("D1", y1.d1())] {
        for (from, to, p) in map.entries() {
            let target = &map.target().generator(to).id;
            println!("  {name}({}) ∋ {p}·{target}", map.source().generator(from).id);
        }
    }
    println!("validation: {}", y1.validation());
    assert!(y1.validation().ok);

    let tilde = assemble_tilde(&y1)?;
    let problems = tilde.check();
    println!("tilde complex of rank {}: {} problem(s)", tilde.rank(), problems.len());
    assert!(problems.is_empty());

    for k in 0..=8 {
        let (a, b) = (fk(k, Y1Gen::Alpha), fk(k, Y1Gen::Beta));
        println!("F_{k}: α ↦ {a}, β ↦ {b}");
        if k >= 1 {
            assert_eq!(a.is_zero(), k % 2 == 0);
            assert_eq!(b.is_zero(), k % 2 == 1);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
