// The component census of `χ(#_n Σ(2,3,5))`, the exhaustive search for
// components that can extend over a definite filling, and handle bounds.

use std::error::Error;

use socx::charvar::{component_data, enumerate_components, find_extension_components, handle_bounds};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let census = enumerate_components(3)?;
    println!("χ(Y_3) has {} components", census.total());
    for d in &census.by_dim {
        println!("  {} irreducible summand(s): {}", d.i, d.count);
    }
    for c in census.components.iter().take(6) {
        let d = component_data(c);
        println!("  {c}: CS {} gr {} dim {}", d.cs_mod1, d.gr_mod8, d.dim_chi);
    }

    let cert = find_extension_components(3)?;
    for cand in &cert.candidates {
        println!("  {cand}");
    }
    assert!(cert.is_unique_beta());
    let beta = &cert.components[0];
    println!("extension component {} with CS {} and gr {}", beta.signature, beta.cs_lift(), beta.gr_lift());

    println!("{}", handle_bounds(3, 1)?.report());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
