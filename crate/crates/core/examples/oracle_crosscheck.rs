// The echelon-form solver against the brute-force level-scan oracle on
// randomly generated valid complexes.

use std::error::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use socx::gamma::{gamma, gamma_oracle, verify_witness};
use socx::socx::sample::random_complex;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..10 {
        let s = random_complex(&mut rng, 12)?;
        let i = rng.gen_range(1..=6);
        let fast = gamma(&s, i)?;
        let slow = gamma_oracle(&s, i)?;
        verify_witness(&s, &fast)?;
        println!("trial {trial}: rank {:>2}, Γ({i}) = {} (oracle {})", s.rank(), fast.value, slow.value);
        assert_eq!(fast.value, slow.value);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
