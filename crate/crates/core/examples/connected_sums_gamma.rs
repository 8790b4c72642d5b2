// `Γ` for connected sums of Poincaré spheres, with witnesses checked
// independently and compared against the closed form.

use std::error::Error;

use socx::gamma::{closed_form_yn, gamma_table, render_table, render_witness, verify_witness};
use socx::socx::build_yn;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=3u32 {
        let y = build_yn(n)?;
        let table = gamma_table(&y, -2, 2 * n as i64 + 1)?;
        print!("{}", render_table(&table));
        for row in &table.rows {
            verify_witness(&y, row)?;
            assert_eq!(row.value, closed_form_yn(n as i64, row.i), "n = {n}, i = {}", row.i);
            if let (Some(w), true) = (&row.witness, row.i >= 1) {
                println!("  witness for i = {}: {}", row.i, render_witness(w, y.module()));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
