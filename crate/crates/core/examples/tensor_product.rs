// Künneth products: building `Σ(2,3,5) ⊗ Y` and the rank identity
// `2r + 1 = (2r_A + 1)(2r_B + 1)`; a left factor with `d ≠ 0` is rejected.

use std::error::Error;

use socx::socx::{build_y1, rank_yn, tensor, SocxError};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let y1 = build_y1();
    let mut acc = y1.clone();
    for n in 2..=4 {
        let next = tensor(&y1, &acc)?;
        let lhs = 2 * next.rank() + 1;
        let rhs = (2 * y1.rank() + 1) * (2 * acc.rank() + 1);
        println!("Y_1 ⊗ Y_{}: rank {} (2r+1 = {lhs} = {rhs})", n - 1, next.rank());
        assert_eq!(lhs, rhs);
        assert_eq!(next.rank(), rank_yn(n));
        assert!(next.validation().ok);
        acc = next;
    }

    let y2 = tensor(&y1, &y1)?;
    match tensor(&y2, &y1) {
        Err(SocxError::UnsupportedTensor(why)) => println!("Y_2 ⊗ Y_1 rejected: {why}"),
        other => return Err(format!("expected a rejection, got {other:?}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
