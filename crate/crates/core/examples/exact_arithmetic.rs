// Exact rationals, Laurent polynomials in `x`, and kernels of slice
// matrices over `Q`.

use std::error::Error;

use socx::exactalg::{rat, LaurentPoly};
use socx::grmod::{kernel, slice_basis, QMatrix};
use socx::socx::build_y1;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = rat(1, 120)?;
    let b = rat(49, 120)?;
    println!("1/120 + 49/120 = {}", &a + &b);

    // (1 + 6x^-1)(1 - 6x^-1) = 1 - 36x^-2
    let p = LaurentPoly::from_terms([(0, rat(1, 1)?), (-1, rat(6, 1)?)]);
    let q = LaurentPoly::from_terms([(0, rat(1, 1)?), (-1, rat(-6, 1)?)]);
    let pq = &p * &q;
    println!("({p})·({q}) = {pq}");
    assert_eq!(pq.coeff(-2), rat(-36, 1)?);

    // The degree-1 slice of the Σ(2,3,5) complex: α and x^-1·β.
    let y1 = build_y1();
    let slice = slice_basis(y1.module(), 1);
    for e in slice.elems() {
        let g = y1.module().generator(e.gen);
        println!("slice 1: x^{}·{} at level {}", e.power, g.id, e.level);
    }

    let m = QMatrix::from_dense(&[
        vec![rat(1, 1)?, rat(2, 1)?, rat(3, 1)?],
        vec![rat(2, 1)?, rat(4, 1)?, rat(6, 1)?],
    ]);
    let ker = kernel(&m);
    println!("kernel of a rank-1 2×3 matrix has dimension {}", ker.len());
    assert_eq!(ker.len(), 2);
    for v in &ker {
        assert!(m.mul_vec(v).is_zero());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
