use std::collections::BTreeMap;

use crate::exactalg::LaurentPoly;
use crate::grmod::{BigradedModule, Generator};

use super::build::{THETA, UNDERLINE};
use super::{SOComplex, SocxError};

type Table = BTreeMap<(usize, usize), LaurentPoly>;

fn add(table: &mut Table, from: usize, to: usize, p: &LaurentPoly) {
    let e = table.entry((from, to)).or_default();
    e.add_assign_ref(p);
}

fn underline(id: &str) -> String {
    if id.contains('⊗') {
        format!("({id}){UNDERLINE}")
    } else {
        format!("{id}{UNDERLINE}")
    }
}

/// Künneth product of SO-complexes in the case where the left factor has
/// `d = 0` and `D2 = 0`.
///
/// The result is `A⊗B ⊕ A̲⊗B ⊕ A ⊕ B`, where `A̲` is `A` with `gr` raised by
/// 3, and its maps are
///
/// ```text
///       | -1⊗d_B              0       0     0   |
///  d =  | U_A⊗1 - 1⊗U_B       1⊗d_B   0     0   |
///       | -1⊗D1_B             0       0     0   |
///       | D1_A⊗1              0       0     d_B |
///
///       | U_A⊗1   0        0     0   |
///  U =  | 0       U_A⊗1    0     0   |
///       | 0       0        U_A   0   |
///       | 0       D1_A⊗1   0     U_B |
///
///  D1 = [ 0  0  D1_A  D1_B ],   D2 = (0, 0, 0, D2_B).
/// ```
///
/// The product is validated before it is returned; any failed identity is
/// an error.
pub fn tensor(a: &SOComplex, b: &SOComplex) -> Result<SOComplex, SocxError> {
    if !a.validation().ok {
        return Err(SocxError::UnsupportedTensor(format!(
            "left factor {:?} is not a valid SO-complex",
            a.name()
        )));
    }
    if !b.validation().ok {
        return Err(SocxError::UnsupportedTensor(format!(
            "right factor {:?} is not a valid SO-complex",
            b.name()
        )));
    }
    if !a.d().is_zero() {
        return Err(SocxError::UnsupportedTensor(format!("left factor {:?} has d ≠ 0", a.name())));
    }
    if !a.d2().is_zero() {
        return Err(SocxError::UnsupportedTensor(format!("left factor {:?} has D2 ≠ 0", a.name())));
    }

    let (ra, rb) = (a.rank(), b.rank());
    let s1 = |i: usize, j: usize| i * rb + j;
    let s2 = |i: usize, j: usize| ra * rb + i * rb + j;
    let s3 = |i: usize| 2 * ra * rb + i;
    let s4 = |j: usize| 2 * ra * rb + ra + j;

    let ga = a.module().generators();
    let gb = b.module().generators();
    let theta_pad = vec![THETA; b.width()].join("⊗");
    let mut gens = Vec::with_capacity(2 * ra * rb + ra + rb);
    for x in ga {
        for y in gb {
            gens.push(Generator::new(format!("{}⊗{}", x.id, y.id), x.gr + y.gr, &x.iota + &y.iota));
        }
    }
    for x in ga {
        for y in gb {
            gens.push(Generator::new(
                format!("{}⊗{}", underline(&x.id), y.id),
                x.gr + 3 + y.gr,
                &x.iota + &y.iota,
            ));
        }
    }
    for x in ga {
        gens.push(Generator::new(format!("{}⊗{theta_pad}", x.id), x.gr, x.iota.clone()));
    }
    for y in gb {
        gens.push(Generator::new(format!("{THETA}⊗{}", y.id), y.gr, y.iota.clone()));
    }
    let module = BigradedModule::new(gens)?;

    let a_u = a.u().columns();
    let a_d1 = a.d1().columns();
    let b_d = b.d().columns();
    let b_u = b.u().columns();
    let b_d1 = b.d1().columns();

    let mut d = Table::new();
    let mut u = Table::new();
    let mut d1: BTreeMap<usize, LaurentPoly> = BTreeMap::new();

    for i in 0..ra {
        for j in 0..rb {
            let src = s1(i, j);
            for &(j2, p) in &b_d[j] {
                add(&mut d, src, s1(i, j2), &-p);
            }
            for &(i2, p) in &a_u[i] {
                add(&mut d, src, s2(i2, j), p);
                add(&mut u, src, s1(i2, j), p);
            }
            for &(j2, p) in &b_u[j] {
                add(&mut d, src, s2(i, j2), &-p);
            }
            for &(_, p) in &b_d1[j] {
                add(&mut d, src, s3(i), &-p);
            }
            for &(_, p) in &a_d1[i] {
                add(&mut d, src, s4(j), p);
            }

            let src = s2(i, j);
            for &(j2, p) in &b_d[j] {
                add(&mut d, src, s2(i, j2), p);
            }
            for &(i2, p) in &a_u[i] {
                add(&mut u, src, s2(i2, j), p);
            }
            for &(_, p) in &a_d1[i] {
                add(&mut u, src, s4(j), p);
            }
        }
    }
    for i in 0..ra {
        for &(i2, p) in &a_u[i] {
            add(&mut u, s3(i), s3(i2), p);
        }
        for &(_, p) in &a_d1[i] {
            d1.insert(s3(i), p.clone());
        }
    }
    for j in 0..rb {
        for &(j2, p) in &b_d[j] {
            add(&mut d, s4(j), s4(j2), p);
        }
        for &(j2, p) in &b_u[j] {
            add(&mut u, s4(j), s4(j2), p);
        }
        for &(_, p) in &b_d1[j] {
            d1.insert(s4(j), p.clone());
        }
    }
    let d2: BTreeMap<usize, LaurentPoly> = b.d2().entries().map(|(_, h, p)| (s4(h), p.clone())).collect();

    let name = format!("{}⊗{}", a.name(), b.name());
    let out = SOComplex::from_entries(name, module, d, u, d1, d2);
    if !out.validation().ok {
        let failed = out.validation().failed_axioms().join(", ");
        return Err(SocxError::UnsupportedTensor(format!(
            "product of {:?} and {:?} fails {failed}",
            a.name(),
            b.name()
        )));
    }
    Ok(out)
}
