//! Arithmetic in GF(9) and the factorization of x^n - 1.

use consta_dihedral::field::{factor_xn_minus_1, sqrt_minus_one, FieldElem, FieldSpec};

fn main() -> consta_dihedral::Result<()> {
    let f = FieldSpec::from_order(9)?;
    println!("{f}, modulus coefficients (constant first): {:?}", f.modulus());
    // element c0 + c1 x is encoded as c0 + 3 c1
    let x = FieldElem(3);
    let y = f.fadd(x, FieldElem(1));
    println!("x = {x}, x + 1 = {y}, coefficients {:?}", f.coeffs(y));
    println!("x * (x + 1) = {}", f.fmul(x, y));
    println!("(x + 1)^-1 = {}", f.finv(y).unwrap());
    println!("x^8 = {}", f.fpow(x, 8));
    println!("sqrt(-1) in GF(9): {:?}", sqrt_minus_one(&f));
    println!("sqrt(-1) in GF(7): {:?}", sqrt_minus_one(&FieldSpec::prime(7)?));

    for (n, q) in [(3, 7), (7, 2), (5, 3)] {
        let field = FieldSpec::from_order(q)?;
        let factors = factor_xn_minus_1(n, &field)?;
        let shown: Vec<Vec<u32>> = factors.iter().map(|p| p.coeffs().iter().map(|c| c.0).collect()).collect();
        println!("x^{n} - 1 over GF({q}): factors (constant first) {shown:?}");
    }
    Ok(())
}
