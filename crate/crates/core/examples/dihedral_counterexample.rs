//! Over GF(7) with n = 3: `<C, D> = 0` and `C bar(D) = 0` while `bar(D) C != 0`
//! in the dihedral algebra.

use consta_dihedral::dihedral::counterexample_check;

fn main() -> consta_dihedral::Result<()> {
    let r = counterexample_check()?;
    println!("e0 = {:?}, e = {:?}, e_bar = {:?}", r.e0, r.e, r.e_bar);
    println!("dim C = {}", r.dim_c);
    println!("C bar(D) = 0: {}", r.c_bar_d_zero);
    println!("<C, D> = 0: {}", r.inner_zero);
    println!("dim bar(D) C = {}, contains e_bar v: {}", r.bar_d_c_dim, r.witness_is_e_bar_v);
    println!("counterexample holds: {}", r.holds());
    Ok(())
}
