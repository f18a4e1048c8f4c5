//! Self-dual codes `C_0 + C_1 b_1 + ... + C_m b_m` for every twist `b`.

use consta_dihedral::algebra::decompose;
use consta_dihedral::code::format::to_text;
use consta_dihedral::code::{self_dual_code, KStar};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    for (n, q) in [(3usize, 5u64), (3, 13), (3, 4), (7, 4)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        let kstar = KStar::new(&d)?;
        let self_dual = (0..kstar.size())
            .filter(|&i| {
                let code = self_dual_code(&d, Some((&kstar, &kstar.beta(i)))).unwrap();
                code.k_dim() == n && code.is_self_dual()
            })
            .count();
        println!("n = {n}, q = {q}: {self_dual} of {} twists give self-dual codes", kstar.size());
    }
    let d = decompose(3, &FieldSpec::prime(5)?)?;
    print!("{}", to_text(&self_dual_code(&d, None)?));
    // q = 3 mod 4 has no self-dual construction
    let d = decompose(3, &FieldSpec::prime(7)?)?;
    println!("q = 7: {}", self_dual_code(&d, None).unwrap_err());
    Ok(())
}
