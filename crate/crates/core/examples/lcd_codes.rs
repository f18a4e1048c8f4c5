//! The LCD construction over self-conjugate blocks of odd degree, and the
//! hulls it actually produces.

use consta_dihedral::algebra::decompose;
use consta_dihedral::code::{build_lcd_code, lcd_blocks, KStar};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    let d = decompose(7, &FieldSpec::prime(3)?)?;
    println!("qualifying blocks at n = 7, q = 3: {:?}", lcd_blocks(&d)?);
    let kstar = KStar::new(&d)?;
    for with_a0 in [false, true] {
        let mut hulls = std::collections::BTreeMap::new();
        for i in 0..kstar.size() {
            let code = build_lcd_code(&d, Some((&kstar, &kstar.beta(i))), with_a0)?;
            *hulls.entry((code.k_dim(), code.hull_dimension())).or_insert(0) += 1;
        }
        // every simple left ideal of a self-conjugate block is isotropic, so
        // the hull is never 0 here
        println!("with A_0: {with_a0}; (dim, hull) -> number of twists: {hulls:?}");
    }
    for (n, q) in [(5usize, 3u64), (7, 4)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        println!("n = {n}, q = {q}: {}", lcd_blocks(&d).unwrap_err());
    }
    Ok(())
}
