//! The codes `A_0 ê_0 + A_1 f_{a_1 b_1} + ... + A_m f_{a_m b_m}` of the dihedral
//! algebra: `prod (q^{k_t} + 1)` of them, `prod (q^{k_t} - 1)` LCD.

use consta_dihedral::dihedral::{count_cab_codes, simple_left_ideals_m2};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    for (n, q, samples) in [(3usize, 7u64, 0usize), (11, 3, 200), (5, 11, 100)] {
        let r = count_cab_codes(n, &FieldSpec::from_order(q)?, samples, 42)?;
        println!("n = {n}, q = {q}: {} codes, {} LCD, verified: {}", r.total, r.lcd, r.passed());
        println!("{}", serde_json::to_string(&r.verifications).unwrap());
    }
    for q in [2u64, 3, 4, 5, 7] {
        println!("simple left ideals of M_2(GF({q})): {}", simple_left_ideals_m2(&FieldSpec::from_order(q)?).len());
    }
    Ok(())
}
