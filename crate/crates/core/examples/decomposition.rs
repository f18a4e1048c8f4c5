//! Block decomposition of the consta-dihedral algebra and the 2x2 matrix
//! presentation of each block.

use consta_dihedral::algebra::{decompose, decompose_twisted, Twist};
use consta_dihedral::field::FieldSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> consta_dihedral::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (n, q) in [(3usize, 7u64), (5, 3), (7, 2)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        let r = d.report();
        println!("n = {n}, q = {q}: sum 4 k_t = {} (expected {})", r.sum_4k, r.expected_sum_4k);
        for c in d.blocks() {
            // a random element of the block, sent to M_2(F_t) and back
            let x = d.project(c.index, &d.algebra.random(&mut rng));
            let y = d.project(c.index, &d.algebra.random(&mut rng));
            let (mx, my) = (d.iso_to_mat2(c.index, &x)?, d.iso_to_mat2(c.index, &y)?);
            let sub = c.subfield.as_ref().unwrap();
            let round_trip = d.iso_from_mat2(c.index, &mx)? == x;
            let multiplicative = d.iso_to_mat2(c.index, &d.algebra.mul(&x, &y))? == mx.mul(sub, &my);
            println!("  block {} {:?}, k = {}: round trip {round_trip}, multiplicative {multiplicative}", c.index, c.kind, c.k);
        }
    }
    let d = decompose_twisted(5, &FieldSpec::prime(3)?, Twist::Dihedral)?;
    println!("{}", serde_json::to_string_pretty(&d.report()).unwrap());
    Ok(())
}
