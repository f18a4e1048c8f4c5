//! Left ideals are balanced: the group permutations move an information set
//! onto information sets covering every coordinate equally often.

use consta_dihedral::algebra::{decompose, Twist};
use consta_dihedral::analysis::{balanced_check, min_weight, PermutationPair};
use consta_dihedral::code::{plain_code, self_dual_code};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    let f = FieldSpec::prime(5)?;
    let pair = PermutationPair::new(3, &f, Twist::Consta);
    println!("theta_u = {:?}, theta_v = {:?}", pair.theta_u, pair.theta_v);
    for (n, q) in [(3usize, 7u64), (5, 3), (7, 2)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        let code = plain_code(&d, None)?;
        let r = balanced_check(&code, Twist::Consta, 1 << 20)?;
        let w = min_weight(&code, 1 << 20)?;
        println!("n = {n}, q = {q}: dim {}, d = {}, balanced {}, t = {:?}", code.k_dim(), w.min_weight, r.balanced(), r.t);
        for e in &r.entropy_checks {
            println!("  delta {:.3}: {} words <= {:.3}", e.delta, e.count, e.bound);
        }
    }
    let d = decompose(3, &f)?;
    let r = balanced_check(&self_dual_code(&d, None)?, Twist::Consta, 1 << 20)?;
    println!("self-dual (3, GF(5)): balanced {}, coverage {:?}", r.balanced(), r.coverage);
    Ok(())
}
