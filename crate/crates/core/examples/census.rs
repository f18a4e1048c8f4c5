//! How many twists `C b` have relative distance at most delta, compared with
//! the counting bounds; a twist above delta; lengths with good predicates.

use consta_dihedral::algebra::decompose;
use consta_dihedral::analysis::{
    census, census_parts, find_good_beta, good_n_predicates, good_n_sequence, CensusBudget, Profile, SearchStrategy,
};
use consta_dihedral::code::KStar;
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    for (n, q, hatted) in [(3usize, 7u64, false), (3, 5, true), (5, 3, false)] {
        let d = decompose(n, &FieldSpec::from_order(q)?)?;
        let kstar = KStar::new(&d)?;
        let parts = census_parts(&d, hatted)?;
        let r = census(&d, &kstar, &parts, &[0.1, 0.2, 0.3], CensusBudget::default())?;
        println!("n = {n}, q = {q}, with C_0: {hatted}, |K*| = {}", r.k_star);
        for s in &r.deltas {
            println!(
                "  delta {:.2}: count {}, stated bound {:.3e} (hypothesis {}), union bound {:?}",
                s.delta, s.count, s.bound, s.hypothesis, s.union_bound
            );
        }
        let (beta, w) = find_good_beta(&d, &kstar, &parts, 0.05, SearchStrategy::Exhaustive, 1 << 20)?;
        println!("  twist {:?}: minimum weight {}", beta.units, w.min_weight);
    }
    println!("{:?}", good_n_predicates(3, 7)?);
    let lengths: Vec<u64> = good_n_sequence(2, 100, Profile::SelfOrthogonal)?.iter().map(|f| f.n).collect();
    println!("odd-order lengths over GF(2) up to 100: {lengths:?}");
    Ok(())
}
