//! Primitive idempotents of FH, their conjugation pattern and lambda(n).

use consta_dihedral::cyclic::{conj_pairing, lambda_n, primitive_idempotents};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    for (n, q) in [(3usize, 7u64), (7, 2), (5, 3), (15, 2)] {
        let field = FieldSpec::from_order(q)?;
        let set = primitive_idempotents(n, &field)?;
        let pairing = conj_pairing(&set);
        println!("n = {n}, q = {q}, lambda(n) = {}", lambda_n(n as u64, q)?);
        for (i, e) in set.idems.iter().enumerate() {
            println!("  e{i} = {:?} (dim {}), {:?}", e.encodings(), set.dims[i], pairing[i]);
        }
    }
    let set = primitive_idempotents(3, &FieldSpec::prime(7)?)?;
    println!("{}", serde_json::to_string(&set.to_report()).unwrap());
    Ok(())
}
