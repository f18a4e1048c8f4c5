//! Minimum weight by exhaustive enumeration and by information-set bracketing,
//! and generator-matrix files.

use consta_dihedral::algebra::decompose;
use consta_dihedral::analysis::{min_weight, weight_distribution};
use consta_dihedral::code::format::{read_code, to_json, to_text, Verification};
use consta_dihedral::code::{plain_code, KStar};
use consta_dihedral::field::FieldSpec;

fn main() -> consta_dihedral::Result<()> {
    let d = decompose(3, &FieldSpec::prime(7)?)?;
    let code = plain_code(&d, None)?;
    println!("weight distribution at (3, GF(7)): {:?}", weight_distribution(&code, 1 << 20)?);
    let d = decompose(13, &FieldSpec::prime(3)?)?;
    let kstar = KStar::new(&d)?;
    let code = plain_code(&d, Some((&kstar, &kstar.beta(5))))?;
    let exact = min_weight(&code, 1 << 30)?;
    let bracket = min_weight(&code, 1000)?;
    println!("(13, GF(3)), dim {}: exact {} ; small budget {:?} in [{}, {}]", code.k_dim(), exact.min_weight, bracket.method, bracket.lower_bound, bracket.min_weight);
    let text = to_text(&code);
    assert_eq!(read_code(&text)?, code);
    let json = to_json(&code, Some(Verification::of(&code)));
    assert_eq!(read_code(&json)?, code);
    print!("{}", text.lines().next().unwrap());
    println!(" ...");
    Ok(())
}
