//! Arithmetic with classes: sums, products of covers, relabelling the base
//! and specializing to Euler characteristics.

use std::collections::BTreeMap;

use motivic_zeta::ring::{GeneratorSymbol, LaurentPoly, MotivicClass, SpecializationMap};

fn main() -> motivic_zeta::Result<()> {
    let mu2 = GeneratorSymbol::new("mu_2", 2, "k")?;
    let mu3 = GeneratorSymbol::new("mu_3", 3, "k")?;

    // [μ_2] + (L - 1)
    let a = MotivicClass::symbol(&mu2).try_add(&MotivicClass::from_poly("k", LaurentPoly::from_terms([(1, 1), (0, -1)])))?;
    let b = MotivicClass::term(&mu3, LaurentPoly::l_pow(2));
    let ab = a.try_mul(&b)?;
    println!("a      = {}", a.canonical());
    println!("b      = {}", b.canonical());
    println!("a * b  = {}", ab.canonical());

    // over A^1 and back
    let over = ab.push("A^1");
    println!("push   = {}", over.canonical());

    let euler = SpecializationMap::euler(BTreeMap::from([("mu_2".into(), 2), ("mu_3".into(), 3)]));
    println!("chi(a) = {}", euler.apply_integer(&a)?);
    println!("chi(ab) = {}", euler.apply_integer(&ab)?);

    // different bases do not mix
    match ab.try_add(&over) {
        Err(e) => println!("mixing bases: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
