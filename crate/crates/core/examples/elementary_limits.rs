//! Cone series, their coefficients and their limit at T = ∞.

use motivic_zeta::cone::{Cone, ConeSeries, ConeTerm, Constraint, LinearForm};
use motivic_zeta::ring::MotivicClass;

fn main() -> motivic_zeta::Result<()> {
    for (a, b) in [(0, 1), (3, 2), (-5, 7)] {
        let g = ConeSeries::geom(a, b)?;
        let c: Vec<String> = g.coefficients(1..=4).iter().map(|c| c.canonical()).collect();
        println!("geom({a},{b}) = {g}");
        println!("  T^1..T^4: {}", c.join(" | "));
        println!("  limit = {}", g.limit().canonical());
    }

    // sum over {k0 > k1 > 0} of T^{k0}: a limit of 0
    let half = Cone::new(vec!["k0".into(), "k1".into()], vec![Constraint::gt(vec![1, -1])])?;
    let term = ConeTerm::new(MotivicClass::one("k"), half.clone(), LinearForm::new(vec![1, 0]), LinearForm::zeros(2))?;
    let s = ConeSeries::from_terms("k", vec![term])?;
    println!("{s}");
    println!("  T^5 coefficient = {}", s.coefficient(5).canonical());
    println!("  limit = {}", s.limit().canonical());

    // T^{k1} alone is not summable there: k0 is unbounded at k1 = 1
    let bad = ConeTerm::new(MotivicClass::one("k"), half, LinearForm::new(vec![0, 1]), LinearForm::zeros(2));
    println!("degree k1 on the same cone: {:?}", bad.err());

    let p = ConeSeries::geom(0, 1)?.mul(&ConeSeries::geom(1, 1)?)?;
    println!("geom(0,1) * geom(1,1): limit = {}", p.limit().canonical());
    Ok(())
}
