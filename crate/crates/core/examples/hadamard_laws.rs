//! Hadamard products of cone series: coefficients multiply, and the limit
//! picks up a sign.

use motivic_zeta::harness::random;
use motivic_zeta::harness::verify::check_hadamard_laws;

fn main() -> motivic_zeta::Result<()> {
    let mut rng = random::rng(7);
    let p = random::cone_series(&mut rng, "k");
    let q = random::cone_series(&mut rng, "k");
    let h = p.hadamard(&q)?;
    println!("p = {p}");
    println!("q = {q}");
    println!("p * q has {} term(s)", h.terms().len());
    for n in 1..=4 {
        println!(
            "  T^{n}: {}  =  ({}) * ({})",
            h.coefficient(n).canonical(),
            p.coefficient(n).canonical(),
            q.coefficient(n).canonical()
        );
    }
    println!("lim p = {}", p.limit().canonical());
    println!("lim q = {}", q.limit().canonical());
    println!("lim p*q = {}", h.limit().canonical());

    let mut failures = 0;
    for _ in 0..50 {
        let (p, q) = (random::cone_series(&mut rng, "k"), random::cone_series(&mut rng, "k"));
        if let Some(diff) = check_hadamard_laws(&p, &q, 15)? {
            println!("mismatch: {diff}");
            failures += 1;
        }
    }
    println!("50 random pairs checked up to T^15, {failures} mismatches");
    Ok(())
}
