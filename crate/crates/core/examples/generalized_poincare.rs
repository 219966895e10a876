//! Volumes of the sets where the order of a form is at least γ times the
//! order of f, for several linear forms ℓ in the exponent.

use motivic_zeta::harness::examples::cusp;
use motivic_zeta::harness::verify::ell_family;
use motivic_zeta::zeta::{delta_cones, generalized_poincare, mv_at_least_by_union, mv_at_least_with, Gamma};

fn main() -> motivic_zeta::Result<()> {
    let data = cusp();
    let gauge = data.default_gauge();
    for g in ["0", "1/3", "1/2", "1"] {
        let gamma: Gamma = g.parse()?;
        println!("gamma = {gamma}");
        for cone in delta_cones(&data, gamma, &["E1", "E3"])? {
            println!("  Delta_{{E1,E3}} piece: {cone}");
        }
        for ell in ell_family(gamma) {
            let p = generalized_poincare(&data, gamma, ell, gauge)?;
            println!("  {ell}: {} term(s), MV = {}", p.terms().len(), mv_at_least_with(&data, gamma, ell, gauge)?.canonical());
        }
        println!("  by union: {}", mv_at_least_by_union(&data, gamma)?.canonical());
    }
    Ok(())
}
