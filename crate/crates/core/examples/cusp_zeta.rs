//! The cusp x² + y³: motivic zeta function, nearby cycles and their Euler
//! characteristic.

use motivic_zeta::harness::examples::{cusp, find_example, a_campo_sum};
use motivic_zeta::ring::SpecializationMap;
use motivic_zeta::zeta::{nearby_cycles, zeta_at_level, zeta_series};

fn main() -> motivic_zeta::Result<()> {
    let data = cusp();
    let z = zeta_series(&data)?;
    println!("Z(T) as a cone series:\n{z}");
    for (n, c) in (1..).zip(z.coefficients(1..=6)) {
        assert_eq!(c, zeta_at_level(&data, n)?);
        println!("T^{n}: {}", c.canonical());
    }
    let s = nearby_cycles(&data)?;
    println!("S_f = {}", s.canonical());
    let chi = SpecializationMap::euler(data.euler.clone()).apply_integer(&s)?;
    let spec = find_example("cusp").expect("builtin");
    println!("chi(S_f) = {chi}, A'Campo sum = {}", a_campo_sum(&spec)?);
    Ok(())
}
