//! Euler characteristics with compact support of rational polyhedral cones,
//! and the additivity that makes them a valuation.

use motivic_zeta::cone::{chi_union, Cone, Constraint};

fn cone(n: usize, cs: Vec<Constraint>) -> Cone {
    Cone::new((0..n).map(|i| format!("k{i}")).collect(), cs).expect("sizes agree")
}

fn main() -> motivic_zeta::Result<()> {
    for d in 1..=4 {
        println!("chi(R^{d}_>0) = {}", Cone::orthant(d).chi());
    }

    let closed_half = cone(2, vec![Constraint::ge(vec![1, -1])]);
    let diagonal = cone(2, vec![Constraint::eq(vec![1, -1])]);
    let open_half = cone(2, vec![Constraint::gt(vec![1, -1])]);
    for c in [&closed_half, &diagonal, &open_half] {
        println!("chi({c}) = {}, dim {}", c.chi(), c.dim()?);
    }
    // {k0 > k1} and {k0 = k1} glue to {k0 >= k1}
    println!("{} + {} = {}", open_half.chi(), diagonal.chi(), closed_half.chi());

    let other_half = cone(2, vec![Constraint::ge(vec![-1, 1])]);
    println!("chi of the overlapping union = {}", chi_union(&[closed_half, other_half])?);

    let empty = cone(1, vec![Constraint::ge(vec![-1])]);
    println!("empty cone: chi = {}, dim -> {:?}", empty.chi(), empty.dim());
    Ok(())
}
