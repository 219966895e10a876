//! Motivic volumes of open and closed balls, from the closed-form sum and
//! from the limit of the volume Poincaré series.

use motivic_zeta::harness::examples::{ball_closed, ball_open};
use motivic_zeta::zeta::{motivic_volume_closed_form, motivic_volume_via_limit, poincare_series, Gauge};

fn main() -> motivic_zeta::Result<()> {
    for d in 1..=3 {
        let open = ball_open(d);
        println!("open ball, d = {d}: MV = {}", motivic_volume_closed_form(&open)?.push("k").canonical());
        for p in 0..=2 {
            let data = ball_closed(d, p);
            let closed = motivic_volume_closed_form(&data)?.push("k");
            let limit = motivic_volume_via_limit(&data, Gauge::Explicit)?.push("k");
            println!("closed ball, d = {d}, p = {p}: MV = {}   (-L^d lim P = {})", closed.canonical(), limit.canonical());
        }
    }
    let p = poincare_series(&ball_closed(2, 1), Gauge::Explicit)?;
    println!("P for d = 2, p = 1: {p}");
    for (n, c) in (1..).zip(p.coefficients(1..=3)) {
        println!("  T^{n}: {}", c.canonical());
    }
    Ok(())
}
