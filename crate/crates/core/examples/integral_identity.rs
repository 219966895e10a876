//! Integrating nearby cycles of xy + z^N over the x-axis recovers those of z^N.

use motivic_zeta::harness::examples::identity_xy_plus_z;
use motivic_zeta::harness::verify::verify_identity;
use motivic_zeta::zeta::nearby_cycles;

fn main() -> motivic_zeta::Result<()> {
    for n in 1..=3 {
        let inst = identity_xy_plus_z(n).expect("N <= 3");
        println!("N = {n}");
        println!("  S_f          = {}", nearby_cycles(&inst.data_f)?.push("k").canonical());
        println!("  L * S_f~,0   = {}", nearby_cycles(&inst.data_ftilde)?.push("k").shift(1).canonical());
        println!("{}", verify_identity(&inst)?);
    }
    Ok(())
}
