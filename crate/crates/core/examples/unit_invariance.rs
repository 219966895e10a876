//! Multiplying f by a unit does not change its nearby cycles.

use std::collections::BTreeMap;

use motivic_zeta::harness::examples::{cusp, cusp_identification, cusp_twisted};
use motivic_zeta::harness::verify::verify_unit_invariance;

fn main() -> motivic_zeta::Result<()> {
    println!("{}", verify_unit_invariance(&cusp(), &cusp_twisted(), &cusp_identification())?);

    // a non-bijective identification is rejected up front
    let mut bad: BTreeMap<String, String> = cusp_identification();
    bad.insert("E1~".into(), "F2~".into());
    println!("bad identification: {:?}", verify_unit_invariance(&cusp(), &cusp_twisted(), &bad).err());
    Ok(())
}
