//! Writes map files for the command-line tool:
//!
//! ```text
//! cargo run --example map_files -- /tmp/maps
//! encdec decompose --input /tmp/maps/conjugation.json --json
//! encdec decompose --input /tmp/maps/perturbed.json      # exit 1
//! encdec compare --a /tmp/maps/identity.json --b /tmp/maps/conjugation.json
//! ```

use std::path::PathBuf;

use encdec::algebra::StarAlgebraSpec;
use encdec::encoding::RealLinearMap;
use encdec::linalg::c64;

fn main() -> encdec::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "maps".into()));
    std::fs::create_dir_all(&dir)?;
    let spec = StarAlgebraSpec::full(2);
    let identity = RealLinearMap::identity(&spec);
    let mut perturbed = identity.clone();
    perturbed.images_mut()[1].blocks_mut()[0][(0, 0)] += c64(1e-3, 0.0);
    for (name, map) in [
        ("identity", identity),
        ("conjugation", RealLinearMap::conjugation(&spec)),
        ("transpose", RealLinearMap::transpose(&spec)),
        ("perturbed", perturbed),
    ] {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&map)?)?;
        println!("{}", path.display());
    }
    Ok(())
}
