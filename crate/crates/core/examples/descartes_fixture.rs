//! Writes the (−1, 2, 2, 3) Descartes quadruple and the n = 3 simplex
//! configuration as disk documents.
//!
//! ```bash
//! cargo run -p inversive --example descartes_fixture -- out_dir
//! ```

use std::path::PathBuf;

use inversive::apollonian::seed_from_curvatures;
use inversive::cli::document_json;
use inversive::minkowski::project;
use inversive::nsphere::canonical_simplex_config;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;

    let quadruple = seed_from_curvatures(&[-1.0, 2.0, 2.0, 3.0])?;
    let disks = quadruple.members().iter().map(project).collect::<Result<Vec<_>, _>>()?;
    std::fs::write(dir.join("descartes_quadruple.json"), document_json(&disks) + "\n")?;

    let spheres = canonical_simplex_config(3, false)?;
    let records: Vec<String> = spheres
        .iter()
        .map(|s| {
            let center: Vec<String> = s.center.iter().map(|x| format!("{x:?}")).collect();
            format!(
                "    {{\"type\": \"sphere\", \"center\": [{}], \"radius\": {:?}}}",
                center.join(", "),
                s.radius
            )
        })
        .collect();
    std::fs::write(
        dir.join("simplex3.json"),
        format!("{{\n  \"dim\": 3,\n  \"disks\": [\n{}\n  ]\n}}\n", records.join(",\n")),
    )?;
    println!("wrote {}", dir.display());
    Ok(())
}
