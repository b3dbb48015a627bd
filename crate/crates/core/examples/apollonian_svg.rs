//! Generates an Apollonian gasket from a curvature seed and writes it as SVG.
//!
//! ```bash
//! cargo run -p inversive --example apollonian_svg -- -1,2,2,3 7 gasket.svg
//! ```

use inversive::apollonian::{curvature_spectrum, generate, seed_from_curvatures, GenerationLimits};
use inversive::apollonian::{render_svg, RenderStyle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().unwrap_or_else(|| "-1,2,2,3".into());
    let depth: u32 = args.next().map(|d| d.parse()).transpose()?.unwrap_or(6);
    let out = args.next().unwrap_or_else(|| "gasket.svg".into());

    let curvatures = seed.split(',').map(str::parse).collect::<Result<Vec<f64>, _>>()?;
    let quadruple = seed_from_curvatures(&curvatures)?;
    let gasket = generate(&quadruple, GenerationLimits::depth(depth).with_max_count(200_000))?;

    std::fs::write(&out, render_svg(&gasket, &RenderStyle::by_depth())?)?;
    println!("{} disks, max depth {}, written to {out}", gasket.len(), gasket.max_depth());
    if let Some(r) = gasket.min_radius() {
        println!("smallest radius {r:e}");
    }
    let spectrum = curvature_spectrum(&gasket);
    let head: Vec<String> = spectrum.iter().take(12).map(|(k, n)| format!("{k}x{n}")).collect();
    println!("curvatures (value x count): {} ...", head.join(" "));
    Ok(())
}
