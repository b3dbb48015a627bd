//! n + 1 mutually tangent unit spheres and the two spheres touching all of
//! them, for n = 2..6.
//!
//! ```bash
//! cargo run -p inversive --example soddy_gosset
//! ```

use inversive::nsphere::{canonical_simplex_config, lift_n, soddy_gosset_residual, verify_generalized_n};

fn main() -> Result<(), inversive::Error> {
    println!("{:>2}  {:>12}  {:>12}  {:>10}  {:>10}", "n", "inner", "outer", "relation", "identity");
    for n in 2..=6 {
        let mut row = Vec::new();
        let mut worst_relation: f64 = 0.0;
        let mut worst_identity: f64 = 0.0;
        for outer in [false, true] {
            let spheres = canonical_simplex_config(n, outer)?;
            let b: Vec<f64> = spheres.iter().map(|s| s.curvature()).collect();
            row.push(b[n + 1]);
            worst_relation = worst_relation.max(soddy_gosset_residual(&b, n)?.abs());
            let vectors = spheres.iter().map(lift_n).collect::<Result<Vec<_>, _>>()?;
            worst_identity = worst_identity.max(verify_generalized_n(&vectors, n)?);
        }
        println!("{n:>2}  {:>12.9}  {:>12.9}  {worst_relation:>10.1e}  {worst_identity:>10.1e}", row[0], row[1]);
    }
    Ok(())
}
