//! Four disks in arbitrary position: builds the configuration matrix, its
//! inverse, and checks that `D f⁻¹ Dᵀ` gives back the inverse metric.
//!
//! ```bash
//! cargo run -p inversive --example generalized_identity
//! ```

use inversive::minkowski::{check_generalized, lift, Disk, METRIC_INVERSE};

fn print_matrix(title: &str, m: &[[f64; 4]; 4]) {
    println!("{title}");
    for row in m {
        println!("  {:>12.6} {:>12.6} {:>12.6} {:>12.6}", row[0], row[1], row[2], row[3]);
    }
}

fn main() -> Result<(), inversive::Error> {
    let disks = [
        Disk::circle(0.0, 0.0, 1.0),
        Disk::circle(3.0, 0.5, 2.0),
        Disk::circle(-1.0, 4.0, 0.5),
        Disk::halfplane(0.0, -1.0, 2.0),
    ];
    let vectors = [lift(&disks[0])?, lift(&disks[1])?, lift(&disks[2])?, lift(&disks[3])?];
    let check = check_generalized(&vectors)?;

    print_matrix("configuration matrix f:", &check.gramian);
    print_matrix("F = f^-1:", &check.inverse);
    print_matrix("D F D^T:", &check.reconstructed);
    print_matrix("expected G:", &METRIC_INVERSE);
    println!("residual {:e}", check.residual);

    // The curvature row of D F Dᵀ vanishes on the diagonal, whatever the position.
    let b: Vec<f64> = vectors.iter().map(|v| v.beta).collect();
    let bfb: f64 = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| b[i] * check.inverse[i][j] * b[j])
        .sum();
    println!("B^T F B = {bfb:e}");
    Ok(())
}
