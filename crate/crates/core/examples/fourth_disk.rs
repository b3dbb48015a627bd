//! Solves for the two disks tangent to three mutually tangent ones.
//!
//! ```bash
//! cargo run -p inversive --example fourth_disk
//! ```

use inversive::descartes::{descartes_residual, solve_fourth_curvature, solve_fourth_disk, vieta_reflect, Quadruple};
use inversive::minkowski::{lift, project, CircleVector, Disk};

fn show(label: &str, v: &CircleVector) -> Result<(), inversive::Error> {
    match project(v)? {
        Disk::Circle { center, radius } => {
            println!("  {label}: circle center ({:.6}, {:.6}) radius {radius:.6}", center[0], center[1])
        }
        Disk::Halfplane { normal, offset } => {
            println!("  {label}: halfplane n = ({}, {}) c = {offset}", normal[0], normal[1])
        }
    }
    Ok(())
}

fn solve(title: &str, triple: [Disk; 3]) -> Result<(), inversive::Error> {
    let [a, b, c] = [lift(&triple[0])?, lift(&triple[1])?, lift(&triple[2])?];
    let (big, small) = solve_fourth_disk(&a, &b, &c)?;
    println!("{title}");
    show("larger curvature ", &big)?;
    show("smaller curvature", &small)?;
    let (k1, k2) = solve_fourth_curvature(a.beta, b.beta, c.beta)?;
    println!("  curvatures {:.6} {:.6} (from the three curvatures alone: {k1:.6} {k2:.6})", big.beta, small.beta);
    println!("  descartes residual {:e}", descartes_residual(a.beta, b.beta, c.beta, big.beta));

    // Swapping one solution for the other is a single reflection.
    let q = Quadruple::new([a, b, c, big])?;
    let r = vieta_reflect(&q, 3)?;
    println!("  reflecting slot 3 gives curvature {:.6}", r.curvatures()[3]);
    Ok(())
}

fn main() -> Result<(), inversive::Error> {
    solve(
        "three unit circles, side 2",
        [Disk::circle(0.0, 0.0, 1.0), Disk::circle(2.0, 0.0, 1.0), Disk::circle(1.0, 3f64.sqrt(), 1.0)],
    )?;
    solve(
        "strip 0 <= y <= 2 and a unit circle",
        [Disk::halfplane(0.0, 1.0, 0.0), Disk::halfplane(0.0, -1.0, -2.0), Disk::circle(0.0, 1.0, 1.0)],
    )?;
    solve(
        "outer circle of radius 1 and two halves",
        [Disk::circle(0.0, 0.0, -1.0), Disk::circle(0.5, 0.0, 0.5), Disk::circle(-0.5, 0.0, 0.5)],
    )
}
