//! Lifts a few disks to circle vectors and prints their pairwise products
//! next to the values read off the geometry.
//!
//! ```bash
//! cargo run -p inversive --example lift_inspect
//! ```

use inversive::minkowski::{inner, inner_geometric, intersection_angle, lift, project, Disk};

fn main() -> Result<(), inversive::Error> {
    let disks = [
        ("unit circle", Disk::circle(0.0, 0.0, 1.0)),
        ("touching neighbour", Disk::circle(2.0, 0.0, 1.0)),
        ("crossing at right angles", Disk::circle(1.0, 1.0, 1.0)),
        ("outside of radius 3", Disk::circle(0.0, 0.0, -3.0)),
        ("lower halfplane y <= -1", Disk::halfplane(0.0, 1.0, -1.0)),
    ];

    for (name, d) in &disks {
        let v = lift(d)?;
        println!("{name:<26} -> {:?}  <C,C> = {}", v.to_array(), inner(&v, &v));
        assert_eq!(project(&v)?, *d);
    }

    println!();
    let first = disks[0].1;
    for (name, d) in &disks[1..] {
        let lifted = inner(&lift(&first)?, &lift(d)?);
        let geometric = inner_geometric(&first, d)?;
        let angle = intersection_angle(&first, d)?
            .map(|a| format!("{:.1} deg", a.to_degrees()))
            .unwrap_or_else(|| "-".into());
        println!("unit circle . {name:<26} lifted {lifted:>6}  geometric {geometric:>6}  angle {angle}");
    }
    Ok(())
}
