use std::fmt::Write;

use super::Gasket;
use crate::error::{Error, Result};
use crate::format::num;
use crate::minkowski::Disk;

/// Appearance of a rendered gasket. Lengths are in the units of the disk data.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Color each disk by its generation depth instead of using `fill`.
    pub fill_by_depth: bool,
    pub fill: String,
    pub stroke: String,
    /// Defaults to 0.5% of the larger viewport side.
    pub stroke_width: Option<f64>,
    /// Pixel width of the document; height follows the aspect ratio.
    pub width_px: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            fill_by_depth: false,
            fill: "#dbe8f5".into(),
            stroke: "#1f2d3d".into(),
            stroke_width: None,
            width_px: 800,
        }
    }
}

impl RenderStyle {
    pub fn by_depth() -> Self {
        Self { fill_by_depth: true, ..Self::default() }
    }
}

fn depth_fill(depth: u32) -> String {
    let hue = (depth as u64 * 47 + 200) % 360;
    format!("hsl({hue},65%,{}%)", 55 + (depth % 3) * 8)
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min: [f64; 2],
    max: [f64; 2],
}

impl Bounds {
    fn around(center: [f64; 2], r: f64) -> Self {
        Self { min: [center[0] - r, center[1] - r], max: [center[0] + r, center[1] + r] }
    }

    fn union(self, o: Self) -> Self {
        Self {
            min: [self.min[0].min(o.min[0]), self.min[1].min(o.min[1])],
            max: [self.max[0].max(o.max[0]), self.max[1].max(o.max[1])],
        }
    }
}

/// Renders the gasket as an SVG 1.1 document.
///
/// Every circle becomes one `<circle>` element; enclosing (negative
/// curvature) disks are drawn as outlines. Halfplanes become `<line>`
/// elements spanning the viewport. The y axis points up.
pub fn render_svg(g: &Gasket, style: &RenderStyle) -> Result<String> {
    if g.is_empty() {
        return Err(Error::EmptyGasket);
    }
    let disks = g.projected()?;

    let enclosing = disks.iter().find_map(|(d, _)| match *d {
        Disk::Circle { center, radius } if radius < 0.0 => Some(Bounds::around(center, -radius)),
        _ => None,
    });
    let bounds = enclosing
        .or_else(|| {
            disks
                .iter()
                .filter_map(|(d, _)| match *d {
                    Disk::Circle { center, radius } => Some(Bounds::around(center, radius.abs())),
                    Disk::Halfplane { .. } => None,
                })
                .reduce(Bounds::union)
        })
        .ok_or(Error::EmptyGasket)?;

    let w = bounds.max[0] - bounds.min[0];
    let h = bounds.max[1] - bounds.min[1];
    let margin = 0.02 * w.max(h);
    // Flip y: viewBox works in (x, -y).
    let vx = bounds.min[0] - margin;
    let vy = -bounds.max[1] - margin;
    let vw = w + 2.0 * margin;
    let vh = h + 2.0 * margin;
    let stroke_width = style.stroke_width.unwrap_or(0.005 * vw.max(vh));
    let height_px = (f64::from(style.width_px) * vh / vw).round().max(1.0);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        style.width_px,
        num(height_px),
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    let _ = writeln!(
        out,
        "<g stroke=\"{}\" stroke-width=\"{}\">",
        style.stroke,
        num(stroke_width)
    );

    let diagonal = vw.hypot(vh);
    let view_center = [vx + vw / 2.0, -(vy + vh / 2.0)];
    for (disk, meta) in &disks {
        match *disk {
            Disk::Circle { center, radius } => {
                let fill = if radius < 0.0 {
                    "none".to_string()
                } else if style.fill_by_depth {
                    depth_fill(meta.depth)
                } else {
                    style.fill.clone()
                };
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" data-depth=\"{}\"/>",
                    num(center[0]),
                    num(-center[1]),
                    num(radius.abs()),
                    fill,
                    meta.depth
                );
            }
            Disk::Halfplane { normal, offset } => {
                let along = normal[0] * view_center[0] + normal[1] * view_center[1] - offset;
                let foot = [view_center[0] - along * normal[0], view_center[1] - along * normal[1]];
                let dir = [-normal[1], normal[0]];
                let a = [foot[0] - diagonal * dir[0], foot[1] - diagonal * dir[1]];
                let b = [foot[0] + diagonal * dir[0], foot[1] + diagonal * dir[1]];
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" data-depth=\"{}\"/>",
                    num(a[0]),
                    num(-a[1]),
                    num(b[0]),
                    num(-b[1]),
                    meta.depth
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
