//! SVG rendering of union regions: one path per ring, even-odd fill, and a
//! comment header recording the measured quantities.

use crate::format::fmt_sig12;
use crate::geometry::{Point, Region};

/// Pixels per plane unit.
const SCALE: f64 = 100.0;
/// Margin around the drawing, in plane units.
const MARGIN: f64 = 1.0;

/// Renders a region to an SVG document string.
pub fn region_to_svg(region: &Region) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for ring in region.rings() {
        for p in ring {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
    }
    let width = ((max_x - min_x) + 2.0 * MARGIN) * SCALE;
    let height = ((max_y - min_y) + 2.0 * MARGIN) * SCALE;
    // SVG y grows downward; flip so the plane reads the usual way up.
    let tx = |p: &Point| (p.x - min_x + MARGIN) * SCALE;
    let ty = |p: &Point| height - (p.y - min_y + MARGIN) * SCALE;

    let mut paths = String::new();
    for ring in region.rings() {
        let mut d = String::new();
        for (i, p) in ring.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{}{:.3} {:.3} ", cmd, tx(p), ty(p)));
        }
        d.push('Z');
        paths.push_str(&format!(
            "  <path d=\"{}\" fill=\"#4a7fb5\" fill-rule=\"evenodd\" stroke=\"#1a3a5c\" stroke-width=\"2\"/>\n",
            d
        ));
    }

    let perimeter = region.perimeter();
    let area = region.area();
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <!-- perimeter = {} area = {} ratio = {} -->\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" \
         viewBox=\"0 0 {:.0} {:.0}\">\n{}</svg>\n",
        fmt_sig12(perimeter),
        fmt_sig12(area),
        fmt_sig12(perimeter / area),
        width,
        height,
        width,
        height,
        paths
    )
}
