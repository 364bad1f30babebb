//! SVG rendering of marked polytopes: lattice grid behind, polygon
//! outline, marked vertices as filled disks, unmarked as hollow circles.

use thurston_fox::{MarkedPolytope, QPoint, Rank};

fn coords(p: &QPoint) -> (f64, f64) {
    match *p {
        QPoint::One(a) => (a as f64 / 2.0, 0.0),
        QPoint::Two(a, b) => (a as f64 / 2.0, b as f64 / 2.0),
    }
}

/// Renders the polytope with a 1-unit margin around its bounding box.
/// Rank-1 polytopes are drawn on the horizontal axis.
pub fn render(polytope: &MarkedPolytope) -> String {
    let pts: Vec<(f64, f64)> = polytope.vertices().iter().map(coords).collect();
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min).floor() - 1.0;
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max).ceil() + 1.0;
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min).floor() - 1.0;
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max).ceil() + 1.0;
    let (w, h) = (max_x - min_x, max_y - min_y);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{min_x} {} {w} {h}\" width=\"{}\" height=\"{}\">\n",
        -max_y,
        w * 60.0,
        h * 60.0
    ));
    svg.push_str("<g transform=\"scale(1,-1)\">\n");

    // Lattice grid.
    let mut x = min_x;
    while x <= max_x {
        svg.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{min_y}\" x2=\"{x}\" y2=\"{max_y}\" stroke=\"#ddd\" stroke-width=\"0.02\"/>\n"
        ));
        x += 1.0;
    }
    let mut y = min_y;
    while y <= max_y {
        svg.push_str(&format!(
            "<line x1=\"{min_x}\" y1=\"{y}\" x2=\"{max_x}\" y2=\"{y}\" stroke=\"#ddd\" stroke-width=\"0.02\"/>\n"
        ));
        y += 1.0;
    }

    // Polytope body.
    if pts.len() >= 2 {
        let path: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let element = if polytope.rank() == Rank::Two && pts.len() >= 3 {
            format!(
                "<polygon points=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"0.04\"/>\n",
                path.join(" ")
            )
        } else {
            format!(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"0.04\"/>\n",
                path.join(" ")
            )
        };
        svg.push_str(&element);
    }

    // Vertices: marked filled, unmarked hollow.
    for ((x, y), &marked) in pts.iter().zip(polytope.marks()) {
        if marked {
            svg.push_str(&format!(
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"0.12\" fill=\"#3182bd\"/>\n"
            ));
        } else {
            svg.push_str(&format!(
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"0.12\" fill=\"white\" stroke=\"#3182bd\" stroke-width=\"0.04\"/>\n"
            ));
        }
    }

    svg.push_str("</g>\n</svg>\n");
    svg
}
