use std::fmt::Write;

use positroid::rational::{self, Rational};
use positroid::{Color, PlabicGraph};

/// DOT text for `g`. Boundary vertices are boxes labelled by their boundary
/// label; non-unit weights become edge labels; mirror pairs are joined by
/// dashed grey edges that do not affect layout.
pub fn render(g: &PlabicGraph, weights: Option<&[Rational]>) -> String {
    let mut out = String::from("graph plabic {\n");
    out.push_str("  node [shape=circle, style=filled, label=\"\", width=0.25];\n");
    for (v, vert) in g.vertices().iter().enumerate() {
        let (fill, font) = match vert.color {
            Color::Black => ("black", "white"),
            Color::White => ("white", "black"),
        };
        match vert.boundary {
            Some(label) => writeln!(
                out,
                "  v{v} [shape=box, fillcolor={fill}, fontcolor={font}, label=\"{label}\"];"
            ),
            None => writeln!(out, "  v{v} [fillcolor={fill}];"),
        }
        .unwrap();
    }
    let one = rational::int(1);
    for (e, (a, b)) in g.edges().iter().enumerate() {
        match weights.map(|w| &w[e]).filter(|w| **w != one) {
            Some(w) => writeln!(out, "  v{} -- v{} [label=\"{}\"];", a.0, b.0, rational::format(w)),
            None => writeln!(out, "  v{} -- v{};", a.0, b.0),
        }
        .unwrap();
    }
    if let Some(r) = g.symmetry() {
        for (v, image) in r.iter().enumerate() {
            if v < image.0 {
                writeln!(out, "  v{v} -- v{} [style=dashed, color=gray, constraint=false];", image.0).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use positroid::{gallery, KSubset};

    #[test]
    fn lollipops_render_as_separate_legs() {
        let g = PlabicGraph::lollipop(&KSubset::new(3, [2]).unwrap());
        let dot = render(&g, None);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("label=\"2\""));
    }

    #[test]
    fn mirror_pairs_are_annotated() {
        let g = gallery::symmetric_octagon();
        let dot = render(&g, None);
        assert_eq!(dot.matches("style=dashed").count(), g.vertex_count() / 2);
        assert_eq!(dot, render(&g, None));
    }
}
