//! SVG drawing of a tiling patch.

use std::fmt::Write;

use crate::boundary::BoundaryWord;
use crate::geom::Vec2;

use super::TilingPatch;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Pixels per cell edge.
    pub scale: u32,
    pub palette: Vec<String>,
    pub highlight: String,
    pub stroke: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 20,
            palette: ["#8ecae6", "#ffb703", "#90be6d", "#f4a3a8"]
                .map(String::from)
                .to_vec(),
            highlight: "#e63946".to_string(),
            stroke: "#1d3557".to_string(),
        }
    }
}

/// One closed path per translate, filled by `(i + j) mod palette size`;
/// the copy at the origin gets the highlight color. Output depends only
/// on the inputs.
pub fn render_svg(w: &BoundaryWord, patch: &TilingPatch, opts: &RenderOptions) -> String {
    let s = opts.scale.max(1) as i64;
    let verts = w.vertices();
    let (mut lo, mut hi) = (Vec2::new(i64::MAX, i64::MAX), Vec2::new(i64::MIN, i64::MIN));
    for &(_, _, t) in &patch.translates {
        for &p in verts {
            let q = p + t;
            lo = Vec2::new(lo.x.min(q.x), lo.y.min(q.y));
            hi = Vec2::new(hi.x.max(q.x), hi.y.max(q.y));
        }
    }
    let (width, height) = ((hi.x - lo.x + 2) * s, (hi.y - lo.y + 2) * s);
    // y grows downward in SVG; one cell of margin on every side
    let px = |p: Vec2| ((p.x - lo.x + 1) * s, (hi.y - p.y + 1) * s);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<g stroke="{}" stroke-width="{}" stroke-linejoin="round">"#,
        opts.stroke,
        (s / 10).max(1)
    );
    for &(i, j, t) in &patch.translates {
        let fill = if (i, j) == (0, 0) {
            opts.highlight.as_str()
        } else if opts.palette.is_empty() {
            "none"
        } else {
            let k = (i + j).rem_euclid(opts.palette.len() as i64) as usize;
            opts.palette[k].as_str()
        };
        let mut d = String::new();
        for (k, &p) in verts.iter().enumerate() {
            let (x, y) = px(p + t);
            let _ = write!(d, "{}{x} {y} ", if k == 0 { 'M' } else { 'L' });
        }
        d.push('Z');
        let _ = writeln!(out, r#"<path d="{d}" fill="{fill}"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::factorizations;
    use crate::tiling::patch;

    #[test]
    fn path_counts_and_determinism() {
        let square: BoundaryWord = "urdl".parse().unwrap();
        let f = factorizations(&square).as_slice()[0];
        let svg = render_svg(&square, &patch(&square, &f, 1), &RenderOptions::default());
        assert_eq!(svg.matches("<path").count(), 9);
        assert_eq!(svg.matches("#e63946").count(), 1);

        let domino: BoundaryWord = "urrdll".parse().unwrap();
        let f = factorizations(&domino).as_slice()[0];
        let p = patch(&domino, &f, 2);
        let a = render_svg(&domino, &p, &RenderOptions::default());
        let b = render_svg(&domino, &p, &RenderOptions::default());
        assert_eq!(a.matches("<path").count(), 25);
        assert_eq!(a, b);
    }
}
