//! Static TikZ pictures of rank-2 walks.
//!
//! Alcoves are drawn by their barycentres in a plane whose metric is the
//! Weyl-invariant form `(x, y) = sum_{a > 0} <x, a><y, a>` on coweights.
//! A fold is drawn as a bounce off the wall it touches.

use std::fmt::Write;

use alcovia_core::{AffElem, Coweight, RootSystem, StepKind, Walk};

struct Plane {
    e1: (f64, f64),
    e2: (f64, f64),
}

impl Plane {
    fn new(rs: &RootSystem) -> Plane {
        let mut g = [[0.0f64; 2]; 2];
        for a in rs.positive_roots() {
            let c = &a.root_coords;
            for i in 0..2 {
                for j in 0..2 {
                    g[i][j] += (c[i] * c[j]) as f64;
                }
            }
        }
        let a = g[0][0].sqrt();
        let b = g[0][1] / a;
        let d = (g[1][1] - b * b).sqrt();
        Plane { e1: (a, 0.0), e2: (b, d) }
    }

    fn map(&self, c: (f64, f64)) -> (f64, f64) {
        (c.0 * self.e1.0 + c.1 * self.e2.0, c.0 * self.e1.1 + c.1 * self.e2.1)
    }
}

/// Barycentre of the alcove `x c_0` in fundamental-coweight coordinates.
fn barycentre(rs: &RootSystem, x: &AffElem) -> (f64, f64) {
    let theta = &rs.theta().root_coords;
    let den = 3 * theta[0] * theta[1];
    let base = Coweight(vec![den / (3 * theta[0]), den / (3 * theta[1])]);
    let moved = x.fin.act_coweight(&base);
    let f = den as f64;
    (
        x.trans.0[0] as f64 + moved.0[0] as f64 / f,
        x.trans.0[1] as f64 + moved.0[1] as f64 / f,
    )
}

fn pt(p: (f64, f64)) -> String {
    format!("({:.3},{:.3})", p.0, p.1)
}

/// A standalone LaTeX document drawing `p` over the hyperplane arrangement.
pub fn walk_picture(rs: &RootSystem, p: &Walk) -> Result<String, String> {
    if rs.rank() != 2 {
        return Err(format!("TikZ output needs rank 2, type {} has rank {}", rs.cartan_type(), rs.rank()));
    }
    let plane = Plane::new(rs);
    let alcoves = p.alcoves();
    // Walk points in coweight coordinates, with a bounce point for each fold.
    let mut coords = vec![barycentre(rs, &alcoves[0])];
    let mut folds = Vec::new();
    for (k, step) in p.steps().iter().enumerate() {
        let here = barycentre(rs, &alcoves[k]);
        if step.kind == StepKind::PosFold {
            let across = barycentre(rs, &rs.aff_mul(&alcoves[k], &rs.aff_simple(step.letter).map_err(|e| e.to_string())?));
            let bounce = ((here.0 + across.0) / 2.0, (here.1 + across.1) / 2.0);
            coords.push(bounce);
            folds.push(bounce);
        }
        coords.push(barycentre(rs, &alcoves[k + 1]));
    }

    let lo0 = coords.iter().map(|c| c.0).fold(f64::INFINITY, f64::min).floor() - 1.0;
    let hi0 = coords.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max).ceil() + 1.0;
    let lo1 = coords.iter().map(|c| c.1).fold(f64::INFINITY, f64::min).floor() - 1.0;
    let hi1 = coords.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max).ceil() + 1.0;
    let corners = [(lo0, lo1), (lo0, hi1), (hi0, lo1), (hi0, hi1)];
    let mapped: Vec<(f64, f64)> = corners.iter().map(|&c| plane.map(c)).collect();
    let (xmin, xmax) = (
        mapped.iter().map(|c| c.0).fold(f64::INFINITY, f64::min),
        mapped.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max),
    );
    let (ymin, ymax) = (
        mapped.iter().map(|c| c.1).fold(f64::INFINITY, f64::min),
        mapped.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max),
    );
    let reach = (xmax - xmin).max(ymax - ymin) * 2.0;

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "\\documentclass[tikz]{{standalone}}");
    let _ = writeln!(w, "\\begin{{document}}");
    let _ = writeln!(w, "% type {} walk {}", rs.cartan_type(), p.to_text(rs));
    let _ = writeln!(w, "\\begin{{tikzpicture}}[scale=0.6]");
    let _ = writeln!(w, "\\clip {} rectangle {};", pt((xmin, ymin)), pt((xmax, ymax)));
    for a in rs.positive_roots() {
        let c = (a.root_coords[0] as f64, a.root_coords[1] as f64);
        let vals: Vec<f64> = corners.iter().map(|q| q.0 * c.0 + q.1 * c.1).collect();
        let kmin = vals.iter().copied().fold(f64::INFINITY, f64::min).floor() as i64;
        let kmax = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
        let norm2 = c.0 * c.0 + c.1 * c.1;
        let dir = plane.map((-c.1, c.0));
        let len = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
        let unit = (dir.0 / len * reach, dir.1 / len * reach);
        for k in kmin..=kmax {
            let base = plane.map((k as f64 * c.0 / norm2, k as f64 * c.1 / norm2));
            let style = if k == 0 { "gray" } else { "gray!40" };
            let _ = writeln!(
                w,
                "\\draw[{style}] {} -- {};",
                pt((base.0 - unit.0, base.1 - unit.1)),
                pt((base.0 + unit.0, base.1 + unit.1))
            );
        }
    }
    let path: Vec<String> = coords.iter().map(|&c| pt(plane.map(c))).collect();
    let _ = writeln!(w, "\\draw[thick,blue,->] {};", path.join(" -- "));
    let _ = writeln!(w, "\\fill[black] {} circle (0.08);", path[0]);
    for f in folds {
        let _ = writeln!(w, "\\fill[red] {} circle (0.08);", pt(plane.map(f)));
    }
    let _ = writeln!(w, "\\end{{tikzpicture}}");
    let _ = writeln!(w, "\\end{{document}}");
    Ok(out)
}
