use std::f64::consts::PI;
use std::fmt::Write as _;

use super::Dessin;

const SIZE: f64 = 480.0;
const STEP: f64 = 60.0;

struct Vertex {
    /// Half-edges around the vertex in rotation order.
    darts: Vec<usize>,
    white: bool,
}

/// Radial drawing of a plane tree: black vertices as filled disks, white vertices as circles,
/// straight edges. Children are placed in the rotation order of their parent, each subtree in an
/// angular wedge proportional to its number of leaves.
pub fn render_svg(d: &Dessin) -> String {
    let n = d.n();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut at = vec![[0usize; 2]; n];
    for (white, perm) in [(false, d.sigma0()), (true, d.sigma1())] {
        for cycle in perm.cycles_zero_based() {
            for &e in &cycle {
                at[e][white as usize] = vertices.len();
            }
            vertices.push(Vertex {
                darts: cycle,
                white,
            });
        }
    }
    let root = at[0][0];
    let mut parent_dart = vec![usize::MAX; vertices.len()];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    let mut order = vec![root];
    let mut seen = vec![false; vertices.len()];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let darts = &vertices[v].darts;
        // start right after the edge to the parent so siblings keep their cyclic order
        let start = darts
            .iter()
            .position(|&e| e == parent_dart[v])
            .map_or(0, |k| k + 1);
        for k in 0..darts.len() {
            let e = darts[(start + k) % darts.len()];
            let other = at[e][!vertices[v].white as usize];
            if !seen[other] {
                seen[other] = true;
                parent_dart[other] = e;
                children[v].push(other);
                order.push(other);
            }
        }
    }
    let mut leaves = vec![0usize; vertices.len()];
    for &v in order.iter().rev() {
        leaves[v] = children[v].iter().map(|&c| leaves[c]).sum::<usize>().max(1);
    }
    let mut pos = vec![(SIZE / 2.0, SIZE / 2.0); vertices.len()];
    let mut depth = vec![0usize; vertices.len()];
    let mut wedge = vec![(0.0, 2.0 * PI); vertices.len()];
    for &v in &order {
        let (lo, hi) = wedge[v];
        let mut a = lo;
        for &c in &children[v] {
            let span = (hi - lo) * leaves[c] as f64 / leaves[v] as f64;
            wedge[c] = (a, a + span);
            depth[c] = depth[v] + 1;
            let theta = a + span / 2.0;
            let r = STEP * depth[c] as f64;
            pos[c] = (SIZE / 2.0 + r * theta.cos(), SIZE / 2.0 - r * theta.sin());
            a += span;
        }
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0).max(1) as f64;
    let scale = (SIZE / 2.0 - 20.0) / (STEP * max_depth);
    let place = |(x, y): (f64, f64)| {
        (
            SIZE / 2.0 + (x - SIZE / 2.0) * scale,
            SIZE / 2.0 + (y - SIZE / 2.0) * scale,
        )
    };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<g stroke="black" stroke-width="2">"#);
    for e in 0..n {
        let (a, b) = (place(pos[at[e][0]]), place(pos[at[e][1]]));
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"><title>{}</title></line>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            e + 1
        );
    }
    let _ = writeln!(svg, "</g>");
    for (v, vert) in vertices.iter().enumerate() {
        let (x, y) = place(pos[v]);
        let fill = if vert.white { "white" } else { "black" };
        let _ = writeln!(
            svg,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="6" fill="{fill}" stroke="black" stroke-width="2"/>"#
        );
    }
    svg.push_str("</svg>\n");
    svg
}
