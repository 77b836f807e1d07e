//! Luna diagrams of spherical systems, as text and as SVG.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::Sign;
use crate::datum::SphericalSystem;
use crate::error::Error;
use crate::roots::{admissible_spherical_root, cartan_matrix, Component, RootCoeffVector, ShapeTag};

/// Decoration of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    /// In `S^p`: no circle.
    Plain,
    /// The simple root is spherical: circles above and below.
    TypeA,
    /// Twice the simple root is spherical: shadowed circle around.
    TypeTwoA,
    /// Circle around.
    TypeB,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramVertex {
    /// Global index of the simple root.
    pub index: usize,
    pub id: String,
    pub kind: VertexKind,
}

/// A circle above or below a type-a vertex, owned by a color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramCircle {
    pub vertex: usize,
    pub side: Sign,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramArrow {
    /// Vertex whose upper circle the arrow starts from.
    pub from: usize,
    /// Index into Sigma.
    pub to: usize,
}

/// A spherical root with its drawing shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRoot {
    pub coeffs: Vec<i64>,
    pub shape: ShapeTag,
    pub marked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LunaDiagram {
    pub components: Vec<Component>,
    pub vertices: Vec<DiagramVertex>,
    /// Edges of the Dynkin diagram with their multiplicity; for a multiple
    /// edge the first vertex is the long root.
    pub edges: Vec<(usize, usize, u8)>,
    pub circles: Vec<DiagramCircle>,
    pub arrows: Vec<DiagramArrow>,
    pub roots: Vec<DiagramRoot>,
}

/// Build the diagram. Marks are indices into `s.sigma`.
pub fn luna_diagram(s: &SphericalSystem, marked: &BTreeSet<usize>) -> Result<LunaDiagram, Error> {
    let rs = &s.root_system;
    let cartan = cartan_matrix(rs);
    let n = rs.rank();
    let sigma_pos = |v: &RootCoeffVector| s.sigma.iter().position(|g| g == v);

    let mut roots = Vec::new();
    for (i, g) in s.sigma.iter().enumerate() {
        let shape = admissible_spherical_root(rs, g).map_err(Error::InvalidDatum)?;
        roots.push(DiagramRoot { coeffs: g.0.clone(), shape: shape.tag, marked: marked.contains(&i) });
    }

    let mut vertices = Vec::new();
    let mut circles = Vec::new();
    let mut arrows = Vec::new();
    for a in 0..n {
        let id = rs.id(a);
        let simple = rs.simple_root(a);
        let kind = if s.s_p.contains(&id) {
            VertexKind::Plain
        } else if let Some(k) = sigma_pos(&simple) {
            // the two colors pairing 1 with alpha
            let movers: Vec<&(String, Vec<i64>)> = s.d_a.iter().filter(|(_, p)| p[k] == 1).collect();
            if movers.len() != 2 {
                return Err(Error::InvalidDatum(vec![format!("{id}: expected two colors, found {}", movers.len())]));
            }
            let small = |p: &[i64]| p.iter().all(|x| (-1..=1).contains(x));
            let (up, down) = if small(&movers[0].1) || !small(&movers[1].1) {
                (movers[0], movers[1])
            } else {
                (movers[1], movers[0])
            };
            circles.push(DiagramCircle { vertex: a, side: Sign::Up, color: up.0.clone() });
            circles.push(DiagramCircle { vertex: a, side: Sign::Down, color: down.0.clone() });
            for (j, g) in s.sigma.iter().enumerate() {
                let orth = g.0.iter().enumerate().all(|(b, c)| c * cartan[a][b] == 0);
                if !orth && up.1[j] == -1 {
                    arrows.push(DiagramArrow { from: a, to: j });
                }
            }
            VertexKind::TypeA
        } else if sigma_pos(&simple.doubled()).is_some() {
            VertexKind::TypeTwoA
        } else {
            VertexKind::TypeB
        };
        vertices.push(DiagramVertex { index: a, id: id.to_string(), kind });
    }

    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if cartan[a][b] != 0 {
                let m = (cartan[a][b] * cartan[b][a]) as u8;
                // <b^vee, a> = -m means a is long
                let (x, y) = if cartan[b][a] < cartan[a][b] { (a, b) } else { (b, a) };
                edges.push(if m > 1 { (x, y, m) } else { (a, b, 1) });
            }
        }
    }
    Ok(LunaDiagram { components: rs.components.clone(), vertices, edges, circles, arrows, roots })
}

fn shape_name(t: ShapeTag) -> &'static str {
    match t {
        ShapeTag::Simple => "simple",
        ShapeTag::Double => "double",
        ShapeTag::OrthogonalPair => "orthogonal pair",
        ShapeTag::AChain => "a-chain",
        ShapeTag::D3 => "d3",
        ShapeTag::BChain => "b-chain",
        ShapeTag::DoubledBChain => "doubled b-chain",
        ShapeTag::B3 => "b3",
        ShapeTag::CChain => "c-chain",
        ShapeTag::DChain => "d-chain",
        ShapeTag::F4 => "f4",
        ShapeTag::G2Sum => "g2 sum",
        ShapeTag::G2Middle => "g2 middle",
        ShapeTag::G2Double => "g2 double",
    }
}

fn root_text(d: &LunaDiagram, coeffs: &[i64]) -> String {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { d.vertices[i].id.clone() } else { format!("{c}*{}", d.vertices[i].id) })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl LunaDiagram {
    /// Plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "Luna diagram on {}",
            if comps.is_empty() { "the trivial root system".into() } else { comps.join(" x ") }
        );
        let _ = writeln!(out, "vertices:");
        for v in &self.vertices {
            let deco = match v.kind {
                VertexKind::Plain => "no circle".to_string(),
                VertexKind::TypeB => "circle around".to_string(),
                VertexKind::TypeTwoA => "shadowed circle around".to_string(),
                VertexKind::TypeA => {
                    let get = |side| {
                        self.circles
                            .iter()
                            .find(|c| c.vertex == v.index && c.side == side)
                            .map(|c| c.color.as_str())
                            .unwrap_or("?")
                    };
                    format!("above {}, below {}", get(Sign::Up), get(Sign::Down))
                }
            };
            let _ = writeln!(out, "  {:<6} {deco}", v.id);
        }
        if !self.edges.is_empty() {
            let es: Vec<String> = self
                .edges
                .iter()
                .map(|&(a, b, m)| match m {
                    1 => format!("{}-{}", self.vertices[a].id, self.vertices[b].id),
                    2 => format!("{}=>{}", self.vertices[a].id, self.vertices[b].id),
                    _ => format!("{}≡>{}", self.vertices[a].id, self.vertices[b].id),
                })
                .collect();
            let _ = writeln!(out, "edges: {}", es.join(" "));
        }
        let _ = writeln!(out, "spherical roots:");
        for (j, r) in self.roots.iter().enumerate() {
            let mark = if r.marked { "  [gamma]" } else { "" };
            let _ = writeln!(out, "  #{:<3} {} ({}){mark}", j + 1, root_text(self, &r.coeffs), shape_name(r.shape));
        }
        let mut colors: Vec<&str> = self.circles.iter().map(|c| c.color.as_str()).collect();
        colors.sort();
        colors.dedup();
        for col in colors {
            let at: Vec<String> = self
                .circles
                .iter()
                .filter(|c| c.color == col)
                .map(|c| format!("{}{}", self.vertices[c.vertex].id, if c.side == Sign::Up { "+" } else { "-" }))
                .collect();
            if at.len() > 1 {
                let _ = writeln!(out, "line {col}: {}", at.join(" "));
            }
        }
        for a in &self.arrows {
            let _ = writeln!(out, "arrow {}+ -> #{}", self.vertices[a.from].id, a.to + 1);
        }
        out
    }

    /// Deterministic SVG rendering.
    pub fn to_svg(&self) -> String {
        const STEP: i64 = 60;
        const GAP: i64 = 40;
        let mut xs = Vec::new();
        let mut x = 40;
        let mut comp_of = Vec::new();
        let mut k = 0;
        for (ci, c) in self.components.iter().enumerate() {
            for _ in 0..c.rank {
                xs.push(x);
                comp_of.push(ci);
                x += STEP;
                k += 1;
            }
            x += GAP;
        }
        debug_assert_eq!(k, self.vertices.len());
        let width = x.max(80);
        let y0 = 70;
        let height = 170;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="serif" font-size="12">"#
        );
        let _ = writeln!(
            s,
            r#"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="black"/></marker></defs>"#
        );
        for &(a, b, m) in &self.edges {
            let (xa, xb) = (xs[a], xs[b]);
            match m {
                1 => {
                    let _ = writeln!(s, r#"<line x1="{xa}" y1="{y0}" x2="{xb}" y2="{y0}" stroke="black"/>"#);
                }
                _ => {
                    for off in (0..m as i64).map(|i| (2 * i - (m as i64 - 1)) * 2) {
                        let _ = writeln!(
                            s,
                            r#"<line x1="{xa}" y1="{}" x2="{xb}" y2="{}" stroke="black"/>"#,
                            y0 + off,
                            y0 + off
                        );
                    }
                    // arrowhead points to the short root
                    let mid = (xa + xb) / 2;
                    let dir = if xb > xa { 1 } else { -1 };
                    let _ = writeln!(
                        s,
                        r#"<polyline points="{},{} {},{} {},{}" fill="none" stroke="black"/>"#,
                        mid - 5 * dir,
                        y0 - 6,
                        mid + 5 * dir,
                        y0,
                        mid - 5 * dir,
                        y0 + 6
                    );
                }
            }
        }
        for v in &self.vertices {
            let cx = xs[v.index];
            let _ = writeln!(s, r#"<circle cx="{cx}" cy="{y0}" r="3" fill="black"/>"#);
            match v.kind {
                VertexKind::Plain | VertexKind::TypeA => {}
                VertexKind::TypeB => {
                    let _ = writeln!(s, r#"<circle cx="{cx}" cy="{y0}" r="10" fill="none" stroke="black"/>"#);
                }
                VertexKind::TypeTwoA => {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{cx}" cy="{y0}" r="10" fill="gray" fill-opacity="0.4" stroke="black"/>"#
                    );
                }
            }
            let _ = writeln!(s, r#"<text x="{cx}" y="{}" text-anchor="middle">{}</text>"#, y0 + 50, v.id);
        }
        let cy = |side: Sign| if side == Sign::Up { y0 - 18 } else { y0 + 18 };
        for c in &self.circles {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="7" fill="none" stroke="black"><title>{}</title></circle>"#,
                xs[c.vertex],
                cy(c.side),
                c.color
            );
        }
        // lines joining circles of one color, routed above or below
        let mut colors: Vec<&str> = self.circles.iter().map(|c| c.color.as_str()).collect();
        colors.sort();
        colors.dedup();
        for (li, col) in colors.iter().enumerate() {
            let pts: Vec<&DiagramCircle> = self.circles.iter().filter(|c| c.color == *col).collect();
            if pts.len() < 2 {
                continue;
            }
            let lane = 4 * (li as i64 % 4);
            let mut path = String::new();
            for (i, c) in pts.iter().enumerate() {
                let (px, py) = (xs[c.vertex], cy(c.side));
                let ly = if c.side == Sign::Up { py - 10 - lane } else { py + 10 + lane };
                if i == 0 {
                    let _ = write!(path, "M{px},{py} L{px},{ly}");
                } else {
                    let _ = write!(path, " L{px},{ly} L{px},{py} M{px},{ly}");
                }
            }
            let _ = writeln!(s, r#"<path d="{path}" fill="none" stroke="black"/>"#);
        }
        for a in &self.arrows {
            let from = xs[a.from];
            let sup: Vec<usize> =
                self.roots[a.to].coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
            let target = sup.iter().copied().min_by_key(|&i| (xs[i] - from).abs()).unwrap_or(a.from);
            let tx = xs[target] + if xs[target] > from { -8 } else { 8 };
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{tx}" y2="{}" stroke="black" marker-end="url(#head)"/>"#,
                from,
                y0 - 18,
                y0 - 6
            );
        }
        for (j, r) in self.roots.iter().enumerate() {
            let sup: Vec<usize> = r.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
            let (lo, hi) = (xs[sup[0]], xs[*sup.last().unwrap()]);
            if r.shape != ShapeTag::Simple && r.shape != ShapeTag::Double {
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="{}" height="20" rx="6" fill="gray" fill-opacity="0.25" stroke="black"><title>{}</title></rect>"#,
                    lo - 12,
                    y0 - 10,
                    hi - lo + 24,
                    shape_name(r.shape)
                );
            }
            if r.marked {
                let _ = writeln!(
                    s,
                    r#"<text x="{}" y="{}" text-anchor="middle">γ<title>#{}</title></text>"#,
                    (lo + hi) / 2,
                    y0 + 36,
                    j + 1
                );
            }
        }
        s.push_str("</svg>\n");
        s
    }
}
