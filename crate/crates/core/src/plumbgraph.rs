//! Plumbing graphs for disc bundles over spheres: intersection matrices,
//! exact determinants and elementary divisors, with the Milnor chain and
//! the E8 tree as built-ins.

use crate::error::{Error, Result};
use crate::linalg::IntMat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub euler_number: i64,
    /// fiber dimension; labeling only, the matrix calculus ignores it
    pub fiber_dim: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    /// (vertex index, vertex index, sign)
    edges: Vec<(usize, usize, i64)>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(String, String, i64)>) -> Result<PlumbingGraph> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].iter().any(|w| w.id == v.id) {
                return Err(Error::DuplicateId(v.id.clone()));
            }
        }
        let index = |id: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::ParseError(format!("unknown vertex `{id}`")))
        };
        let edges = edges
            .into_iter()
            .map(|(a, b, sign)| {
                if sign != 1 && sign != -1 {
                    return Err(Error::ParseError(format!("edge sign must be +1 or -1, got {sign}")));
                }
                let (ia, ib) = (index(&a)?, index(&b)?);
                if ia == ib {
                    return Err(Error::ParseError(format!("self-loop at `{a}`")));
                }
                Ok((ia, ib, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PlumbingGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Diagonal = Euler numbers; off-diagonal = sum of edge signs.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMat {
    let n = g.vertices.len();
    let mut m = IntMat::zeros(n, n);
    for (i, v) in g.vertices.iter().enumerate() {
        m[(i, i)] = v.euler_number;
    }
    for &(a, b, sign) in &g.edges {
        m[(a, b)] += sign;
        m[(b, a)] += sign;
    }
    m
}

fn vertex(id: &str, euler: i64) -> Vertex {
    Vertex { id: id.to_string(), euler_number: euler, fiber_dim: 2 }
}

/// Milnor's chain of eight bundles: a path with all Euler numbers 2 plus
/// one extra negative plumbing between the second and fifth vertices.
pub fn milnor_graph() -> PlumbingGraph {
    let vertices = (1..=8).map(|i| vertex(&format!("v{i}"), 2)).collect();
    let mut edges: Vec<(String, String, i64)> =
        (1..8).map(|i| (format!("v{i}"), format!("v{}", i + 1), 1)).collect();
    edges.push(("v2".into(), "v5".into(), -1));
    PlumbingGraph::new(vertices, edges).expect("milnor graph")
}

/// The E8 tree: a chain of seven with the eighth vertex hung off the fifth,
/// with Euler numbers all +2 or all -2.
pub fn e8_graph(positive: bool) -> PlumbingGraph {
    let e = if positive { 2 } else { -2 };
    let vertices = (1..=8).map(|i| vertex(&format!("v{i}"), e)).collect();
    let mut edges: Vec<(String, String, i64)> =
        (1..7).map(|i| (format!("v{i}"), format!("v{}", i + 1), 1)).collect();
    edges.push(("v5".into(), "v8".into(), 1));
    PlumbingGraph::new(vertices, edges).expect("e8 graph")
}

/// Exact determinant and elementary divisors of the intersection lattice.
pub fn lattice_report(g: &PlumbingGraph) -> (i64, Vec<i64>) {
    let m = intersection_matrix(g);
    (m.det(), m.smith_divisors())
}

/// Graph file: `vertex <id> <euler> [dim]` and `edge <id> <id> <+1|-1>`
/// lines; `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<PlumbingGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok[0] {
            "vertex" if tok.len() == 3 || tok.len() == 4 => {
                let euler = tok[2]
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad euler number `{}`", tok[2])))?;
                let dim = if tok.len() == 4 {
                    tok[3]
                        .parse()
                        .map_err(|_| Error::ParseError(format!("bad dimension `{}`", tok[3])))?
                } else {
                    2
                };
                vertices.push(Vertex { id: tok[1].to_string(), euler_number: euler, fiber_dim: dim });
            }
            "edge" if tok.len() == 4 => {
                let sign = match tok[3] {
                    "+1" | "1" => 1,
                    "-1" => -1,
                    other => {
                        return Err(Error::ParseError(format!("bad edge sign `{other}`")))
                    }
                };
                edges.push((tok[1].to_string(), tok[2].to_string(), sign));
            }
            _ => return Err(Error::ParseError(format!("unrecognized line `{line}`"))),
        }
    }
    PlumbingGraph::new(vertices, edges)
}

pub fn graph_to_text(g: &PlumbingGraph) -> String {
    let mut out = String::new();
    for v in &g.vertices {
        out.push_str(&format!("vertex {} {} {}\n", v.id, v.euler_number, v.fiber_dim));
    }
    for &(a, b, sign) in &g.edges {
        out.push_str(&format!(
            "edge {} {} {}\n",
            g.vertices[a].id,
            g.vertices[b].id,
            if sign > 0 { "+1" } else { "-1" }
        ));
    }
    out
}

/// The eight-by-eight matrix of the Milnor chain, as golden data.
pub fn milnor_matrix() -> IntMat {
    let mut m = IntMat::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = 2;
        if i + 1 < 8 {
            m[(i, i + 1)] = 1;
            m[(i + 1, i)] = 1;
        }
    }
    m[(1, 4)] = -1;
    m[(4, 1)] = -1;
    m
}
