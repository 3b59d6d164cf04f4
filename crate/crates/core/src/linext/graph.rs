use std::fmt::Write;

use serde::Serialize;

use super::LinExtSpace;
use crate::error::Result;
use crate::poset::Poset;

/// Vertices are extensions in canonical order; an edge `(a, b, i)` with `a < b` joins `ℓ_a` and `t_i(ℓ_a) = ℓ_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinExtGraph {
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize, usize)>,
}

impl LinExtGraph {
    pub fn from_space(space: &LinExtSpace) -> Self {
        let n = space.poset().len();
        let moves: Vec<_> = (1..n).map(|i| space.move_permutation(i).expect("in range")).collect();
        let mut edges = Vec::new();
        for a in 0..space.len() {
            for (k, t) in moves.iter().enumerate() {
                let b = t.apply(a);
                if b > a {
                    edges.push((a, b, k + 1));
                }
            }
        }
        LinExtGraph { vertices: space.extensions().iter().map(|e| e.word().to_vec()).collect(), edges }
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        let mut count = 0;
        while let Some(v) = stack.pop() {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                continue;
            }
            count += 1;
            stack.extend(adj[v].iter().copied());
        }
        count == self.vertices.len()
    }
}

pub fn linext_graph(p: &Poset) -> Result<LinExtGraph> {
    Ok(LinExtGraph::from_space(&LinExtSpace::enumerate(p)?))
}

fn vertex_name(word: &[usize]) -> String {
    word.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

pub fn export_dot(g: &LinExtGraph) -> String {
    let mut out = String::from("graph linext {\n");
    for v in &g.vertices {
        writeln!(out, "  \"{}\";", vertex_name(v)).expect("string write");
    }
    for &(a, b, i) in &g.edges {
        writeln!(out, "  \"{}\" -- \"{}\" [label=\"t{i}\"];", vertex_name(&g.vertices[a]), vertex_name(&g.vertices[b]))
            .expect("string write");
    }
    out.push_str("}\n");
    out
}
