//! Finite simple undirected graphs and the transforms used to assemble the
//! lattices: Cartesian product, subdivision, line graph and edge deletion.
//!
//! Edges are stored normalized (`u < v`) and sorted lexicographically, so two
//! graphs with the same edge set compare equal and serialize identically.

use std::fmt::Write as _;

use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

#[inline]
fn normalize((u, v): Edge) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges. Edge orientation in the input does not matter.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(Error::VertexOutOfRange { vertex: w, n_vertices });
                }
            }
            list.push(normalize((u, v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self { n_vertices, edges: list, labels: None })
    }

    // Caller guarantees a sorted, normalized, duplicate-free edge list.
    fn from_sorted(n_vertices: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n_vertices));
        Self { n_vertices, edges, labels: None }
    }

    pub fn empty(n_vertices: usize) -> Self {
        Self::from_sorted(n_vertices, Vec::new())
    }

    /// Attaches per-vertex provenance tags.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n_vertices {
            return Err(Error::ShapeMismatch(labels.len(), self.n_vertices));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of the edge in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize((u, v))).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n_vertices];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n_vertices {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `E(self) ⊆ E(other)` on the same vertex count.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n_vertices == other.n_vertices && sorted_subset(&self.edges, &other.edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n_vertices()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n_vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::from_sorted(off + other.n_vertices, edges)
    }

    /// Plain-text edge list: `n <count>` followed by sorted `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + self.edges.len() * 12);
        writeln!(out, "n {}", self.n_vertices).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let n_vertices = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => {
                count.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex count `{count}`") })?
            }
            _ => return Err(Error::Parse { line, msg: "expected `n <vertex-count>`".into() }),
        };
        let mut edges = Vec::new();
        for (line, text) in lines {
            let parts: Vec<_> = text.split_whitespace().collect();
            let parse =
                |s: &str| s.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad vertex index `{s}`") });
            match parts.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => return Err(Error::Parse { line, msg: "expected `u v`".into() }),
            }
        }
        Self::new(n_vertices, edges)
    }
}

fn sorted_subset(small: &[Edge], big: &[Edge]) -> bool {
    let mut it = big.iter();
    small.iter().all(|e| it.by_ref().any(|f| f == e))
}

pub fn new_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("path needs at least one vertex".into()));
    }
    Ok(Graph::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn new_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// `g □ h`, with vertex `(u, u')` at index `u * |V(h)| + u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n_vertices == 0 || h.n_vertices == 0 {
        return Err(Error::InvalidSize("cartesian product of an empty graph".into()));
    }
    let nh = h.n_vertices;
    let mut edges = Vec::with_capacity(g.n_vertices * h.n_edges() + nh * g.n_edges());
    for u in 0..g.n_vertices {
        edges.extend(h.edges.iter().map(|&(a, b)| (u * nh + a, u * nh + b)));
    }
    for &(u, v) in &g.edges {
        edges.extend((0..nh).map(|a| (u * nh + a, v * nh + a)));
    }
    edges.sort_unstable();
    let mut out = Graph::from_sorted(g.n_vertices * nh, edges);
    if let (Some(lg), Some(lh)) = (&g.labels, &h.labels) {
        out.labels = Some(lg.iter().flat_map(|a| lh.iter().map(move |b| format!("({a},{b})"))).collect());
    }
    Ok(out)
}

/// Replaces every edge by a 2-path through a new vertex. The new vertex for
/// the `k`-th edge (in sorted order) gets index `|V| + k`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.n_vertices;
    let mut edges = Vec::with_capacity(2 * g.n_edges());
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        edges.push((u, n + k));
        edges.push((v, n + k));
    }
    edges.sort_unstable();
    let mut out = Graph::from_sorted(n + g.n_edges(), edges);
    if let Some(labels) = &g.labels {
        let mut all = labels.clone();
        all.extend(g.edges.iter().map(|&(u, v)| format!("[{},{}]", labels[u], labels[v])));
        out.labels = Some(all);
    }
    out
}

/// Vertex `k` of the line graph is the `k`-th edge of `g` in sorted order.
pub fn line_graph(g: &Graph) -> Graph {
    let mut incident = vec![Vec::new(); g.n_vertices];
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    let pairs: usize = incident.iter().map(|l| l.len() * l.len().saturating_sub(1) / 2).sum();
    let mut edges = Vec::with_capacity(pairs);
    for list in &incident {
        for (i, &a) in list.iter().enumerate() {
            edges.extend(list[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    edges.sort_unstable();
    let mut out = Graph::from_sorted(g.n_edges(), edges);
    if let Some(labels) = &g.labels {
        out.labels = Some(g.edges.iter().map(|&(u, v)| format!("{{{},{}}}", labels[u], labels[v])).collect());
    }
    out
}

/// Removes `removed` from `g`; every listed edge must be present.
pub fn delete_edges(g: &Graph, removed: &[Edge]) -> Result<Graph> {
    let mut drop = vec![false; g.n_edges()];
    for &(u, v) in removed {
        let k = g.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
        drop[k] = true;
    }
    let edges = g.edges.iter().zip(&drop).filter(|(_, &d)| !d).map(|(&e, _)| e).collect();
    Ok(Graph { n_vertices: g.n_vertices, edges, labels: g.labels.clone() })
}

/// Size of the symmetric difference of two edge sets on a shared index space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeDelta(pub usize);

impl EdgeDelta {
    pub fn count(self) -> usize {
        self.0
    }
}

pub fn edge_delta(g: &Graph, h: &Graph) -> EdgeDelta {
    let (a, b) = (&g.edges, &h.edges);
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    EdgeDelta(a.len() + b.len() - 2 * common)
}

/// Fraction of vertices whose degree in the spanning subgraph `h` equals
/// their degree in `g`.
pub fn degree_agreement_fraction(g: &Graph, h: &Graph) -> Result<Ratio<usize>> {
    if !h.is_spanning_subgraph_of(g) {
        return Err(Error::NotSubgraph(format!("expected a spanning subgraph of a {}-vertex graph", g.n_vertices)));
    }
    if g.n_vertices == 0 {
        return Ok(Ratio::from_integer(1));
    }
    let agree = g.degrees().iter().zip(h.degrees()).filter(|(a, b)| **a == *b).count();
    Ok(Ratio::new(agree, g.n_vertices))
}

/// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs is included
/// independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted(n, edges)
}

/// Keeps each edge of `g` independently with probability `keep`.
pub fn random_spanning_subgraph<R: Rng + ?Sized>(g: &Graph, keep: f64, rng: &mut R) -> Graph {
    let edges = g.edges.iter().copied().filter(|_| rng.random_bool(keep)).collect();
    Graph::from_sorted(g.n_vertices, edges)
}
