//! Lattice generators under toroidal, cylindrical and free boundary
//! conditions.
//!
//! Every family is built on a fixed vertex index space that does not depend
//! on the boundary condition: cylindrical and free instances are spanning
//! subgraphs of the toroidal one, obtained by cutting wrap-around edges.
//! Cylinders keep the wraps along the `n` direction and cut those along `m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Square,
    #[serde(rename = "hex")]
    Hexagonal,
    /// 3.12.12 lattice: line graph of the subdivided hexagonal lattice.
    #[serde(rename = "j312")]
    J31212,
    /// Triangular kagomé lattice: line graph of the 3.12.12 lattice.
    #[serde(rename = "tkl")]
    TriangularKagome,
    /// 3³.4² lattice on `2m × n` sites.
    #[serde(rename = "m3342")]
    M3342,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Square, Family::Hexagonal, Family::J31212, Family::TriangularKagome, Family::M3342];

    pub fn name(self) -> &'static str {
        match self {
            Family::Square => "square",
            Family::Hexagonal => "hex",
            Family::J31212 => "j312",
            Family::TriangularKagome => "tkl",
            Family::M3342 => "m3342",
        }
    }

    /// Vertex degree of the toroidal instance.
    pub fn torus_degree(self) -> usize {
        match self {
            Family::Square | Family::TriangularKagome => 4,
            Family::Hexagonal | Family::J31212 => 3,
            Family::M3342 => 5,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::UnknownFamily(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Torus,
    #[serde(rename = "cyl")]
    Cylinder,
    Free,
}

impl Boundary {
    pub const ALL: [Boundary; 3] = [Boundary::Torus, Boundary::Cylinder, Boundary::Free];

    pub fn name(self) -> &'static str {
        match self {
            Boundary::Torus => "torus",
            Boundary::Cylinder => "cyl",
            Boundary::Free => "free",
        }
    }

    fn cuts(self, axis: Axis) -> bool {
        match self {
            Boundary::Torus => false,
            Boundary::Cylinder => axis == Axis::M,
            Boundary::Free => true,
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Boundary::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| Error::UnknownBoundary(s.to_owned()))
    }
}

/// Direction a wrap-around edge crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    M,
    N,
}

/// Orientation of the diagonals in the 3³.4² lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diagonal {
    /// `(r, c) – (r + 1, c + 1)`
    #[default]
    Forward,
    /// `(r, c + 1) – (r + 1, c)`
    Mirrored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub family: Family,
    pub boundary: Boundary,
    pub m: usize,
    pub n: usize,
}

impl LatticeSpec {
    pub fn new(family: Family, boundary: Boundary, m: usize, n: usize) -> Self {
        Self { family, boundary, m, n }
    }

    pub fn with_boundary(self, boundary: Boundary) -> Self {
        Self { boundary, ..self }
    }

    /// Number of sites; identical for every boundary condition.
    pub fn vertex_count(&self) -> usize {
        let cells = (self.m + 1) * (self.n + 1);
        match self.family {
            Family::Square => self.m * self.n,
            Family::Hexagonal => 2 * cells,
            Family::J31212 => 6 * cells,
            Family::TriangularKagome => 9 * cells,
            Family::M3342 => 2 * self.m * self.n,
        }
    }

    /// Smallest `(m, n)` for which the construction is a simple graph.
    pub fn minimum_size(&self) -> (usize, usize) {
        match (self.family, self.boundary) {
            (Family::Square, Boundary::Torus) => (3, 3),
            (Family::Square, Boundary::Cylinder) => (1, 3),
            (Family::Square, Boundary::Free) => (1, 1),
            (Family::Hexagonal | Family::J31212 | Family::TriangularKagome, _) => (2, 2),
            (Family::M3342, _) => (2, 3),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (min_m, min_n) = self.minimum_size();
        if self.m < min_m || self.n < min_n {
            return Err(Error::InvalidSize(format!(
                "{} {} lattice needs m >= {min_m} and n >= {min_n}, got m = {}, n = {}",
                self.family, self.boundary, self.m, self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}({}x{})", self.family, self.boundary, self.m, self.n)
    }
}

pub fn build(spec: &LatticeSpec) -> Result<Graph> {
    build_with_diagonal(spec, Diagonal::default())
}

/// As [`build`], with an explicit diagonal orientation for the 3³.4² family
/// (ignored by the other families).
pub fn build_with_diagonal(spec: &LatticeSpec, diagonal: Diagonal) -> Result<Graph> {
    spec.validate()?;
    let (m, n, b) = (spec.m, spec.n, spec.boundary);
    match spec.family {
        Family::Square => square(b, m, n),
        Family::Hexagonal => {
            let (g, wraps) = hexagonal_torus(m, n);
            let cut: Vec<Edge> = wraps.iter().filter(|(_, a)| b.cuts(*a)).map(|(e, _)| *e).collect();
            graph::delete_edges(&g, &cut)
        }
        Family::J31212 => Ok(j31212(m, n, b)?.0),
        Family::TriangularKagome => triangular_kagome(m, n, b),
        Family::M3342 => Ok(m3342(m, n, b, diagonal)),
    }
}

/// Torus, cylinder and free instances on one vertex index space, with
/// `E(free) ⊆ E(cylinder) ⊆ E(torus)`.
#[derive(Debug, Clone)]
pub struct BoundaryChain {
    pub torus: Graph,
    pub cylinder: Graph,
    pub free: Graph,
}

impl BoundaryChain {
    pub fn get(&self, boundary: Boundary) -> &Graph {
        match boundary {
            Boundary::Torus => &self.torus,
            Boundary::Cylinder => &self.cylinder,
            Boundary::Free => &self.free,
        }
    }
}

pub fn boundary_chain(spec: &LatticeSpec) -> Result<BoundaryChain> {
    let at = |b| build(&spec.with_boundary(b));
    Ok(BoundaryChain { torus: at(Boundary::Torus)?, cylinder: at(Boundary::Cylinder)?, free: at(Boundary::Free)? })
}

fn square(boundary: Boundary, m: usize, n: usize) -> Result<Graph> {
    let side = |len, wrap| if wrap { graph::new_cycle(len) } else { graph::new_path(len) };
    let rows = side(m, boundary == Boundary::Torus)?;
    let cols = side(n, boundary != Boundary::Free)?;
    graph::cartesian_product(&rows, &cols)
}

/// Index of sublattice site `A(x, y)`; `B(x, y)` is the next index.
#[inline]
fn hex_site(x: usize, y: usize, n: usize) -> usize {
    2 * (x * (n + 1) + y)
}

/// Toroidal honeycomb on `(m+1) × (n+1)` cells: `A(x, y)` is joined to
/// `B(x, y)`, `B(x-1, y)` and `B(x, y+1)`, indices modulo the cell counts.
/// Returns the graph and the wrap-around edges with the axis they cross.
fn hexagonal_torus(m: usize, n: usize) -> (Graph, Vec<(Edge, Axis)>) {
    let (cx, cy) = (m + 1, n + 1);
    let mut edges = Vec::with_capacity(3 * cx * cy);
    let mut wraps = Vec::new();
    for x in 0..cx {
        for y in 0..cy {
            let a = hex_site(x, y, n);
            edges.push((a, a + 1));
            let left = (a, hex_site((x + cx - 1) % cx, y, n) + 1);
            edges.push(left);
            if x == 0 {
                wraps.push((left, Axis::M));
            }
            let up = (a, hex_site(x, (y + 1) % cy, n) + 1);
            edges.push(up);
            if y == n {
                wraps.push((up, Axis::N));
            }
        }
    }
    let g = Graph::new(2 * cx * cy, edges).expect("honeycomb with m, n >= 1 is simple");
    let wraps = wraps.into_iter().map(|((u, v), a)| (if u < v { (u, v) } else { (v, u) }, a)).collect();
    (g, wraps)
}

/// 3.12.12 lattice as `line_graph(subdivision(H))` of the toroidal
/// honeycomb. Each honeycomb edge `e = (a, b)` becomes the edge between the
/// incidence sites `(a, e)` and `(b, e)`; cutting a wrap edge of `H` removes
/// exactly that edge and leaves both incidence sites on their triangles.
///
/// Also returns the torus graph and the removed edges as
/// `(a-side site, b-side site)`, the b side being the `B` sublattice.
fn j31212(m: usize, n: usize, boundary: Boundary) -> Result<(Graph, Graph, Vec<Edge>)> {
    let (h, wraps) = hexagonal_torus(m, n);
    let s = graph::subdivision(&h);
    let torus = graph::line_graph(&s);
    let nh = h.n_vertices();
    let site = |v: usize, k: usize| s.edge_index(v, nh + k).expect("incidence is an edge of the subdivision");
    let cut: Vec<Edge> = wraps
        .iter()
        .filter(|(_, axis)| boundary.cuts(*axis))
        .map(|&((u, v), _)| {
            let k = h.edge_index(u, v).expect("wrap edge is a honeycomb edge");
            // B sites have odd indices.
            let (a, b) = if u % 2 == 0 { (u, v) } else { (v, u) };
            (site(a, k), site(b, k))
        })
        .collect();
    let g = graph::delete_edges(&torus, &cut)?;
    Ok((g, torus, cut))
}

/// Triangular kagomé lattice as `line_graph` of the toroidal 3.12.12
/// lattice. A cut 3.12.12 edge `f` stays a site but loses its two
/// neighbours across the b side, so it hangs off the a-side triangle.
fn triangular_kagome(m: usize, n: usize, boundary: Boundary) -> Result<Graph> {
    let (_, j, cut) = j31212(m, n, boundary)?;
    let torus = graph::line_graph(&j);
    let adj = j.adjacency();
    let mut removed = Vec::with_capacity(2 * cut.len());
    for &(a, b) in &cut {
        let f = j.edge_index(a, b).expect("cut edge lies in the torus");
        for &w in adj[b].iter().filter(|&&w| w != a) {
            removed.push((f, j.edge_index(b, w).expect("neighbour edge")));
        }
    }
    graph::delete_edges(&torus, &removed)
}

/// 3³.4² lattice on rows `r ∈ Z_2m`, columns `c ∈ Z_n`, site index
/// `r * n + c`: square torus plus one diagonal per cell in every even row.
fn m3342(m: usize, n: usize, boundary: Boundary, diagonal: Diagonal) -> Graph {
    let rows = 2 * m;
    let at = |r: usize, c: usize| (r % rows) * n + c % n;
    let mut edges = Vec::with_capacity(5 * m * n);
    for r in 0..rows {
        for c in 0..n {
            let row_wrap = r + 1 == rows;
            let col_wrap = c + 1 == n;
            if !(row_wrap && boundary.cuts(Axis::M)) {
                edges.push((at(r, c), at(r + 1, c)));
            }
            if !(col_wrap && boundary.cuts(Axis::N)) {
                edges.push((at(r, c), at(r, c + 1)));
                if r % 2 == 0 {
                    edges.push(match diagonal {
                        Diagonal::Forward => (at(r, c), at(r + 1, c + 1)),
                        Diagonal::Mirrored => (at(r, c + 1), at(r + 1, c)),
                    });
                }
            }
        }
    }
    Graph::new(rows * n, edges).expect("m >= 2, n >= 3 keeps the 3^3.4^2 lattice simple")
}
