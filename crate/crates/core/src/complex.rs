//! Finite abstract simplicial complexes: construction, canonicalization,
//! generators, Barycentric refinement, and combinatorial invariants.
//!
//! A complex is stored as its full list of simplices (closed under nonempty
//! subsets) in canonical order: by cardinality first, then lexicographically
//! by vertex list. All invariants in this module are exact integer facts.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Vertex identifier. Positive by convention; 0 is rejected.
pub type Vertex = u32;

/// A nonempty finite set of vertices, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<Vertex>,
}

impl Simplex {
    /// Builds a simplex from a vertex list. Duplicates are merged (set
    /// semantics); empty sets and vertex id 0 are rejected.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidInput("empty simplex".into()));
        }
        if set.contains(&0) {
            return Err(Error::InvalidInput(
                "vertex identifiers must be positive".into(),
            ));
        }
        Ok(Simplex {
            vertices: set.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True iff the two simplices share a vertex. Both lists are sorted,
    /// so this is a linear merge.
    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// True iff `self` is a subset of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut j = 0;
        for v in &self.vertices {
            while j < other.vertices.len() && other.vertices[j] < *v {
                j += 1;
            }
            if j >= other.vertices.len() || other.vertices[j] != *v {
                return false;
            }
        }
        true
    }

    /// Facet obtained by removing the vertex at position `k` (0-based in the
    /// sorted vertex list). Only valid for dimension >= 1.
    pub fn facet(&self, k: usize) -> Simplex {
        let mut v = self.vertices.clone();
        v.remove(k);
        Simplex { vertices: v }
    }

    /// Canonical order: by cardinality, then lexicographic.
    fn canonical_cmp(&self, other: &Simplex) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_cmp(other)
    }
}

/// A finite abstract simplicial complex in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    f_vector: Vec<usize>,
}

impl SimplicialComplex {
    /// Smallest complex containing every input set.
    pub fn generate_closure(sets: &[Vec<Vertex>]) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidInput(
                "cannot build a complex from an empty generator list".into(),
            ));
        }
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for set in sets {
            let top = Simplex::new(set.iter().copied())?;
            insert_subsets(&top, &mut all);
        }
        Ok(Self::from_closed_set(all))
    }

    fn from_closed_set(set: BTreeSet<Simplex>) -> Self {
        let simplices: Vec<Simplex> = set.into_iter().collect();
        let dim = simplices.iter().map(|s| s.dimension()).max().unwrap_or(0);
        let mut f_vector = vec![0usize; dim + 1];
        for s in &simplices {
            f_vector[s.dimension()] += 1;
        }
        SimplicialComplex {
            simplices,
            f_vector,
        }
    }

    /// Complex of the circular graph C_n: n vertices, n edges.
    pub fn circular(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "circular complex needs n >= 3, got {n}"
            )));
        }
        let edges: Vec<Vec<Vertex>> = (1..=n).map(|k| vec![k, k % n + 1]).collect();
        Self::generate_closure(&edges)
    }

    /// Complete complex on n vertices: all 2^n - 1 nonempty subsets.
    pub fn complete(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("complete complex needs n >= 1".into()));
        }
        if n > 20 {
            return Err(Error::ResourceBudget {
                count: (1u128 << n) - 1,
            });
        }
        Self::generate_closure(&[(1..=n).collect()])
    }

    /// Keeps simplices of dimension <= d. Always a complex.
    pub fn skeleton(&self, d: usize) -> Self {
        let set: BTreeSet<Simplex> = self
            .simplices
            .iter()
            .filter(|s| s.dimension() <= d)
            .cloned()
            .collect();
        Self::from_closed_set(set)
    }

    /// Clique (Whitney) complex of a simple graph given as an edge list.
    pub fn whitney(edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut verts: BTreeSet<Vertex> = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop edge ({a},{a})")));
            }
            verts.insert(a);
            verts.insert(b);
        }
        if verts.is_empty() {
            return Err(Error::InvalidInput("empty edge list".into()));
        }
        if verts.contains(&0) {
            return Err(Error::InvalidInput(
                "vertex identifiers must be positive".into(),
            ));
        }
        let vlist: Vec<Vertex> = verts.into_iter().collect();
        Ok(whitney_of_graph(&vlist, edges))
    }

    /// Code-block-D style random complex: m random vertex subsets of
    /// {1..n} (size uniform in 1..=n, sampled with replacement, deduped),
    /// then the closure. Deterministic given the seed.
    pub fn random_complex(n: u32, m: u32, seed: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidInput("random complex needs n, m >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sets = Vec::with_capacity(m as usize);
        for _ in 0..m {
            let k = rng.gen_range(1..=n);
            let set: Vec<Vertex> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
            sets.push(set);
        }
        Self::generate_closure(&sets)
    }

    /// Random 1-dimensional complex: all v vertices plus e distinct edges
    /// chosen uniformly among the C(v,2) pairs. Deterministic given seed.
    pub fn random_one_dimensional(v: u32, e: u32, seed: u64) -> Result<Self> {
        if v < 2 {
            return Err(Error::InvalidInput(
                "random 1-dimensional complex needs v >= 2".into(),
            ));
        }
        let max_e = (v as u64) * (v as u64 - 1) / 2;
        if e == 0 || e as u64 > max_e {
            return Err(Error::InvalidInput(format!(
                "edge count {e} outside 1..={max_e}"
            )));
        }
        let mut pairs: Vec<(Vertex, Vertex)> = Vec::with_capacity(max_e as usize);
        for a in 1..=v {
            for b in (a + 1)..=v {
                pairs.push((a, b));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // partial Fisher-Yates: first e entries become the sample
        for i in 0..(e as usize) {
            let j = rng.gen_range(i..pairs.len());
            pairs.swap(i, j);
        }
        let mut sets: Vec<Vec<Vertex>> = (1..=v).map(|k| vec![k]).collect();
        sets.extend(pairs[..e as usize].iter().map(|&(a, b)| vec![a, b]));
        Self::generate_closure(&sets)
    }

    /// 1-skeleton of an Erdos-Renyi graph G(n, p): all n vertices plus each
    /// edge independently with probability p. Deterministic given seed.
    pub fn erdos_renyi_1skeleton(n: u32, p: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("need n >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidInput(format!("probability {p} outside [0,1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sets: Vec<Vec<Vertex>> = (1..=n).map(|k| vec![k]).collect();
        for a in 1..=n {
            for b in (a + 1)..=n {
                if rng.gen::<f64>() < p {
                    sets.push(vec![a, b]);
                }
            }
        }
        Self::generate_closure(&sets)
    }

    /// Barycentric refinement: vertices are the simplices of `self`
    /// (relabeled 1..N in canonical order), joined when one contains the
    /// other, and the Whitney complex of that inclusion graph is taken.
    /// For dim <= 1 the inclusion graph is triangle-free, so the result is
    /// its 1-skeleton with (v+e) vertices and 2e edges.
    pub fn barycentric_refinement(&self) -> Self {
        let n = self.simplices.len();
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                // canonical order sorts by cardinality, so only i-in-j is possible
                if self.simplices[i].is_face_of(&self.simplices[j]) {
                    edges.push((i as Vertex + 1, j as Vertex + 1));
                }
            }
        }
        let vlist: Vec<Vertex> = (1..=n as Vertex).collect();
        whitney_of_graph(&vlist, &edges)
    }

    /// Disjoint union, relabeling the second complex's vertices above the
    /// first's maximum.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Self {
        let offset = self.max_vertex();
        let mut set: BTreeSet<Simplex> = self.simplices.iter().cloned().collect();
        for s in &other.simplices {
            let shifted: Vec<Vertex> = s.vertices().iter().map(|v| v + offset).collect();
            set.insert(Simplex { vertices: shifted });
        }
        Self::from_closed_set(set)
    }

    fn max_vertex(&self) -> Vertex {
        self.simplices
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Counts per dimension; sums to the number of simplices.
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    /// chi(G) = sum_x (-1)^dim(x).
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn dimension(&self) -> usize {
        self.f_vector.len() - 1
    }

    /// Number of odd-dimensional simplices (the Morse index of L).
    pub fn odd_simplex_count(&self) -> usize {
        self.f_vector.iter().skip(1).step_by(2).sum()
    }

    /// Number of distinct vertices (simplices of dimension 0).
    pub fn vertex_count(&self) -> usize {
        self.f_vector[0]
    }

    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        self.simplices.binary_search(s).is_ok()
    }

    /// Position of a simplex in canonical order (row/column index in L).
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices.binary_search(s).ok()
    }

    /// Text format: one simplex per line, vertices space-separated; lines
    /// starting with '#' are comments. The closure of the listed sets is
    /// taken, so facet lists are accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sets: Vec<Vec<Vertex>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut verts = Vec::new();
            for tok in line.split_whitespace() {
                let v: Vertex = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("expected a positive integer, found {tok:?}"),
                })?;
                if v == 0 {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: "vertex identifiers must be positive".into(),
                    });
                }
                verts.push(v);
            }
            sets.push(verts);
        }
        if sets.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no simplices found".into(),
            });
        }
        Self::generate_closure(&sets)
    }

    /// Inverse of [`parse`]: all simplices in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.simplices {
            let mut first = true;
            for v in s.vertices() {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

fn insert_subsets(top: &Simplex, all: &mut BTreeSet<Simplex>) {
    let verts = top.vertices();
    let n = verts.len();
    debug_assert!(n <= 64);
    for mask in 1u64..(1 << n) {
        let subset: Vec<Vertex> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| verts[i])
            .collect();
        all.insert(Simplex { vertices: subset });
    }
}

/// Whitney complex of a simple graph with an explicit vertex list (so that
/// isolated vertices survive).
fn whitney_of_graph(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> SimplicialComplex {
    let mut adj: std::collections::BTreeMap<Vertex, BTreeSet<Vertex>> = vertices
        .iter()
        .map(|&v| (v, BTreeSet::new()))
        .collect();
    for &(a, b) in edges {
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    }
    let mut set: BTreeSet<Simplex> = BTreeSet::new();
    for &v in adj.keys() {
        let mut clique = vec![v];
        let candidates: Vec<Vertex> = adj[&v].iter().copied().filter(|&u| u > v).collect();
        extend_cliques(&adj, &mut clique, &candidates, &mut set);
    }
    SimplicialComplex::from_closed_set(set)
}

fn extend_cliques(
    adj: &std::collections::BTreeMap<Vertex, BTreeSet<Vertex>>,
    clique: &mut Vec<Vertex>,
    candidates: &[Vertex],
    out: &mut BTreeSet<Simplex>,
) {
    out.insert(Simplex {
        vertices: clique.clone(),
    });
    for (i, &u) in candidates.iter().enumerate() {
        let next: Vec<Vertex> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|w| adj[&u].contains(w))
            .collect();
        clique.push(u);
        extend_cliques(adj, clique, &next, out);
        clique.pop();
    }
}
