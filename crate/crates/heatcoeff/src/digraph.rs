//! Multi-digraphs, pointed graphs and the surgeries used by the rest of
//! the crate.
//!
//! A graph is stored as its multiplicity matrix: `adj[u][v]` counts the
//! directed edges `u -> v`, diagonal entries count loops. A pointed graph
//! is a multi-digraph whose vertex 0 is the distinguished vertex `•`; its
//! weight excludes `•` from the vertex count.

use num::BigUint;
use std::fmt;

/// Largest vertex count accepted by canonical-form and automorphism
/// computations. Brute force over degree classes is fine at this scale.
pub const MAX_CANON_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph with {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("no edge {u} -> {v} to delete")]
    NoSuchEdge { u: usize, v: usize },
    #[error("vertex {v} is not smoothable (needs in/out degree 1 and no loop)")]
    NotSmoothable { v: usize },
    #[error("edge {u} -> {v} is not contractible")]
    NotContractible { u: usize, v: usize },
    #[error("graph is not stabilizable")]
    NotStabilizable,
    #[error("graph has {n} vertices, canonical forms support at most {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("adjacency matrix is not square")]
    NotSquare,
    #[error("pointed graph needs at least the distinguished vertex")]
    EmptyPointed,
    #[error("graph parse error: {0}")]
    Parse(String),
}

/// Finite directed multigraph with loops, as a multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDigraph {
    n: usize,
    adj: Vec<u32>,
}

impl MultiDigraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        MultiDigraph { n, adj: vec![0; n * n] }
    }

    pub fn from_matrix(rows: &[Vec<u32>]) -> Result<Self, GraphError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GraphError::NotSquare);
        }
        Ok(MultiDigraph { n, adj: rows.iter().flatten().copied().collect() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        let mut g = MultiDigraph::new(n);
        for &(u, v, m) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.adj[u * n + v] += m;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    pub fn add_edges(&mut self, u: usize, v: usize, m: u32) {
        self.adj[u * self.n + v] += m;
    }

    pub fn loops(&self, v: usize) -> u32 {
        self.adj[v * self.n + v]
    }

    pub fn edge_count(&self) -> u32 {
        self.adj.iter().sum()
    }

    /// |E| - |V|; may be negative for intermediate graphs.
    pub fn weight(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64
    }

    /// (outdegree, indegree); a loop contributes 1 to each.
    pub fn degrees(&self, v: usize) -> Result<(u32, u32), GraphError> {
        self.check_vertex(v)?;
        Ok((self.out_degree(v), self.in_degree(v)))
    }

    pub(crate) fn out_degree(&self, v: usize) -> u32 {
        self.adj[v * self.n..(v + 1) * self.n].iter().sum()
    }

    pub(crate) fn in_degree(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.adj[u * self.n + v]).sum()
    }

    /// Every vertex has indegree >= 2 and outdegree >= 2.
    pub fn is_stable(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) >= 2 && self.in_degree(v) >= 2)
    }

    /// Every vertex has indegree, outdegree >= 1 and total degree >= 3.
    pub fn is_semistable(&self) -> bool {
        (0..self.n).all(|v| {
            let (o, i) = (self.out_degree(v), self.in_degree(v));
            o >= 1 && i >= 1 && o + i >= 3
        })
    }

    /// Directed path from each vertex to every other vertex. Graphs with
    /// at most one vertex are strongly connected regardless of loops.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_count(false) == self.n && self.reachable_count(true) == self.n
    }

    fn reachable_count(&self, reversed: bool) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                let m = if reversed { self.mult(v, u) } else { self.mult(u, v) };
                if m > 0 && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count
    }

    /// Edge classes `(u, v, multiplicity)` with multiplicity >= 1, in
    /// row-major order.
    pub fn edge_classes(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            (0..self.n).filter_map(move |v| {
                let m = self.mult(u, v);
                (m > 0).then_some((u, v, m))
            })
        })
    }

    /// Removes one copy of `u -> v`, keeping the endpoints.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.mult(u, v) == 0 {
            return Err(GraphError::NoSuchEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u * self.n + v] -= 1;
        Ok(g)
    }

    /// Graph with vertex `v` and all incident edges removed.
    pub fn remove_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    fn induced(&self, keep: &[usize]) -> Self {
        let mut g = MultiDigraph::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                g.adj[i * keep.len() + j] = self.mult(a, b);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &MultiDigraph) -> Self {
        let n = self.n + other.n;
        let mut g = MultiDigraph::new(n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * n + v] = self.mult(u, v);
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.adj[(self.n + u) * n + (self.n + v)] = other.mult(u, v);
            }
        }
        g
    }

    /// Weakly connected components as separate graphs, each with vertices
    /// in the order they appear in `self`.
    pub fn components(&self) -> Vec<MultiDigraph> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(u) = stack.pop() {
                for v in 0..self.n {
                    if comp[v] == usize::MAX && (self.mult(u, v) > 0 || self.mult(v, u) > 0) {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let keep: Vec<usize> = (0..self.n).filter(|&v| comp[v] == c).collect();
                self.induced(&keep)
            })
            .collect()
    }

    /// New graph with vertex `old` renamed to `perm[old]`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Self {
        let mut g = MultiDigraph::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.mult(u, v);
            }
        }
        g
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        canonical_form_impl(self, false)
    }

    /// Order of the automorphism group: adjacency-preserving vertex
    /// permutations times `m!` for every edge class of multiplicity `m`
    /// (parallel edges and parallel loops are individually permutable).
    pub fn aut_order(&self) -> BigUint {
        BigUint::from(self.vertex_aut_count()) * self.parallel_edge_factor()
    }

    /// Number of vertex permutations preserving the adjacency matrix.
    pub fn vertex_aut_count(&self) -> u64 {
        count_matrix_automorphisms(self, false)
    }

    pub(crate) fn parallel_edge_factor(&self) -> BigUint {
        let mut f = BigUint::from(1u32);
        for (_, _, m) in self.edge_classes() {
            f *= factorial(m as u64);
        }
        f
    }
}

/// Multi-digraph with a distinguished vertex `•`, always at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedGraph {
    g: MultiDigraph,
}

impl PointedGraph {
    pub fn new(g: MultiDigraph) -> Result<Self, GraphError> {
        if g.vertex_count() == 0 {
            return Err(GraphError::EmptyPointed);
        }
        Ok(PointedGraph { g })
    }

    /// `total_n` counts `•` (index 0) plus the ordinary vertices.
    pub fn from_edges(total_n: usize, edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        PointedGraph::new(MultiDigraph::from_edges(total_n, edges)?)
    }

    /// Just `•`, with `l` loops.
    pub fn bullet(l: u32) -> Self {
        let mut g = MultiDigraph::new(1);
        g.add_edges(0, 0, l);
        PointedGraph { g }
    }

    pub fn graph(&self) -> &MultiDigraph {
        &self.g
    }

    pub fn vertex_count(&self) -> usize {
        self.g.vertex_count()
    }

    pub fn ordinary_count(&self) -> usize {
        self.g.vertex_count() - 1
    }

    pub fn edge_count(&self) -> u32 {
        self.g.edge_count()
    }

    /// |E| - |V| with `•` excluded from the vertex count.
    pub fn weight(&self) -> i64 {
        self.g.edge_count() as i64 - self.ordinary_count() as i64
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.g.mult(u, v)
    }

    pub fn degrees(&self, v: usize) -> Result<(u32, u32), GraphError> {
        self.g.degrees(v)
    }

    pub fn bullet_loops(&self) -> u32 {
        self.g.loops(0)
    }

    /// Γ with `•` removed.
    pub fn without_bullet(&self) -> MultiDigraph {
        self.g.remove_vertex(0)
    }

    /// Only ordinary vertices are tested; vacuously true without them.
    pub fn is_stable(&self) -> bool {
        (1..self.g.vertex_count())
            .all(|v| self.g.out_degree(v) >= 2 && self.g.in_degree(v) >= 2)
    }

    pub fn is_semistable(&self) -> bool {
        (1..self.g.vertex_count()).all(|v| {
            let (o, i) = (self.g.out_degree(v), self.g.in_degree(v));
            o >= 1 && i >= 1 && o + i >= 3
        })
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.g.is_strongly_connected()
    }

    pub fn edge_classes(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.g.edge_classes()
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Ok(PointedGraph { g: self.g.delete_edge(u, v)? })
    }

    /// An ordinary vertex with in/out degree exactly 1 and no loop.
    pub fn is_smoothable(&self, v: usize) -> bool {
        v != 0
            && v < self.g.vertex_count()
            && self.g.out_degree(v) == 1
            && self.g.in_degree(v) == 1
            && self.g.loops(v) == 0
    }

    /// Removes `v`, replacing its unique in-edge `u -> v` and out-edge
    /// `v -> w` by `u -> w` (a loop if `u == w`).
    pub fn smooth_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.g.check_vertex(v)?;
        if !self.is_smoothable(v) {
            return Err(GraphError::NotSmoothable { v });
        }
        let n = self.g.vertex_count();
        let u = (0..n).find(|&u| self.g.mult(u, v) > 0).expect("indegree 1");
        let w = (0..n).find(|&w| self.g.mult(v, w) > 0).expect("outdegree 1");
        let mut g = self.g.clone();
        g.adj[u * n + v] -= 1;
        g.adj[v * n + w] -= 1;
        g.adj[u * n + w] += 1;
        Ok(PointedGraph { g: g.remove_vertex(v) })
    }

    /// Smooths ordinary degree-(1,1) loop-free vertices until none remain.
    pub fn smooth_all(&self) -> Self {
        let mut cur = self.clone();
        loop {
            match (1..cur.vertex_count()).find(|&v| cur.is_smoothable(v)) {
                Some(v) => cur = cur.smooth_vertex(v).expect("checked smoothable"),
                None => return cur,
            }
        }
    }

    /// Contractible per the stabilization rules: `u != v` with an edge
    /// `u -> v`, and either `u` is ordinary with outdegree 1 or `v` is
    /// ordinary with indegree 1.
    pub fn is_contractible(&self, u: usize, v: usize) -> bool {
        let n = self.g.vertex_count();
        u < n && v < n
            && u != v
            && self.g.mult(u, v) >= 1
            && ((u != 0 && self.g.out_degree(u) == 1) || (v != 0 && self.g.in_degree(v) == 1))
    }

    /// Merges `u` and `v` (into `•` if either is `•`), removing the
    /// contracted edge and re-attaching all others.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if !self.is_contractible(u, v) {
            return Err(GraphError::NotContractible { u, v });
        }
        let n = self.g.vertex_count();
        let survivor = u.min(v);
        let gone = u.max(v);
        let mut merged = MultiDigraph::new(n - 1);
        let map = |x: usize| {
            if x == gone {
                survivor
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        for (a, b, m) in self.g.edge_classes() {
            let m = if (a, b) == (u, v) { m - 1 } else { m };
            merged.add_edges(map(a), map(b), m);
        }
        Ok(PointedGraph { g: merged })
    }

    /// Contracts contractible edges until the graph is stable.
    pub fn stabilize(&self) -> Result<Self, GraphError> {
        let mut cur = self.clone();
        loop {
            if cur.is_stable() {
                return Ok(cur);
            }
            let next = cur
                .edge_classes()
                .find(|&(u, v, _)| cur.is_contractible(u, v))
                .map(|(u, v, _)| cur.contract_edge(u, v).expect("checked contractible"));
            match next {
                Some(g) => cur = g,
                None => return Err(GraphError::NotStabilizable),
            }
        }
    }

    /// Whether deleting one copy of `u -> v` keeps the graph strongly
    /// connected. One copy of a multi-edge is always redundant.
    pub fn is_redundant(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u >= self.vertex_count() || v >= self.vertex_count() || self.g.mult(u, v) == 0 {
            return Err(GraphError::NoSuchEdge { u, v });
        }
        if self.g.mult(u, v) >= 2 {
            return Ok(true);
        }
        Ok(self.delete_edge(u, v)?.is_strongly_connected())
    }

    /// Isomorphism key; relabelings fix `•`.
    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        canonical_form_impl(&self.g, true)
    }

    pub fn aut_order(&self) -> BigUint {
        BigUint::from(self.vertex_aut_count()) * self.g.parallel_edge_factor()
    }

    pub fn vertex_aut_count(&self) -> u64 {
        count_matrix_automorphisms(&self.g, true)
    }
}

/// Isomorphism-invariant key: a tag, the vertex count, and the
/// lexicographically minimal flattened adjacency matrix over admissible
/// relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    data: Vec<u32>,
}

impl CanonicalForm {
    /// [tag, n, row-major matrix entries]; tag 1 for pointed graphs.
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_pointed(&self) -> bool {
        self.data[0] == 1
    }

    /// Representative graph whose matrix is the canonical labeling.
    pub fn representative(&self) -> MultiDigraph {
        let n = self.data[1] as usize;
        MultiDigraph { n, adj: self.data[2..].to_vec() }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.is_pointed() { 'P' } else { 'U' };
        write!(f, "{}{}:", tag, self.data[1])?;
        for (i, e) in self.data[2..].iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CanonicalForm {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Parse(format!("bad canonical form {s:?}"));
        let tag = match s.chars().next() {
            Some('P') => 1,
            Some('U') => 0,
            _ => return Err(bad()),
        };
        let rest = &s[1..];
        let (n_str, entries_str) = rest.split_once(':').ok_or_else(bad)?;
        let n: u32 = n_str.parse().map_err(|_| bad())?;
        let mut data = vec![tag, n];
        if !entries_str.is_empty() {
            for e in entries_str.split(',') {
                data.push(e.parse().map_err(|_| bad())?);
            }
        }
        if data.len() != 2 + (n * n) as usize {
            return Err(bad());
        }
        Ok(CanonicalForm { data })
    }
}

/// Graphs that can be deduplicated by canonical form.
pub trait CanonicalKey {
    fn canonical_key(&self) -> Result<CanonicalForm, GraphError>;
}

impl CanonicalKey for MultiDigraph {
    fn canonical_key(&self) -> Result<CanonicalForm, GraphError> {
        self.canonical_form()
    }
}

impl CanonicalKey for PointedGraph {
    fn canonical_key(&self) -> Result<CanonicalForm, GraphError> {
        self.canonical_form()
    }
}

/// Vertices grouped by (outdegree, indegree, loops); groups sorted by
/// signature. With `pin_first`, vertex 0 forms its own leading group.
fn degree_classes(g: &MultiDigraph, pin_first: bool) -> Vec<Vec<usize>> {
    let start = usize::from(pin_first);
    let mut sigs: Vec<(u32, u32, u32, usize)> = (start..g.vertex_count())
        .map(|v| (g.out_degree(v), g.in_degree(v), g.loops(v), v))
        .collect();
    sigs.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    if pin_first {
        classes.push(vec![0]);
    }
    let mut last: Option<(u32, u32, u32)> = None;
    for (o, i, l, v) in sigs {
        if last == Some((o, i, l)) {
            classes.last_mut().unwrap().push(v);
        } else {
            classes.push(vec![v]);
            last = Some((o, i, l));
        }
    }
    classes
}

/// Visits every vertex ordering that respects the class partition.
/// `ordering[new_position] = old_vertex`.
fn for_each_class_ordering(classes: &[Vec<usize>], mut f: impl FnMut(&[usize])) {
    fn rec(
        classes: &[Vec<usize>],
        ci: usize,
        ordering: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if ci == classes.len() {
            f(ordering);
            return;
        }
        let class = &classes[ci];
        fn perm_rec(
            classes: &[Vec<usize>],
            ci: usize,
            class: &[usize],
            ordering: &mut Vec<usize>,
            used: &mut Vec<bool>,
            picked: usize,
            f: &mut impl FnMut(&[usize]),
        ) {
            if picked == class.len() {
                rec(classes, ci + 1, ordering, used, f);
                return;
            }
            for (k, &v) in class.iter().enumerate() {
                if !used[k] {
                    used[k] = true;
                    ordering.push(v);
                    perm_rec(classes, ci, class, ordering, used, picked + 1, f);
                    ordering.pop();
                    used[k] = false;
                }
            }
        }
        let mut used = vec![false; class.len()];
        perm_rec(classes, ci, class, ordering, &mut used, 0, f);
        let _ = used;
    }
    let mut ordering = Vec::new();
    let mut used = Vec::new();
    rec(classes, 0, &mut ordering, &mut used, &mut f);
}

fn relabeled_matrix(g: &MultiDigraph, ordering: &[usize]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(n * n);
    for &a in ordering {
        for &b in ordering {
            out.push(g.mult(a, b));
        }
    }
    out
}

fn canonical_form_impl(g: &MultiDigraph, pointed: bool) -> Result<CanonicalForm, GraphError> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::TooManyVertices { n, max: MAX_CANON_VERTICES });
    }
    let classes = degree_classes(g, pointed);
    let mut best: Option<Vec<u32>> = None;
    for_each_class_ordering(&classes, |ordering| {
        let candidate = relabeled_matrix(g, ordering);
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
    });
    let mut data = vec![u32::from(pointed), n as u32];
    data.extend(best.unwrap_or_default());
    Ok(CanonicalForm { data })
}

fn count_matrix_automorphisms(g: &MultiDigraph, pointed: bool) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_CANON_VERTICES, "automorphism count beyond {MAX_CANON_VERTICES} vertices");
    let classes = degree_classes(g, pointed);
    // An ordering σ is an automorphism composed with the identity class
    // ordering exactly when the matrix read through σ matches the matrix
    // read through the identity ordering.
    let identity: Vec<usize> = classes.iter().flatten().copied().collect();
    let base = relabeled_matrix(g, &identity);
    let mut count = 0u64;
    for_each_class_ordering(&classes, |ordering| {
        if relabeled_matrix(g, ordering) == base {
            count += 1;
        }
    });
    count
}

pub(crate) fn factorial(k: u64) -> BigUint {
    let mut f = BigUint::from(1u32);
    for i in 2..=k {
        f *= BigUint::from(i);
    }
    f
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut num = BigUint::from(1u32);
    for i in 0..k {
        num *= BigUint::from(n - i);
        num /= BigUint::from(i + 1);
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_loop_vertex() -> MultiDigraph {
        MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap()
    }

    #[test]
    fn degrees_count_loops_both_ways() {
        let g = two_loop_vertex();
        assert_eq!(g.degrees(0).unwrap(), (2, 2));
        let h = MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap();
        assert_eq!(h.degrees(0).unwrap(), (2, 2));
        let e = MultiDigraph::new(1);
        assert_eq!(e.degrees(0).unwrap(), (0, 0));
        assert!(g.degrees(5).is_err());
    }

    #[test]
    fn weight_conventions() {
        assert_eq!(two_loop_vertex().weight(), 1);
        assert_eq!(PointedGraph::bullet(3).weight(), 3);
        // ordinary v with a loop plus v <-> •: |E| = 3, one ordinary vertex
        let g = PointedGraph::from_edges(2, &[(1, 1, 1), (1, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(g.weight(), 2);
    }

    #[test]
    fn stability_predicates() {
        assert!(two_loop_vertex().is_stable());
        let two_cycle = MultiDigraph::from_edges(2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(!two_cycle.is_semistable());
        let g = PointedGraph::from_edges(2, &[(1, 1, 1), (1, 0, 1), (0, 1, 1)]).unwrap();
        assert!(g.is_stable());
    }

    #[test]
    fn strong_connectivity() {
        assert!(PointedGraph::bullet(2).is_strongly_connected());
        assert!(PointedGraph::bullet(0).is_strongly_connected());
        let isolated = PointedGraph::from_edges(2, &[(1, 1, 2)]).unwrap();
        assert!(!isolated.is_strongly_connected());
        let cycle = PointedGraph::from_edges(2, &[(1, 0, 1), (0, 1, 1)]).unwrap();
        assert!(cycle.is_strongly_connected());
    }

    #[test]
    fn canonical_form_distinguishes_weight_two_graphs() {
        let loops = MultiDigraph::from_edges(2, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)])
            .unwrap();
        let double = MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap();
        assert_ne!(loops.canonical_form().unwrap(), double.canonical_form().unwrap());
        for k in 0..5u32 {
            for l in 0..5u32 {
                let a = MultiDigraph::from_edges(1, &[(0, 0, k)]).unwrap();
                let b = MultiDigraph::from_edges(1, &[(0, 0, l)]).unwrap();
                assert_eq!(
                    a.canonical_form().unwrap() == b.canonical_form().unwrap(),
                    k == l
                );
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = MultiDigraph::from_edges(3, &[(0, 1, 2), (1, 2, 1), (2, 0, 1), (1, 1, 1)])
            .unwrap();
        let key = g.canonical_form().unwrap();
        for perm in [[1, 2, 0], [2, 0, 1], [0, 2, 1], [1, 0, 2], [2, 1, 0]] {
            let h = g.apply_permutation(&perm);
            assert_eq!(h.canonical_form().unwrap(), key);
        }
    }

    #[test]
    fn canonical_form_round_trips_as_text() {
        let g = PointedGraph::from_edges(2, &[(1, 0, 2), (0, 1, 2)]).unwrap();
        let key = g.canonical_form().unwrap();
        let text = key.to_string();
        let back: CanonicalForm = text.parse().unwrap();
        assert_eq!(back, key);
        assert!(back.is_pointed());
    }

    #[test]
    fn aut_orders_match_back_solved_values() {
        assert_eq!(two_loop_vertex().aut_order(), BigUint::from(2u32));
        let double = MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap();
        assert_eq!(double.aut_order(), BigUint::from(8u32));
        let loops = MultiDigraph::from_edges(2, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)])
            .unwrap();
        assert_eq!(loops.aut_order(), BigUint::from(2u32));
    }

    #[test]
    fn pointed_aut_fixes_bullet() {
        // two interchangeable looped vertices hanging off •
        let g = PointedGraph::from_edges(
            3,
            &[(0, 1, 1), (0, 2, 1), (1, 0, 1), (2, 0, 1), (1, 1, 1), (2, 2, 1)],
        )
        .unwrap();
        assert_eq!(g.vertex_aut_count(), 2);
    }

    #[test]
    fn delete_edge_and_errors() {
        let g = PointedGraph::bullet(2);
        let h = g.delete_edge(0, 0).unwrap();
        assert_eq!(h.bullet_loops(), 1);
        assert!(h.delete_edge(0, 0).unwrap().delete_edge(0, 0).is_err());
        let cycle = PointedGraph::from_edges(2, &[(1, 0, 1), (0, 1, 1)]).unwrap();
        let broken = cycle.delete_edge(1, 0).unwrap();
        assert!(!broken.is_strongly_connected());
    }

    #[test]
    fn smoothing() {
        // • -> v -> • becomes a loop at •
        let path = PointedGraph::from_edges(2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        let s = path.smooth_vertex(1).unwrap();
        assert_eq!(s.vertex_count(), 1);
        assert_eq!(s.bullet_loops(), 1);

        // chain through two smoothable vertices
        let chain =
            PointedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let s = chain.smooth_all();
        assert_eq!(s.vertex_count(), 1);
        assert_eq!(s.bullet_loops(), 1);

        // u -> v -> u smooths to a loop at u
        let g = PointedGraph::from_edges(3, &[(1, 2, 1), (2, 1, 1), (1, 0, 1), (0, 1, 1)])
            .unwrap();
        let s = g.smooth_vertex(2).unwrap();
        assert_eq!(s.mult(1, 1), 1);

        // a vertex with a loop is not smoothable
        let lonely = PointedGraph::from_edges(2, &[(1, 1, 1)]).unwrap();
        assert!(lonely.smooth_vertex(1).is_err());
    }

    #[test]
    fn smoothing_bookkeeping() {
        let chain =
            PointedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 2, 0)]).unwrap();
        let before = (chain.edge_count(), chain.vertex_count(), chain.weight());
        let s = chain.smooth_vertex(1).unwrap();
        assert_eq!(s.edge_count(), before.0 - 1);
        assert_eq!(s.vertex_count(), before.1 - 1);
        assert_eq!(s.weight(), before.2);
    }

    #[test]
    fn contraction_and_stabilize() {
        // • -> v with v of indegree 1: merge v into •
        let g = PointedGraph::from_edges(
            2,
            &[(0, 1, 1), (1, 0, 2), (1, 1, 1), (0, 0, 1)],
        )
        .unwrap();
        assert!(g.is_contractible(0, 1));
        let c = g.contract_edge(0, 1).unwrap();
        assert_eq!(c.vertex_count(), 1);
        // v's loop and the two v -> • edges all become loops at •
        assert_eq!(c.bullet_loops(), 4);

        let stable = PointedGraph::from_edges(2, &[(1, 1, 1), (1, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(stable.stabilize().unwrap(), stable);
    }

    #[test]
    fn redundancy() {
        let one_loop = PointedGraph::bullet(1);
        assert!(one_loop.is_redundant(0, 0).unwrap());
        let cycle = PointedGraph::from_edges(2, &[(1, 0, 1), (0, 1, 1)]).unwrap();
        assert!(!cycle.is_redundant(1, 0).unwrap());
        let double = PointedGraph::from_edges(2, &[(1, 0, 2), (0, 1, 2)]).unwrap();
        assert!(double.is_redundant(1, 0).unwrap());
        assert!(cycle.is_redundant(1, 1).is_err());
    }

    #[test]
    fn orbit_counting_identity() {
        // orbit size under S_n times matrix-preserving permutations = n!
        let graphs = [
            MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap(),
            MultiDigraph::from_edges(2, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)]).unwrap(),
            MultiDigraph::from_edges(2, &[(0, 0, 2), (1, 1, 3)]).unwrap(),
            MultiDigraph::from_edges(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)]).unwrap(),
        ];
        for g in graphs {
            let n = g.vertex_count();
            let mut perms: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..n {
                let mut next = Vec::new();
                for p in &perms {
                    for v in 0..n {
                        if !p.contains(&v) {
                            let mut q = p.clone();
                            q.push(v);
                            next.push(q);
                        }
                    }
                }
                perms = next;
            }
            let mut orbit: Vec<Vec<u32>> = perms.iter().map(|p| g.apply_permutation(p).adj).collect();
            orbit.sort();
            orbit.dedup();
            let n_fact: usize = (1..=n).product();
            assert_eq!(orbit.len() as u64 * g.vertex_aut_count(), n_fact as u64);
        }
    }
}
