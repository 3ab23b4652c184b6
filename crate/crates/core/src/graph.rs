//! 3-graphs, 2-graphs and the degree / link-graph operations on them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A hyperedge stored with strictly increasing components.
pub type Triple = [Vertex; 3];

/// Map from an unordered vertex pair to the sorted list of vertices completing
/// it to a hyperedge.
#[derive(Debug, Clone, Default)]
pub struct PairIndex {
    n: usize,
    thirds: HashMap<(Vertex, Vertex), Vec<Vertex>>,
    vertex_degree: Vec<usize>,
}

fn pair_key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PairIndex {
    pub fn new(n: usize) -> Self {
        PairIndex {
            n,
            thirds: HashMap::new(),
            vertex_degree: vec![0; n],
        }
    }

    /// Record the edge `t`. The caller guarantees it is new and in range.
    pub fn insert(&mut self, t: Triple) {
        let [a, b, c] = t;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            let list = self.thirds.entry((x, y)).or_default();
            let pos = list.partition_point(|&w| w < z);
            list.insert(pos, z);
        }
        for v in t {
            self.vertex_degree[v] += 1;
        }
    }

    /// Forget the edge `t`, which must have been inserted before.
    pub fn remove(&mut self, t: Triple) {
        let [a, b, c] = t;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            if let Some(list) = self.thirds.get_mut(&(x, y)) {
                if let Ok(pos) = list.binary_search(&z) {
                    list.remove(pos);
                }
                if list.is_empty() {
                    self.thirds.remove(&(x, y));
                }
            }
        }
        for v in t {
            self.vertex_degree[v] -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertices `w` with `{a, b, w}` an edge, ascending.
    pub fn thirds(&self, a: Vertex, b: Vertex) -> &[Vertex] {
        self.thirds
            .get(&pair_key(a, b))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn codegree(&self, a: Vertex, b: Vertex) -> usize {
        self.thirds(a, b).len()
    }

    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.vertex_degree[v]
    }

    pub fn contains(&self, t: Triple) -> bool {
        self.thirds(t[0], t[1]).binary_search(&t[2]).is_ok()
    }
}

/// A 3-uniform hypergraph on the vertex set `0..n`.
///
/// Immutable after construction. The pair index used by the covering search is
/// built on first use and shared by all later queries.
#[derive(Clone)]
pub struct ThreeGraph {
    n: usize,
    edges: BTreeSet<Triple>,
    index: OnceLock<PairIndex>,
}

impl PartialEq for ThreeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for ThreeGraph {}

impl fmt::Debug for ThreeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ThreeGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

pub(crate) fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::Range { vertex: v, n })
    } else {
        Ok(())
    }
}

impl ThreeGraph {
    /// Validate and build. Triples may list their vertices in any order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut set = BTreeSet::new();
        for raw in edges {
            for &v in &raw {
                check_vertex(v, n)?;
            }
            let mut t = raw;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::MalformedEdge(raw.to_vec()));
            }
            if !set.insert(t) {
                return Err(Error::DuplicateEdge(t.to_vec()));
            }
        }
        Ok(Self::from_set(n, set))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_set(n, BTreeSet::new())
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut set = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    set.insert([a, b, c]);
                }
            }
        }
        Self::from_set(n, set)
    }

    /// The loose triangle itself on vertices `0..6`.
    pub fn loose_triangle() -> Self {
        Self::from_set(6, [[0, 1, 2], [2, 3, 4], [0, 4, 5]].into_iter().collect())
    }

    pub(crate) fn from_set(n: usize, edges: BTreeSet<Triple>) -> Self {
        ThreeGraph {
            n,
            edges,
            index: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order of their sorted triples.
    pub fn edges(&self) -> impl Iterator<Item = Triple> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, t: Triple) -> bool {
        let mut t = t;
        t.sort_unstable();
        self.edges.contains(&t)
    }

    /// A copy of this graph with one more edge.
    pub fn with_edge(&self, t: Triple) -> Result<Self> {
        Self::new(self.n, self.edges().chain(std::iter::once(t)))
    }

    pub fn pair_index(&self) -> &PairIndex {
        self.index.get_or_init(|| {
            let mut idx = PairIndex::new(self.n);
            for &t in &self.edges {
                idx.insert(t);
            }
            idx
        })
    }

    /// Number of edges containing the vertex set `s` (|s| ∈ {1, 2}).
    pub fn degree(&self, s: &[Vertex]) -> Result<usize> {
        for &v in s {
            check_vertex(v, self.n)?;
        }
        match *s {
            [v] => Ok(self.pair_index().vertex_degree(v)),
            [a, b] if a == b => Err(Error::BadArguments(format!(
                "pair {{{a}, {b}}} repeats a vertex"
            ))),
            [a, b] => Ok(self.pair_index().codegree(a, b)),
            _ => Err(Error::UnsupportedDegreeOrder(s.len())),
        }
    }

    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.pair_index().vertex_degree(v)
    }

    pub fn codegree(&self, a: Vertex, b: Vertex) -> usize {
        self.pair_index().codegree(a, b)
    }

    /// δ₁(G). Zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.vertex_degree(v))
            .min()
            .unwrap_or(0)
    }

    /// δ₂(G) over all pairs, including pairs of codegree zero. Zero when `n < 2`.
    pub fn min_codegree(&self) -> usize {
        let idx = self.pair_index();
        let mut best: Option<usize> = None;
        for a in 0..self.n {
            for b in a + 1..self.n {
                let d = idx.codegree(a, b);
                if d == 0 {
                    return 0;
                }
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best.unwrap_or(0)
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n < 2 {
            return Err(Error::TooFewVertices {
                needed: 2,
                got: self.n,
            });
        }
        let idx = self.pair_index();
        let degrees: Vec<usize> = (0..self.n).map(|v| idx.vertex_degree(v)).collect();
        let mut codegrees = BTreeMap::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                codegrees.insert((a, b), idx.codegree(a, b));
            }
        }
        Ok(DegreeProfile {
            min1: degrees.iter().copied().min().unwrap_or(0),
            min2: codegrees.values().copied().min().unwrap_or(0),
            degrees,
            codegrees,
        })
    }

    /// The link graph G_v on V ∖ {v}, labelled by host vertex.
    pub fn link_graph(&self, v: Vertex) -> Result<SimpleGraph> {
        check_vertex(v, self.n)?;
        let labels: Vec<Vertex> = (0..self.n).filter(|&w| w != v).collect();
        let pos = |w: Vertex| if w < v { w } else { w - 1 };
        let idx = self.pair_index();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for &a in &labels {
            for &b in idx.thirds(v, a) {
                adj[pos(a)].insert(pos(b));
            }
        }
        Ok(SimpleGraph::from_parts(labels, adj))
    }
}

/// Degree statistics of a 3-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min1: usize,
    pub min2: usize,
    pub degrees: Vec<usize>,
    pub codegrees: BTreeMap<(Vertex, Vertex), usize>,
}

/// A simple 2-graph whose nodes carry host-vertex labels.
///
/// Positions `0..len` index the nodes; every public query speaks in labels.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<Vertex>,
    position: BTreeMap<Vertex, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("labels", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    /// Build from labels and edges given as label pairs.
    pub fn new<I>(labels: Vec<Vertex>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut position = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            if position.insert(l, i).is_some() {
                return Err(Error::BadArguments(format!("label {l} repeated")));
            }
        }
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let pa = *position.get(&a).ok_or(Error::Range {
                vertex: a,
                n: labels.len(),
            })?;
            let pb = *position.get(&b).ok_or(Error::Range {
                vertex: b,
                n: labels.len(),
            })?;
            if pa == pb {
                return Err(Error::MalformedEdge(vec![a, b]));
            }
            if !adj[pa].insert(pb) {
                return Err(Error::DuplicateEdge(vec![a, b]));
            }
            adj[pb].insert(pa);
        }
        Ok(SimpleGraph {
            labels,
            position,
            adj,
        })
    }

    /// Nodes labelled `0..n`.
    pub fn with_vertices<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new((0..n).collect(), edges)
    }

    pub(crate) fn from_parts(labels: Vec<Vertex>, adj: Vec<BTreeSet<usize>>) -> Self {
        let position = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        SimpleGraph {
            labels,
            position,
            adj,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn contains(&self, label: Vertex) -> bool {
        self.position.contains_key(&label)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as label pairs, each listed once with the lower position first.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, nb)| {
            nb.range(i + 1..)
                .map(move |&j| (self.labels[i], self.labels[j]))
        })
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        match (self.position.get(&a), self.position.get(&b)) {
            (Some(&pa), Some(&pb)) => self.adj[pa].contains(&pb),
            _ => false,
        }
    }

    pub fn degree(&self, label: Vertex) -> Option<usize> {
        self.position.get(&label).map(|&p| self.adj[p].len())
    }

    /// Neighbour labels in position order.
    pub fn neighbors(&self, label: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.position
            .get(&label)
            .into_iter()
            .flat_map(move |&p| self.adj[p].iter().map(move |&q| self.labels[q]))
    }

    pub(crate) fn adjacency(&self) -> &[BTreeSet<usize>] {
        &self.adj
    }

    /// Induced subgraph on the nodes not in `removed`; labels are preserved.
    pub fn delete_vertices(&self, removed: &BTreeSet<Vertex>) -> Result<Self> {
        for &w in removed {
            if !self.contains(w) {
                return Err(Error::Range {
                    vertex: w,
                    n: self.len(),
                });
            }
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&p| !removed.contains(&self.labels[p]))
            .collect();
        let mut new_pos = vec![usize::MAX; self.len()];
        for (i, &p) in keep.iter().enumerate() {
            new_pos[p] = i;
        }
        let labels = keep.iter().map(|&p| self.labels[p]).collect();
        let adj = keep
            .iter()
            .map(|&p| {
                self.adj[p]
                    .iter()
                    .filter_map(|&q| (new_pos[q] != usize::MAX).then_some(new_pos[q]))
                    .collect()
            })
            .collect();
        Ok(Self::from_parts(labels, adj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> ThreeGraph {
        ThreeGraph::complete(n)
    }

    #[test]
    fn builds_the_loose_triangle() {
        let g = ThreeGraph::new(6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        assert_eq!(g, ThreeGraph::loose_triangle());
        assert_eq!(g.edge_count(), 3);
        assert!(ThreeGraph::new(5, []).unwrap().edges().next().is_none());
    }

    #[test]
    fn rejects_bad_triples() {
        assert_eq!(
            ThreeGraph::new(4, [[0, 1, 1]]),
            Err(Error::MalformedEdge(vec![0, 1, 1]))
        );
        assert!(matches!(
            ThreeGraph::new(4, [[0, 1, 4]]),
            Err(Error::Range { vertex: 4, n: 4 })
        ));
        assert_eq!(
            ThreeGraph::new(4, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge(vec![0, 1, 2]))
        );
    }

    #[test]
    fn degrees_of_small_graphs() {
        let c6 = ThreeGraph::loose_triangle();
        assert_eq!(c6.degree(&[2]).unwrap(), 2);
        assert_eq!(c6.degree(&[1]).unwrap(), 1);
        assert_eq!(k(6).degree(&[0, 1]).unwrap(), 4);
        assert_eq!(c6.degree(&[]), Err(Error::UnsupportedDegreeOrder(0)));
        assert_eq!(c6.degree(&[0, 1, 2]), Err(Error::UnsupportedDegreeOrder(3)));
        assert!(matches!(c6.degree(&[9]), Err(Error::Range { .. })));
    }

    #[test]
    fn degree_profiles() {
        let p = ThreeGraph::loose_triangle().degree_profile().unwrap();
        assert_eq!((p.min1, p.min2), (1, 0));
        assert_eq!(p.codegrees.len(), 15);
        let p = k(6).degree_profile().unwrap();
        assert_eq!((p.min1, p.min2), (10, 4));
        assert_eq!(
            ThreeGraph::empty(1).degree_profile(),
            Err(Error::TooFewVertices { needed: 2, got: 1 })
        );
    }

    #[test]
    fn link_of_a_spine_vertex() {
        let l = ThreeGraph::loose_triangle().link_graph(0).unwrap();
        assert_eq!(l.labels(), &[1, 2, 3, 4, 5]);
        let edges: Vec<_> = l.edges().collect();
        assert_eq!(edges, vec![(1, 2), (4, 5)]);
        let e = ThreeGraph::empty(5).link_graph(3).unwrap();
        assert_eq!((e.len(), e.edge_count()), (4, 0));
        assert!(ThreeGraph::empty(5).link_graph(5).is_err());
    }

    #[test]
    fn deleting_vertices() {
        let path = SimpleGraph::new(vec![10, 11, 12], [(10, 11), (11, 12)]).unwrap();
        let d = path.delete_vertices(&[11].into()).unwrap();
        assert_eq!(d.labels(), &[10, 12]);
        assert_eq!(d.edge_count(), 0);
        assert_eq!(path.delete_vertices(&BTreeSet::new()).unwrap(), path);
        let tri = SimpleGraph::with_vertices(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = tri.delete_vertices(&[0].into()).unwrap();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(tri.delete_vertices(&[7].into()).is_err());
    }

    #[test]
    fn simple_graph_validation() {
        assert!(SimpleGraph::with_vertices(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::with_vertices(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(vec![1, 1], []).is_err());
        assert!(SimpleGraph::with_vertices(2, [(0, 2)]).is_err());
    }
}
