//! Fixed-pattern detection in 2-graphs: P₅, two disjoint P₃'s, components,
//! triangles, and Turán numbers with a brute-force cross-check.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

/// A path given by host labels; consecutive labels are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
}

impl PathWitness {
    /// Checks distinctness and that every consecutive pair is an edge of `h`.
    pub fn validates(&self, h: &SimpleGraph) -> bool {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len()
            && self.vertices.iter().all(|&v| h.contains(v))
            && self.vertices.windows(2).all(|w| h.has_edge(w[0], w[1]))
    }
}

fn extend_path(adj: &[BTreeSet<usize>], path: &mut Vec<usize>, target: usize) -> bool {
    if path.len() == target {
        return true;
    }
    let last = *path.last().unwrap();
    for &next in &adj[last] {
        if path.contains(&next) {
            continue;
        }
        path.push(next);
        if extend_path(adj, path, target) {
            return true;
        }
        path.pop();
    }
    false
}

/// First path on `k` vertices in DFS order (ascending positions).
fn find_path(h: &SimpleGraph, k: usize) -> Option<PathWitness> {
    let adj = h.adjacency();
    for start in 0..h.len() {
        let mut path = vec![start];
        if extend_path(adj, &mut path, k) {
            return Some(PathWitness {
                vertices: path.iter().map(|&p| h.labels()[p]).collect(),
            });
        }
    }
    None
}

pub fn find_p5(h: &SimpleGraph) -> Option<PathWitness> {
    find_path(h, 5)
}

/// First P₃ (as positions `[end, center, end]`) avoiding `blocked`.
fn first_p3(adj: &[BTreeSet<usize>], blocked: &[usize]) -> Option<[usize; 3]> {
    for (center, nbrs) in adj.iter().enumerate() {
        if blocked.contains(&center) {
            continue;
        }
        let mut free = nbrs.iter().filter(|q| !blocked.contains(q));
        if let (Some(&a), Some(&b)) = (free.next(), free.next()) {
            return Some([a, center, b]);
        }
    }
    None
}

/// Two vertex-disjoint P₃'s, if any.
///
/// Backtracks over the choice of the first path; the second is any P₃ in
/// what remains.
pub fn find_two_disjoint_p3(h: &SimpleGraph) -> Option<(PathWitness, PathWitness)> {
    let adj = h.adjacency();
    let label = |p: [usize; 3]| PathWitness {
        vertices: p.iter().map(|&q| h.labels()[q]).collect(),
    };
    for center in 0..adj.len() {
        let nb: Vec<usize> = adj[center].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let first = [a, center, b];
                if let Some(second) = first_p3(adj, &first) {
                    return Some((label(first), label(second)));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    K1,
    K2,
    K3,
    /// Four vertices with minimum degree two, hence a spanning 4-cycle.
    C4Like,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: BTreeSet<Vertex>,
    pub kind: ComponentKind,
    pub edge_count: usize,
    pub has_cycle: bool,
    /// Vertices on a longest path; `None` when the component is too large to
    /// search exhaustively.
    pub longest_path: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentReport {
    pub components: Vec<Component>,
}

impl ComponentReport {
    pub fn of_kind(&self, kind: ComponentKind) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(move |c| c.kind == kind)
    }
}

const LONGEST_PATH_LIMIT: usize = 10;

/// Vertex count of a longest path, by DP over (visited set, endpoint).
fn longest_path(adj: &[BTreeSet<usize>], members: &[usize]) -> usize {
    let k = members.len();
    let local: Vec<u16> = members
        .iter()
        .map(|&p| {
            adj[p]
                .iter()
                .filter_map(|q| members.iter().position(|m| m == q))
                .fold(0u16, |acc, i| acc | 1 << i)
        })
        .collect();
    let mut reach = vec![0u16; 1 << k];
    let mut best = 0;
    for v in 0..k {
        reach[1 << v] |= 1 << v;
    }
    for set in 1usize..1 << k {
        let ends = reach[set];
        if ends == 0 {
            continue;
        }
        best = best.max(set.count_ones() as usize);
        for v in (0..k).filter(|v| ends >> v & 1 == 1) {
            let mut next = local[v] & !(set as u16);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[set | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// Connected components ordered by smallest position, classified.
pub fn components(h: &SimpleGraph) -> ComponentReport {
    let adj = h.adjacency();
    let mut seen = vec![false; h.len()];
    let mut components = Vec::new();
    for root in 0..h.len() {
        if seen[root] {
            continue;
        }
        let mut members = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < members.len() {
            for &q in &adj[members[i]] {
                if !seen[q] {
                    seen[q] = true;
                    members.push(q);
                }
            }
            i += 1;
        }
        let size = members.len();
        let edge_count = members.iter().map(|&p| adj[p].len()).sum::<usize>() / 2;
        let min_deg = members.iter().map(|&p| adj[p].len()).min().unwrap_or(0);
        let kind = match (size, edge_count) {
            (1, 0) => ComponentKind::K1,
            (2, 1) => ComponentKind::K2,
            (3, 3) => ComponentKind::K3,
            (4, _) if min_deg >= 2 => ComponentKind::C4Like,
            _ => ComponentKind::Other,
        };
        let longest_path = (size <= LONGEST_PATH_LIMIT).then(|| longest_path(adj, &members));
        components.push(Component {
            vertices: members.iter().map(|&p| h.labels()[p]).collect(),
            kind,
            edge_count,
            has_cycle: edge_count >= size,
            longest_path,
        });
    }
    ComponentReport { components }
}

pub fn min_degree_2graph(h: &SimpleGraph) -> Result<usize> {
    h.adjacency()
        .iter()
        .map(BTreeSet::len)
        .min()
        .ok_or(Error::TooFewVertices { needed: 1, got: 0 })
}

pub fn is_triangle_free(h: &SimpleGraph) -> bool {
    let adj = h.adjacency();
    adj.iter().enumerate().all(|(a, na)| {
        na.range(a + 1..)
            .all(|&b| adj[b].range(b + 1..).all(|c| !na.contains(c)))
    })
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Part sizes of T(n, r), larger parts first.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r < 1 {
        return Err(Error::Parameter(format!(
            "Turán graph needs r ≥ 1, got {r}"
        )));
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| q + usize::from(i < rem)).collect())
}

/// e(T(n, r)) = C(n, 2) − Σ C(part, 2).
pub fn turan_edge_count(n: usize, r: usize) -> Result<u64> {
    let parts = turan_parts(n, r)?;
    Ok(choose2(n as u64) - parts.iter().map(|&p| choose2(p as u64)).sum::<u64>())
}

/// Is there a clique on `size` vertices inside `candidates` (bitmask)?
fn has_clique(adj: &[u16], candidates: u16, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < size {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], size - 1) {
            return true;
        }
    }
    false
}

struct CliqueFreeSearch {
    pairs: Vec<(usize, usize)>,
    clique: usize,
    adj: Vec<u16>,
    best: usize,
}

impl CliqueFreeSearch {
    fn run(&mut self, i: usize, edges: usize) {
        if edges + (self.pairs.len() - i) <= self.best {
            return;
        }
        if i == self.pairs.len() {
            self.best = edges;
            return;
        }
        let (a, b) = self.pairs[i];
        // Adding ab creates a K_{r+1} iff their common neighbourhood holds a K_{r-1}.
        let common = self.adj[a] & self.adj[b];
        if !has_clique(&self.adj, common, self.clique - 2) {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
            self.run(i + 1, edges + 1);
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
        self.run(i + 1, edges);
    }
}

/// Maximum edge count of a K_{r+1}-free labelled graph on `n ≤ 8` vertices.
///
/// Exhaustive include/exclude search over all vertex pairs; a branch is cut
/// only when it cannot beat the best count already found.
pub fn max_edges_clique_free_bruteforce(n: usize, r: usize) -> Result<u64> {
    if n > 8 {
        return Err(Error::TooLarge(format!(
            "brute-force clique-free search supports n ≤ 8, got {n}"
        )));
    }
    if r < 1 {
        return Err(Error::Parameter(format!("needs r ≥ 1, got {r}")));
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut search = CliqueFreeSearch {
        pairs,
        clique: r + 1,
        adj: vec![0; n],
        best: 0,
    };
    if r == 1 {
        // K₂-free means edgeless.
        return Ok(0);
    }
    search.run(0, 0);
    Ok(search.best as u64)
}
