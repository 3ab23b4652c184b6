//! Bitmask encoding of 3-graphs on at most eight vertices.
//!
//! Triples are ranked colexicographically: `{a < b < c}` has rank
//! `C(c,3) + C(b,2) + a`, so the triples of `0..n` form a prefix of the
//! triples of `0..n+1`. Bit `i` of a mask is the triple of rank `i`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{ThreeGraph, Triple, Vertex};

pub const MAX_MASK_VERTICES: usize = 8;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn triple_rank(t: Triple) -> usize {
    let [a, b, c] = t;
    binomial(c, 3) + binomial(b, 2) + a
}

/// Triples of `0..n` in colex order.
pub fn colex_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::with_capacity(binomial(n, 3));
    for c in 0..n {
        for b in 0..c {
            for a in 0..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<Vertex>> {
    fn rec(prefix: &mut Vec<Vertex>, used: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Precomputed tables for masks over a fixed vertex count.
#[derive(Debug, Clone)]
pub struct MaskSpace {
    n: usize,
    triples: Vec<Triple>,
    vertex_masks: Vec<u64>,
    pair_masks: Vec<u64>,
    /// Edge masks of every labelled C6³ containing the vertex.
    copies_through: Vec<Vec<u64>>,
}

impl MaskSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_MASK_VERTICES {
            return Err(Error::TooLarge(format!(
                "bitmask encoding supports n ≤ {MAX_MASK_VERTICES}, got {n}"
            )));
        }
        let triples = colex_triples(n);
        let mut vertex_masks = vec![0u64; n];
        let mut pair_masks = Vec::new();
        for (i, t) in triples.iter().enumerate() {
            for &v in t {
                vertex_masks[v] |= 1 << i;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let m = triples
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.contains(&a) && t.contains(&b))
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                pair_masks.push(m);
            }
        }
        let copies = Self::loose_triangle_copies(n);
        let copies_through = (0..n)
            .map(|v| {
                copies
                    .iter()
                    .filter(|&&(vs, _)| vs & (1 << v) != 0)
                    .map(|&(_, m)| m)
                    .collect()
            })
            .collect();
        Ok(MaskSpace {
            n,
            triples,
            vertex_masks,
            pair_masks,
            copies_through,
        })
    }

    /// Every labelled copy as (vertex-set mask, edge mask), deduplicated.
    fn loose_triangle_copies(n: usize) -> Vec<(u32, u64)> {
        let mut seen = BTreeSet::new();
        if n < 6 {
            return Vec::new();
        }
        let mut roles = [0usize; 6];
        fn rec(n: usize, depth: usize, roles: &mut [usize; 6], seen: &mut BTreeSet<(u64, u32)>) {
            if depth == 6 {
                let r = *roles;
                let mut m = 0u64;
                for mut e in [[r[0], r[1], r[2]], [r[2], r[3], r[4]], [r[4], r[5], r[0]]] {
                    e.sort_unstable();
                    m |= 1 << triple_rank(e);
                }
                let vs = r.iter().fold(0u32, |acc, &v| acc | 1 << v);
                seen.insert((m, vs));
                return;
            }
            for v in 0..n {
                if !roles[..depth].contains(&v) {
                    roles[depth] = v;
                    rec(n, depth + 1, roles, seen);
                }
            }
        }
        rec(n, 0, &mut roles, &mut seen);
        seen.into_iter().map(|(m, vs)| (vs, m)).collect()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn copies_through(&self, v: Vertex) -> &[u64] {
        &self.copies_through[v]
    }

    pub fn vertex_mask(&self, v: Vertex) -> u64 {
        self.vertex_masks[v]
    }

    pub fn pair_masks(&self) -> &[u64] {
        &self.pair_masks
    }

    pub fn min_degree(&self, mask: u64) -> usize {
        self.vertex_masks
            .iter()
            .map(|&m| (mask & m).count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn min_codegree(&self, mask: u64) -> usize {
        self.pair_masks
            .iter()
            .map(|&m| (mask & m).count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn covers(&self, mask: u64, v: Vertex) -> bool {
        self.copies_through[v].iter().any(|&c| c & !mask == 0)
    }

    pub fn fully_covered(&self, mask: u64) -> bool {
        (0..self.n).all(|v| self.covers(mask, v))
    }

    pub fn first_uncovered(&self, mask: u64) -> Option<Vertex> {
        (0..self.n).find(|&v| !self.covers(mask, v))
    }

    pub fn to_graph(&self, mask: u64) -> ThreeGraph {
        let edges = (0..self.width())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| self.triples[i])
            .collect();
        ThreeGraph::from_set(self.n, edges)
    }

    pub fn mask_of(&self, g: &ThreeGraph) -> Result<u64> {
        if g.order() != self.n {
            return Err(Error::BadArguments(format!(
                "graph has {} vertices, mask space {}",
                g.order(),
                self.n
            )));
        }
        Ok(g.edges().fold(0u64, |m, t| m | 1 << triple_rank(t)))
    }
}

/// Relabelling action on masks, used to pick the least mask of each
/// isomorphism class.
#[derive(Debug, Clone)]
pub struct Canonizer {
    /// For every vertex permutation, the image rank of each triple rank.
    actions: Vec<Vec<u8>>,
}

impl Canonizer {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_MASK_VERTICES {
            return Err(Error::TooLarge(format!(
                "canonical enumeration supports n ≤ {MAX_MASK_VERTICES}, got {n}"
            )));
        }
        let triples = colex_triples(n);
        let actions = all_permutations(n)
            .into_iter()
            .map(|p| {
                triples
                    .iter()
                    .map(|t| {
                        let mut img = [p[t[0]], p[t[1]], p[t[2]]];
                        img.sort_unstable();
                        triple_rank(img) as u8
                    })
                    .collect()
            })
            .collect();
        Ok(Canonizer { actions })
    }

    fn apply(action: &[u8], mask: u64) -> u64 {
        let mut rest = mask;
        let mut out = 0u64;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << action[i];
        }
        out
    }

    /// Is `mask` the numerically least mask among all its relabellings?
    pub fn is_canonical(&self, mask: u64) -> bool {
        self.actions.iter().all(|a| Self::apply(a, mask) >= mask)
    }

    pub fn canonical_form(&self, mask: u64) -> u64 {
        self.actions
            .iter()
            .map(|a| Self::apply(a, mask))
            .min()
            .unwrap_or(mask)
    }
}
