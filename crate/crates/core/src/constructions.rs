//! The two extremal 3-graphs without a C6³-covering, and Turán graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::one_minus_half_sqrt2_floor;
use crate::graph::{SimpleGraph, ThreeGraph, Triple, Vertex};
use crate::patterns::turan_parts;

/// All triples `{0, i, j}`: vertex 0 is the apex `x`, every edge contains it.
pub fn construction1(n: usize) -> Result<ThreeGraph> {
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, got: n });
    }
    let edges = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| [0, i, j]))
        .collect();
    Ok(ThreeGraph::from_set(n, edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Part {
    Apex,
    A1,
    A2,
    B1,
    B2,
}

/// Part sizes and the vertex layout of the second construction.
///
/// Vertex 0 is the apex `u`; then A₁, A₂, B₁, B₂ occupy consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction2Params {
    pub n: usize,
    pub b: usize,
    pub a_floor: usize,
    pub a_ceil: usize,
    pub apex: Vertex,
}

impl Construction2Params {
    pub fn new(n: usize) -> Result<Self> {
        if n < 7 {
            return Err(Error::TooFewVertices { needed: 7, got: n });
        }
        let b = one_minus_half_sqrt2_floor(n as u64) as usize;
        let a_total = n - 1 - 2 * b;
        let params = Construction2Params {
            n,
            b,
            a_floor: a_total / 2,
            a_ceil: a_total.div_ceil(2),
            apex: 0,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.n >= 7
            && self.b == one_minus_half_sqrt2_floor(self.n as u64) as usize
            && self.a_floor >= 1
            && self.b >= 1
            && self.a_floor + self.a_ceil + 2 * self.b + 1 == self.n
            && self.a_ceil - self.a_floor <= 1
            && self.apex == 0;
        if ok {
            Ok(())
        } else {
            Err(Error::BadArguments(format!(
                "inconsistent parameters {self:?}"
            )))
        }
    }

    pub fn block(&self, part: Part) -> std::ops::Range<Vertex> {
        let a1 = 1;
        let a2 = a1 + self.a_floor;
        let b1 = a2 + self.a_ceil;
        let b2 = b1 + self.b;
        match part {
            Part::Apex => 0..1,
            Part::A1 => a1..a2,
            Part::A2 => a2..b1,
            Part::B1 => b1..b2,
            Part::B2 => b2..self.n,
        }
    }

    pub fn part_of(&self, v: Vertex) -> Option<Part> {
        [Part::Apex, Part::A1, Part::A2, Part::B1, Part::B2]
            .into_iter()
            .find(|&p| self.block(p).contains(&v))
    }
}

fn pairs(r: std::ops::Range<Vertex>) -> impl Iterator<Item = (Vertex, Vertex)> + Clone {
    r.clone()
        .flat_map(move |i| (i + 1..r.end).map(move |j| (i, j)))
}

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

/// {u}∨A₁∨A₂ ∪ A₁∨C(B₁,2) ∪ A₂∨C(B₂,2) ∪ C(B₁∪B₂,3).
pub fn construction2(n: usize) -> Result<(ThreeGraph, Construction2Params)> {
    let p = Construction2Params::new(n)?;
    let mut edges = BTreeSet::new();
    for a1 in p.block(Part::A1) {
        for a2 in p.block(Part::A2) {
            edges.insert([p.apex, a1, a2]);
        }
    }
    for (side_a, side_b) in [(Part::A1, Part::B1), (Part::A2, Part::B2)] {
        for a in p.block(side_a) {
            for (x, y) in pairs(p.block(side_b)) {
                edges.insert(sorted([a, x, y]));
            }
        }
    }
    let b_all = p.block(Part::B1).start..n;
    for (x, y) in pairs(b_all.clone()) {
        for z in y + 1..b_all.end {
            edges.insert([x, y, z]);
        }
    }
    Ok((ThreeGraph::from_set(n, edges), p))
}

/// Closed-form vertex degrees of the second construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Construction2Degrees {
    pub apex: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
}

impl Construction2Degrees {
    pub fn of_part(&self, part: Part) -> usize {
        match part {
            Part::Apex => self.apex,
            Part::A1 => self.a1,
            Part::A2 => self.a2,
            Part::B1 => self.b1,
            Part::B2 => self.b2,
        }
    }

    pub fn min(&self) -> usize {
        [self.apex, self.a1, self.a2, self.b1, self.b2]
            .into_iter()
            .min()
            .unwrap()
    }
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

pub fn construction2_degree_formulas(p: &Construction2Params) -> Result<Construction2Degrees> {
    p.validate()?;
    let b_pairs = choose2(p.b);
    // A B-vertex sees its own A-side times the other b−1 vertices of its half,
    // plus every pair from the other 2b−1 B-vertices.
    let b_common = choose2(2 * p.b - 1);
    Ok(Construction2Degrees {
        apex: p.a_floor * p.a_ceil,
        a1: p.a_ceil + b_pairs,
        a2: p.a_floor + b_pairs,
        b1: p.a_floor * (p.b - 1) + b_common,
        b2: p.a_ceil * (p.b - 1) + b_common,
    })
}

/// Complete r-partite 2-graph with near-equal parts, larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<SimpleGraph> {
    let parts = turan_parts(n, r)?;
    let mut owner = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        owner.extend(std::iter::repeat_n(i, size));
    }
    let edges = (0..n).flat_map(|a| {
        let owner = &owner;
        (a + 1..n).filter_map(move |b| (owner[a] != owner[b]).then_some((a, b)))
    });
    SimpleGraph::with_vertices(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::turan_edge_count;

    #[test]
    fn first_construction() {
        let g = construction1(6).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.min_codegree(), 1);
        assert_eq!(
            construction1(3).unwrap().edges().collect::<Vec<_>>(),
            vec![[0, 1, 2]]
        );
        assert_eq!(construction1(10).unwrap().edge_count(), 36);
        assert!(construction1(2).is_err());
        let link = g.link_graph(0).unwrap();
        assert_eq!(link.edge_count(), 10);
    }

    #[test]
    fn second_construction_parameters() {
        let (g, p) = construction2(24).unwrap();
        assert_eq!((p.b, p.a_floor, p.a_ceil), (7, 4, 5));
        assert_eq!(g.vertex_degree(0), 20);
        let (_, p) = construction2(7).unwrap();
        assert_eq!((p.a_floor, p.a_ceil, p.b), (1, 1, 2));
        assert!(matches!(
            construction2(6),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn second_construction_degrees() {
        let (g, p) = construction2(24).unwrap();
        let d = construction2_degree_formulas(&p).unwrap();
        assert_eq!((d.apex, d.a1, d.b1), (20, 26, 102));
        let profile = g.degree_profile().unwrap();
        for v in 0..24 {
            let part = p.part_of(v).unwrap();
            assert_eq!(
                profile.degrees[v],
                d.of_part(part),
                "vertex {v} in {part:?}"
            );
        }
        assert_eq!(profile.min1, 20);
    }

    #[test]
    fn turan_graphs() {
        let t = turan_graph(6, 2).unwrap();
        assert_eq!(t.edge_count(), 9);
        assert_eq!(turan_graph(4, 4).unwrap().edge_count(), 6);
        assert_eq!(turan_graph(7, 3).unwrap().edge_count(), 16);
        assert_eq!(
            turan_graph(7, 3).unwrap().edge_count() as u64,
            turan_edge_count(7, 3).unwrap()
        );
        assert!(turan_graph(3, 0).is_err());
        assert_eq!(turan_graph(0, 2).unwrap().len(), 0);
    }
}
