//! Checkable predicates for the link-partition argument around an uncovered
//! vertex `u`: the component sets M₀, I₀, M(v), I(v), private vertices, the
//! good/bad edge classes, and the two structural claims built on them.
//!
//! Subtracting a set of components always means deleting their vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::covering::find_c6_through;
use crate::error::{Error, Result};
use crate::exact::{below_sqrt, eq1_ceiling};
use crate::graph::{check_vertex, SimpleGraph, ThreeGraph, Vertex};
use crate::patterns::{components, find_p5, find_two_disjoint_p3, ComponentKind, ComponentReport};

pub type Pair = (Vertex, Vertex);

fn ordered(a: Vertex, b: Vertex) -> Pair {
    (a.min(b), a.max(b))
}

fn k2_pairs(report: &ComponentReport) -> BTreeSet<Pair> {
    report
        .of_kind(ComponentKind::K2)
        .map(|c| {
            let mut it = c.vertices.iter().copied();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            ordered(a, b)
        })
        .collect()
}

fn k1_vertices(report: &ComponentReport) -> BTreeSet<Vertex> {
    report
        .of_kind(ComponentKind::K1)
        .flat_map(|c| c.vertices.iter().copied())
        .collect()
}

/// The component bookkeeping around a pair (u, v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub u: Vertex,
    pub v: Vertex,
    /// K₂-components of G_u.
    pub m0: BTreeSet<Pair>,
    /// Isolated vertices of G_u.
    pub i0: BTreeSet<Vertex>,
    /// K₂-components of G_u − v − V(M₀).
    pub mv: BTreeSet<Pair>,
    /// Isolated vertices of G_u − v − I₀.
    pub iv: BTreeSet<Vertex>,
    /// Private vertices: members of I₀ ∪ I(v) with degree ≥ 2 in G_v − u.
    pub xv: BTreeSet<Vertex>,
    /// (I₀ ∪ I(v)) ∖ X(v).
    pub jv: BTreeSet<Vertex>,
    /// d_{G_u}(v).
    pub link_degree: usize,
    /// G_v − u.
    pub h: SimpleGraph,
}

impl VertexPartition {
    pub fn isolated_union(&self) -> BTreeSet<Vertex> {
        self.i0.union(&self.iv).copied().collect()
    }
}

fn check_pair(g: &ThreeGraph, u: Vertex, v: Vertex) -> Result<()> {
    check_vertex(u, g.order())?;
    check_vertex(v, g.order())?;
    if u == v {
        return Err(Error::BadArguments(format!(
            "u and v must differ, both are {u}"
        )));
    }
    Ok(())
}

pub fn partition_around(g: &ThreeGraph, u: Vertex, v: Vertex) -> Result<VertexPartition> {
    check_pair(g, u, v)?;
    let link_u = g.link_graph(u)?;
    partition_with_link(g, &link_u, &components(&link_u), u, v)
}

fn partition_with_link(
    g: &ThreeGraph,
    link_u: &SimpleGraph,
    comps: &ComponentReport,
    u: Vertex,
    v: Vertex,
) -> Result<VertexPartition> {
    let m0 = k2_pairs(comps);
    let i0 = k1_vertices(comps);

    let mut drop_m: BTreeSet<Vertex> = m0.iter().flat_map(|&(a, b)| [a, b]).collect();
    drop_m.insert(v);
    let mv = k2_pairs(&components(&link_u.delete_vertices(&drop_m)?));

    let mut drop_i = i0.clone();
    drop_i.insert(v);
    let iv = k1_vertices(&components(&link_u.delete_vertices(&drop_i)?));

    let h = g.link_graph(v)?.delete_vertices(&[u].into())?;
    let union: BTreeSet<Vertex> = i0.union(&iv).copied().collect();
    let xv: BTreeSet<Vertex> = union
        .iter()
        .copied()
        .filter(|&w| w != v && h.degree(w).unwrap_or(0) >= 2)
        .collect();
    let jv = union.difference(&xv).copied().collect();
    Ok(VertexPartition {
        u,
        v,
        m0,
        i0,
        mv,
        iv,
        xv,
        jv,
        link_degree: link_u.degree(v).unwrap_or(0),
        h,
    })
}

/// Outcome of a claim check; `offending` lists the vertex tuples that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub holds: bool,
    pub offending: Vec<Vec<Vertex>>,
}

impl ClaimVerdict {
    fn from_offending(offending: Vec<Vec<Vertex>>) -> Self {
        ClaimVerdict {
            holds: offending.is_empty(),
            offending,
        }
    }
}

fn require_uncovered(g: &ThreeGraph, u: Vertex) -> Result<()> {
    if let Some(w) = find_c6_through(g, u)? {
        return Err(Error::PreconditionViolated(format!(
            "vertex {u} is covered by {:?}",
            w.roles
        )));
    }
    Ok(())
}

/// Every edge of G_v − u is a pair from M₀ ∪ M(v) or lies inside I₀ ∪ I(v).
///
/// Needs `u` uncovered and d_{G_u}(v) ≥ 4.
pub fn check_claim_4_1(g: &ThreeGraph, u: Vertex, v: Vertex) -> Result<ClaimVerdict> {
    check_pair(g, u, v)?;
    require_uncovered(g, u)?;
    let p = partition_around(g, u, v)?;
    if p.link_degree < 4 {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} has degree {} < 4 in the link of {u}",
            p.link_degree
        )));
    }
    Ok(claim_4_1_on(&p))
}

fn claim_4_1_on(p: &VertexPartition) -> ClaimVerdict {
    let isolated = p.isolated_union();
    let offending =
        p.h.edges()
            .map(|(a, b)| ordered(a, b))
            .filter(|e| {
                !(p.m0.contains(e)
                    || p.mv.contains(e)
                    || (isolated.contains(&e.0) && isolated.contains(&e.1)))
            })
            .map(|(a, b)| vec![a, b])
            .collect();
    ClaimVerdict::from_offending(offending)
}

/// Good/bad status and the E₁/E₂/E₃ split of the edges of G_u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub u: Vertex,
    /// |I(v)| for every vertex of G_u.
    pub i_sizes: BTreeMap<Vertex, usize>,
    /// Good iff |I(v)|² < n.
    pub good: BTreeMap<Vertex, bool>,
    /// Edges with a bad endpoint.
    pub e1: BTreeSet<Pair>,
    /// Good edges with an endpoint of degree ≤ 3 in G_u.
    pub e2: BTreeSet<Pair>,
    pub e3: BTreeSet<Pair>,
    /// I(v) for every vertex of G_u, kept for the disjointness check.
    pub i_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl EdgeClassification {
    pub fn bad_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.good.iter().filter(|(_, &g)| !g).map(|(&v, _)| v)
    }
}

pub fn classify_edges(g: &ThreeGraph, u: Vertex) -> Result<EdgeClassification> {
    check_vertex(u, g.order())?;
    let n = g.order() as u64;
    let link_u = g.link_graph(u)?;
    let comps = components(&link_u);
    let mut i_sizes = BTreeMap::new();
    let mut i_sets = BTreeMap::new();
    let mut good = BTreeMap::new();
    for &v in link_u.labels() {
        let p = partition_with_link(g, &link_u, &comps, u, v)?;
        i_sizes.insert(v, p.iv.len());
        good.insert(v, below_sqrt(p.iv.len() as u64, n));
        i_sets.insert(v, p.iv);
    }
    let (mut e1, mut e2, mut e3) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
    for (a, b) in link_u.edges() {
        let e = ordered(a, b);
        if !good[&a] || !good[&b] {
            e1.insert(e);
        } else if link_u.degree(a).unwrap() <= 3 || link_u.degree(b).unwrap() <= 3 {
            e2.insert(e);
        } else {
            e3.insert(e);
        }
    }
    Ok(EdgeClassification {
        u,
        i_sizes,
        good,
        e1,
        e2,
        e3,
        i_sets,
    })
}

/// X(v₁) ∩ X(v₂) = ∅ for an E₃ edge v₁v₂ of the link of an uncovered `u`.
pub fn check_claim_4_2(g: &ThreeGraph, u: Vertex, v1: Vertex, v2: Vertex) -> Result<ClaimVerdict> {
    check_pair(g, u, v1)?;
    check_pair(g, u, v2)?;
    require_uncovered(g, u)?;
    let classes = classify_edges(g, u)?;
    if !classes.e3.contains(&ordered(v1, v2)) {
        return Err(Error::PreconditionViolated(format!(
            "{{{v1}, {v2}}} is not an E3 edge of the link of {u}"
        )));
    }
    let x1 = partition_around(g, u, v1)?.xv;
    let x2 = partition_around(g, u, v2)?.xv;
    Ok(ClaimVerdict::from_offending(
        x1.intersection(&x2).map(|&w| vec![w]).collect(),
    ))
}

/// With δ₂(G) ≥ 2: `v` is covered, or its link has neither a P₅ nor a 2P₃.
///
/// `false` is a counterexample.
pub fn check_lemma_3_1(g: &ThreeGraph, v: Vertex) -> Result<bool> {
    check_vertex(v, g.order())?;
    let codegree = g.min_codegree();
    if codegree < 2 {
        return Err(Error::PreconditionViolated(format!(
            "minimum codegree is {codegree}, needs ≥ 2"
        )));
    }
    if find_c6_through(g, v)?.is_some() {
        return Ok(true);
    }
    let link = g.link_graph(v)?;
    Ok(find_p5(&link).is_none() && find_two_disjoint_p3(&link).is_none())
}

/// ⌈(1 − √2/2)·n + √n⌉, exactly.
pub fn eq1_lower_bound(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Parameter("needs n ≥ 1".into()));
    }
    Ok(eq1_ceiling(n))
}
