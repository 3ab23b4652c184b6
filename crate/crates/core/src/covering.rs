//! Deciding whether vertices lie in a copy of the loose triangle C6³.
//!
//! [`find_c6_through`] is the exhaustive oracle. [`fast_witness_via_link`]
//! builds a copy directly from a P₅ or 2P₃ in the link graph and is only
//! sound when every pair has codegree at least two.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{check_vertex, PairIndex, ThreeGraph, Triple, Vertex};
use crate::patterns::{find_p5, find_two_disjoint_p3};

/// An embedded C6³ with edges v₁v₂v₃, v₃v₄v₅, v₅v₆v₁.
///
/// `roles[i]` is the host vertex playing v_{i+1}; v₁, v₃, v₅ are the spine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C6Witness {
    pub roles: [Vertex; 6],
}

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

impl C6Witness {
    pub fn edges(&self) -> [Triple; 3] {
        let r = self.roles;
        [
            sorted([r[0], r[1], r[2]]),
            sorted([r[2], r[3], r[4]]),
            sorted([r[4], r[5], r[0]]),
        ]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.roles.contains(&v)
    }

    /// Six distinct vertices whose three pattern edges all lie in `g`.
    pub fn validates(&self, g: &ThreeGraph) -> bool {
        let mut seen = self.roles;
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
            && self.roles.iter().all(|&v| v < g.order())
            && self.edges().iter().all(|&e| g.has_edge(e))
    }
}

/// Entries of `list` outside `avoid`, in order.
fn pick<'a>(list: &'a [Vertex], avoid: &'a [Vertex]) -> impl Iterator<Item = Vertex> + 'a {
    list.iter().copied().filter(move |w| !avoid.contains(w))
}

/// Exhaustive search for a C6³ through `u` using only codegree lookups.
///
/// Spine role first (u = v₁), then leaf role (u = v₂); candidates ascend, so
/// the witness is deterministic.
pub fn find_c6_in_index(idx: &PairIndex, u: Vertex) -> Option<C6Witness> {
    let n = idx.order();
    if n < 6 {
        return None;
    }
    let link: Vec<Vertex> = (0..n)
        .filter(|&s| s != u && idx.codegree(u, s) > 0)
        .collect();

    // u = v₁: edges u·a·s, s·l·t, t·c·u with a, l, c distinct and outside {u, s, t}.
    // If a system of distinct representatives exists, one exists among the
    // first three admissible entries of each list.
    for (i, &s) in link.iter().enumerate() {
        for &t in &link[i + 1..] {
            let l_all = idx.thirds(s, t);
            if l_all.iter().all(|&w| w == u) {
                continue;
            }
            let a_list: Vec<_> = pick(idx.thirds(u, s), &[t]).take(3).collect();
            let c_list: Vec<_> = pick(idx.thirds(u, t), &[s]).take(3).collect();
            let l_list: Vec<_> = pick(l_all, &[u]).take(3).collect();
            for &a in &a_list {
                for &c in c_list.iter().filter(|&&c| c != a) {
                    if let Some(l) = l_list.iter().copied().find(|&l| l != a && l != c) {
                        return Some(C6Witness {
                            roles: [u, a, s, l, t, c],
                        });
                    }
                }
            }
        }
    }

    // u = v₂: edge s·u·t, then t·x·r and r·y·s for some further spine vertex r.
    for &s in &link {
        for &t in idx.thirds(u, s).iter().filter(|&&t| t > s) {
            for r in 0..n {
                if r == u || r == s || r == t {
                    continue;
                }
                let x_list: Vec<_> = pick(idx.thirds(t, r), &[u, s]).take(2).collect();
                if x_list.is_empty() {
                    continue;
                }
                let y_list: Vec<_> = pick(idx.thirds(r, s), &[u, t]).take(2).collect();
                for &x in &x_list {
                    if let Some(y) = y_list.iter().copied().find(|&y| y != x) {
                        return Some(C6Witness {
                            roles: [s, u, t, x, r, y],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Exact oracle: some copy of C6³ containing `u`, or `None`.
pub fn find_c6_through(g: &ThreeGraph, u: Vertex) -> Result<Option<C6Witness>> {
    check_vertex(u, g.order())?;
    Ok(find_c6_in_index(g.pair_index(), u))
}

/// Per-vertex coverage of a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub covered: BTreeMap<Vertex, Option<C6Witness>>,
    pub uncovered: Vec<Vertex>,
    pub fully_covered: bool,
}

pub fn cover_report(g: &ThreeGraph) -> CoverReport {
    let idx = g.pair_index();
    let mut covered = BTreeMap::new();
    let mut uncovered = Vec::new();
    // A witness for one vertex covers all six of its vertices.
    let mut known: Vec<Option<C6Witness>> = vec![None; g.order()];
    for v in 0..g.order() {
        let w = known[v].or_else(|| find_c6_in_index(idx, v));
        if let Some(w) = w {
            for &r in &w.roles {
                known[r].get_or_insert(w);
            }
        } else {
            uncovered.push(v);
        }
        covered.insert(v, w);
    }
    CoverReport {
        fully_covered: uncovered.is_empty(),
        covered,
        uncovered,
    }
}

/// Builds a C6³ through `v` from a 2P₃ or P₅ in its link graph.
///
/// Requires δ₂(G) ≥ 2, which is re-checked. Returns `None` when the link
/// contains neither pattern; that says nothing about whether `v` is covered.
pub fn fast_witness_via_link(g: &ThreeGraph, v: Vertex) -> Result<Option<C6Witness>> {
    check_vertex(v, g.order())?;
    let codegree = g.min_codegree();
    if codegree < 2 || g.order() < 3 {
        return Err(Error::PreconditionViolated(format!(
            "fast witness needs minimum codegree ≥ 2, got {codegree}"
        )));
    }
    let idx = g.pair_index();
    let link = g.link_graph(v)?;
    let third = |a: Vertex, b: Vertex| idx.thirds(a, b).iter().copied().find(|&x| x != v);

    if let Some((p, q)) = find_two_disjoint_p3(&link) {
        // w₁u₁w₂ and w₃u₂w₄; x completes u₁u₂ and avoids v.
        let (w1, u1, w2) = (p.vertices[0], p.vertices[1], p.vertices[2]);
        let (w3, u2, w4) = (q.vertices[0], q.vertices[1], q.vertices[2]);
        let x = third(u1, u2).expect("codegree ≥ 2 leaves a third vertex besides v");
        let a = if w2 != x { w2 } else { w1 };
        let b = if w3 != x { w3 } else { w4 };
        return Ok(Some(C6Witness {
            roles: [v, a, u1, x, u2, b],
        }));
    }
    if let Some(p) = find_p5(&link) {
        // w₁u₁wu₂w₂
        let [w1, u1, w, u2, w2]: [Vertex; 5] = p.vertices.try_into().expect("P5 has five vertices");
        let x = third(u1, u2).expect("codegree ≥ 2 leaves a third vertex besides v");
        let roles = if x != w1 && x != w2 {
            [v, w1, u1, x, u2, w2]
        } else if x == w1 {
            // u₁u₂w₁, u₂w₂v, vwu₁
            [u1, w1, u2, w2, v, w]
        } else {
            // u₁u₂w₂, u₁w₁v, vwu₂
            [u2, w2, u1, w1, v, w]
        };
        return Ok(Some(C6Witness { roles }));
    }
    Ok(None)
}

/// An injective map `f ↦ embedding[f]` sending every edge of `pattern` to an
/// edge of `host`, with `u` in the image. Not necessarily induced.
pub fn find_f_cover(
    host: &ThreeGraph,
    u: Vertex,
    pattern: &ThreeGraph,
) -> Result<Option<Vec<Vertex>>> {
    check_vertex(u, host.order())?;
    let k = pattern.order();
    if k > 8 {
        return Err(Error::FTooLarge(k));
    }
    if k > host.order() {
        return Ok(None);
    }
    let pedges: Vec<Triple> = pattern.edges().collect();
    for anchor in 0..k {
        // Assign pattern vertices with `anchor` first, then by adjacency to the
        // already-placed ones so edges are checked as early as possible.
        let mut order = vec![anchor];
        while order.len() < k {
            let next = (0..k)
                .filter(|f| !order.contains(f))
                .max_by_key(|&f| {
                    let touching = pedges
                        .iter()
                        .filter(|e| e.contains(&f) && e.iter().any(|x| order.contains(x)))
                        .count();
                    (touching, std::cmp::Reverse(f))
                })
                .unwrap();
            order.push(next);
        }
        // Edges become checkable at the step their last vertex is placed.
        let mut due: Vec<Vec<Triple>> = vec![Vec::new(); k];
        for &e in &pedges {
            let step = e
                .iter()
                .map(|f| order.iter().position(|o| o == f).unwrap())
                .max()
                .unwrap();
            due[step].push(e);
        }
        let mut map = vec![usize::MAX; k];
        map[anchor] = u;
        let mut used = vec![false; host.order()];
        used[u] = true;
        if embed(host, &order, &due, 1, &mut map, &mut used) {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

fn embed(
    host: &ThreeGraph,
    order: &[Vertex],
    due: &[Vec<Triple>],
    step: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let edges_ok = |map: &[Vertex]| {
        due[step - 1]
            .iter()
            .all(|e| host.has_edge([map[e[0]], map[e[1]], map[e[2]]]))
    };
    if !edges_ok(map) {
        return false;
    }
    if step == order.len() {
        return true;
    }
    let f = order[step];
    for h in 0..host.order() {
        if used[h] {
            continue;
        }
        map[f] = h;
        used[h] = true;
        if embed(host, order, due, step + 1, map, used) {
            return true;
        }
        used[h] = false;
        map[f] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construction1, construction2};

    #[test]
    fn complete_host_covers_everything() {
        let k6 = ThreeGraph::complete(6);
        for u in 0..6 {
            let w = find_c6_through(&k6, u).unwrap().unwrap();
            assert!(w.contains(u) && w.validates(&k6));
        }
        assert!(cover_report(&k6).fully_covered);
    }

    #[test]
    fn loose_triangle_covers_itself() {
        let c6 = ThreeGraph::loose_triangle();
        let r = cover_report(&c6);
        assert!(r.fully_covered);
        for (v, w) in &r.covered {
            let w = w.unwrap();
            assert!(w.contains(*v) && w.validates(&c6));
        }
    }

    #[test]
    fn small_hosts_are_uncovered() {
        let r = cover_report(&ThreeGraph::complete(5));
        assert_eq!(r.uncovered, vec![0, 1, 2, 3, 4]);
        assert!(!r.fully_covered);
        assert!(cover_report(&ThreeGraph::empty(0)).fully_covered);
        assert!(find_c6_through(&ThreeGraph::complete(5), 5).is_err());
    }

    #[test]
    fn constructions_leave_vertices_uncovered() {
        for n in 6..12 {
            assert_eq!(
                find_c6_through(&construction1(n).unwrap(), 0).unwrap(),
                None
            );
        }
        let r = cover_report(&construction1(8).unwrap());
        assert_eq!(r.uncovered.len(), 8);
        let (g, _) = construction2(24).unwrap();
        assert_eq!(find_c6_through(&g, 0).unwrap(), None);
    }

    #[test]
    fn fast_path_on_complete_graph() {
        let k7 = ThreeGraph::complete(7);
        for v in 0..7 {
            let w = fast_witness_via_link(&k7, v).unwrap().unwrap();
            assert!(w.contains(v) && w.validates(&k7), "{w:?}");
        }
    }

    #[test]
    fn fast_path_needs_codegree_two() {
        let g = construction1(7).unwrap();
        assert!(matches!(
            fast_witness_via_link(&g, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn fast_path_absent_for_single_triangle_link() {
        // K4³ has codegree 2 everywhere and every link is one triangle.
        let k4 = ThreeGraph::complete(4);
        assert_eq!(fast_witness_via_link(&k4, 0).unwrap(), None);
    }

    #[test]
    fn generic_embedding() {
        let k6 = ThreeGraph::complete(6);
        let c6 = ThreeGraph::loose_triangle();
        let m = find_f_cover(&k6, 3, &c6).unwrap().unwrap();
        assert!(m.contains(&3));
        let k4 = ThreeGraph::complete(4);
        for u in 0..6 {
            assert_eq!(find_f_cover(&c6, u, &k4).unwrap(), None);
        }
        assert!(matches!(
            find_f_cover(&k6, 0, &ThreeGraph::empty(9)),
            Err(Error::FTooLarge(9))
        ));
        let k4_minus = ThreeGraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let m = find_f_cover(&construction1(7).unwrap(), 0, &k4_minus)
            .unwrap()
            .unwrap();
        assert!(m.contains(&0));
    }
}
