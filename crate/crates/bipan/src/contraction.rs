//! The contracted digraph D*[M] and the cycle lifts back to the host.
//!
//! Vertex v_i of the contraction stands for the matched pair
//! (x_i, y_{pair(i)}); the arc v_l -> v_j exists iff the host has
//! x_l -> y_{pair(j)} and l != j. Lifts re-verify every emitted host arc
//! so they double as proof checks: a missing arc signals a contraction
//! bug, never a silently wrong certificate.

use thiserror::Error;

use crate::graph::{BVertex, BipartiteDigraph, Cycle, CycleError, Digraph};
use crate::matching::PerfectMatching;

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("cycle in the contraction is invalid: {0}")]
    BadContractedCycle(#[from] CycleError),
    #[error("lifted arc {0} -> {1} is missing from the host (contraction bug)")]
    MissingHostArc(String, String),
    #[error("contraction is not complete bipartite over the given partition")]
    NotCompleteBipartite,
    #[error("partition halves must each have a/2 vertices (a even)")]
    BadPartition,
    #[error("bridge arc y{0} -> x{1} is absent from the host")]
    MissingBridge(usize, usize),
    #[error("cycle parameter k = {0} outside [1, a/2 - 1]")]
    BadK(usize),
}

/// D*[M] together with the back-map onto matched host pairs.
#[derive(Clone, Debug)]
pub struct ContractedDigraph {
    pub base: Digraph,
    host: BipartiteDigraph,
    matching: PerfectMatching,
}

impl ContractedDigraph {
    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn host(&self) -> &BipartiteDigraph {
        &self.host
    }

    pub fn matching(&self) -> &PerfectMatching {
        &self.matching
    }

    /// The host pair (x_i, y_i) represented by contracted vertex v_i.
    pub fn back_map(&self, i: usize) -> (BVertex, BVertex) {
        (BVertex::x(i), BVertex::y(self.matching.pair(i)))
    }
}

/// Definition of the contraction: v_l -> v_j iff x_l -> y_j in the host,
/// for distinct l, j. No self-loops even when x_i -> y_i exists; that
/// 2-cycle information stays recoverable via the back-map.
pub fn contract(g: &BipartiteDigraph, m: &PerfectMatching) -> ContractedDigraph {
    let a = g.half_order();
    assert_eq!(m.len(), a, "matching must cover the host");
    let mut base = Digraph::new(a);
    for l in 0..a {
        for j in 0..a {
            if l != j && g.has_arc(BVertex::x(l), BVertex::y(m.pair(j))) {
                base.add_arc(l, j).unwrap();
            }
        }
    }
    ContractedDigraph { base, host: g.clone(), matching: m.clone() }
}

/// The degree identity: d+(v_i) = d+(x_i) - a[x_i, y_i] and
/// d-(v_i) = d-(y_i) - a[x_i, y_i]. Holds for every correctly built
/// contraction.
pub fn verify_degree_identity(ds: &ContractedDigraph) -> bool {
    let a = ds.order();
    (0..a).all(|i| {
        let (x, y) = ds.back_map(i);
        let two_cycle = ds.host.arc_indicator(x, y) as usize;
        ds.base.out_degree(i) == ds.host.out_degree(x) - two_cycle
            && ds.base.in_degree(i) == ds.host.in_degree(y) - two_cycle
    })
}

/// Lifts a k-cycle v_{i1}...v_{ik} of D* to the host cycle
/// y_{i1} x_{i1} y_{i2} x_{i2} ... y_{ik} x_{ik} of length 2k.
pub fn lift_cycle(ds: &ContractedDigraph, c: &[usize]) -> Result<Cycle, LiftError> {
    ds.base.validate_cycle(c)?;
    let mut vertices = Vec::with_capacity(2 * c.len());
    for &i in c {
        let (x, y) = ds.back_map(i);
        vertices.push(y);
        vertices.push(x);
    }
    finish_lift(ds, vertices)
}

fn finish_lift(ds: &ContractedDigraph, vertices: Vec<BVertex>) -> Result<Cycle, LiftError> {
    Cycle::new(&ds.host, vertices).map_err(|e| match e {
        CycleError::MissingArc(t, h) => LiftError::MissingHostArc(t, h),
        other => LiftError::BadContractedCycle(other),
    })
}

/// When D* is the complete bipartite digraph over `left` / `right` and
/// the host has a bridge arc y_p -> x_q with v_p in `left`, v_q in
/// `right`, produces a host cycle of length 4k + 2 by threading k
/// matched pairs from each side and closing through the bridge.
pub fn lift_complete_bipartite(
    ds: &ContractedDigraph,
    left: &[usize],
    right: &[usize],
    bridge: (usize, usize),
    k: usize,
) -> Result<Cycle, LiftError> {
    let a = ds.order();
    if a % 2 != 0 || left.len() != a / 2 || right.len() != a / 2 {
        return Err(LiftError::BadPartition);
    }
    let half = a / 2;
    if !(1..half).contains(&k) {
        return Err(LiftError::BadK(k));
    }
    // full K*_{a/2,a/2} over (left, right), nothing else
    let all_cross = left.iter().all(|&l| {
        right
            .iter()
            .all(|&r| ds.base.has_arc(l, r) && ds.base.has_arc(r, l))
    });
    let expected = 2 * half * half;
    if !all_cross || ds.base.arc_count() != expected {
        return Err(LiftError::NotCompleteBipartite);
    }

    let (p, q) = bridge;
    let (_, yp) = ds.back_map(p);
    if !left.contains(&p) || !right.contains(&q) {
        return Err(LiftError::BadPartition);
    }
    if !ds.host.has_arc(yp, BVertex::x(q)) {
        return Err(LiftError::MissingBridge(yp.index, q));
    }

    // order each side with the bridge endpoints last so the first k
    // positions never collide with the closing segment
    let tail_last = |side: &[usize], last: usize| -> Vec<usize> {
        let mut v: Vec<usize> = side.iter().copied().filter(|&i| i != last).collect();
        v.push(last);
        v
    };
    let l_ord = tail_last(left, p);
    let r_ord = tail_last(right, q);

    let mut vertices = Vec::with_capacity(4 * k + 2);
    for t in 0..k {
        let (xl, yl) = ds.back_map(l_ord[t]);
        let (xr, yr) = ds.back_map(r_ord[t]);
        vertices.extend([yl, xl, yr, xr]);
    }
    vertices.push(yp);
    vertices.push(BVertex::x(q));
    finish_lift(ds, vertices)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families;
    use crate::graph::BipartiteDigraph;
    use crate::matching::{find_perfect_matching_yx, PerfectMatching};

    fn identity(g: &BipartiteDigraph) -> PerfectMatching {
        PerfectMatching::new(g, (0..g.half_order()).collect()).unwrap()
    }

    #[test]
    fn contraction_of_complete_bipartite_is_complete() {
        let g = families::complete_bipartite_balanced(3);
        let ds = contract(&g, &identity(&g));
        assert_eq!(ds.base.arc_count(), 6); // complete digraph on 3 vertices
        for l in 0..3 {
            for j in 0..3 {
                assert_eq!(ds.base.has_arc(l, j), l != j);
            }
            // d+(v_i) = d+(x_i) - a[x_i, y_i] = 3 - 1 = 2
            assert_eq!(ds.base.out_degree(l), 2);
        }
    }

    #[test]
    fn contraction_follows_the_defining_equivalence() {
        let mut g = BipartiteDigraph::new(2);
        g.add_arc(BVertex::y(0), BVertex::x(0)).unwrap();
        g.add_arc(BVertex::y(1), BVertex::x(1)).unwrap();
        g.add_arc(BVertex::x(0), BVertex::y(1)).unwrap();
        let ds = contract(&g, &identity(&g));
        assert_eq!(ds.base.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn diagonal_arcs_do_not_create_loops() {
        let mut g = BipartiteDigraph::new(3);
        for i in 0..3 {
            g.add_arc(BVertex::y(i), BVertex::x(i)).unwrap();
            g.add_arc(BVertex::x(i), BVertex::y(i)).unwrap();
        }
        let ds = contract(&g, &identity(&g));
        assert_eq!(ds.base.arc_count(), 0);
    }

    #[test]
    fn contraction_matches_brute_force_definition() {
        for seed in 0..20u64 {
            let a = 3 + (seed % 4) as usize; // a <= 6
            let g = families::random_condition_a(a, 0, seed).unwrap();
            let m = find_perfect_matching_yx(&g).unwrap();
            let ds = contract(&g, &m);
            for l in 0..a {
                for j in 0..a {
                    if l == j {
                        assert!(!ds.base.has_arc(l, j));
                    } else {
                        assert_eq!(
                            ds.base.has_arc(l, j),
                            g.has_arc(BVertex::x(l), BVertex::y(m.pair(j)))
                        );
                    }
                }
            }
            // determinism: rebuilding yields the identical arc set
            assert_eq!(contract(&g, &m).base, ds.base);
        }
    }

    #[test]
    fn degree_identity_holds_and_detects_mutation() {
        let g = families::d8();
        let m = find_perfect_matching_yx(&g).unwrap();
        let mut ds = contract(&g, &m);
        assert!(verify_degree_identity(&ds));
        // remove one arc of D* to break the identity
        let (l, j) = ds.base.arcs()[0];
        let mut mutated = Digraph::new(ds.base.order());
        for (u, v) in ds.base.arcs() {
            if (u, v) != (l, j) {
                mutated.add_arc(u, v).unwrap();
            }
        }
        ds.base = mutated;
        assert!(!verify_degree_identity(&ds));
    }

    #[test]
    fn lift_two_cycle_gives_host_four_cycle() {
        let g = families::complete_bipartite_balanced(2);
        let ds = contract(&g, &identity(&g));
        let c = lift_cycle(&ds, &[0, 1]).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(
            c.vertices(),
            &[BVertex::y(0), BVertex::x(0), BVertex::y(1), BVertex::x(1)]
        );
    }

    #[test]
    fn lift_three_cycle_and_hamiltonian() {
        let g = families::complete_bipartite_balanced(3);
        let ds = contract(&g, &identity(&g));
        let c6 = lift_cycle(&ds, &[0, 1, 2]).unwrap();
        assert_eq!(c6.len(), 6);
        // Hamiltonian cycle of D* lifts to a host Hamiltonian cycle
        assert_eq!(c6.len(), g.order());
    }

    #[test]
    fn lift_rejects_invalid_contracted_cycles() {
        let g = families::complete_bipartite_balanced(3);
        let ds = contract(&g, &identity(&g));
        assert!(lift_cycle(&ds, &[0]).is_err());
        assert!(lift_cycle(&ds, &[0, 0]).is_err());
    }

    /// Host whose contraction under the identity matching is exactly
    /// K*_{a/2,a/2} with partite sets {0..a/2} and {a/2..a}, plus the
    /// bridge arc y_{a/2-1} -> x_{a-1}.
    pub(crate) fn complete_bipartite_contraction_host(a: usize) -> BipartiteDigraph {
        assert!(a % 2 == 0 && a >= 4);
        let half = a / 2;
        let mut g = BipartiteDigraph::new(a);
        for i in 0..a {
            g.add_arc(BVertex::y(i), BVertex::x(i)).unwrap();
        }
        for l in 0..half {
            for r in half..a {
                g.add_arc(BVertex::x(l), BVertex::y(r)).unwrap();
                g.add_arc(BVertex::x(r), BVertex::y(l)).unwrap();
            }
        }
        g.add_arc(BVertex::y(half - 1), BVertex::x(a - 1)).unwrap();
        g
    }

    #[test]
    fn complete_bipartite_lift_produces_4k_plus_2_cycles() {
        for a in [4usize, 6] {
            let g = complete_bipartite_contraction_host(a);
            let ds = contract(&g, &identity(&g));
            let half = a / 2;
            let left: Vec<usize> = (0..half).collect();
            let right: Vec<usize> = (half..a).collect();
            for k in 1..half {
                let c =
                    lift_complete_bipartite(&ds, &left, &right, (half - 1, a - 1), k).unwrap();
                assert_eq!(c.len(), 4 * k + 2);
            }
        }
    }

    #[test]
    fn complete_bipartite_lift_rejects_missing_bridge() {
        let g = complete_bipartite_contraction_host(4);
        let ds = contract(&g, &identity(&g));
        // y0 -> x3 is not in the host
        assert!(matches!(
            lift_complete_bipartite(&ds, &[0, 1], &[2, 3], (0, 3), 1),
            Err(LiftError::MissingBridge(0, 3))
        ));
    }

    #[test]
    fn complete_bipartite_lift_rejects_wrong_structure() {
        let g = families::complete_bipartite_balanced(4);
        let ds = contract(&g, &identity(&g)); // complete digraph, not K*_{2,2}
        assert!(matches!(
            lift_complete_bipartite(&ds, &[0, 1], &[2, 3], (0, 2), 1),
            Err(LiftError::NotCompleteBipartite)
        ));
    }
}
