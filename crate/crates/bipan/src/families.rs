//! Generators for the named constructions and for seeded random
//! instances satisfying condition A_k. All generators are deterministic
//! given their parameters (and seed); the random source is ChaCha8 with
//! `seed_from_u64`, so corpora reproduce across platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::conditions::check_condition_a;
use crate::graph::{AnyGraph, BVertex, BipartiteDigraph, Digraph};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("remark family requires an even half-order, got {0}")]
    OddRemarkOrder(usize),
    #[error("phi family requires (n+1)/2 < m <= n-1, got n = {n}, m = {m}")]
    PhiRange { n: usize, m: usize },
    #[error("random generator supports 3 <= a <= {max}, got {a}")]
    RandomRange { a: usize, max: usize },
    #[error("failed to generate a strongly connected A_{k} instance after {attempts} attempts")]
    GenerationFailure { k: usize, attempts: usize },
}

/// K*_{a,b}: all arcs in both directions between the partite sets.
/// Balanced parameters give the bipartite representation; unbalanced
/// ones the general digraph on vertices 0..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> AnyGraph {
    assert!(a >= 1 && b >= 1);
    if a == b {
        AnyGraph::Bipartite(complete_bipartite_balanced(a))
    } else {
        let mut g = Digraph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_arc(u, v).unwrap();
                g.add_arc(v, u).unwrap();
            }
        }
        AnyGraph::General(g)
    }
}

pub fn complete_bipartite_balanced(a: usize) -> BipartiteDigraph {
    let mut g = BipartiteDigraph::new(a);
    for i in 0..a {
        for j in 0..a {
            g.add_arc(BVertex::x(i), BVertex::y(j)).unwrap();
            g.add_arc(BVertex::y(j), BVertex::x(i)).unwrap();
        }
    }
    g
}

/// Complete digraph on n vertices (every ordered pair an arc).
pub fn complete_digraph(n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v {
                g.add_arc(u, v).unwrap();
            }
        }
    }
    g
}

/// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0.
pub fn directed_cycle(n: usize) -> Digraph {
    let mut g = Digraph::new(n);
    for u in 0..n {
        g.add_arc(u, (u + 1) % n).unwrap();
    }
    g
}

/// The order-8 bipartite digraph D(8): arcs y0 -> x1, y1 -> x0,
/// x2 -> y3, x3 -> y2, plus the 2-cycles x_i <-> y_i for i in [0,3] and
/// y0 <-> x2, y0 <-> x3, y1 <-> x2, y1 <-> x3. Strongly connected but
/// not Hamiltonian.
pub fn d8() -> BipartiteDigraph {
    let mut g = BipartiteDigraph::new(4);
    g.add_arc(BVertex::y(0), BVertex::x(1)).unwrap();
    g.add_arc(BVertex::y(1), BVertex::x(0)).unwrap();
    g.add_arc(BVertex::x(2), BVertex::y(3)).unwrap();
    g.add_arc(BVertex::x(3), BVertex::y(2)).unwrap();
    for i in 0..4 {
        g.add_two_cycle(BVertex::x(i), BVertex::y(i)).unwrap();
    }
    for y in [0, 1] {
        for x in [2, 3] {
            g.add_two_cycle(BVertex::y(y), BVertex::x(x)).unwrap();
        }
    }
    g
}

/// The arc-maximal member of the family on n vertices with a forbidden
/// cycle length m: the descending Hamiltonian cycle, every forward arc
/// except between the prescribed non-adjacent pairs at distance m - 1,
/// and no other backward arcs. The returned flag reports whether all
/// distinct non-adjacent pairs meet the degree-sum bound 2n - 1.
///
/// Vertices are 0-based: vertex i here is x_{i+1} of the 1-based family.
pub fn phi_maximal(n: usize, m: usize) -> Result<(Digraph, bool), GenError> {
    if n < 3 || 2 * m <= n + 1 || m > n - 1 {
        return Err(GenError::PhiRange { n, m });
    }
    let mut g = Digraph::new(n);
    // descending consecutive arcs x_{i+1} -> x_i, and x_1 -> x_n
    for i in 1..n {
        g.add_arc(i, i - 1).unwrap();
    }
    g.add_arc(0, n - 1).unwrap();
    // all remaining forward arcs except the forbidden distance-(m-1) pairs
    for i in 0..n {
        for j in (i + 1)..n {
            if j - i == m - 1 {
                continue;
            }
            if !g.has_arc(i, j) {
                g.add_arc(i, j).unwrap();
            }
        }
    }
    let satisfies_v = crate::conditions::check_meyniel_nonadjacent(&g).holds;
    Ok((g, satisfies_v))
}

/// Two complete balanced bipartite halves on (U, V) and (Z, W) with all
/// arcs added from Z to V and from W to U. Every same-side degree sum is
/// exactly 3a, yet the digraph is not strongly connected.
///
/// Indexing: U = x0..x_{a/2-1}, Z = x_{a/2}..x_{a-1}, V = y0..y_{a/2-1},
/// W = y_{a/2}..y_{a-1}.
pub fn remark_family(a: usize) -> Result<BipartiteDigraph, GenError> {
    if a % 2 != 0 || a < 2 {
        return Err(GenError::OddRemarkOrder(a));
    }
    let half = a / 2;
    let mut g = BipartiteDigraph::new(a);
    for u in 0..half {
        for v in 0..half {
            g.add_two_cycle(BVertex::x(u), BVertex::y(v)).unwrap();
            g.add_two_cycle(BVertex::x(half + u), BVertex::y(half + v)).unwrap();
        }
    }
    for z in half..a {
        for v in 0..half {
            g.add_arc(BVertex::x(z), BVertex::y(v)).unwrap();
        }
    }
    for w in half..a {
        for u in 0..half {
            g.add_arc(BVertex::y(w), BVertex::x(u)).unwrap();
        }
    }
    Ok(g)
}

/// Largest half-order the random generator accepts by default.
pub const MAX_RANDOM_HALF_ORDER: usize = 10;

/// Seeded random balanced bipartite digraph satisfying condition A_k and
/// strongly connected. Sampling starts above the density the degree
/// bound needs, then a repair loop adds 2-cycles around the witness of
/// any failing check; strong connectivity is handled by rejection.
pub fn random_condition_a(a: usize, k: usize, seed: u64) -> Result<BipartiteDigraph, GenError> {
    if !(3..=MAX_RANDOM_HALF_ORDER).contains(&a) {
        return Err(GenError::RandomRange { a, max: MAX_RANDOM_HALF_ORDER });
    }
    const ATTEMPTS: usize = 64;
    for attempt in 0..ATTEMPTS as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ attempt);
        let mut g = BipartiteDigraph::new(a);
        // pair degree sums need ~3a + k out of a 4a maximum
        let percent = (78 + 6 * k.min(3)).min(95) as u64;
        for i in 0..a {
            for j in 0..a {
                if rng.gen_range(0..100u64) < percent {
                    g.add_arc(BVertex::x(i), BVertex::y(j)).unwrap();
                }
                if rng.gen_range(0..100u64) < percent {
                    g.add_arc(BVertex::y(j), BVertex::x(i)).unwrap();
                }
            }
        }
        // repair: raise the witness pair's degrees with fresh 2-cycles
        loop {
            let report = check_condition_a(&g, k);
            let Some(w) = report.witness else { break };
            for token in [w.u, w.v] {
                let v: BVertex = token.parse().expect("witness tokens are vertex tokens");
                let partner = BVertex {
                    side: v.side.opposite(),
                    index: rng.gen_range(0..a),
                };
                g.add_two_cycle(v, partner).unwrap();
            }
        }
        if g.strongly_connected() {
            return Ok(g);
        }
    }
    Err(GenError::GenerationFailure { k, attempts: ATTEMPTS })
}

/// Seeded random general digraph with the given arc density percentage;
/// used as an oracle test corpus.
pub fn random_digraph(n: usize, percent: u64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_range(0..100u64) < percent {
                g.add_arc(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AnyGraph;

    #[test]
    fn complete_bipartite_arc_counts() {
        match complete_bipartite(2, 2) {
            AnyGraph::Bipartite(g) => assert_eq!(g.arc_count(), 8),
            _ => panic!("balanced parameters give the bipartite flavor"),
        }
        match complete_bipartite(1, 1) {
            AnyGraph::Bipartite(g) => {
                assert_eq!(g.arc_count(), 2);
            }
            _ => panic!(),
        }
        match complete_bipartite(2, 3) {
            AnyGraph::General(g) => assert_eq!(g.arc_count(), 12),
            _ => panic!("unbalanced parameters give the general flavor"),
        }
        let g = complete_bipartite_balanced(3);
        for v in g.vertices() {
            assert_eq!(g.degree(v), 6);
        }
    }

    #[test]
    fn d8_has_exactly_twenty_arcs() {
        let g = d8();
        assert_eq!(g.half_order(), 4);
        assert_eq!(g.arc_count(), 20);
        assert!(g.strongly_connected());
    }

    #[test]
    fn d8_serializes_identically_to_the_fixture() {
        let fixture = include_str!("../fixtures/d8.bdg");
        assert_eq!(d8().serialize(), fixture);
    }

    #[test]
    fn phi_structure_checks() {
        for n in 3..=12usize {
            for m in 2..n {
                if 2 * m <= n + 1 {
                    assert!(phi_maximal(n, m).is_err());
                    continue;
                }
                let (g, _) = phi_maximal(n, m).unwrap();
                // (ii): descending Hamiltonian cycle
                for i in 1..n {
                    assert!(g.has_arc(i, i - 1));
                }
                assert!(g.has_arc(0, n - 1));
                // (iii): pairs at distance m-1 non-adjacent
                for i in 0..n {
                    let j = i + m - 1;
                    if j < n {
                        assert!(!g.adjacent(i, j), "n={n} m={m} pair ({i},{j})");
                    }
                }
                // (iv): no backward arcs except the consecutive ones
                for j in 0..n {
                    for i in 0..j {
                        if j > i + 1 {
                            assert!(!g.has_arc(j, i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_5_4_satisfies_the_degree_bound() {
        let (_, ok) = phi_maximal(5, 4).unwrap();
        assert!(ok);
    }

    #[test]
    fn remark_family_properties() {
        for a in [2usize, 4, 6] {
            let g = remark_family(a).unwrap();
            assert_eq!(g.order(), 2 * a);
            for v in g.vertices() {
                assert_eq!(g.degree(v), 3 * a / 2);
            }
            assert!(!g.strongly_connected());
            assert!(check_condition_a(&g, 0).holds);
        }
        assert!(remark_family(3).is_err());
    }

    #[test]
    fn remark_family_halves_are_complete_bipartite() {
        let a = 4;
        let g = remark_family(a).unwrap();
        let half = a / 2;
        let uv: Vec<BVertex> = (0..half)
            .map(BVertex::x)
            .chain((0..half).map(BVertex::y))
            .collect();
        let zw: Vec<BVertex> = (half..a)
            .map(BVertex::x)
            .chain((half..a).map(BVertex::y))
            .collect();
        for s in [uv, zw] {
            let sub = g.induced_subdigraph(&s);
            assert_eq!(sub.arc_count(), 2 * half * half);
        }
    }

    #[test]
    fn random_generator_is_deterministic_and_postconditions_hold() {
        let g1 = random_condition_a(3, 0, 7).unwrap();
        let g2 = random_condition_a(3, 0, 7).unwrap();
        assert_eq!(g1, g2);
        for seed in 0..30u64 {
            let a = 3 + (seed % 6) as usize;
            let k = (seed % 2) as usize;
            let g = random_condition_a(a, k, seed).unwrap();
            assert!(check_condition_a(&g, k).holds);
            assert!(g.strongly_connected());
        }
    }

    #[test]
    fn random_generator_rejects_out_of_range() {
        assert!(random_condition_a(2, 0, 1).is_err());
        assert!(random_condition_a(11, 0, 1).is_err());
    }
}
