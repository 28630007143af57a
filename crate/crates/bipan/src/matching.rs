//! Perfect matchings from Y to X, the size statistic s(M), and the
//! maximum-size perfect matching.
//!
//! `pair_of[i] = j` means the matched arc is y_j -> x_i. One could
//! relabel Y so the partner of x_i is always y_i; here the relabeling
//! stays implicit: `pair_of` is the recorded permutation, and downstream
//! constructions index through it so that certificates come out in the
//! original vertex labels.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BVertex, BipartiteDigraph};

#[derive(Debug, Error)]
pub enum MatchingError {
    #[error("pair_of has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("pair_of is not a bijection: y{0} matched twice")]
    NotBijective(usize),
    #[error("matched arc y{y} -> x{x} is absent from the host graph")]
    MissingArc { y: usize, x: usize },
    #[error("half-order {0} exceeds the supported bound {1} for exact assignment")]
    TooLarge(usize, usize),
}

/// A perfect matching from Y to X: the bijection i -> pair_of(i) with
/// every arc y_{pair_of(i)} -> x_i present in the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    pair_of: Vec<usize>,
}

impl PerfectMatching {
    pub fn new(g: &BipartiteDigraph, pair_of: Vec<usize>) -> Result<Self, MatchingError> {
        let a = g.half_order();
        if pair_of.len() != a {
            return Err(MatchingError::WrongLength { got: pair_of.len(), expected: a });
        }
        let mut used = vec![false; a];
        for (i, &j) in pair_of.iter().enumerate() {
            if j >= a || used[j] {
                return Err(MatchingError::NotBijective(j.min(a.saturating_sub(1))));
            }
            used[j] = true;
            if !g.has_arc(BVertex::y(j), BVertex::x(i)) {
                return Err(MatchingError::MissingArc { y: j, x: i });
            }
        }
        Ok(PerfectMatching { pair_of })
    }

    /// Y-index matched to x_i.
    pub fn pair(&self, i: usize) -> usize {
        self.pair_of[i]
    }

    pub fn pair_of(&self) -> &[usize] {
        &self.pair_of
    }

    pub fn len(&self) -> usize {
        self.pair_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pair_of.is_empty()
    }
}

/// Augmenting-path search over the Y -> X arcs, trying X-vertices in the
/// order given by `x_order`.
fn kuhn_matching(g: &BipartiteDigraph, x_order: &[usize]) -> Option<Vec<usize>> {
    let a = g.half_order();
    // match_x[i] = y matched to x_i, match_y[j] = x matched to y_j
    let mut match_x = vec![usize::MAX; a];
    let mut match_y = vec![usize::MAX; a];

    fn augment(
        g: &BipartiteDigraph,
        x: usize,
        seen: &mut [bool],
        match_x: &mut [usize],
        match_y: &mut [usize],
    ) -> bool {
        let a = g.half_order();
        for y in 0..a {
            if seen[y] || !g.has_arc(BVertex::y(y), BVertex::x(x)) {
                continue;
            }
            seen[y] = true;
            if match_y[y] == usize::MAX
                || augment(g, match_y[y], seen, match_x, match_y)
            {
                match_y[y] = x;
                match_x[x] = y;
                return true;
            }
        }
        false
    }

    for &x in x_order {
        let mut seen = vec![false; a];
        if !augment(g, x, &mut seen, &mut match_x, &mut match_y) {
            return None;
        }
    }
    Some(match_x)
}

/// Some perfect matching from Y to X, or `None` if the Y -> X arc set
/// admits none (Hall violation).
pub fn find_perfect_matching_yx(g: &BipartiteDigraph) -> Option<PerfectMatching> {
    let order: Vec<usize> = (0..g.half_order()).collect();
    find_perfect_matching_with_order(g, &order)
}

/// Same search with a caller-supplied augmentation order; used by the
/// randomized-run property tests.
pub fn find_perfect_matching_with_order(
    g: &BipartiteDigraph,
    x_order: &[usize],
) -> Option<PerfectMatching> {
    let pair_of = kuhn_matching(g, x_order)?;
    Some(PerfectMatching::new(g, pair_of).expect("augmenting search yields a valid matching"))
}

/// s(M): the number of matched arcs y_i -> x_i whose reverse arc
/// x_i -> y_i is absent.
pub fn matching_size(g: &BipartiteDigraph, m: &PerfectMatching) -> Result<usize, MatchingError> {
    // re-validate so a corrupted matching is an error, not a wrong count
    let m = PerfectMatching::new(g, m.pair_of.clone())?;
    Ok((0..m.len())
        .filter(|&i| !g.has_arc(BVertex::x(i), BVertex::y(m.pair(i))))
        .count())
}

/// Largest half-order accepted by the exact assignment solver (the DP
/// table has 2^a entries).
pub const MAX_ASSIGNMENT_HALF_ORDER: usize = 22;

/// A perfect matching from Y to X maximizing s(M), with its size.
///
/// Solved as a 0/1-cost assignment: admissible cells are Y -> X arcs,
/// cost 0 where the reverse X -> Y arc is absent and 1 where present;
/// a subset-DP over Y-sets gives the exact minimum cost, and the
/// optimal `pair_of` is extracted greedily so the result is the
/// lexicographically smallest maximum-size matching.
pub fn max_size_perfect_matching(
    g: &BipartiteDigraph,
) -> Result<Option<(PerfectMatching, usize)>, MatchingError> {
    let a = g.half_order();
    if a > MAX_ASSIGNMENT_HALF_ORDER {
        return Err(MatchingError::TooLarge(a, MAX_ASSIGNMENT_HALF_ORDER));
    }
    const INF: u32 = u32::MAX / 2;
    let cost = |i: usize, j: usize| -> u32 {
        if !g.has_arc(BVertex::y(j), BVertex::x(i)) {
            INF
        } else {
            g.arc_indicator(BVertex::x(i), BVertex::y(j))
        }
    };

    // f[mask] = min cost of assigning x_{popcount(mask)}..x_{a-1} to the
    // Y-indices outside mask
    let mut f = vec![INF; 1usize << a];
    f[(1usize << a) - 1] = 0;
    for mask in (0..(1usize << a) - 1).rev() {
        let i = (mask as u32).count_ones() as usize;
        let mut best = INF;
        for j in 0..a {
            if mask & (1 << j) == 0 {
                let c = cost(i, j);
                if c < INF && f[mask | (1 << j)] < INF {
                    best = best.min(c + f[mask | (1 << j)]);
                }
            }
        }
        f[mask] = best;
    }
    if f[0] >= INF {
        return Ok(None);
    }

    // lexicographically smallest optimal pair_of
    let mut pair_of = Vec::with_capacity(a);
    let mut mask = 0usize;
    for i in 0..a {
        for j in 0..a {
            if mask & (1 << j) != 0 {
                continue;
            }
            let c = cost(i, j);
            if c < INF && f[mask | (1 << j)] < INF && c + f[mask | (1 << j)] == f[mask] {
                pair_of.push(j);
                mask |= 1 << j;
                break;
            }
        }
        debug_assert_eq!(pair_of.len(), i + 1);
    }
    let size = a - f[0] as usize;
    let m = PerfectMatching::new(g, pair_of)?;
    debug_assert_eq!(matching_size(g, &m)?, size);
    Ok(Some((m, size)))
}
