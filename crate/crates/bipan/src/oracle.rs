//! Brute-force ground truth: exhaustive cycle-length spectra,
//! Hamiltonicity, and certificate validation.
//!
//! The spectrum search is its own exhaustive DFS, independent of the
//! certifier's constructions, and the certificate validator re-checks
//! arcs through the arc indicator only. Witness cycles are retained for
//! every reported length.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::budget::{BudgetExceeded, SearchBudget, DEFAULT_BUDGET};
use crate::certifier::PancyclicityReport;
use crate::graph::{BipartiteDigraph, Digraph};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{source} (partial result: lengths {found:?} confirmed so far)")]
    Budget {
        source: BudgetExceeded,
        found: Vec<usize>,
    },
    #[error("max_len {max_len} exceeds graph order {order}")]
    MaxLenTooLarge { max_len: usize, order: usize },
}

/// Exact set of cycle lengths present up to `max_len_searched`, with a
/// witness cycle per length.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub lengths: BTreeSet<usize>,
    pub max_len_searched: usize,
    witnesses: BTreeMap<usize, Vec<usize>>,
}

impl Spectrum {
    pub fn witness(&self, len: usize) -> Option<&[usize]> {
        self.witnesses.get(&len).map(|w| w.as_slice())
    }
}

/// Exhaustive canonical DFS: each cycle is explored from its minimum
/// vertex, visiting only larger vertices, recording every target length
/// at which an arc closes back to the root. Stops early once every
/// target length has a witness.
fn spectrum_with_targets(
    g: &Digraph,
    targets: &BTreeSet<usize>,
    max_len: usize,
    budget: &mut SearchBudget,
) -> Result<Spectrum, OracleError> {
    let n = g.order();
    if max_len > n {
        return Err(OracleError::MaxLenTooLarge { max_len, order: n });
    }
    let mut remaining: BTreeSet<usize> = targets.clone();
    let mut witnesses: BTreeMap<usize, Vec<usize>> = BTreeMap::new();

    struct Dfs<'a> {
        g: &'a Digraph,
        root: usize,
        max_len: usize,
        path: Vec<usize>,
        visited: Vec<bool>,
    }

    fn go(
        s: &mut Dfs<'_>,
        remaining: &mut BTreeSet<usize>,
        witnesses: &mut BTreeMap<usize, Vec<usize>>,
        budget: &mut SearchBudget,
    ) -> Result<(), BudgetExceeded> {
        budget.spend()?;
        let v = *s.path.last().unwrap();
        if s.path.len() >= 2 && s.g.has_arc(v, s.root) && remaining.remove(&s.path.len()) {
            witnesses.insert(s.path.len(), s.path.clone());
        }
        if remaining.is_empty() || s.path.len() == s.max_len {
            return Ok(());
        }
        for w in 0..s.g.order() {
            if w > s.root && !s.visited[w] && s.g.has_arc(v, w) {
                s.visited[w] = true;
                s.path.push(w);
                go(s, remaining, witnesses, budget)?;
                s.path.pop();
                s.visited[w] = false;
                if remaining.is_empty() {
                    break;
                }
            }
        }
        Ok(())
    }

    for root in 0..n {
        if remaining.is_empty() {
            break;
        }
        let mut s = Dfs {
            g,
            root,
            max_len,
            path: vec![root],
            visited: vec![false; n],
        };
        s.visited[root] = true;
        if let Err(source) = go(&mut s, &mut remaining, &mut witnesses, budget) {
            return Err(OracleError::Budget {
                source,
                found: witnesses.keys().copied().collect(),
            });
        }
    }

    Ok(Spectrum {
        lengths: witnesses.keys().copied().collect(),
        max_len_searched: max_len,
        witnesses,
    })
}

/// Exact set of lengths in [2, max_len] at which `g` has a cycle.
pub fn cycle_length_spectrum(
    g: &Digraph,
    max_len: usize,
    budget: &mut SearchBudget,
) -> Result<Spectrum, OracleError> {
    let targets: BTreeSet<usize> = (2..=max_len).collect();
    spectrum_with_targets(g, &targets, max_len, budget)
}

/// Bipartite spectrum. Only even lengths are searched: a cycle in a
/// bipartite digraph alternates sides, so odd lengths cannot occur.
pub fn cycle_length_spectrum_bipartite(
    g: &BipartiteDigraph,
    max_len: usize,
    budget: &mut SearchBudget,
) -> Result<Spectrum, OracleError> {
    let targets: BTreeSet<usize> = (2..=max_len).filter(|l| l % 2 == 0).collect();
    spectrum_with_targets(&g.to_general(), &targets, max_len, budget)
}

/// True iff a cycle through all vertices exists (exact search).
pub fn is_hamiltonian(g: &Digraph, budget: &mut SearchBudget) -> Result<bool, OracleError> {
    let n = g.order();
    if n < 2 {
        return Ok(false);
    }
    let targets: BTreeSet<usize> = [n].into_iter().collect();
    Ok(spectrum_with_targets(g, &targets, n, budget)?
        .lengths
        .contains(&n))
}

pub fn is_hamiltonian_bipartite(
    g: &BipartiteDigraph,
    budget: &mut SearchBudget,
) -> Result<bool, OracleError> {
    is_hamiltonian(&g.to_general(), budget)
}

/// Independent certificate check: every entry must be a genuine cycle of
/// the host of its claimed length. Arcs are re-checked through the arc
/// indicator alone; no lifting or search code is involved.
pub fn validate_certificate(g: &BipartiteDigraph, report: &PancyclicityReport) -> bool {
    report.certificate.iter().all(|(&len, entry)| {
        let vs = entry.cycle.vertices();
        if vs.len() != len || vs.len() < 2 {
            return false;
        }
        let mut seen = BTreeSet::new();
        if !vs.iter().all(|&v| v.index < g.half_order() && seen.insert(v)) {
            return false;
        }
        (0..vs.len()).all(|i| {
            let tail = vs[i];
            let head = vs[(i + 1) % vs.len()];
            tail != head && g.arc_indicator(tail, head) == 1
        })
    })
}

/// Convenience wrapper with the default budget.
pub fn default_budget() -> SearchBudget {
    SearchBudget::new(DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certifier::certify_even_pancyclic;
    use crate::families;
    use crate::graph::BVertex;

    #[test]
    fn d8_spectrum_is_2_4_6() {
        let g = families::d8();
        let s = cycle_length_spectrum_bipartite(&g, 8, &mut default_budget()).unwrap();
        let lens: Vec<usize> = s.lengths.iter().copied().collect();
        assert_eq!(lens, vec![2, 4, 6]);
        for &l in &lens {
            let w = s.witness(l).unwrap();
            assert_eq!(w.len(), l);
            assert!(g.to_general().validate_cycle(w).is_ok());
        }
        assert!(!is_hamiltonian_bipartite(&g, &mut default_budget()).unwrap());
    }

    #[test]
    fn directed_cycle_spectrum_is_singleton() {
        let g = families::directed_cycle(8);
        let s = cycle_length_spectrum(&g, 8, &mut default_budget()).unwrap();
        assert_eq!(s.lengths.iter().copied().collect::<Vec<_>>(), vec![8]);
    }

    #[test]
    fn k22_spectrum() {
        let g = families::complete_bipartite_balanced(2);
        let s = cycle_length_spectrum_bipartite(&g, 4, &mut default_budget()).unwrap();
        assert_eq!(s.lengths.iter().copied().collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn hamiltonicity_cases() {
        assert!(is_hamiltonian_bipartite(
            &families::complete_bipartite_balanced(3),
            &mut default_budget()
        )
        .unwrap());
        assert!(!is_hamiltonian_bipartite(
            &families::remark_family(4).unwrap(),
            &mut default_budget()
        )
        .unwrap());
    }

    #[test]
    fn hamiltonicity_agrees_with_spectrum_membership() {
        for seed in 0..20u64 {
            let n = 3 + (seed % 6) as usize;
            let g = families::random_digraph(n, 40, seed);
            let ham = is_hamiltonian(&g, &mut default_budget()).unwrap();
            let s = cycle_length_spectrum(&g, n, &mut default_budget()).unwrap();
            assert_eq!(ham, s.lengths.contains(&n));
        }
    }

    #[test]
    fn spectrum_monotone_under_arc_addition() {
        let mut g = families::directed_cycle(6);
        let before = cycle_length_spectrum(&g, 6, &mut default_budget()).unwrap();
        g.add_arc(0, 3).unwrap();
        g.add_arc(3, 0).unwrap();
        let after = cycle_length_spectrum(&g, 6, &mut default_budget()).unwrap();
        assert!(before.lengths.is_subset(&after.lengths));
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let g = families::complete_digraph(8);
        let mut b = SearchBudget::new(5);
        assert!(matches!(
            cycle_length_spectrum(&g, 8, &mut b),
            Err(OracleError::Budget { .. })
        ));
    }

    #[test]
    fn validates_certifier_output_and_catches_mutation() {
        let g = families::complete_bipartite_balanced(3);
        let mut report = certify_even_pancyclic(&g);
        assert!(validate_certificate(&g, &report));

        // substitute one vertex in a certified cycle
        let entry = report.certificate.get_mut(&6).unwrap();
        let mut vs = entry.cycle.vertices().to_vec();
        vs[0] = BVertex::x(vs[1].index); // duplicate-ish corruption
        // bypass Cycle validation through serde round-trip
        let corrupted: crate::graph::Cycle =
            serde_json::from_value(serde_json::to_value(&vs).unwrap()).unwrap();
        entry.cycle = corrupted;
        assert!(!validate_certificate(&g, &report));
    }

    #[test]
    fn certifier_output_on_random_instances_all_validate() {
        for seed in 0..50u64 {
            let a = 3 + (seed % 4) as usize;
            let g = families::random_condition_a(a, 0, seed).unwrap();
            let report = certify_even_pancyclic(&g);
            assert!(validate_certificate(&g, &report), "seed {seed}");
        }
    }
}
