//! Exact and Monte Carlo laws of the chromatic number of a percolated
//! graph.
//!
//! `G_p` keeps each edge of a fixed graph independently with probability
//! `p`. The exact path enumerates every kept-edge mask (capped by edge
//! count) and accumulates exact rational weights per chromatic value; the
//! Monte Carlo path draws each trial from its own counter-indexed RNG
//! stream, so results are bit-identical for a given seed no matter how the
//! trials are scheduled across threads.

use crate::graph::Graph;
use crate::rational::{log2_rat, rat_one, Prob, Rat};
use crate::solvers::{chi_adjacency, decide_colorable_adjacency};
use crate::stats::wilson_interval;
use num_bigint::BigInt;
use num_traits::Zero;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on the edge count for exact enumeration (2^24 subgraphs).
pub const DEFAULT_EXACT_EDGE_CAP: usize = 24;
/// Default cap for the exhaustive product-bound sweep, which solves two
/// colorings per mask.
pub const DEFAULT_PRODUCT_EXHAUSTIVE_CAP: usize = 20;

#[derive(Debug, Error, PartialEq)]
pub enum PercolationError {
    #[error("graph has {edges} edges, exceeding the exact-enumeration cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("needs at least one trial")]
    NoTrials,
}

// ---------------------------------------------------------------------------
// Exact distribution
// ---------------------------------------------------------------------------

/// The exact law of `chi(G_p)`: a map from chromatic value to rational
/// probability. Probabilities sum to exactly one.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactDistribution {
    p: Rat,
    support: BTreeMap<u32, Rat>,
}

impl ExactDistribution {
    pub fn p(&self) -> &Rat {
        &self.p
    }

    /// Support in increasing chromatic value; zero-probability values are
    /// not stored.
    pub fn support(&self) -> &BTreeMap<u32, Rat> {
        &self.support
    }

    /// `Pr[chi(G_p) <= d]`.
    pub fn tail(&self, d: u32) -> Rat {
        self.support
            .range(..=d)
            .map(|(_, q)| q.clone())
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// `E[chi(G_p)]`.
    pub fn expectation(&self) -> Rat {
        self.support
            .iter()
            .map(|(&v, q)| Rat::from_integer(BigInt::from(v)) * q)
            .fold(Rat::zero(), |a, b| a + b)
    }

    pub fn total(&self) -> Rat {
        self.support.values().cloned().fold(Rat::zero(), |a, b| a + b)
    }
}

/// Chromatic value of the spanning subgraph selected by `mask` over the
/// canonical edge order.
fn chi_of_mask(n: usize, edges: &[(u32, u32)], mask: u64, scratch: &mut [u64]) -> u32 {
    scratch[..n].fill(0);
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = edges[i];
        scratch[u as usize] |= 1 << v;
        scratch[v as usize] |= 1 << u;
    }
    let mut nodes = 0u64;
    chi_adjacency(&scratch[..n], &mut nodes)
}

/// Exact distribution of `chi(G_p)` by enumerating all kept-edge subsets,
/// with the default edge cap.
pub fn exact_chi_distribution(g: &Graph, p: Prob) -> Result<ExactDistribution, PercolationError> {
    exact_chi_distribution_with_cap(g, p, DEFAULT_EXACT_EDGE_CAP)
}

pub fn exact_chi_distribution_with_cap(
    g: &Graph,
    p: Prob,
    cap: usize,
) -> Result<ExactDistribution, PercolationError> {
    let m = g.num_edges();
    if m > cap || m >= 64 {
        return Err(PercolationError::EdgeCapExceeded { edges: m, cap: cap.min(63) });
    }
    let n = g.n();

    // counts[chi][kept-edge count]: the weight of a mask depends only on its
    // popcount, so exact rationals enter only at the very end.
    let chi_max = n; // chi(subgraph) <= n
    let total: u64 = 1 << m;
    let zero = || vec![vec![0u64; m + 1]; chi_max + 1];

    let counts: Vec<Vec<u64>> = (0..total)
        .into_par_iter()
        .fold(
            || (zero(), [0u64; 64]),
            |(mut counts, mut scratch), mask| {
                let chi = chi_of_mask(n, g.edges(), mask, &mut scratch) as usize;
                counts[chi][mask.count_ones() as usize] += 1;
                (counts, scratch)
            },
        )
        .map(|(counts, _)| counts)
        .reduce(zero, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(&b) {
                for (ca, cb) in ra.iter_mut().zip(rb) {
                    *ca += cb;
                }
            }
            a
        });

    // w[j] = p^j (1-p)^(m-j), exactly.
    let pr = p.to_rat();
    let qr = p.complement().to_rat();
    let mut weights = vec![rat_one(); m + 1];
    for j in 0..=m {
        let mut w = rat_one();
        for _ in 0..j {
            w *= pr.clone();
        }
        for _ in j..m {
            w *= qr.clone();
        }
        weights[j] = w;
    }

    let mut support = BTreeMap::new();
    for (chi, row) in counts.iter().enumerate() {
        let mut prob = Rat::zero();
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                prob += Rat::from_integer(BigInt::from(c)) * weights[j].clone();
            }
        }
        if !prob.is_zero() {
            support.insert(chi as u32, prob);
        }
    }

    let dist = ExactDistribution { p: pr, support };
    debug_assert_eq!(dist.total(), rat_one());
    Ok(dist)
}

/// `Pr[chi(G_p) <= d]`, exactly.
pub fn exact_tail(g: &Graph, p: Prob, d: u32) -> Result<Rat, PercolationError> {
    Ok(exact_chi_distribution(g, p)?.tail(d))
}

pub fn exact_tail_with_cap(g: &Graph, p: Prob, d: u32, cap: usize) -> Result<Rat, PercolationError> {
    Ok(exact_chi_distribution_with_cap(g, p, cap)?.tail(d))
}

/// `E[chi(G_p)]`, exactly.
pub fn exact_expected_chi(g: &Graph, p: Prob) -> Result<Rat, PercolationError> {
    Ok(exact_chi_distribution(g, p)?.expectation())
}

// ---------------------------------------------------------------------------
// Sampling and Monte Carlo
// ---------------------------------------------------------------------------

/// One exact Bernoulli(p) draw from 64 random bits: biased by less than
/// 2^-64 only when p itself needs more than 64 bits, which a u64/u64
/// rational never does.
fn bernoulli(rng: &mut ChaCha8Rng, p: Prob) -> bool {
    let r = rng.next_u64() as u128;
    r * (p.den() as u128) < (p.num() as u128) << 64
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Kept-edge bitmask for one trial; edges are drawn in canonical order.
fn sample_mask(g: &Graph, p: Prob, seed: u64, trial: u64) -> u64 {
    debug_assert!(g.num_edges() <= 64);
    let mut rng = trial_rng(seed, trial);
    let mut mask = 0u64;
    for i in 0..g.num_edges() {
        if bernoulli(&mut rng, p) {
            mask |= 1 << i;
        }
    }
    mask
}

/// One draw of `G_p` (trial index 0 of the seed's stream family).
pub fn sample(g: &Graph, p: Prob, seed: u64) -> Graph {
    sample_trial(g, p, seed, 0)
}

/// Draw number `trial` of the stream family keyed by `seed`; deterministic
/// in `(seed, trial)` and independent across trials.
pub fn sample_trial(g: &Graph, p: Prob, seed: u64, trial: u64) -> Graph {
    let mut rng = trial_rng(seed, trial);
    let kept = g
        .edges()
        .iter()
        .filter(|_| bernoulli(&mut rng, p))
        .map(|&(u, v)| (u as usize, v as usize));
    Graph::new(g.n(), kept).expect("subgraph of a valid graph")
}

/// A Monte Carlo estimate of a probability, with a two-sided Wilson score
/// interval. Reproducible: identical `(seed, trials)` give bit-identical
/// estimates regardless of thread count.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub point: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub trials: u64,
    pub successes: u64,
    pub seed: u64,
    pub confidence: f64,
}

/// Estimates `Pr[chi(G_p) <= d]` over `trials` independent percolations.
pub fn mc_tail(
    g: &Graph,
    p: Prob,
    d: u32,
    trials: u64,
    seed: u64,
    confidence: f64,
) -> Result<Estimate, PercolationError> {
    if trials == 0 {
        return Err(PercolationError::NoTrials);
    }
    let n = g.n();
    let edges = g.edges();
    let successes: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let mut adj = [0u64; 64];
            for &(u, v) in edges {
                if bernoulli(&mut rng, p) {
                    adj[u as usize] |= 1 << v;
                    adj[v as usize] |= 1 << u;
                }
            }
            let mut nodes = 0u64;
            u64::from(decide_colorable_adjacency(&adj[..n], d, &mut nodes).is_some())
        })
        .sum();

    let point = successes as f64 / trials as f64;
    let (ci_low, ci_high) = wilson_interval(successes, trials, confidence);
    Ok(Estimate { point, ci_low, ci_high, trials, successes, seed, confidence })
}

// ---------------------------------------------------------------------------
// Product bound
// ---------------------------------------------------------------------------

/// Result of sweeping `chi(H) * chi(H-complement) >= chi(G)` over edge
/// splits of `G`.
#[derive(Clone, Debug)]
pub struct ProductBoundOutcome {
    pub holds: bool,
    pub counterexample: Option<crate::graph::EdgeSubset>,
    pub masks_checked: u64,
    pub exhaustive: bool,
}

/// Checks the split product bound over all `2^|E|` edge subsets when the
/// graph is small enough, falling back to 20,000 sampled splits (seed 0).
pub fn check_product_bound(g: &Graph) -> ProductBoundOutcome {
    if g.num_edges() <= DEFAULT_PRODUCT_EXHAUSTIVE_CAP {
        check_product_bound_exhaustive(g).expect("within cap")
    } else {
        check_product_bound_sampled(g, 20_000, 0)
    }
}

pub fn check_product_bound_exhaustive(g: &Graph) -> Result<ProductBoundOutcome, PercolationError> {
    let m = g.num_edges();
    if m >= 64 || m > DEFAULT_EXACT_EDGE_CAP {
        return Err(PercolationError::EdgeCapExceeded { edges: m, cap: DEFAULT_EXACT_EDGE_CAP });
    }
    let k = {
        let mut nodes = 0;
        chi_adjacency(g.adjacency(), &mut nodes) as u64
    };
    let n = g.n();
    let total: u64 = 1 << m;
    let full = total - 1;
    let violation = (0..total).into_par_iter().find_first(|&mask| {
        let mut scratch = [0u64; 64];
        let a = chi_of_mask(n, g.edges(), mask, &mut scratch) as u64;
        let b = chi_of_mask(n, g.edges(), full & !mask, &mut scratch) as u64;
        a * b < k
    });
    Ok(ProductBoundOutcome {
        holds: violation.is_none(),
        counterexample: violation.map(|mask| {
            crate::graph::EdgeSubset::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1))
        }),
        masks_checked: total,
        exhaustive: true,
    })
}

pub fn check_product_bound_sampled(g: &Graph, trials: u64, seed: u64) -> ProductBoundOutcome {
    let m = g.num_edges();
    let k = {
        let mut nodes = 0;
        chi_adjacency(g.adjacency(), &mut nodes) as u64
    };
    let n = g.n();
    let violation = (0..trials).into_par_iter().find_first(|&trial| {
        let mask = sample_mask(g, Prob::HALF, seed, trial);
        let mut scratch = [0u64; 64];
        let a = chi_of_mask(n, g.edges(), mask, &mut scratch) as u64;
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let b = chi_of_mask(n, g.edges(), full & !mask, &mut scratch) as u64;
        a * b < k
    });
    ProductBoundOutcome {
        holds: violation.is_none(),
        counterexample: violation.map(|trial| {
            let mask = sample_mask(g, Prob::HALF, seed, trial);
            crate::graph::EdgeSubset::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1))
        }),
        masks_checked: trials,
        exhaustive: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use crate::rational::rat;

    #[test]
    fn triangle_distribution_by_hand() {
        // 8 subgraphs of K3: one empty (chi 1), six proper subsets with an
        // edge (chi 2), the full triangle (chi 3).
        let dist = exact_chi_distribution(&complete(3).unwrap(), Prob::HALF).unwrap();
        let got: Vec<(u32, Rat)> = dist.support().iter().map(|(&v, q)| (v, q.clone())).collect();
        assert_eq!(
            got,
            vec![(1, rat(1, 8)), (2, rat(6, 8)), (3, rat(1, 8))]
        );
        assert_eq!(dist.expectation(), rat(2, 1));
        assert_eq!(dist.total(), rat_one());
    }

    #[test]
    fn k2_distribution() {
        let dist = exact_chi_distribution(&complete(2).unwrap(), Prob::HALF).unwrap();
        assert_eq!(dist.tail(1), rat(1, 2));
        assert_eq!(dist.tail(2), rat_one());
        assert_eq!(dist.expectation(), rat(3, 2));
    }

    #[test]
    fn edgeless_distribution_is_point_mass_at_one() {
        let g = Graph::new(5, vec![]).unwrap();
        for p in [Prob::ZERO, Prob::HALF, Prob::ONE] {
            let dist = exact_chi_distribution(&g, p).unwrap();
            assert_eq!(dist.tail(1), rat_one());
            assert_eq!(dist.expectation(), rat_one());
        }
    }

    #[test]
    fn degenerate_probabilities() {
        let c5 = cycle(5).unwrap();
        let d0 = exact_chi_distribution(&c5, Prob::ZERO).unwrap();
        assert_eq!(d0.support().len(), 1);
        assert_eq!(d0.tail(1), rat_one());
        let d1 = exact_chi_distribution(&c5, Prob::ONE).unwrap();
        assert_eq!(d1.support().get(&3), Some(&rat_one()));
    }

    #[test]
    fn non_half_probability_is_exact() {
        // K2 with p = 1/3: chi=2 w.p. 1/3, chi=1 w.p. 2/3.
        let dist = exact_chi_distribution(&complete(2).unwrap(), Prob::new(1, 3).unwrap()).unwrap();
        assert_eq!(dist.tail(1), rat(2, 3));
        assert_eq!(dist.expectation(), rat(4, 3));
    }

    #[test]
    fn tail_monotone_in_d() {
        let g = crate::graph::gnp(8, 0.5, 3).unwrap();
        let dist = exact_chi_distribution(&g, Prob::HALF).unwrap();
        let mut last = Rat::zero();
        for d in 0..=8 {
            let t = dist.tail(d);
            assert!(t >= last);
            last = t;
        }
        assert_eq!(last, rat_one());
    }

    #[test]
    fn edge_cap_is_enforced() {
        let k8 = complete(8).unwrap(); // 28 edges
        assert!(matches!(
            exact_chi_distribution(&k8, Prob::HALF),
            Err(PercolationError::EdgeCapExceeded { edges: 28, .. })
        ));
        assert!(exact_chi_distribution_with_cap(&complete(6).unwrap(), Prob::HALF, 15).is_ok());
    }

    #[test]
    fn sampling_boundaries() {
        let k4 = complete(4).unwrap();
        assert_eq!(sample(&k4, Prob::ONE, 9), k4);
        assert_eq!(sample(&k4, Prob::ZERO, 9).num_edges(), 0);
    }

    #[test]
    fn sample_mean_kept_edges_matches_binomial() {
        // Binomial(6, 1/2): mean 3, sd of the mean over 10^4 trials is
        // sqrt(1.5/10^4); assert within 3 sigma.
        let k4 = complete(4).unwrap();
        let trials = 10_000u64;
        let total: u64 = (0..trials)
            .map(|t| sample_trial(&k4, Prob::HALF, 11, t).num_edges() as u64)
            .sum();
        let mean = total as f64 / trials as f64;
        let sigma = (1.5f64 / trials as f64).sqrt();
        assert!((mean - 3.0).abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn mc_tail_trivial_and_deterministic() {
        let c5 = cycle(5).unwrap();
        let est = mc_tail(&c5, Prob::ZERO, 1, 500, 7, 0.95).unwrap();
        assert_eq!(est.point, 1.0);

        let a = mc_tail(&c5, Prob::HALF, 2, 10_000, 42, 0.99).unwrap();
        let b = mc_tail(&c5, Prob::HALF, 2, 10_000, 42, 0.99).unwrap();
        assert_eq!(a, b);
        assert!(a.ci_low <= a.point && a.point <= a.ci_high);

        // A different seed should (essentially always) differ.
        let c = mc_tail(&c5, Prob::HALF, 2, 10_000, 43, 0.99).unwrap();
        assert_ne!(a.successes, c.successes);
        assert!(matches!(mc_tail(&c5, Prob::HALF, 2, 0, 0, 0.99), Err(PercolationError::NoTrials)));
    }

    #[test]
    fn mc_tail_thread_count_independent() {
        let c5 = cycle(5).unwrap();
        let parallel = mc_tail(&c5, Prob::HALF, 2, 20_000, 5, 0.99).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| mc_tail(&c5, Prob::HALF, 2, 20_000, 5, 0.99).unwrap());
        assert_eq!(parallel, serial);
    }

    #[test]
    fn product_bound_small_graphs() {
        for g in [complete(4).unwrap(), cycle(5).unwrap()] {
            let out = check_product_bound_exhaustive(&g).unwrap();
            assert!(out.holds, "{g:?}");
            assert!(out.counterexample.is_none());
            assert_eq!(out.masks_checked, 1 << g.num_edges());
        }
    }
}
