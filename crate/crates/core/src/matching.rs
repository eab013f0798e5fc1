//! Assignment-problem engine over complete (optionally masked) bipartite
//! graphs with integer weights.
//!
//! The min-cost solver is the Hungarian method with potentials, `O(k^3)`,
//! run in `i128` so that sentinel costs for masked edges cannot overflow.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A `k x k` bipartite graph: `weights[q][p]` is the weight of edge
/// `(q, p)`. When a mask is present only edges with `mask[q][p]` may be used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBipartite {
    weights: Vec<Vec<i64>>,
    mask: Option<Vec<Vec<bool>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// `pairs[q]` is the right vertex matched to left vertex `q`.
    pub pairs: Vec<usize>,
    pub total_weight: i64,
    /// Weight of the matched edge of each left vertex, in vertex order.
    pub per_vertex_weights: Vec<i64>,
}

impl WeightedBipartite {
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self> {
        let k = weights.len();
        if let Some(q) = weights.iter().position(|row| row.len() != k) {
            return Err(Error::invalid(
                format!("weights[{q}]"),
                format!("expected {k} entries, found {}", weights[q].len()),
            ));
        }
        Ok(WeightedBipartite {
            weights,
            mask: None,
        })
    }

    pub fn with_mask(mut self, mask: Vec<Vec<bool>>) -> Result<Self> {
        let k = self.size();
        if mask.len() != k || mask.iter().any(|row| row.len() != k) {
            return Err(Error::invalid("mask", format!("must be {k} x {k}")));
        }
        self.mask = Some(mask);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    #[inline]
    pub fn admissible(&self, q: usize, p: usize) -> bool {
        self.mask.as_ref().is_none_or(|m| m[q][p])
    }

    fn result_from_pairs(&self, pairs: Vec<usize>) -> MatchingResult {
        let per_vertex_weights: Vec<i64> = pairs
            .iter()
            .enumerate()
            .map(|(q, &p)| self.weights[q][p])
            .collect();
        MatchingResult {
            total_weight: per_vertex_weights.iter().sum(),
            per_vertex_weights,
            pairs,
        }
    }

    /// Whether some perfect matching uses only admissible edges (Kuhn's
    /// augmenting-path algorithm).
    pub fn has_perfect_matching(&self) -> bool {
        let k = self.size();
        let mut mate: Vec<Option<usize>> = vec![None; k];
        for q in 0..k {
            let mut seen = vec![false; k];
            if !self.augment(q, &mut seen, &mut mate) {
                return false;
            }
        }
        true
    }

    fn augment(&self, q: usize, seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for p in 0..self.size() {
            if self.admissible(q, p) && !seen[p] {
                seen[p] = true;
                if mate[p].is_none_or(|other| self.augment(other, seen, mate)) {
                    mate[p] = Some(q);
                    return true;
                }
            }
        }
        false
    }
}

/// Hungarian method, returns `row -> column` of a minimum-cost perfect
/// matching of a dense square cost matrix.
fn hungarian_min(cost: &[Vec<i128>]) -> Vec<usize> {
    let n = cost.len();
    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    // Column j (1-based) is matched to row p[j]; p[0] is the row being inserted.
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    assignment
}

fn solve_min(graph: &WeightedBipartite, sign: i128) -> Result<MatchingResult> {
    let k = graph.size();
    if graph.mask.is_some() && !graph.has_perfect_matching() {
        return Err(Error::Infeasible);
    }
    let cost: Vec<Vec<i128>> = graph
        .weights
        .iter()
        .map(|row| row.iter().map(|&w| sign * w as i128).collect())
        .collect();
    // Any matching using a forbidden edge must cost more than every
    // admissible one.
    let (lo, hi) = cost
        .iter()
        .flatten()
        .fold((0i128, 0i128), |(lo, hi), &c| (lo.min(c), hi.max(c)));
    let forbidden = (k as i128 + 1) * (hi - lo + 1);
    let cost: Vec<Vec<i128>> = cost
        .into_iter()
        .enumerate()
        .map(|(q, row)| {
            row.into_iter()
                .enumerate()
                .map(|(p, c)| if graph.admissible(q, p) { c } else { forbidden })
                .collect()
        })
        .collect();
    let pairs = hungarian_min(&cost);
    debug_assert!(pairs
        .iter()
        .enumerate()
        .all(|(q, &p)| graph.admissible(q, p)));
    Ok(graph.result_from_pairs(pairs))
}

/// Perfect matching of minimum total weight within the mask.
pub fn min_cost_perfect_matching(graph: &WeightedBipartite) -> Result<MatchingResult> {
    solve_min(graph, 1)
}

/// Perfect matching of maximum total weight within the mask.
pub fn max_weight_perfect_matching(graph: &WeightedBipartite) -> Result<MatchingResult> {
    solve_min(graph, -1)
}

/// Perfect matching whose per-vertex weight profile
/// `(w(0, μ_0), w(1, μ_1), ...)` is lexicographically greatest.
///
/// Vertices are fixed one at a time. Vertex `i` takes the heaviest edge
/// `(i, p)` such that the earlier vertices can still be matched using only
/// edges of their recorded weights; because the graph is complete, later
/// vertices never constrain the choice. Feasibility of every candidate `p`
/// is read off a single backward alternating-path search from the free
/// right vertices, so each step costs `O(k^2)`.
pub fn lexicographic_matching(graph: &WeightedBipartite) -> Result<MatchingResult> {
    if graph.mask.is_some() {
        return Err(Error::precondition(
            "lexicographic matching needs a complete graph",
        ));
    }
    let k = graph.size();
    let w = &graph.weights;
    let mut recorded: Vec<i64> = Vec::with_capacity(k);
    let mut mate_of_left = vec![usize::MAX; k];
    let mut mate_of_right: Vec<Option<usize>> = vec![None; k];
    let mut queue = VecDeque::with_capacity(k);
    for i in 0..k {
        // `reach[p]` is set when the left vertex currently holding `p` can be
        // rematched along admissible edges ending at a free right vertex;
        // `next[p]` is where that vertex moves.
        let mut reach = vec![false; k];
        let mut next = vec![usize::MAX; k];
        queue.clear();
        for p in 0..k {
            if mate_of_right[p].is_none() {
                reach[p] = true;
                queue.push_back(p);
            }
        }
        while let Some(target) = queue.pop_front() {
            for q in 0..i {
                if w[q][target] == recorded[q] {
                    let held = mate_of_left[q];
                    if !reach[held] {
                        reach[held] = true;
                        next[held] = target;
                        queue.push_back(held);
                    }
                }
            }
        }
        let chosen = (0..k)
            .filter(|&p| reach[p])
            .max_by(|&a, &b| w[i][a].cmp(&w[i][b]).then(b.cmp(&a)))
            .expect("a free right vertex always exists while left vertices remain");
        recorded.push(w[i][chosen]);

        let (mut left, mut right) = (i, chosen);
        loop {
            let displaced = mate_of_right[right];
            mate_of_right[right] = Some(left);
            mate_of_left[left] = right;
            match displaced {
                None => break,
                Some(q) => {
                    left = q;
                    right = next[right];
                }
            }
        }
    }
    debug_assert!(mate_of_left
        .iter()
        .enumerate()
        .all(|(q, &p)| w[q][p] == recorded[q]));
    Ok(graph.result_from_pairs(mate_of_left))
}

/// The same profile computed by re-solving a maximum-weight perfect matching
/// for every vertex: earlier vertices are restricted to edges of their
/// recorded weight and later vertices are given weight zero. `O(k^4)`; kept
/// as an independent route for cross-checking [`lexicographic_matching`].
pub fn lexicographic_matching_by_resolving(graph: &WeightedBipartite) -> Result<MatchingResult> {
    if graph.mask.is_some() {
        return Err(Error::precondition(
            "lexicographic matching needs a complete graph",
        ));
    }
    let k = graph.size();
    let w = &graph.weights;
    let mut recorded: Vec<i64> = Vec::with_capacity(k);
    let mut last = (0..k).collect::<Vec<_>>();
    for i in 0..k {
        let weights = (0..k)
            .map(|q| (0..k).map(|p| if q <= i { w[q][p] } else { 0 }).collect())
            .collect();
        let mask = (0..k)
            .map(|q| (0..k).map(|p| q >= i || w[q][p] == recorded[q]).collect())
            .collect();
        let step = max_weight_perfect_matching(&WeightedBipartite::new(weights)?.with_mask(mask)?)?;
        recorded.push(w[i][step.pairs[i]]);
        last = step.pairs;
    }
    Ok(graph.result_from_pairs(last))
}
