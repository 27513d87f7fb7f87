//! Punctured point subsets, their inclusion hierarchy and the inheritance
//! check.
//!
//! A subset `P` of the curve points qualifies when `#P + 2g − 1 ∈ (W*)'`,
//! the rank profile of the sequence punctured to `P`. Qualifying subsets
//! with `#P > 2g + 2` are exactly those whose punctured sequence is
//! isometry-dual; they sit "left of the line" in the hierarchy.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::HermitianCurve;
use crate::semigroup::NumericalSemigroup;

/// Exhaustive enumeration is refused above `2^25` subsets.
pub const MAX_EXHAUSTIVE_POINTS: usize = 25;

/// A set of 1-based point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    indices: Vec<usize>,
    bits: FixedBitSet,
}

impl PointSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        let mut bits = FixedBitSet::with_capacity(indices.last().map_or(0, |&m| m + 1));
        for &i in &indices {
            bits.insert(i);
        }
        Self { indices, bits }
    }

    /// Parses a label such as `"1258"` (single digits) or `"1,2,10"`.
    pub fn parse(label: &str) -> Option<Self> {
        let indices: Option<Vec<usize>> = if label.contains(',') {
            label.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            label.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        indices.map(Self::new)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_strict_subset(&self, other: &PointSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Indices concatenated when all are single digits, else comma-joined.
    pub fn label(&self) -> String {
        let sep = if self.indices.iter().all(|&i| i < 10) { "" } else { "," };
        self.indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Cardinality descending, then lexicographic.
    fn canonical_cmp(&self, other: &PointSet) -> std::cmp::Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

/// Whether `#P + 2g − 1 ∈ (W*)'` for the points at `set`.
pub fn qualifies(curve: &HermitianCurve, set: &PointSet) -> Result<bool> {
    Ok(curve.code_sequence(set.indices())?.isometry_dual_criterion())
}

/// Every qualifying subset with at least `min_size` points, canonically
/// ordered. Only feasible for small point counts (`q = 2`).
pub fn qualifying_subsets(curve: &HermitianCurve, min_size: usize) -> Result<Vec<PointSet>> {
    let n = curve.points().len();
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::TooManySubsets { points: n });
    }
    let mut found: Vec<PointSet> = (1u64..1 << n)
        .into_par_iter()
        .filter(|mask| mask.count_ones() as usize >= min_size)
        .map(|mask| {
            let set = PointSet::new((0..n).filter(|k| mask >> k & 1 == 1).map(|k| k + 1));
            qualifies(curve, &set).map(|ok| ok.then_some(set))
        })
        .filter_map(Result::transpose)
        .collect::<Result<_>>()?;
    found.sort_by(PointSet::canonical_cmp);
    Ok(found)
}

/// Outcome of a seeded sampling run.
#[derive(Debug, Clone)]
pub struct SampleRun {
    pub seed: u64,
    /// Distinct subsets drawn.
    pub drawn: Vec<PointSet>,
    /// The qualifying ones among them, canonically ordered.
    pub qualifying: Vec<PointSet>,
}

/// Draws `samples` subsets, cycling through the sizes `min_size..=n` and
/// choosing each subset uniformly among those of its size.
pub fn sample_qualifying_subsets(
    curve: &HermitianCurve,
    min_size: usize,
    samples: usize,
    seed: u64,
) -> Result<SampleRun> {
    let n = curve.points().len();
    let min_size = min_size.max(1);
    if min_size > n {
        return Ok(SampleRun {
            seed,
            drawn: Vec::new(),
            qualifying: Vec::new(),
        });
    }
    let sizes = n - min_size + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn: Vec<PointSet> = (0..samples)
        .map(|k| {
            let size = min_size + k % sizes;
            PointSet::new(index::sample(&mut rng, n, size).into_iter().map(|i| i + 1))
        })
        .collect();
    drawn.sort_by(PointSet::canonical_cmp);
    drawn.dedup();
    let flags: Vec<bool> = drawn
        .par_iter()
        .map(|s| qualifies(curve, s))
        .collect::<Result<_>>()?;
    let qualifying = drawn
        .iter()
        .zip(flags)
        .filter(|(_, ok)| *ok)
        .map(|(s, _)| s.clone())
        .collect();
    Ok(SampleRun {
        seed,
        drawn,
        qualifying,
    })
}

/// Hasse diagram of a family of point sets under inclusion.
#[derive(Debug, Clone)]
pub struct HierarchyGraph {
    nodes: Vec<PointSet>,
    /// `(child, parent)` node indices of covering pairs, sorted.
    edges: Vec<(usize, usize)>,
    /// Nodes with more points than this are left of the line (`2g + 2`).
    boundary: usize,
}

/// Builds the covering relation among `subsets`.
pub fn build_hierarchy(subsets: Vec<PointSet>, boundary: usize) -> HierarchyGraph {
    let mut nodes = subsets;
    nodes.sort_by(PointSet::canonical_cmp);
    nodes.dedup();

    let mut edges = Vec::new();
    for (a, child) in nodes.iter().enumerate() {
        let supersets: Vec<usize> = (0..nodes.len())
            .filter(|&b| child.is_strict_subset(&nodes[b]))
            .collect();
        for &b in &supersets {
            let covered = !supersets
                .iter()
                .any(|&c| c != b && nodes[c].is_strict_subset(&nodes[b]));
            if covered {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    HierarchyGraph {
        nodes,
        edges,
        boundary,
    }
}

impl HierarchyGraph {
    pub fn nodes(&self) -> &[PointSet] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    pub fn is_left_of_line(&self, node: usize) -> bool {
        self.nodes[node].len() > self.boundary
    }

    pub fn node_index(&self, set: &PointSet) -> Option<usize> {
        self.nodes.iter().position(|n| n == set)
    }

    /// Edges as label pairs `(child, parent)`.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.nodes[a].label(), self.nodes[b].label()))
            .collect()
    }

    /// Node count per cardinality, largest first.
    pub fn cardinality_counts(&self) -> Vec<(usize, usize)> {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for n in &self.nodes {
            match counts.last_mut() {
                Some((len, c)) if *len == n.len() => *c += 1,
                _ => counts.push((n.len(), 1)),
            }
        }
        counts
    }

    /// Deterministic Graphviz rendering, one rank per cardinality.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph hierarchy {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=plaintext];\n");

        let ranks = self.cardinality_counts();
        let mut start = 0;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &(len, count) in &ranks {
            let labels: Vec<String> =
                self.nodes[start..start + count].iter().map(|n| n.label()).collect();
            start += count;
            if len > self.boundary {
                left.push(labels);
            } else {
                right.push(labels);
            }
        }
        let rank_line = |labels: &[String], indent: &str| {
            let body: String = labels.iter().map(|l| format!(" \"{l}\";")).collect();
            format!("{indent}{{ rank=same;{body} }}\n")
        };
        if !left.is_empty() {
            out.push_str("  subgraph cluster_left_of_line {\n");
            out.push_str("    style=dashed;\n");
            let _ = writeln!(out, "    label=\"n' > {}\";", self.boundary);
            for labels in &left {
                out.push_str(&rank_line(labels, "    "));
            }
            out.push_str("  }\n");
        }
        for labels in &right {
            out.push_str(&rank_line(labels, "  "));
        }
        for (child, parent) in self.edge_labels() {
            let _ = writeln!(out, "  \"{child}\" -> \"{parent}\";");
        }
        out.push_str("}\n");
        out
    }

    /// `{"nodes":[{"set":[...],"left_of_line":bool}],"edges":[[child,parent]]}`
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node<'a> {
            set: &'a [usize],
            left_of_line: bool,
        }
        #[derive(Serialize)]
        struct Graph<'a> {
            nodes: Vec<Node<'a>>,
            edges: Vec<[usize; 2]>,
        }
        let g = Graph {
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(k, n)| Node {
                    set: n.indices(),
                    left_of_line: self.is_left_of_line(k),
                })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_value(g).expect("graph serializes")
    }
}

/// Result of checking that point counts of nested isometry-dual subsets
/// differ by an element of `W`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct InheritanceReport {
    /// Inclusion pairs `(child, parent)` with `#child > boundary`.
    pub checked: Vec<(usize, usize)>,
    /// Checked pairs whose cardinality difference is not in `W`.
    pub violations: Vec<(usize, usize)>,
    /// Pairs with `#child == boundary`, outside the theorem's hypothesis;
    /// reported with whether the difference lies in `W` anyway.
    pub boundary_pairs: Vec<(usize, usize, bool)>,
    /// Smallest cardinality difference over all covering edges.
    pub min_edge_difference: Option<usize>,
}

impl InheritanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `#P − #P' ∈ W` for every pair of nodes `P' ⊂ P` with
/// `#P' > boundary`.
pub fn verify_inheritance(
    graph: &HierarchyGraph,
    w: &NumericalSemigroup,
    boundary: usize,
) -> InheritanceReport {
    let mut report = InheritanceReport::default();
    let nodes = graph.nodes();
    for (a, child) in nodes.iter().enumerate() {
        for (b, parent) in nodes.iter().enumerate() {
            if !child.is_strict_subset(parent) {
                continue;
            }
            let diff = (parent.len() - child.len()) as u64;
            let ok = w.contains_value(diff);
            if child.len() > boundary {
                report.checked.push((a, b));
                if !ok {
                    report.violations.push((a, b));
                }
            } else if child.len() == boundary {
                report.boundary_pairs.push((a, b, ok));
            }
        }
    }
    report.min_edge_difference = graph
        .edges()
        .iter()
        .map(|&(a, b)| nodes[b].len() - nodes[a].len())
        .min();
    report
}
