//! Ideals of numerical semigroups, the divisor sets `D(i)`, gap-pair counts
//! `G(i)` and maximum sparse ideals.
//!
//! An ideal `I ⊆ S` is stored through its finite complement `S ∖ I`. The
//! complement of a proper ideal always contains 0 and is closed under
//! taking divisors inside `S`: if `x` is in the complement and `x − y ∈ S`
//! for some `y ∈ S`, then `y` is in the complement too.
//!
//! The Frobenius number of a proper ideal is at most `2g − 1 + #(S ∖ I)`;
//! ideals attaining the bound are *maximum sparse*. Those are exactly the
//! ideals `S ∖ D(i)` with `G(i) = 0`, and the element `λ_i` is called the
//! leader. Gap pairs are counted unordered (`a ≤ b`); only the predicate
//! `G(i) = 0` matters, which does not depend on the convention.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `D(i) = { λ_j ∈ S : λ_i − λ_j ∈ S }`, increasing.
pub fn divisor_set(s: &NumericalSemigroup, i: usize) -> Vec<u64> {
    divisors_of_value(s, s.lambda(i))
}

fn divisors_of_value(s: &NumericalSemigroup, value: u64) -> Vec<u64> {
    s.elements_up_to(value)
        .filter(|&y| s.contains_value(value - y))
        .collect()
}

/// Number of unordered pairs of gaps `a ≤ b` with `a + b = λ_i`.
pub fn gap_pair_count(s: &NumericalSemigroup, i: usize) -> usize {
    gap_pairs_of_value(s, s.lambda(i))
}

fn gap_pairs_of_value(s: &NumericalSemigroup, value: u64) -> usize {
    s.gaps()
        .iter()
        .take_while(|&&a| 2 * a <= value)
        .filter(|&&a| s.is_gap(value - a))
        .count()
}

/// Whether `S ∖ D(i)` is a maximum sparse ideal, i.e. `G(i) = 0` for a
/// non-zero `λ_i`.
///
/// Index 0 qualifies only for `S = ℕ₀`: there `S ∖ {0}` has Frobenius
/// number `0 = 2·0 − 1 + 1`, while for positive genus `S ∖ {0}` has
/// Frobenius number `c − 1 < 2g`.
pub fn is_leader_index(s: &NumericalSemigroup, i: usize) -> bool {
    (i >= 1 || s.genus() == 0) && gap_pair_count(s, i) == 0
}

/// The non-zero elements `λ ≤ bound` with `G(λ) = 0`.
///
/// All of them are at least the conductor, and every `λ ≥ 2·(largest gap)+1`
/// qualifies, so any bound of at least `2c` describes the whole (infinite)
/// ideal: beyond it the set continues with every integer.
pub fn leader_set(s: &NumericalSemigroup, bound: u64) -> Vec<u64> {
    s.elements_up_to(bound)
        .filter(|&v| v > 0 && gap_pairs_of_value(s, v) == 0)
        .collect()
}

/// Maximum sparse ideal `S ∖ D(i)` led by `λ_i`.
pub fn maximum_sparse_from_leader(s: &NumericalSemigroup, i: usize) -> Result<SemigroupIdeal> {
    if i == 0 {
        return Err(Error::IndexOutOfRange(i));
    }
    let value = s.lambda(i);
    let pairs = gap_pairs_of_value(s, value);
    if pairs != 0 {
        return Err(Error::NotALeader { value, pairs });
    }
    let ideal = SemigroupIdeal::from_complement(s, divisors_of_value(s, value))?;
    debug_assert_eq!(ideal.leader(), Some(value));
    Ok(ideal)
}

/// All maximum sparse ideals whose leader is at most `bound`, by leader.
pub fn maximum_sparse_ideals(s: &NumericalSemigroup, bound: u64) -> Vec<SemigroupIdeal> {
    leader_set(s, bound)
        .into_iter()
        .map(|v| {
            let i = s.index_of(v).expect("leaders are elements");
            maximum_sparse_from_leader(s, i).expect("leader_set yields leaders")
        })
        .collect()
}

/// Every proper ideal whose complement has at most `max_size` elements, all
/// of them at most `max_element`.
///
/// Complements are divisor-closed, and divisors are never larger than what
/// they divide, so they are grown in increasing order: an element may be
/// added once all of its proper divisors are present.
pub fn ideals_with_small_complement(
    s: &NumericalSemigroup,
    max_element: u64,
    max_size: usize,
) -> Vec<SemigroupIdeal> {
    let candidates: Vec<(u64, Vec<u64>)> = s
        .elements_up_to(max_element)
        .map(|v| {
            let mut d = divisors_of_value(s, v);
            d.pop();
            (v, d)
        })
        .collect();

    fn grow(
        s: &NumericalSemigroup,
        candidates: &[(u64, Vec<u64>)],
        start: usize,
        current: &mut Vec<u64>,
        max_size: usize,
        out: &mut Vec<SemigroupIdeal>,
    ) {
        if !current.is_empty() {
            out.push(SemigroupIdeal::from_sorted_unchecked(s, current.clone()));
        }
        if current.len() == max_size {
            return;
        }
        for (k, (v, divisors)) in candidates.iter().enumerate().skip(start) {
            if divisors.iter().all(|d| current.binary_search(d).is_ok()) {
                current.push(*v);
                grow(s, candidates, k + 1, current, max_size, out);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    if max_size > 0 {
        grow(s, &candidates, 0, &mut Vec::new(), max_size, &mut out);
    }
    out
}

/// A proper ideal of a numerical semigroup, stored by its complement.
///
/// Two ideals are equal iff they have the same parent and complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealRecord", into = "IdealRecord")]
pub struct SemigroupIdeal {
    parent: NumericalSemigroup,
    complement: Vec<u64>,
    frobenius: u64,
    leader: Option<u64>,
}

impl SemigroupIdeal {
    /// Builds `S ∖ complement`, checking that it is a proper ideal.
    pub fn from_complement(parent: &NumericalSemigroup, complement: Vec<u64>) -> Result<Self> {
        let mut complement = complement;
        complement.sort_unstable();
        complement.dedup();
        if complement.is_empty() {
            return Err(Error::NotProper);
        }
        if let Some(&x) = complement.iter().find(|&&x| !parent.contains_value(x)) {
            return Err(Error::NotInSemigroup(x));
        }
        for &x in &complement {
            for y in parent.elements_up_to(x) {
                if parent.contains_value(x - y) && complement.binary_search(&y).is_err() {
                    return Err(Error::NotAnIdeal(y));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(parent, complement))
    }

    fn from_sorted_unchecked(parent: &NumericalSemigroup, complement: Vec<u64>) -> Self {
        let max_gap = parent.gaps().last().copied().unwrap_or(0);
        let frobenius = max_gap.max(*complement.last().expect("proper"));
        let bound = 2 * parent.genus() as u64 + complement.len() as u64 - 1;
        let leader = (frobenius == bound).then_some(frobenius);
        Self {
            parent: parent.clone(),
            complement,
            frobenius,
            leader,
        }
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// `S ∖ I`, increasing.
    pub fn complement(&self) -> &[u64] {
        &self.complement
    }

    /// Largest integer not in the ideal.
    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }

    /// `Some(λ_i)` iff the ideal is maximum sparse.
    pub fn leader(&self) -> Option<u64> {
        self.leader
    }

    /// Frobenius number equals `2g − 1 + #(S ∖ I)`.
    pub fn is_maximum_sparse(&self) -> bool {
        self.leader.is_some()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.parent.contains(n) && self.complement.binary_search(&(n as u64)).is_err()
    }

    /// `self ⊇ other`.
    pub fn includes(&self, other: &SemigroupIdeal) -> bool {
        self.complement
            .iter()
            .all(|x| other.complement.binary_search(x).is_ok())
    }
}

/// Truth values of the four conditions relating two maximum sparse ideals
/// `I` (leader `λ_i`) and `I'` (leader `λ_i'`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    /// `I' ⊇ I`.
    pub ideal_inclusion: bool,
    /// `λ_i − λ_i' ∈ S`.
    pub leader_difference_in_s: bool,
    /// `S ∖ I' ⊆ S ∖ I`.
    pub complement_inclusion: bool,
    /// `#(S ∖ I) − #(S ∖ I') ∈ S`.
    pub cardinality_difference_in_s: bool,
}

impl InclusionReport {
    pub fn all_agree(&self) -> bool {
        let v = self.ideal_inclusion;
        self.leader_difference_in_s == v
            && self.complement_inclusion == v
            && self.cardinality_difference_in_s == v
    }
}

/// Evaluates the four inclusion conditions between `ideal` and `other`.
pub fn inclusion_report(ideal: &SemigroupIdeal, other: &SemigroupIdeal) -> Result<InclusionReport> {
    if ideal.parent != other.parent {
        return Err(Error::DifferentParents);
    }
    let (Some(lead), Some(lead_other)) = (ideal.leader, other.leader) else {
        return Err(Error::NotMaximumSparse);
    };
    let s = &ideal.parent;
    let complement_inclusion = other
        .complement
        .iter()
        .all(|x| ideal.complement.binary_search(x).is_ok());
    Ok(InclusionReport {
        ideal_inclusion: other.includes(ideal),
        leader_difference_in_s: s.contains(lead as i64 - lead_other as i64),
        complement_inclusion,
        cardinality_difference_in_s: s
            .contains(ideal.complement.len() as i64 - other.complement.len() as i64),
    })
}

#[derive(Serialize, Deserialize)]
struct IdealRecord {
    parent_generators: Vec<u64>,
    complement: Vec<u64>,
    leader: Option<u64>,
    frobenius: u64,
}

impl From<SemigroupIdeal> for IdealRecord {
    fn from(i: SemigroupIdeal) -> Self {
        IdealRecord {
            parent_generators: i.parent.generators().to_vec(),
            complement: i.complement,
            leader: i.leader,
            frobenius: i.frobenius,
        }
    }
}

impl TryFrom<IdealRecord> for SemigroupIdeal {
    type Error = Error;

    fn try_from(r: IdealRecord) -> Result<Self> {
        let parent = NumericalSemigroup::from_generators(&r.parent_generators)?;
        let ideal = SemigroupIdeal::from_complement(&parent, r.complement)?;
        if ideal.leader != r.leader || ideal.frobenius != r.frobenius {
            return Err(Error::PreconditionViolated(
                "serialized leader/frobenius disagree with the complement".into(),
            ));
        }
        Ok(ideal)
    }
}
