//! Numerical semigroups given by a generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup `S ⊆ ℕ₀`: contains 0, closed under addition, with
/// finitely many gaps.
///
/// Membership is stored explicitly below the conductor; every integer at or
/// above the conductor is an element.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRecord", into = "SemigroupRecord")]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `membership[n]` for `n < conductor`.
    membership: Vec<bool>,
    conductor: u64,
    gaps: Vec<u64>,
    /// Elements strictly below the conductor, increasing.
    small_elements: Vec<u64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Smallest numerical semigroup containing `generators`.
    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }

        let min = gens[0];
        let max = *gens.last().unwrap();
        // The Frobenius number of <gens> is below min * max.
        let bound = (min * max) as usize;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for n in 1..=bound {
            member[n] = gens
                .iter()
                .any(|&g| g as usize <= n && member[n - g as usize]);
        }
        let conductor = member
            .iter()
            .rposition(|&m| !m)
            .map_or(0, |frobenius| frobenius + 1);
        debug_assert!(bound + 1 - conductor >= min as usize);

        member.truncate(conductor);
        let gaps = (0..conductor as u64).filter(|&n| !member[n as usize]).collect();
        let small_elements = (0..conductor as u64).filter(|&n| member[n as usize]).collect();
        Ok(Self {
            generators: gens,
            membership: member,
            conductor: conductor as u64,
            gaps,
            small_elements,
        })
    }

    /// The semigroup `ℕ₀`.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    /// Generators as supplied (sorted, deduplicated).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Smallest non-zero element.
    pub fn multiplicity(&self) -> u64 {
        self.lambda(1)
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.contains_value(n as u64)
    }

    pub fn contains_value(&self, n: u64) -> bool {
        n >= self.conductor || self.membership[n as usize]
    }

    pub fn is_gap(&self, n: u64) -> bool {
        !self.contains_value(n)
    }

    /// The `i`-th smallest element `λ_i`, with `λ_0 = 0`.
    pub fn lambda(&self, i: usize) -> u64 {
        match self.small_elements.get(i) {
            Some(&v) => v,
            None => self.conductor + (i - self.small_elements.len()) as u64,
        }
    }

    /// Inverse of [`lambda`](Self::lambda): the index of `value` in `S`.
    pub fn index_of(&self, value: u64) -> Option<usize> {
        if value >= self.conductor {
            Some(self.small_elements.len() + (value - self.conductor) as usize)
        } else {
            self.small_elements.binary_search(&value).ok()
        }
    }

    /// Like [`index_of`](Self::index_of) but fails for non-members.
    pub fn require_index(&self, value: u64) -> Result<usize> {
        self.index_of(value).ok_or(Error::NotInSemigroup(value))
    }

    /// Elements `λ` with `λ ≤ bound`, increasing.
    pub fn elements_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&n| self.contains_value(n))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupRecord {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    genus: usize,
}

impl From<NumericalSemigroup> for SemigroupRecord {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRecord {
            genus: s.genus(),
            conductor: s.conductor,
            gaps: s.gaps,
            generators: s.generators,
        }
    }
}

impl TryFrom<SemigroupRecord> for NumericalSemigroup {
    type Error = Error;

    fn try_from(r: SemigroupRecord) -> Result<Self> {
        let s = NumericalSemigroup::from_generators(&r.generators)?;
        if s.gaps != r.gaps || s.conductor != r.conductor || s.genus() != r.genus {
            return Err(Error::PreconditionViolated(format!(
                "serialized gaps/conductor/genus do not match the semigroup generated by {:?}",
                r.generators
            )));
        }
        Ok(s)
    }
}
