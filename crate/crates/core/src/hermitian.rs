//! One-point codes on the Hermitian curve `x^{q+1} = y^q + y` over `GF(q²)`.
//!
//! The functions with poles only at the point at infinity have the basis
//! `x^a y^b` (`b < q`), of pole order `a·q + b·(q+1)`. These pole orders are
//! pairwise distinct and sweep out the Weierstrass semigroup `⟨q, q+1⟩`.
//!
//! Evaluating the basis in increasing pole order at a point set
//! `P_1, …, P_n` gives the nested codes `C_m`; the pole orders at which the
//! dimension grows form `W* = {m_1 = 0, m_2, …, m_n}`.

use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::{prime_power, Field, FieldElement, FieldHeader, MAX_ORDER};
use crate::linalg::{weighted_dot, EchelonBasis};
use crate::semigroup::NumericalSemigroup;
use crate::sparse_ideals::SemigroupIdeal;

/// Exhaustive isometry search refuses spaces larger than this.
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;

/// An affine rational point of the Hermitian curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.value(), self.y.value()].serialize(s)
    }
}

/// The monomial `x^a y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisFunction {
    pub x_exp: u64,
    pub y_exp: u64,
    /// Pole order at infinity, `a·q + b·(q+1)`.
    pub pole_order: u64,
}

/// The Hermitian curve over `GF(q²)` with its affine points in a fixed order.
#[derive(Debug, Clone)]
pub struct HermitianCurve {
    q: u64,
    field: Arc<Field>,
    points: Vec<CurvePoint>,
    semigroup: NumericalSemigroup,
}

impl HermitianCurve {
    /// Requires `q` to be a prime power with `q² ≤ 256`.
    ///
    /// For `q = 2` the points come in the order `(0,0), (α,α), (α+1,α),
    /// (1,α), (α,α+1), (α+1,α+1), (1,α+1), (0,1)` over
    /// `GF(4) = GF(2)[x]/(x²+x+1)`; for other `q` they are sorted by the
    /// encodings of `(x, y)`.
    pub fn new(q: u64) -> Result<Self> {
        match q.checked_mul(q) {
            Some(q2) if q2 <= MAX_ORDER => {}
            _ => return Err(Error::FieldTooLarge(q.saturating_mul(q))),
        }
        if prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        let field = Arc::new(Field::with_order(q * q)?);
        let mut points = Vec::new();
        for x in field.all_elements() {
            let lhs = field.pow(x, q + 1)?;
            for y in field.all_elements() {
                let rhs = field.add(field.pow(y, q)?, y)?;
                if lhs == rhs {
                    points.push(CurvePoint { x, y });
                }
            }
        }
        if q == 2 {
            const ORDER: [(u64, u64); 8] =
                [(0, 0), (2, 2), (3, 2), (1, 2), (2, 3), (3, 3), (1, 3), (0, 1)];
            let listed: Vec<CurvePoint> = ORDER
                .iter()
                .map(|&(x, y)| CurvePoint {
                    x: field.element(x).unwrap(),
                    y: field.element(y).unwrap(),
                })
                .collect();
            debug_assert!(listed.iter().all(|p| points.contains(p)));
            points = listed;
        }
        let semigroup = NumericalSemigroup::from_generators(&[q, q + 1])?;
        Ok(Self {
            q,
            field,
            points,
            semigroup,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// `q(q−1)/2`.
    pub fn genus(&self) -> usize {
        (self.q * (self.q - 1) / 2) as usize
    }

    /// All `q³` affine points.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    /// Points for 1-based indices into [`points`](Self::points).
    pub fn points_at(&self, indices: &[usize]) -> Result<Vec<CurvePoint>> {
        indices
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .and_then(|k| self.points.get(k).copied())
                    .ok_or(Error::PointIndexOutOfRange(i))
            })
            .collect()
    }

    /// `⟨q, q+1⟩`.
    pub fn weierstrass_semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        let f = &*self.field;
        let (Ok(x), Ok(y)) = (f.pow(p.x, self.q + 1), f.pow(p.y, self.q)) else {
            return false;
        };
        f.add(y, p.y).is_ok_and(|rhs| rhs == x)
    }

    /// The basis monomial of pole order `m`, if `m` is a pole order.
    pub fn function_with_pole_order(&self, m: u64) -> Option<BasisFunction> {
        basis_function(self.q, m)
    }

    /// First `count` basis functions, by increasing pole order.
    pub fn monomial_basis(&self, count: usize) -> Vec<BasisFunction> {
        (0..)
            .filter_map(|m| self.function_with_pole_order(m))
            .take(count)
            .collect()
    }

    /// Evaluations of `f` at `points`, as encodings.
    pub fn evaluate(&self, f: &BasisFunction, points: &[CurvePoint]) -> Vec<u8> {
        let field = &*self.field;
        points
            .iter()
            .map(|p| {
                field.mul_raw(
                    field.pow_raw(p.x.value(), f.x_exp),
                    field.pow_raw(p.y.value(), f.y_exp),
                )
            })
            .collect()
    }

    /// Rank profile of the one-point code sequence at `points`.
    pub fn compute_wstar(&self, points: &[CurvePoint]) -> Result<CodeSequence> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(p) = points.iter().find(|p| !self.is_on_curve(p)) {
            return Err(Error::PointNotOnCurve {
                x: p.x.value(),
                y: p.y.value(),
            });
        }
        for (k, p) in points.iter().enumerate() {
            if points[..k].contains(p) {
                return Err(Error::DuplicatePoints);
            }
        }

        let n = points.len();
        let g = self.genus();
        let mut echelon = EchelonBasis::new(n);
        let mut functions = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        let mut rank_profile = Vec::new();
        // Full rank is reached by m = n + 2g − 1 at the latest.
        let mut m = 0;
        while echelon.rank() < n {
            assert!(m < (n + 2 * g) as u64, "rank must be full by pole order n + 2g - 1");
            if let Some(f) = self.function_with_pole_order(m) {
                let row = self.evaluate(&f, points);
                if echelon.insert(&self.field, &row) {
                    functions.push(f);
                    rows.push(row);
                }
                rank_profile.push((m, echelon.rank()));
            }
            m += 1;
        }
        Ok(CodeSequence {
            q: self.q,
            genus: g,
            field: Arc::clone(&self.field),
            points: points.to_vec(),
            functions,
            rows,
            rank_profile,
        })
    }

    /// [`compute_wstar`](Self::compute_wstar) on 1-based point indices.
    pub fn code_sequence(&self, indices: &[usize]) -> Result<CodeSequence> {
        self.compute_wstar(&self.points_at(indices)?)
    }
}

/// All `q³` affine points of the Hermitian curve over `GF(q²)`.
pub fn hermitian_points(q: u64) -> Result<Vec<CurvePoint>> {
    Ok(HermitianCurve::new(q)?.points)
}

// m = (a + b)q + b, so b = m mod q.
fn basis_function(q: u64, m: u64) -> Option<BasisFunction> {
    let b = m % q;
    let a = m.checked_sub(b * (q + 1))? / q;
    Some(BasisFunction {
        x_exp: a,
        y_exp: b,
        pole_order: m,
    })
}

/// First `count` monomials `x^a y^b` by increasing pole order.
pub fn monomial_basis(q: u64, count: usize) -> Vec<BasisFunction> {
    (0..).filter_map(|m| basis_function(q, m)).take(count).collect()
}

/// `⟨q, q+1⟩`, the Weierstrass semigroup at infinity.
pub fn weierstrass_semigroup(q: u64) -> Result<NumericalSemigroup> {
    if q < 2 {
        return Err(Error::PreconditionViolated("q must be at least 2".into()));
    }
    NumericalSemigroup::from_generators(&[q, q + 1])
}

/// The nested codes `C^1 ⊆ … ⊆ C^n` of a point set, with their generators.
#[derive(Debug, Clone)]
pub struct CodeSequence {
    q: u64,
    genus: usize,
    field: Arc<Field>,
    points: Vec<CurvePoint>,
    /// The basis functions that increased the rank, in order.
    functions: Vec<BasisFunction>,
    /// Evaluation vectors of `functions`; the first `i` span `C^i`.
    rows: Vec<Vec<u8>>,
    /// `(m, dim C_m)` for every pole order `m ≤ max W*`.
    rank_profile: Vec<(u64, usize)>,
}

impl CodeSequence {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn functions(&self) -> &[BasisFunction] {
        &self.functions
    }

    /// `W*`, increasing; always of size `n`.
    pub fn wstar(&self) -> Vec<u64> {
        self.functions.iter().map(|f| f.pole_order).collect()
    }

    pub fn rank_profile(&self) -> &[(u64, usize)] {
        &self.rank_profile
    }

    /// Row-major `n × n` generator matrix; the first `i` rows generate `C^i`.
    pub fn generator_matrix(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// `n + 2g − 1 ∈ W*`.
    pub fn isometry_dual_criterion(&self) -> bool {
        let target = (self.n() + 2 * self.genus) as u64 - 1;
        self.functions.iter().any(|f| f.pole_order == target)
    }

    /// Whether `x ∗ C^i = (C^{n−i})^⊥` for every `i`.
    ///
    /// With all `x_k ≠ 0` both sides have dimension `i`, so equality reduces
    /// to `Σ_k x_k u_k v_k = 0` for every generator `u` of `C^i` and `v` of
    /// `C^{n−i}`, i.e. for generator rows `a, b` with `a + b ≤ n − 2`.
    pub fn is_isometry_vector(&self, x: &[u8]) -> bool {
        let n = self.n();
        if x.len() != n || x.contains(&0) {
            return false;
        }
        (0..n.saturating_sub(1)).all(|a| {
            (0..n - 1 - a).all(|b| weighted_dot(&self.field, x, &self.rows[a], &self.rows[b]) == 0)
        })
    }

    /// Exhaustive search for an isometry vector with `x_1 = 1`.
    ///
    /// Scaling preserves every `x ∗ C^i`, so fixing the first coordinate
    /// loses nothing. The first hit in lexicographic order of encodings is
    /// returned.
    pub fn find_isometry_vector(&self) -> Result<Option<Vec<FieldElement>>> {
        let n = self.n();
        let units = (self.field.order() - 1) as u128;
        let space = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(units));
        match space {
            Some(s) if s <= MAX_SEARCH_SPACE => {}
            _ => return Err(Error::SearchSpaceTooLarge(space.unwrap_or(u128::MAX))),
        }
        let q2 = self.field.order() as u8;
        let mut x = vec![1u8; n];
        loop {
            if self.is_isometry_vector(&x) {
                return Ok(Some(
                    x.iter()
                        .map(|&v| self.field.element(v as u64).expect("in range"))
                        .collect(),
                ));
            }
            // odometer over coordinates 2..n, last coordinate fastest
            let mut k = n;
            loop {
                k -= 1;
                if k == 0 {
                    return Ok(None);
                }
                if x[k] + 1 < q2 {
                    x[k] += 1;
                    break;
                }
                x[k] = 1;
            }
        }
    }

    /// `W ∖ W*` as an ideal of `W`, if it is one.
    pub fn wstar_ideal(&self, w: &NumericalSemigroup) -> Result<SemigroupIdeal> {
        SemigroupIdeal::from_complement(w, self.wstar())
    }

    /// Whether `W ∖ W*` is an ideal of `W`; guaranteed when `n > 2g + 2`.
    pub fn ideal_complement_check(&self, w: &NumericalSemigroup) -> Result<bool> {
        if self.n() <= 2 * self.genus + 2 {
            return Err(Error::PreconditionViolated(format!(
                "n = {} must exceed 2g + 2 = {}",
                self.n(),
                2 * self.genus + 2
            )));
        }
        Ok(self.wstar_ideal(w).is_ok())
    }

    /// JSON-ready summary.
    pub fn record(&self) -> CodeSequenceRecord {
        CodeSequenceRecord {
            field: self.field.header(),
            q: self.q,
            n: self.n(),
            g: self.genus,
            points: self.points.clone(),
            wstar: self.wstar(),
            criterion: self.isometry_dual_criterion(),
            generator_matrix: self.rows.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeSequenceRecord {
    pub field: FieldHeader,
    pub q: u64,
    pub n: usize,
    pub g: usize,
    pub points: Vec<CurvePoint>,
    pub wstar: Vec<u64>,
    pub criterion: bool,
    pub generator_matrix: Vec<Vec<u8>>,
}
