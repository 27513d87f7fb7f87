//! Exact arithmetic in small finite fields `GF(p^m)`, `p^m ≤ 256`.
//!
//! An element is encoded as the integer whose base-`p` digits are the
//! coefficients of its polynomial representative, constant term least
//! significant. Multiplication goes through exp/log tables over a fixed
//! primitive element.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 256;

/// Default moduli for `m ≥ 2` (Conway polynomials), coefficients constant
/// term first. For `m = 1` the default is `x − r` with `r` the least
/// primitive root mod `p`.
const DEFAULT_MODULI: &[(u64, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Some((p, m))` with `n = p^m`, `m ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Identity of a field: characteristic, degree and modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldId {
    p: u16,
    m: u8,
    modulus_code: u32,
}

/// A finite field `GF(p)[x]/(f)`.
#[derive(Clone)]
pub struct Field {
    id: FieldId,
    p: u64,
    m: u32,
    modulus: Vec<u8>,
    order: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
    /// `exp[k] = γ^k` for `k < 2(q − 1)`.
    exp: Vec<u8>,
    /// `log[γ^k] = k`; `log[0]` is unused.
    log: Vec<u16>,
    generator: u8,
}

/// An element of a [`Field`], tagged with the field it belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldId,
    value: u8,
}

impl FieldElement {
    /// Base-`p` encoding, `0..q`.
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn field_id(self) -> FieldId {
        self.field
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.value)
    }
}

/// `{"p":2,"m":2,"modulus":[1,1,1]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldHeader {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u8>,
}

fn digits(mut v: usize, p: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for digit in d.iter_mut() {
        *digit = v % p;
        v /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Remainder of `a` modulo monic `f`, coefficients mod `p`.
fn poly_rem(a: &[usize], f: &[usize], p: usize) -> Vec<usize> {
    let deg = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - deg;
            for (k, &c) in f[..deg].iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - (lead * c) % p) % p;
            }
        }
    }
    r
}

fn has_factor_of_degree(f: &[usize], p: usize, d: usize) -> bool {
    let count = p.pow(d as u32);
    (0..count).any(|low| {
        let mut g = digits(low, p, d);
        g.push(1);
        poly_rem(f, &g, p).iter().all(|&c| c == 0)
    })
}

impl Field {
    /// `GF(p^m)` with the given monic modulus, or the default one.
    pub fn new(p: u64, m: u32, modulus: Option<&[u8]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let order = p.checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let Some(order) = order else {
            return Err(Error::FieldTooLarge(p.saturating_pow(m)));
        };
        let modulus: Vec<u8> = match modulus {
            Some(f) => f.to_vec(),
            None => default_modulus(p, m),
        };
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus(format!("expected degree {m}")));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c as u64 >= p) {
            return Err(Error::InvalidModulus(format!("coefficients must be below {p}")));
        }

        let (pu, mu, q) = (p as usize, m as usize, order as usize);
        let f: Vec<usize> = modulus.iter().map(|&c| c as usize).collect();
        if (1..=mu / 2).any(|d| has_factor_of_degree(&f, pu, d)) {
            return Err(Error::ReducibleModulus(p));
        }

        let mut add = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a, pu, mu);
            for b in 0..q {
                let db = digits(b, pu, mu);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * q + b] = undigits(&s, pu) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| {
                let d: Vec<usize> = digits(a, pu, mu).iter().map(|&x| (pu - x) % pu).collect();
                undigits(&d, pu) as u8
            })
            .collect();

        let mul_slow = |a: usize, b: usize| -> usize {
            let (da, db) = (digits(a, pu, mu), digits(b, pu, mu));
            let mut prod = vec![0; 2 * mu - 1];
            for (i, x) in da.iter().enumerate() {
                for (j, y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % pu;
                }
            }
            undigits(&poly_rem(&prod, &f, pu), pu)
        };
        let multiplicative_order = |g: usize| -> usize {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = mul_slow(x, g);
                k += 1;
            }
            k
        };

        // Prefer the class of x itself.
        let class_of_x = undigits(&poly_rem(&[0, 1], &f, pu), pu);
        let generator = std::iter::once(class_of_x)
            .chain(1..q)
            .find(|&g| g != 0 && multiplicative_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u8; 2 * (q - 1)];
        let mut log = vec![0u16; q];
        let mut x = 1;
        for k in 0..q - 1 {
            exp[k] = x as u8;
            exp[k + q - 1] = x as u8;
            log[x] = k as u16;
            x = mul_slow(x, generator);
        }

        let modulus_code = modulus.iter().rev().fold(0u32, |acc, &c| acc * p as u32 + c as u32);
        Ok(Self {
            id: FieldId {
                p: p as u16,
                m: m as u8,
                modulus_code,
            },
            p,
            m,
            modulus,
            order: q,
            add,
            neg,
            exp,
            log,
            generator: generator as u8,
        })
    }

    /// Field of the given prime-power order with its default modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        Self::new(p, m, None)
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn header(&self) -> FieldHeader {
        FieldHeader {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
        }
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value as usize >= self.order {
            return Err(Error::InvalidModulus(format!(
                "{value} is not an element encoding of a field of order {}",
                self.order
            )));
        }
        Ok(self.wrap(value as u8))
    }

    fn wrap(&self, value: u8) -> FieldElement {
        FieldElement { field: self.id, value }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The class of `x` modulo the field polynomial.
    pub fn alpha(&self) -> FieldElement {
        let f: Vec<usize> = self.modulus.iter().map(|&c| c as usize).collect();
        let p = self.p as usize;
        self.wrap(undigits(&poly_rem(&[0, 1], &f, p), p) as u8)
    }

    /// The primitive element the log tables are built on.
    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.generator)
    }

    pub fn all_elements(&self) -> Vec<FieldElement> {
        (0..self.order).map(|v| self.wrap(v as u8)).collect()
    }

    pub fn nonzero_elements(&self) -> Vec<FieldElement> {
        (1..self.order).map(|v| self.wrap(v as u8)).collect()
    }

    fn check(&self, a: FieldElement) -> Result<u8> {
        if a.field == self.id {
            Ok(a.value)
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.add_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.sub_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.neg_raw(self.check(a)?)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.wrap(self.mul_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a)?;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(self.inv_raw(a)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b)?;
        self.mul(a, inv)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement> {
        Ok(self.wrap(self.pow_raw(self.check(a)?, e)))
    }

    // Unchecked arithmetic on encodings, for the linear algebra hot paths.
    // Callers guarantee the operands belong to this field.

    #[inline]
    pub fn add_raw(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg_raw(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub_raw(&self, a: u8, b: u8) -> u8 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn mul_raw(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
        }
    }

    /// Panics on zero.
    #[inline]
    pub fn inv_raw(&self, a: u8) -> u8 {
        assert_ne!(a, 0, "inverse of zero");
        let n = self.order - 1;
        self.exp[(n - self.log[a as usize] as usize) % n]
    }

    pub fn pow_raw(&self, a: u8, e: u64) -> u8 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.order - 1) as u64;
        let k = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[k as usize]
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Field {}

fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&r| {
            let mut x = r;
            let mut k = 1;
            while x != 1 {
                x = x * r % p;
                k += 1;
            }
            k == p - 1
        })
        .expect("primes have primitive roots")
}

fn default_modulus(p: u64, m: u32) -> Vec<u8> {
    if m == 1 {
        let r = least_primitive_root(p);
        return vec![((p - r) % p) as u8, 1];
    }
    DEFAULT_MODULI
        .iter()
        .find(|&&(pp, mm, _)| pp == p && mm == m)
        .map(|&(_, _, f)| f.to_vec())
        .expect("a default modulus exists for every p^m <= 256")
}
