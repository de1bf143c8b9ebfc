//! Exact arithmetic in GF(p^e).
//!
//! An element is identified by its canonical index: the base-p integer whose
//! digits are the coefficients (low degree first) of its polynomial-basis
//! representation modulo the field's defining polynomial. Index 0 is zero and
//! index 1 is one, so the canonical labeling α_1, α_2, ... is simply the index
//! order 0, 1, 2, ....
//!
//! Multiplication, inversion and negation go through log/antilog tables keyed
//! on the field's primitive element; addition uses Zech logarithms, so every
//! operation is a handful of table lookups.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

const NO_LOG: u32 = u32::MAX;

/// A field element, stored as its canonical index.
///
/// Elements carry no field tag. Containers ([`Polynomial`](crate::Polynomial),
/// [`Matrix`](crate::Matrix), [`GrsSpec`](crate::GrsSpec)) validate that every
/// element lies in their field, and [`FieldElement`] offers a fully checked
/// value for callers that mix fields.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a canonical index without range checking.
    pub const fn from_index(index: u32) -> Self {
        Elem(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized description of a field: `{p, e, modulus: [c0, ..., ce]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    /// exp[i] = g^i, stored twice over so that log sums need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[d] = log(1 + g^d), or NO_LOG when 1 + g^d = 0.
    zech: Vec<u32>,
    /// log(-1).
    half: u32,
}

/// A finite field GF(p^e) with fixed modulus and canonical element order.
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.e, self.0.modulus)
    }
}

impl Field {
    /// GF(p^e) with the lexicographically smallest monic irreducible modulus.
    ///
    /// Candidate moduli X^e + c_{e-1} X^{e-1} + ... + c_0 are compared on
    /// (c_0, c_1, ..., c_{e-1}) with c_0 most significant. For e = 1 this
    /// yields the modulus X.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        let q = check_order(p, e)?;
        let modulus = (0..q)
            .map(|rank| {
                // rank's base-p digits, most significant first, are c_0..c_{e-1}
                let mut coeffs = vec![0u32; e as usize + 1];
                let mut r = rank;
                for i in (0..e as usize).rev() {
                    coeffs[i] = r % p;
                    r /= p;
                }
                coeffs[e as usize] = 1;
                coeffs
            })
            .find(|m| gfp::is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self::build(p, e, q, modulus))
    }

    /// GF(q) for a prime power q.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    /// GF(p^e) realized with a caller-supplied monic irreducible modulus
    /// (coefficients low to high, length e + 1).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::DegreeZero);
        }
        let e = (modulus.len() - 1) as u32;
        let q = check_order(p, e)?;
        if modulus[e as usize] != 1
            || modulus.iter().any(|&c| c >= p)
            || !gfp::is_irreducible(&modulus, p)
        {
            return Err(Error::BadModulus { p, e });
        }
        Ok(Self::build(p, e, q, modulus))
    }

    pub fn from_record(record: &FieldRecord) -> Result<Self> {
        if record.modulus.len() != record.e as usize + 1 {
            return Err(Error::BadModulus { p: record.p, e: record.e });
        }
        Self::with_modulus(record.p, record.modulus.clone())
    }

    pub fn record(&self) -> FieldRecord {
        FieldRecord { p: self.0.p, e: self.0.e, modulus: self.0.modulus.clone() }
    }

    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Self {
        let slow = SlowArith { p, e, modulus: &modulus };
        let primitive = (1..q)
            .find(|&x| slow.has_full_order(x, q))
            .expect("the multiplicative group is cyclic");

        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp[i] = cur;
            exp[i + order] = cur;
            log[cur as usize] = i as u32;
            cur = slow.mul(cur, primitive);
        }
        let zech = (0..order)
            .map(|d| match slow.add(1, exp[d]) {
                0 => NO_LOG,
                s => log[s as usize],
            })
            .collect();
        let half = if p == 2 { 0 } else { (q - 1) / 2 };

        Field(Arc::new(Inner { p, e, q, modulus, primitive, exp, log, zech, half }))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_odd(&self) -> bool {
        self.0.p != 2
    }

    /// Checked conversion from a canonical index.
    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.0.q {
            Ok(Elem(index))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Returns `x` if it lies in this field.
    pub fn check(&self, x: Elem) -> Result<Elem> {
        self.elem(x.0)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.0.q
    }

    /// All q elements in canonical order, starting with zero.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    /// The elements of the prime subfield GF(p) embedded as constants, i.e.
    /// the integer `n` reduced mod p.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Coefficients of `x` in the polynomial basis, low degree first.
    pub fn coefficients(&self, x: Elem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.0.e)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let t = &*self.0;
        let la = t.log[a.0 as usize];
        let lb = t.log[b.0 as usize];
        let order = t.q - 1;
        let d = if lb >= la { lb - la } else { lb + order - la };
        match t.zech[d as usize] {
            NO_LOG => Elem::ZERO,
            z => Elem(t.exp[(la + z) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 {
            return a;
        }
        let t = &*self.0;
        Elem(t.exp[(t.log[a.0 as usize] + t.half) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.0;
        Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.0;
        let l = t.log[a.0 as usize];
        Ok(Elem(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.0;
        let order = (t.q - 1) as u64;
        let l = (t.log[a.0 as usize] as u64 * (n % order)) % order;
        Elem(t.exp[l as usize])
    }

    /// Checked binary arithmetic; `y` is ignored for [`ArithOp::Neg`].
    pub fn arith(&self, op: ArithOp, x: Elem, y: Elem) -> Result<Elem> {
        let (x, y) = (self.check(x)?, self.check(y)?);
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
            ArithOp::Neg => self.neg(x),
        })
    }

    /// Product of a sequence of elements.
    pub fn product(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(Elem::ONE, |acc, x| self.mul(acc, x))
    }

    /// Multiplicative order of a nonzero element, `None` for zero.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let order = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Some(order / gcd(order, l))
    }

    /// First element in canonical order whose multiplicative order is q - 1.
    pub fn primitive_element(&self) -> Elem {
        Elem(self.0.primitive)
    }

    /// The primitive n-th root of unity g^((q-1)/n).
    pub fn nth_root_of_unity(&self, n: u64) -> Result<Elem> {
        let q_minus_one = self.0.q - 1;
        if n == 0 || !(q_minus_one as u64).is_multiple_of(n) {
            return Err(Error::NotADivisor { n, q_minus_one });
        }
        Ok(self.pow(self.primitive_element(), q_minus_one as u64 / n))
    }

    /// The GF(p)-span of 1, x, ..., x^(l-1) in canonical order.
    ///
    /// With base-p indexing these are exactly the indices 0..p^l.
    pub fn additive_subgroup(&self, l: u32) -> Result<Vec<Elem>> {
        if l == 0 || l > self.0.e {
            return Err(Error::BadSubgroupDegree { l, e: self.0.e });
        }
        Ok((0..self.0.p.pow(l)).map(Elem).collect())
    }
}

/// An element bundled with its field; every operation checks that both
/// operands come from the same field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn new(field: &Field, index: u32) -> Result<Self> {
        Ok(FieldElement { field: field.clone(), value: field.elem(index)? })
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn arith(&self, op: ArithOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let value = self.field.arith(op, self.value, other.value)?;
        Ok(FieldElement { field: self.field.clone(), value })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement { field: self.field.clone(), value: self.field.inv(self.value)? })
    }
}

fn check_order(p: u32, e: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::DegreeZero);
    }
    match (p as u64).checked_pow(e) {
        Some(q) if q <= MAX_ORDER as u64 => Ok(q as u32),
        _ => Err(Error::OrderTooLarge { p, e }),
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes q = p^e, or `None` if q is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Digit-vector arithmetic used once, while the tables are being built.
struct SlowArith<'a> {
    p: u32,
    e: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn index(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index(&sum)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = gfp::mul(&self.digits(a), &self.digits(b), self.p);
        let mut rem = gfp::rem(&prod, self.modulus, self.p);
        rem.resize(self.e as usize, 0);
        self.index(&rem)
    }

    fn pow(&self, a: u32, mut n: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    fn has_full_order(&self, x: u32, q: u32) -> bool {
        prime_factors(q - 1).into_iter().all(|r| self.pow(x, ((q - 1) / r) as u64) != 1)
    }
}

/// Polynomials over the prime field GF(p) as coefficient vectors, low to high.
mod gfp {
    pub(super) fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub(super) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // a^(p-2) mod p
        let (mut base, mut acc, mut n) = (a as u64, 1u64, p as u64 - 2);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            n >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo a nonzero polynomial `m`.
    pub(super) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let factor = r[r.len() - 1] * lead_inv % p;
            for (i, &c) in m.iter().enumerate() {
                let sub = factor * c % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut r = idx;
                for _ in 0..d {
                    g.push((r % p as u64) as u32);
                    r /= p as u64;
                }
                g.push(1);
                if rem(&f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
