//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored as integer codes: the residue itself for prime fields,
//! and `c0 + c1*p + ... + c_{k-1}*p^(k-1)` for the polynomial `c0 + c1*x + ...`
//! in an extension field. The code is canonical, so element equality is code
//! equality, and enumeration order is code order (zero first, one second).
//!
//! [`Field`] is a cheap shared handle to the precomputed log/antilog tables;
//! the geometry kernels work on raw `u32` codes through it. [`FieldElement`]
//! pairs a code with its field for checked, self-describing arithmetic.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Conway polynomials, low-degree coefficient first.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (3, 3, &[1, 2, 0, 1]),
];

/// Serializable description of a finite field.
///
/// `modulus` lists the `k+1` coefficients of a monic irreducible polynomial,
/// constant term first. It is absent for prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, k: 1, modulus: None }
    }

    /// GF(p^k) with the built-in modulus when one is needed.
    pub fn with_degree(p: u32, k: u32) -> Result<Self> {
        if k == 1 {
            return Ok(Self::prime(p));
        }
        let modulus = builtin_modulus(p, k).ok_or(Error::NoModulus { p, k })?;
        Ok(FieldSpec { p, k, modulus: Some(modulus.to_vec()) })
    }

    /// The order p^k (saturating, so oversized specs still report as too large).
    pub fn order(&self) -> u64 {
        (self.p as u64).saturating_pow(self.k)
    }
}

pub fn builtin_modulus(p: u32, k: u32) -> Option<&'static [u32]> {
    BUILTIN_MODULI
        .iter()
        .find(|(bp, bk, _)| *bp == p && *bk == k)
        .map(|(_, _, m)| *m)
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    /// `exp[i] = g^i` for `i < 2(q-1)`, doubled to skip a modulo in `mul`.
    exp: Vec<u32>,
    /// Discrete log base `g`; `log[0]` is unused.
    log: Vec<u32>,
}

/// Shared handle to a validated finite field.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        validate(&spec)?;
        let q = spec.order() as u32;
        let mul_slow = |a: u32, b: u32| -> u32 {
            match &spec.modulus {
                None => ((a as u64 * b as u64) % spec.p as u64) as u32,
                Some(m) => poly_mul_mod(a, b, spec.p, m),
            }
        };
        let g = find_generator(q, &mul_slow);
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for (i, e) in exp.iter_mut().take(n).enumerate() {
            *e = x;
            log[x as usize] = i as u32;
            x = mul_slow(x, g);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Ok(Field(Arc::new(Tables { spec, q, exp, log })))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec::prime(p))
    }

    /// GF(p^k) using the built-in modulus.
    pub fn gf(p: u32, k: u32) -> Result<Field> {
        Field::new(FieldSpec::with_degree(p, k)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn k(&self) -> u32 {
        self.0.spec.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.spec.k == 1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.spec.p;
        if self.0.spec.k == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y| (x + y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.spec.p;
        if self.0.spec.k == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else if p == 2 {
            a
        } else {
            self.digitwise(a, 0, |x, _| (p - x) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    /// Inverse of a nonzero element. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let t = &self.0;
        let n = t.q - 1;
        t.exp[((n - t.log[a as usize]) % n) as usize]
    }

    pub fn try_inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv(a))
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.try_inv(b)?))
    }

    /// Image of the integer `n` under the prime-subfield embedding.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.spec.p as i64) as u32
    }

    /// Base-p digits of a code, low degree first.
    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let p = self.0.spec.p;
        let mut out = Vec::with_capacity(self.0.spec.k as usize);
        let mut x = a;
        for _ in 0..self.0.spec.k {
            out.push(x % p);
            x /= p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<u32> {
        let p = self.0.spec.p;
        if coeffs.len() != self.0.spec.k as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::Format(format!(
                "expected {} residues mod {}, got {:?}",
                self.0.spec.k, p, coeffs
            )));
        }
        Ok(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code >= self.0.q {
            return Err(Error::BadElement(code));
        }
        Ok(FieldElement { field: self.clone(), code })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), code: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), code: 1 }
    }

    /// All q elements in canonical order: zero, one, then increasing code.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.0.q).map(|code| FieldElement { field: self.clone(), code }).collect()
    }

    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.0.spec.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.0.spec.k {
            out += f(a % p, b % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

/// Every element of the field, in canonical order.
pub fn enumerate_field(field: &Field) -> Vec<FieldElement> {
    field.elements()
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn validate(spec: &FieldSpec) -> Result<()> {
    if !is_prime(spec.p) {
        return Err(Error::NotPrime(spec.p));
    }
    if spec.k == 0 {
        return Err(Error::InvalidModulus("degree must be positive".into()));
    }
    if spec.order() > MAX_ORDER {
        return Err(Error::FieldTooLarge(spec.order()));
    }
    match (&spec.modulus, spec.k) {
        (None, 1) => Ok(()),
        (Some(_), 1) => Err(Error::InvalidModulus("prime fields take no modulus".into())),
        (None, k) => Err(Error::NoModulus { p: spec.p, k }),
        (Some(m), k) => {
            if m.len() != k as usize + 1 {
                return Err(Error::InvalidModulus(format!("expected {} coefficients", k + 1)));
            }
            if m.iter().any(|&c| c >= spec.p) {
                return Err(Error::InvalidModulus("coefficients must be residues mod p".into()));
            }
            if m[k as usize] != 1 {
                return Err(Error::InvalidModulus("modulus must be monic".into()));
            }
            let builtin = builtin_modulus(spec.p, k) == Some(m.as_slice());
            if !builtin && k > 4 {
                return Err(Error::InvalidModulus(
                    "custom moduli are limited to degree 4".into(),
                ));
            }
            if !is_irreducible(m, spec.p) {
                return Err(Error::InvalidModulus(format!("{m:?} is reducible over GF({})", spec.p)));
            }
            Ok(())
        }
    }
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b` (coefficients low first).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let v = &mut r[shift + i];
                *v = (*v + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul_mod(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let k = modulus.len() - 1;
    let digits = |mut x: u32| {
        let mut d = vec![0u32; k];
        for c in d.iter_mut() {
            *c = x % p;
            x /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u32; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = poly_rem(&prod, modulus, p);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn find_generator(q: u32, mul: &impl Fn(u32, u32) -> u32) -> u32 {
    if q == 2 {
        return 1;
    }
    let n = q - 1;
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let pow = |mut base: u32, mut e: u32| {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    (2..q)
        .find(|&g| factors.iter().all(|&r| pow(g, n / r) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

/// A field element bound to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

/// The binary and unary operations of [`field_arithmetic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Apply `op` to `a` (and `b` for binary ops; ignored for `Neg`/`Inv`).
pub fn field_arithmetic(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.add(b),
        FieldOp::Sub => a.sub(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b),
        FieldOp::Neg => Ok(a.neg()),
        FieldOp::Inv => a.inv(),
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    /// Polynomial coefficients, low degree first (a single residue for prime fields).
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.code)
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, code: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), code }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.code, other.code)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.div(self.code, other.code)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.try_inv(self.code)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            return write!(f, "{}", self.code);
        }
        if self.code == 0 {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(deg, &c)| match (deg, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (d, 1) => format!("a^{d}"),
                (d, c) => format!("{c}a^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
