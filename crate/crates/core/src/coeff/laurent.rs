//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An element of `Z[q, q^-1]`.
///
/// Stored as a map from exponent to coefficient with no zero coefficients,
/// so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    pub fn monomial(coeff: BigInt, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `q^e`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// `(-q)^e`, defined for negative `e` as well.
    pub fn neg_q_pow(exp: i32) -> Self {
        let sign = if exp.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(BigInt::from(sign), exp)
    }

    /// `q - q^-1`, the correction coefficient of the diagonal relation.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, BigInt::one()), (-1, -BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `±q^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// For a unit `±q^k` returns its inverse `±q^-k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.clone(), -e))
    }

    /// The exponent `k` if `self == q^k` exactly.
    pub fn as_q_power(&self) -> Option<i32> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        c.is_one().then_some(e)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// `self += factor * other`, the inner loop of every linear combination.
    pub fn add_mul(&mut self, factor: &LaurentPoly, other: &LaurentPoly) {
        for (&e1, c1) in &factor.terms {
            for (&e2, c2) in &other.terms {
                self.add_term(e1 + e2, c1 * c2);
            }
        }
    }

    /// Integer content: gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Dense coefficient vector of `q^-min_exp * self`, lowest degree first.
    fn to_dense(&self) -> (i32, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(lo: i32, v: &[BigInt]) -> Self {
        Self::from_terms(
            v.iter()
                .enumerate()
                .map(|(i, c)| (lo + i as i32, c.clone())),
        )
    }

    /// Exact quotient `self / divisor` in `Z[q, q^-1]`, or `None` when the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Some(self * &inv);
        }
        let (alo, a) = self.to_dense();
        let (blo, b) = divisor.to_dense();
        if a.len() < b.len() {
            return None;
        }
        let lead = b.last()?;
        let mut rem = a;
        let qlen = rem.len() - b.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + b.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, bc) in b.iter().enumerate() {
                rem[i + j] -= &qc * bc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(alo - blo, &quot))
    }

    /// Greatest common divisor, normalized to lowest exponent 0 and a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        if self.is_unit() || other.is_unit() {
            return Self::one();
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let g = dense_gcd(a, b);
        Self::from_dense(0, &g).normalize_unit()
    }

    /// Divide out the unit `±q^k` so the lowest exponent is 0 and the leading
    /// coefficient is positive.
    pub fn normalize_unit(&self) -> LaurentPoly {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -shifted
        } else {
            shifted
        }
    }

    /// Evaluate at an integer point `q = x` with `x != 0`, as an exact rational
    /// `(numerator, denominator)`.
    pub fn eval_rational(&self, x: &BigInt) -> (BigInt, BigInt) {
        let lo = self.min_exp().unwrap_or(0).min(0);
        let mut num = BigInt::zero();
        for (&e, c) in &self.terms {
            num += c * num_traits::pow::pow(x.clone(), (e - lo) as usize);
        }
        let den = num_traits::pow::pow(x.clone(), (-lo) as usize);
        (num, den)
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let c = dense_content(&v);
    if c.is_zero() || c.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, trimmed).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let top = r.last().cloned().unwrap_or_default();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &top * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence gcd over `Z[q]`.
fn dense_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut a);
    trim(&mut b);
    // Strip common powers of q; the Laurent gcd ignores them anyway.
    while a.first().is_some_and(|c| c.is_zero()) {
        a.remove(0);
    }
    while b.first().is_some_and(|c| c.is_zero()) {
        b.remove(0);
    }
    let content = dense_content(&a).gcd(&dense_content(&b));
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(r);
    }
    a.into_iter().map(|c| c * &content).collect()
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`, e.g. `2*q^3 - q + 1 - q^-2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bytes: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let read_int = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return None;
            }
            bytes[start..*pos].iter().collect::<String>().parse().ok()
        };
        let mut out = LaurentPoly::zero();
        let mut first = true;
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                if first {
                    return Err(err(pos, "empty polynomial"));
                }
                break;
            }
            let mut sign = BigInt::one();
            if bytes[pos] == '+' || bytes[pos] == '-' {
                if bytes[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            first = false;
            let mut coeff = BigInt::one();
            let mut have_num = false;
            if let Some(v) = read_int(&mut pos) {
                coeff = v;
                have_num = true;
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == '*' {
                    pos += 1;
                    skip_ws(&mut pos);
                } else {
                    out.add_term(0, sign * coeff);
                    continue;
                }
            }
            if pos < bytes.len() && bytes[pos] == 'q' {
                pos += 1;
                let mut exp = 1i32;
                if pos < bytes.len() && bytes[pos] == '^' {
                    pos += 1;
                    let neg = pos < bytes.len() && bytes[pos] == '-';
                    if neg {
                        pos += 1;
                    }
                    let v = read_int(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                    let v: i32 = v
                        .try_into()
                        .map_err(|_| err(pos, "exponent out of range"))?;
                    exp = if neg { -v } else { v };
                }
                out.add_term(exp, sign * coeff);
            } else if have_num {
                return Err(err(pos, "expected 'q' after '*'"));
            } else {
                return Err(err(pos, "expected term"));
            }
        }
        Ok(out)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c)
    }
}
