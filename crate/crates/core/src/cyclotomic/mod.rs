//! Exact arithmetic in cyclotomic fields.
//!
//! A value is stored at its minimal conductor `n` (never ≡ 2 mod 4) as
//! rational coordinates in the power basis `1, ζ_n, …, ζ_n^(φ(n)-1)`.
//! With that normal form, structural equality is field equality.

mod field;
mod tables;

pub use field::NumberField;
pub(crate) use field::units as units_mod;
pub(crate) use tables::{euler_phi, prime_factors};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use tables::field as field_data;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    n: u64,
    c: Vec<BigRational>,
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

fn canonical_conductor(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { n: 1, c: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(i: i64) -> Self {
        Cyclotomic { n: 1, c: vec![rat(i)] }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { n: 1, c: vec![q] }
    }

    /// `ζ_n^k`, where `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u64;
        if k == 0 {
            return Self::one();
        }
        let g = gcd(k, n);
        let (n, k) = (n / g, k / g);
        if n % 4 == 2 {
            // ζ_n = -ζ_m^((m+1)/2) with m = n/2 odd, and k is odd
            let m = n / 2;
            let e = (k * ((m + 1) / 2)) % m;
            return -Self::root_of_unity(m, e as i64);
        }
        let f = field_data(n);
        let mut c = vec![BigRational::zero(); f.phi];
        for &(i, a) in &f.pow[k as usize] {
            c[i] = rat(a);
        }
        Cyclotomic { n, c }
    }

    /// `Σ a_j ζ_n^j` for an arbitrary (not necessarily minimal) `n`.
    pub fn from_exponents(n: u64, terms: &[(i64, BigRational)]) -> Self {
        assert!(n > 0);
        let w = canonical_conductor(n);
        let mut acc = vec![BigRational::zero(); w as usize];
        for (j, a) in terms {
            if a.is_zero() {
                continue;
            }
            let j = j.rem_euclid(n as i64) as u64;
            if w == n {
                acc[j as usize] += a;
            } else {
                let e = ((j % w) * ((w + 1) / 2)) % w;
                let e = if w == 1 { 0 } else { e };
                if j % 2 == 1 {
                    acc[e as usize] -= a;
                } else {
                    acc[e as usize] += a;
                }
            }
        }
        let f = field_data(w);
        let mut c = vec![BigRational::zero(); f.phi];
        for (j, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(i, m) in &f.pow[j] {
                c[i] += a * rat(m);
            }
        }
        Self::normalize(w, c)
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Power-basis coordinates at the minimal conductor.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (self.n == 1).then(|| self.c[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|i| i.to_i64())
    }

    fn normalize(n: u64, c: Vec<BigRational>) -> Self {
        let (n, c) = reduce_conductor(n, c);
        Cyclotomic { n, c }
    }

    /// Coordinates in the power basis of `Q(ζ_big)`; `self.n` must divide `big`.
    fn lift(&self, big: u64) -> Vec<BigRational> {
        if big == self.n {
            return self.c.clone();
        }
        let f = field_data(big);
        let step = big / self.n;
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(i, m) in &f.pow[((j as u64 * step) % big) as usize] {
                out[i] += a * rat(m);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, c: self.c.iter().map(|a| a * q).collect() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Self::from_rational(self.c[0].recip()));
        }
        let f = field_data(self.n);
        let phi = f.phi;
        // column j of the matrix is self·ζ^j
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut col = vec![BigRational::zero(); phi];
            for (i, a) in self.c.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(k, m) in &f.pow[(i + j) % self.n as usize] {
                    col[k] += a * rat(m);
                }
            }
            cols.push(col);
        }
        let mat: Vec<Vec<BigRational>> = (0..phi).map(|r| (0..phi).map(|j| cols[j][r].clone()).collect()).collect();
        let inv = tables::invert(mat);
        // solution of M y = e_0 is the first column of the inverse
        let y: Vec<BigRational> = (0..phi).map(|r| inv[r][0].clone()).collect();
        Ok(Cyclotomic { n: self.n, c: y })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`; `k` must be a unit modulo the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        if self.n == 1 {
            return Ok(self.clone());
        }
        let kk = k.rem_euclid(self.n as i64) as u64;
        if gcd(kk, self.n) != 1 {
            return Err(Error::NotCoprime(k, self.n));
        }
        let f = field_data(self.n);
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(i, m) in &f.pow[((j as u64 * kk) % self.n) as usize] {
                out[i] += a * rat(m);
            }
        }
        Ok(Cyclotomic { n: self.n, c: out })
    }

    /// Galois action by a unit modulo some multiple of the conductor.
    pub fn galois_mod(&self, k: u64, modulus: u64) -> Self {
        debug_assert!(modulus % self.n == 0 && gcd(k, modulus) == 1);
        self.galois((k % self.n.max(1)) as i64).expect("unit modulo a multiple of the conductor")
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// `x · conj(x)`.
    pub fn abs_squared(&self) -> Self {
        self * &self.complex_conjugate()
    }

    /// `(N, k)` with `N` minimal such that `self = ζ_N^k`, if `self` is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<(u64, u64)> {
        if !self.abs_squared().is_one() {
            return None;
        }
        let big = if self.n % 2 == 1 { 2 * self.n } else { self.n };
        for k in 0..big {
            if Self::root_of_unity(big, k as i64) == *self {
                let g = gcd(k, big);
                return Some((big / g, k / g));
            }
        }
        None
    }

    /// The multiplicative order, for roots of unity.
    pub fn root_order(&self) -> Option<u64> {
        self.as_root_of_unity().map(|(n, _)| n)
    }

    /// Approximate complex value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = a.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("cyclotomic must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(|x| x.as_u64())
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Parse("cyclotomic needs a positive integer \"n\"".into()))?;
        let mut terms = Vec::new();
        if let Some(c) = obj.get("c") {
            let c = c.as_object().ok_or_else(|| Error::Parse("\"c\" must be an object".into()))?;
            for (k, q) in c {
                let k: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
                let q = match q {
                    serde_json::Value::String(s) => parse_rational(s)?,
                    serde_json::Value::Number(x) => parse_rational(&x.to_string())?,
                    _ => return Err(Error::Parse("coefficient must be a string \"p/q\"".into())),
                };
                terms.push((k, q));
            }
        }
        Ok(Self::from_exponents(n, &terms))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Descends to the smallest subfield conductor containing the value.
fn reduce_conductor(mut n: u64, mut c: Vec<BigRational>) -> (u64, Vec<BigRational>) {
    loop {
        if n == 1 || c[1..].iter().all(|x| x.is_zero()) {
            return (1, vec![c.swap_remove(0)]);
        }
        let mut moved = false;
        for p in prime_factors(n) {
            let m = n / p;
            if m % p == 0 {
                // Φ_n(x) = Φ_m(x^p): the subfield is spanned by the powers ζ_n^(p·q)
                if c.iter().enumerate().any(|(i, x)| i as u64 % p != 0 && !x.is_zero()) {
                    continue;
                }
                let y: Vec<BigRational> = c.iter().step_by(p as usize).cloned().collect();
                (n, c) = to_canonical(m, y);
                moved = true;
                break;
            } else {
                if p == 2 {
                    continue;
                }
                if let Some(y) = try_descend(n, m, &c) {
                    (n, c) = (m, y);
                    moved = true;
                    break;
                }
            }
        }
        if !moved {
            return (n, c);
        }
    }
}

/// Rewrites a vector at a conductor `m ≡ 2 (mod 4)` at `m/2`.
fn to_canonical(m: u64, y: Vec<BigRational>) -> (u64, Vec<BigRational>) {
    if m % 4 != 2 {
        return (m, y);
    }
    let w = m / 2;
    let f = field_data(w);
    let mut out = vec![BigRational::zero(); f.phi];
    for (q, a) in y.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let e = if w == 1 { 0 } else { ((q as u64 % w) * ((w + 1) / 2)) % w };
        for &(i, k) in &f.pow[e as usize] {
            if q % 2 == 1 {
                out[i] -= a * rat(k);
            } else {
                out[i] += a * rat(k);
            }
        }
    }
    (w, out)
}

fn try_descend(n: u64, m: u64, c: &[BigRational]) -> Option<Vec<BigRational>> {
    let d = tables::descent(n, m);
    let y: Vec<BigRational> = d
        .inv
        .iter()
        .map(|row| {
            let mut s = BigRational::zero();
            for (a, &p) in row.iter().zip(&d.pivots) {
                if !a.is_zero() && !c[p].is_zero() {
                    s += a * &c[p];
                }
            }
            s
        })
        .collect();
    let mut check = vec![BigRational::zero(); c.len()];
    for (j, a) in y.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for &(i, k) in &d.embed[j] {
            check[i] += a * rat(k);
        }
    }
    (check == c).then_some(y)
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(i: i64) -> Self {
        Self::from_integer(i)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let big = lcm(self.n, o.n);
        let mut a = self.lift(big);
        if o.n == big {
            for (x, y) in a.iter_mut().zip(&o.c) {
                *x += y;
            }
        } else {
            for (x, y) in a.iter_mut().zip(o.lift(big)) {
                *x += y;
            }
        }
        Cyclotomic::normalize(big, a)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        let big = lcm(self.n, o.n);
        let a = self.lift(big);
        let b = o.lift(big);
        let f = field_data(big);
        let phi = f.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..phi].to_vec();
        for (k, x) in prod.iter().enumerate().skip(phi) {
            if x.is_zero() {
                continue;
            }
            for &(i, m) in &f.pow[k % big as usize] {
                out[i] += x * rat(m);
            }
        }
        Cyclotomic::normalize(big, out)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, o: &Cyclotomic) -> Cyclotomic {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        sum_all(iter)
    }
}

/// Sums many values with a single normalization at the end.
pub fn sum_all<I: IntoIterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
    let items: Vec<Cyclotomic> = iter.into_iter().filter(|x| !x.is_zero()).collect();
    if items.is_empty() {
        return Cyclotomic::zero();
    }
    let big = items.iter().fold(1, |acc, x| lcm(acc, x.n));
    let f = field_data(big);
    let mut acc = vec![BigRational::zero(); f.phi];
    for x in &items {
        if x.n == big {
            for (a, b) in acc.iter_mut().zip(&x.c) {
                if !b.is_zero() {
                    *a += b;
                }
            }
        } else {
            for (a, b) in acc.iter_mut().zip(x.lift(big)) {
                if !b.is_zero() {
                    *a += b;
                }
            }
        }
    }
    Cyclotomic::normalize(big, acc)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (neg, mag) = if a.is_negative() { (true, -a) } else { (false, a.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let z = match j {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, j),
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: BTreeMap<usize, String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| (j, a.to_string()))
            .collect();
        let coeffs: serde_json::Map<String, serde_json::Value> =
            terms.into_iter().map(|(j, a)| (j.to_string(), serde_json::Value::String(a))).collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("c", &coeffs)?;
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Cyclotomic::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..40u64 {
            let s: Cyclotomic = (0..n as i64).map(|k| z(n, k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn conductor_is_minimal() {
        assert_eq!(z(4, 2), Cyclotomic::from_integer(-1));
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(12, 4).conductor(), 3);
        assert_eq!(z(10, 5), Cyclotomic::from_integer(-1));
        // ζ_8 + ζ_8^7 = √2 lives in Q(ζ_8), not lower
        assert_eq!((z(8, 1) + z(8, 7)).conductor(), 8);
        // ζ_3 + ζ_3^2 = -1
        assert_eq!(z(3, 1) + z(3, 2), Cyclotomic::from_integer(-1));
        // a Gauss sum: ζ_5 - ζ_5^2 - ζ_5^3 + ζ_5^4 = √5
        let g = z(5, 1) - z(5, 2) - z(5, 3) + z(5, 4);
        assert_eq!(g.conductor(), 5);
        assert_eq!(&g * &g, Cyclotomic::from_integer(5));
        // ζ_15^5 is a cube root of unity
        assert_eq!(z(15, 5), z(3, 1));
        // the mixed case: value in Q(ζ_3) computed at conductor 15
        let x = &(&z(15, 5) * &z(5, 1)) * &z(5, 4);
        assert_eq!(x.conductor(), 3);
    }

    #[test]
    fn multiplication_of_roots() {
        for (a, b) in [(3u64, 4u64), (5, 7), (8, 12), (9, 6)] {
            for i in 0..a as i64 {
                for j in 0..b as i64 {
                    let n = lcm(a, b) as i64;
                    let k = i * (n / a as i64) + j * (n / b as i64);
                    assert_eq!(&z(a, i) * &z(b, j), z(n as u64, k));
                }
            }
        }
    }

    #[test]
    fn inverse_and_galois() {
        let x = Cyclotomic::from_integer(2) + z(7, 1) + z(7, 3);
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        assert!(Cyclotomic::zero().inverse().is_err());
        assert_eq!(z(5, 1).galois(2).unwrap(), z(5, 2));
        assert!(z(5, 1).galois(5).is_err());
        assert_eq!(z(4, 1).complex_conjugate(), z(4, 3));
        let s3 = z(3, 1) - z(3, 2);
        assert_eq!((&s3 * &s3), Cyclotomic::from_integer(-3));
    }

    #[test]
    fn root_detection() {
        assert_eq!(z(12, 5).as_root_of_unity(), Some((12, 5)));
        assert_eq!(z(6, 1).root_order(), Some(6));
        assert_eq!(Cyclotomic::from_integer(-1).root_order(), Some(2));
        assert_eq!(Cyclotomic::from_integer(2).root_order(), None);
        // modulus one but not a root of unity: (3 + 4i)/5
        let i = z(4, 1);
        let q = |a, b| BigRational::new(BigInt::from(a), BigInt::from(b));
        let w = Cyclotomic::from_rational(q(3, 5)) + i.scale(&q(4, 5));
        assert!(w.abs_squared().is_one());
        assert_eq!(w.root_order(), None);
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::from_rational(BigRational::new(BigInt::from(-1), BigInt::from(2))) + z(9, 2);
        let v = x.to_json();
        assert_eq!(v["n"], 9);
        assert_eq!(Cyclotomic::from_json(&v).unwrap(), x);
        let s = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        // non-canonical input is normalized
        let v = serde_json::json!({"n": 6, "c": {"0": "1", "3": "1"}});
        assert!(Cyclotomic::from_json(&v).unwrap().is_zero());
        assert!(Cyclotomic::from_json(&serde_json::json!({"n": 0})).is_err());
        assert!(Cyclotomic::from_json(&serde_json::json!({"n": 3, "c": {"1": "1/0"}})).is_err());
    }

    #[test]
    fn from_exponents_handles_twice_odd() {
        let q = |a| BigRational::from_integer(BigInt::from(a));
        let x = Cyclotomic::from_exponents(6, &[(1, q(1)), (5, q(1))]);
        assert_eq!(x, Cyclotomic::from_integer(1));
        let y = Cyclotomic::from_exponents(2, &[(1, q(3))]);
        assert_eq!(y, Cyclotomic::from_integer(-3));
    }
}
