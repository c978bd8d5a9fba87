//! Per-conductor integer data: cyclotomic polynomials, power tables and
//! subfield descent maps. Everything is computed once and shared.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) struct FieldData {
    pub phi: usize,
    /// `pow[j]` is ζ_n^j in the power basis `1, ζ, …, ζ^(φ(n)-1)`, as sparse (index, coefficient).
    pub pow: Vec<Vec<(usize, i64)>>,
}

/// Matrix data to test membership in, and coordinates for, `Q(ζ_m) ⊂ Q(ζ_n)`.
pub(crate) struct Descent {
    /// `embed[j]`: ζ_m^j written in the power basis of Q(ζ_n).
    pub embed: Vec<Vec<(usize, i64)>>,
    pub pivots: Vec<usize>,
    /// Inverse of the pivot-row submatrix of `embed`, row-major.
    pub inv: Vec<Vec<BigRational>>,
}

fn fields() -> &'static RwLock<HashMap<u64, Arc<FieldData>>> {
    static F: OnceLock<RwLock<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    F.get_or_init(Default::default)
}

fn descents() -> &'static RwLock<HashMap<(u64, u64), Arc<Descent>>> {
    static D: OnceLock<RwLock<HashMap<(u64, u64), Arc<Descent>>>> = OnceLock::new();
    D.get_or_init(Default::default)
}

fn cyclo_polys() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static P: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    P.get_or_init(Default::default)
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub(crate) fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = cyclo_polys().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let den = cyclotomic_poly(d);
        num = exact_div(&num, &den);
    }
    let arc = Arc::new(num);
    cyclo_polys().write().unwrap().insert(n, arc.clone());
    arc
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub(crate) fn field(n: u64) -> Arc<FieldData> {
    if let Some(f) = fields().read().unwrap().get(&n) {
        return f.clone();
    }
    let poly = cyclotomic_poly(n);
    let phi = poly.len() - 1;
    let mut pow = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        pow.push(cur.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect());
        // multiply by ζ and reduce with the monic Φ_n
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * poly[i];
            }
        }
    }
    let f = Arc::new(FieldData { phi, pow });
    fields().write().unwrap().insert(n, f.clone());
    f
}

pub(crate) fn descent(n: u64, m: u64) -> Arc<Descent> {
    if let Some(d) = descents().read().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let big = field(n);
    let small = field(m);
    let step = (n / m) as usize;
    let embed: Vec<Vec<(usize, i64)>> =
        (0..small.phi).map(|j| big.pow[(j * step) % n as usize].clone()).collect();
    // rows of the φ(n) × φ(m) matrix; pick independent rows greedily
    let rows: Vec<Vec<BigRational>> = (0..big.phi)
        .map(|i| {
            (0..small.phi)
                .map(|j| {
                    let v = embed[j].iter().find(|(k, _)| *k == i).map(|&(_, c)| c).unwrap_or(0);
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut lead: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (b, &l) in basis.iter().zip(&lead) {
            if !r[l].is_zero() {
                let f = r[l].clone() / &b[l];
                for k in 0..r.len() {
                    let t = &f * &b[k];
                    r[k] -= t;
                }
            }
        }
        if let Some(l) = r.iter().position(|x| !x.is_zero()) {
            basis.push(r);
            lead.push(l);
            pivots.push(i);
            if pivots.len() == small.phi {
                break;
            }
        }
    }
    let sub: Vec<Vec<BigRational>> = pivots.iter().map(|&i| rows[i].clone()).collect();
    let inv = invert(sub);
    let d = Arc::new(Descent { embed, pivots, inv });
    descents().write().unwrap().insert((n, m), d.clone());
    d
}

/// Inverse of a nonsingular square rational matrix.
pub(crate) fn invert(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular matrix");
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for k in 0..n {
            a[col][k] /= &piv;
            inv[col][k] /= &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..n {
                let t = &f * &a[col][k];
                a[r][k] -= t;
                let t = &f * &inv[col][k];
                inv[r][k] -= t;
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).iter().map(|c| c.abs()).max(), Some(2));
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn power_table_wraps() {
        let f = field(5);
        assert_eq!(f.pow[0], vec![(0, 1)]);
        // ζ^4 = -1 - ζ - ζ^2 - ζ^3
        assert_eq!(f.pow[4], vec![(0, -1), (1, -1), (2, -1), (3, -1)]);
    }
}
