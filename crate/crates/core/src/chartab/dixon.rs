//! Dixon–Schneider: common eigenvectors of the class multiplication
//! matrices over GF(p), lifted to exact cyclotomic values.

use super::ClassData;
use crate::cyclotomic::{prime_factors, Cyclotomic};
use crate::error::{theorem, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√order`.
pub(crate) fn ds_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p).find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Reduced row echelon basis of a subspace of GF(p)^r.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Space {
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in rows.iter_mut() {
        for (b, &pc) in out.iter().zip(&pivots) {
            let f = r[pc];
            if f != 0 {
                for k in 0..r.len() {
                    r[k] = (r[k] + p - f * b[k] % p) % p;
                }
            }
        }
        if let Some(pc) = r.iter().position(|&x| x != 0) {
            let inv = inv_mod(r[pc], p);
            for x in r.iter_mut() {
                *x = *x * inv % p;
            }
            for b in out.iter_mut() {
                let f = b[pc];
                if f != 0 {
                    for k in 0..b.len() {
                        b[k] = (b[k] + p - f * r[k] % p) % p;
                    }
                }
            }
            out.push(r.clone());
            pivots.push(pc);
        }
    }
    Space { rows: out, pivots }
}

/// Null space of a square matrix over GF(p), as row vectors.
fn null_space(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut piv_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, r);
        let inv = inv_mod(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for k in 0..n {
                    m[r][k] = (m[r][k] + p - f * m[row][k] % p) % p;
                }
            }
        }
        piv_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !piv_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (i, &pc) in piv_cols.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (low degree first) via Hessenberg reduction.
fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for r in h.iter_mut() {
                r.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for i in j + 2..n {
            let u = h[i][j] * inv % p;
            if u == 0 {
                continue;
            }
            for k in 0..n {
                h[i][k] = (h[i][k] + p - u * h[j + 1][k] % p) % p;
            }
            for r in h.iter_mut() {
                r[j + 1] = (r[j + 1] + u * r[i]) % p;
            }
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1}(x) - Σ ...
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut next = vec![0u64; k + 2];
        for (i, &c) in polys[k].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - h[k][k] * c % p) % p;
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = t * h[i + 1][i] % p;
            let coef = t * h[i][k] % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

/// Irreducible characters of the classes' group, as exact value vectors.
pub(crate) fn irreducibles(cd: &ClassData) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = cd.len();
    let order = cd.sub.order() as u64;
    let e = cd.sub.exponent();
    let p = ds_prime(e, order);
    let g = cd.sub.group();

    // (M_j)[l][k] = #{x ∈ C_j : x⁻¹ z_k ∈ C_l}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for k in 0..r {
            let z = cd.representative(k);
            for &x in cd.class(j) {
                let l = cd.class_index(g.mul(g.inv(x), z));
                m[l][k] += 1;
            }
        }
        m
    };

    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Space> = Vec::new();
    let full = rref((0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect(), p);
    if r == 1 {
        done.push(full.rows[0].clone());
    } else {
        pending.push(full);
    }
    let mut j = 1;
    while !pending.is_empty() {
        if j >= r {
            return Err(theorem("class matrices failed to separate the characters"));
        }
        let m = class_matrix(j);
        let mut next = Vec::new();
        for sp in pending {
            let d = sp.rows.len();
            // restriction of M_j to the subspace, in basis coordinates
            let mut a = vec![vec![0u64; d]; d];
            for (i, b) in sp.rows.iter().enumerate() {
                let img: Vec<u64> = (0..r).map(|l| (0..r).fold(0, |s, k| (s + m[l][k] * b[k]) % p)).collect();
                for (i2, &pc) in sp.pivots.iter().enumerate() {
                    a[i2][i] = img[pc];
                }
            }
            let mut found = 0;
            for lam in roots(&charpoly(&a, p), p) {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|x| (0..d).map(|y| if x == y { (a[x][y] + p - lam) % p } else { a[x][y] }).collect())
                    .collect();
                let ns = null_space(&shifted, p);
                found += ns.len();
                let vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|y| (0..r).map(|k| (0..d).fold(0, |s, i| (s + y[i] * sp.rows[i][k]) % p)).collect())
                    .collect();
                if vecs.len() == 1 {
                    done.push(vecs.into_iter().next().unwrap());
                } else {
                    next.push(rref(vecs, p));
                }
            }
            if found != d {
                return Err(theorem("class matrix is not diagonalizable modulo p"));
            }
        }
        pending = next;
        j += 1;
    }
    if done.len() != r {
        return Err(theorem("wrong number of irreducible characters"));
    }

    let z_e = pow_mod(primitive_root(p), (p - 1) / e, p);
    let sizes: Vec<u64> = (0..r).map(|k| cd.size(k) as u64 % p).collect();
    // powers of each representative, as class indices
    let power_classes: Vec<Vec<usize>> =
        (0..r).map(|k| (0..cd.rep_order(k)).map(|t| cd.power_class(k, t as i64)).collect()).collect();

    let mut out = Vec::with_capacity(r);
    for v in done {
        let inv0 = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| x * inv0 % p).collect();
        let s = (0..r).fold(0, |acc, k| (acc + w[k] * w[cd.inverse_class(k)] % p * inv_mod(sizes[k], p)) % p);
        let target = (order % p) * inv_mod(s, p) % p;
        let deg = (1..).take_while(|d| d * d <= order).find(|d| d * d % p == target);
        let Some(deg) = deg else {
            return Err(theorem("no degree matches the Dixon-Schneider norm"));
        };
        let chi: Vec<u64> = (0..r).map(|k| w[k] * deg % p * inv_mod(sizes[k], p) % p).collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = cd.rep_order(k);
            let zo = pow_mod(z_e, e / o, p);
            let oinv = inv_mod(o % p, p);
            let mut terms = Vec::new();
            let mut total = 0;
            for i in 0..o {
                let step = pow_mod(zo, (o - i) % o, p);
                let mut acc = 0u64;
                let mut zz = 1u64;
                for t in 0..o as usize {
                    acc = (acc + chi[power_classes[k][t]] * zz) % p;
                    zz = zz * step % p;
                }
                let m = acc * oinv % p;
                if m > deg {
                    return Err(theorem("eigenvalue multiplicity out of range"));
                }
                total += m;
                if m > 0 {
                    terms.push((i as i64, BigRational::from_integer(BigInt::from(m))));
                }
            }
            if total != deg {
                return Err(theorem("eigenvalue multiplicities do not sum to the degree"));
            }
            values.push(Cyclotomic::from_exponents(o, &terms));
        }
        out.push(values);
    }
    Ok(out)
}
