//! Named groups. Every catalog group has identity index 0.

use super::{check_cap, Group, Perm};
use crate::error::{Error, Result};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    Cyclic(usize),
    /// Dihedral group of the given order (twice the polygon size).
    Dihedral(usize),
    Quaternion8,
    Sym(usize),
    Alt(usize),
    /// Extraspecial group of order p³ with exponent `exp` (p or p²), p odd.
    Extraspecial { p: usize, exp: usize },
    Sl23,
}

impl CatalogSpec {
    /// Parses `{"name": "extraspecial", "p": 3, "exp": 3}` and friends.
    pub fn from_json(v: &Value) -> Result<CatalogSpec> {
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("catalog entry needs a \"name\"".into()))?;
        let num = |key: &str| -> Result<usize> {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("catalog entry {name} needs integer \"{key}\"")))
        };
        Ok(match name {
            "cyclic" => CatalogSpec::Cyclic(num("n")?),
            "dihedral" => CatalogSpec::Dihedral(num("order")?),
            "quaternion8" => CatalogSpec::Quaternion8,
            "sym" => CatalogSpec::Sym(num("n")?),
            "alt" => CatalogSpec::Alt(num("n")?),
            "extraspecial" => CatalogSpec::Extraspecial { p: num("p")?, exp: num("exp")? },
            "sl2_3" => CatalogSpec::Sl23,
            other => return Err(Error::UnknownCatalogEntry(other.to_string())),
        })
    }

    /// Parses short names: `cyclic6`, `dihedral8`, `quaternion8`, `sym4`, `alt4`, `sl2_3`.
    pub fn parse_short(s: &str) -> Result<CatalogSpec> {
        let s = s.trim();
        let tail = |prefix: &str| -> Option<usize> { s.strip_prefix(prefix)?.parse().ok() };
        if s == "quaternion8" {
            return Ok(CatalogSpec::Quaternion8);
        }
        if s == "sl2_3" {
            return Ok(CatalogSpec::Sl23);
        }
        if let Some(n) = tail("cyclic") {
            return Ok(CatalogSpec::Cyclic(n));
        }
        if let Some(n) = tail("dihedral") {
            return Ok(CatalogSpec::Dihedral(n));
        }
        if let Some(n) = tail("sym") {
            return Ok(CatalogSpec::Sym(n));
        }
        if let Some(n) = tail("alt") {
            return Ok(CatalogSpec::Alt(n));
        }
        Err(Error::UnknownCatalogEntry(s.to_string()))
    }

    pub fn label(&self) -> String {
        match self {
            CatalogSpec::Cyclic(n) => format!("C{n}"),
            CatalogSpec::Dihedral(n) => format!("D{n}"),
            CatalogSpec::Quaternion8 => "Q8".into(),
            CatalogSpec::Sym(n) => format!("S{n}"),
            CatalogSpec::Alt(n) => format!("A{n}"),
            CatalogSpec::Extraspecial { p, exp } => {
                format!("{p}^(1+2){}", if exp == p { "+" } else { "-" })
            }
            CatalogSpec::Sl23 => "SL(2,3)".into(),
        }
    }
}

fn table_from(order: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut t = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            t.push(mul(a, b) as u32);
        }
    }
    t
}

pub fn from_catalog(spec: &CatalogSpec) -> Result<Group> {
    let label = spec.label();
    let g = match *spec {
        CatalogSpec::Cyclic(n) => {
            if n == 0 {
                return Err(Error::UnknownCatalogEntry("cyclic(0)".into()));
            }
            check_cap(n)?;
            Group::from_trusted_table(n, table_from(n, |a, b| (a + b) % n), 0, None, None, None)
        }
        CatalogSpec::Dihedral(order) => {
            if order < 2 || order % 2 != 0 {
                return Err(Error::UnknownCatalogEntry(format!("dihedral({order})")));
            }
            check_cap(order)?;
            let n = order / 2;
            let t = table_from(order, |x, y| {
                let (a, b) = (x % n, x / n);
                let (c, d) = (y % n, y / n);
                let r = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                r + n * ((b + d) % 2)
            });
            Group::from_trusted_table(order, t, 0, None, None, None)
        }
        CatalogSpec::Quaternion8 => {
            let t = table_from(8, |x, y| {
                let (a, b) = (x % 4, x / 4);
                let (c, d) = (y % 4, y / 4);
                let mut r = if b == 0 { a + c } else { a + 4 - c };
                let mut s = b + d;
                if s == 2 {
                    r += 2;
                    s = 0;
                }
                r % 4 + 4 * s
            });
            Group::from_trusted_table(8, t, 0, None, None, None)
        }
        CatalogSpec::Sym(n) => {
            let mut gens = Vec::new();
            if n >= 2 {
                let cyc: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
                gens.push(Perm::from_images(cyc)?);
                let mut t: Vec<u32> = (0..n as u32).collect();
                t.swap(0, 1);
                gens.push(Perm::from_images(t)?);
            }
            Group::from_permutations(&gens)?
        }
        CatalogSpec::Alt(n) => {
            let mut gens = Vec::new();
            for k in 2..n {
                let mut t: Vec<u32> = (0..n as u32).collect();
                t[0] = 1;
                t[1] = k as u32;
                t[k] = 0;
                gens.push(Perm::from_images(t)?);
            }
            Group::from_permutations(&gens)?
        }
        CatalogSpec::Extraspecial { p, exp } => {
            if p < 3 || !is_prime(p) || (exp != p && exp != p * p) {
                return Err(Error::UnknownCatalogEntry(format!(
                    "extraspecial({p}, exp {exp}); p must be an odd prime and exp p or p^2"
                )));
            }
            let order = p * p * p;
            check_cap(order)?;
            let t = if exp == p {
                let half = (p + 1) / 2;
                table_from(order, |x, y| {
                    let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
                    let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
                    let form = (a * b2 + p * p - (a2 * b) % p) % p;
                    let cc = (c + c2 + half * form) % p;
                    (a + a2) % p + p * ((b + b2) % p) + p * p * cc
                })
            } else {
                let q = p * p;
                // y x y^-1 = x^(1+p)
                let mut twist = vec![1usize; p];
                for j in 1..p {
                    twist[j] = twist[j - 1] * (1 + p) % q;
                }
                table_from(order, |x, y| {
                    let (i, j) = (x % q, x / q);
                    let (k, l) = (y % q, y / q);
                    (i + k * twist[j]) % q + q * ((j + l) % p)
                })
            };
            Group::from_trusted_table(order, t, 0, None, None, None)
        }
        CatalogSpec::Sl23 => {
            let mut mats = vec![[1usize, 0, 0, 1]];
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        for d in 0..3 {
                            let m = [a, b, c, d];
                            if (a * d + 9 - b * c) % 3 == 1 && m != [1, 0, 0, 1] {
                                mats.push(m);
                            }
                        }
                    }
                }
            }
            let idx = |m: [usize; 4]| mats.iter().position(|&x| x == m).unwrap();
            let t = table_from(24, |x, y| {
                let (m, n) = (mats[x], mats[y]);
                idx([
                    (m[0] * n[0] + m[1] * n[2]) % 3,
                    (m[0] * n[1] + m[1] * n[3]) % 3,
                    (m[2] * n[0] + m[3] * n[2]) % 3,
                    (m[2] * n[1] + m[3] * n[3]) % 3,
                ])
            });
            Group::from_trusted_table(24, t, 0, None, None, None)
        }
    };
    Ok(g.with_name(label))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The automorphism `(v, c) ↦ (Mv, c)` of the catalog extraspecial group of
/// exponent p, for `M = [[a, b], [c, d]]` of determinant 1 mod p, as a
/// permutation of element indices.
pub fn symplectic_action(p: usize, m: [i64; 4]) -> Result<Vec<usize>> {
    let pi = p as i64;
    let md = |x: i64| x.rem_euclid(pi) as usize;
    if md(m[0] * m[3] - m[1] * m[2]) != 1 {
        return Err(Error::InvalidAction(format!("matrix {m:?} does not have determinant 1 mod {p}")));
    }
    let mut perm = vec![0; p * p * p];
    for (x, slot) in perm.iter_mut().enumerate() {
        let (a, b, c) = ((x % p) as i64, ((x / p) % p) as i64, x / (p * p));
        let na = md(m[0] * a + m[1] * b);
        let nb = md(m[2] * a + m[3] * b);
        *slot = na + p * nb + p * p * c;
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Subgroup;

    fn class_count(g: &Group) -> usize {
        let mut seen = vec![false; g.order()];
        let mut count = 0;
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            count += 1;
            for s in g.elements() {
                seen[g.conj(x, s)] = true;
            }
        }
        count
    }

    #[test]
    fn catalog_orders_and_axioms() {
        let cases = [
            (CatalogSpec::Cyclic(1), 1),
            (CatalogSpec::Cyclic(12), 12),
            (CatalogSpec::Dihedral(8), 8),
            (CatalogSpec::Dihedral(14), 14),
            (CatalogSpec::Quaternion8, 8),
            (CatalogSpec::Sym(1), 1),
            (CatalogSpec::Sym(3), 6),
            (CatalogSpec::Sym(4), 24),
            (CatalogSpec::Alt(4), 12),
            (CatalogSpec::Alt(5), 60),
            (CatalogSpec::Extraspecial { p: 3, exp: 3 }, 27),
            (CatalogSpec::Extraspecial { p: 3, exp: 9 }, 27),
            (CatalogSpec::Extraspecial { p: 5, exp: 5 }, 125),
            (CatalogSpec::Sl23, 24),
        ];
        for (spec, order) in cases {
            let g = from_catalog(&spec).unwrap();
            assert_eq!(g.order(), order, "{spec:?}");
            assert_eq!(g.identity(), 0);
            g.verify_axioms().unwrap();
        }
    }

    #[test]
    fn brute_force_invariants() {
        let q8 = from_catalog(&CatalogSpec::Quaternion8).unwrap();
        assert_eq!(class_count(&q8), 5);
        for (p, exp) in [(3, 3), (3, 9), (5, 5)] {
            let g = from_catalog(&CatalogSpec::Extraspecial { p, exp }).unwrap();
            assert_eq!(g.exponent() as usize, exp);
            let z = Subgroup::whole(&g).center();
            assert_eq!(z.order(), p);
            assert_eq!(Subgroup::whole(&g).derived(), z);
        }
        let sl = from_catalog(&CatalogSpec::Sl23).unwrap();
        assert_eq!(class_count(&sl), 7);
        assert_eq!(Subgroup::whole(&sl).center().order(), 2);
        assert!(from_catalog(&CatalogSpec::Extraspecial { p: 2, exp: 2 }).is_err());
    }

    #[test]
    fn symplectic_maps_are_automorphisms() {
        let g = from_catalog(&CatalogSpec::Extraspecial { p: 5, exp: 5 }).unwrap();
        let f = symplectic_action(5, [0, -1, 1, -1]).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(f[g.mul(a, b)], g.mul(f[a], f[b]));
            }
        }
        assert!(symplectic_action(5, [1, 1, 1, 1]).is_err());
    }

    #[test]
    fn json_and_short_names() {
        let v: Value = serde_json::from_str(r#"{"name":"extraspecial","p":3,"exp":3}"#).unwrap();
        assert_eq!(CatalogSpec::from_json(&v).unwrap(), CatalogSpec::Extraspecial { p: 3, exp: 3 });
        assert_eq!(CatalogSpec::parse_short("cyclic2").unwrap(), CatalogSpec::Cyclic(2));
        let v: Value = serde_json::from_str(r#"{"name":"monster"}"#).unwrap();
        assert!(matches!(CatalogSpec::from_json(&v), Err(Error::UnknownCatalogEntry(_))));
    }
}
