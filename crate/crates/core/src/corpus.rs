//! Group specifications, named actions and the standard examples used by
//! the verification corpus.

use crate::chartab::{character_table, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{extend_homomorphism, from_catalog, symplectic_action, CatalogSpec, Group, GroupAction, Perm, Subgroup};
use crate::isaacs::CoprimeSetup;
use crate::ramified::{find_complement, CharacterFive};
use serde_json::Value;

pub fn catalog(spec: &CatalogSpec) -> Result<Group> {
    from_catalog(spec)
}

/// A group from JSON: `{"catalog": {...}}`, `{"permutations": [...], "degree": n}`
/// with cycle strings or image arrays, `{"cayley": [[...], ...]}`, or a short
/// catalog name as a string.
pub fn load_group_spec(v: &Value) -> Result<Group> {
    if let Some(s) = v.as_str() {
        return from_catalog(&CatalogSpec::parse_short(s)?);
    }
    if let Some(c) = v.get("catalog") {
        return from_catalog(&CatalogSpec::from_json(c)?);
    }
    if let Some(rows) = v.get("cayley") {
        let rows: Vec<Vec<usize>> =
            serde_json::from_value(rows.clone()).map_err(|e| Error::Parse(format!("cayley table: {e}")))?;
        return Group::from_cayley(&rows);
    }
    if let Some(gens) = v.get("permutations") {
        let gens = gens.as_array().ok_or_else(|| Error::Parse("\"permutations\" must be an array".into()))?;
        let degree = v.get("degree").and_then(Value::as_u64).map(|d| d as usize);
        let mut perms = Vec::with_capacity(gens.len());
        for g in gens {
            let p = match g {
                Value::String(s) => {
                    let d = degree.ok_or_else(|| Error::Parse("cycle notation needs \"degree\"".into()))?;
                    Perm::parse_cycles(s, d)?
                }
                Value::Array(_) => {
                    let images: Vec<u32> =
                        serde_json::from_value(g.clone()).map_err(|e| Error::Parse(format!("permutation: {e}")))?;
                    Perm::from_images(images)?
                }
                _ => return Err(Error::Parse("a permutation is a cycle string or an image array".into())),
            };
            perms.push(p);
        }
        return Group::from_permutations(&perms);
    }
    Err(Error::Parse("group spec needs \"catalog\", \"permutations\" or \"cayley\"".into()))
}

/// A group from a command-line argument: JSON if it parses, else a short name.
pub fn parse_group_arg(s: &str) -> Result<Group> {
    match serde_json::from_str::<Value>(s) {
        Ok(v) => load_group_spec(&v),
        Err(_) => from_catalog(&CatalogSpec::parse_short(s)?),
    }
}

fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn perm_order(p: &[usize]) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = compose(&cur, p);
        k += 1;
    }
    k
}

/// The first automorphism of exact order `k`, searching generator images in
/// increasing order.
pub fn find_automorphism(n: &Group, k: usize) -> Option<Vec<usize>> {
    let gens = n.generators().to_vec();
    let mut images = vec![0usize; gens.len()];
    loop {
        let orders_match = gens.iter().zip(&images).all(|(&g, &x)| n.elem_order(g) == n.elem_order(x));
        if orders_match {
            if let Ok(map) = extend_homomorphism(n, n, &images) {
                if is_bijective(&map) && perm_order(&map) == k {
                    return Some(map);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == images.len() {
                return None;
            }
            images[i] += 1;
            if images[i] < n.order() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

/// Assigns `α^e` to each generator `c^e` of a cyclic `A` with chosen generator `c`.
fn cyclic_action(n: &Group, a: &Group, alpha: &[usize]) -> Result<GroupAction> {
    let c = a
        .elements()
        .find(|&x| a.elem_order(x) == a.order())
        .ok_or_else(|| Error::InvalidAction("named actions need a cyclic acting group".into()))?;
    let mut images = Vec::with_capacity(a.generators().len());
    for &g in a.generators() {
        let e = (0..a.order()).find(|&e| a.pow(c, e as i64) == g).expect("A is cyclic");
        let mut p: Vec<usize> = (0..n.order()).collect();
        for _ in 0..e {
            p = compose(&p, alpha);
        }
        images.push(p);
    }
    GroupAction::from_generator_images(a, n, &images)
}

/// `trivial`, `inversion` (abelian N), `inversion-mod-center` (generators
/// inverted), `symplectic:a,b,c,d` (extraspecial N of exponent p),
/// `auto-order:k`, or a JSON array with one image array per generator of A.
pub fn named_action(name: &str, n: &Group, a: &Group) -> Result<GroupAction> {
    let name = name.trim();
    if name == "trivial" {
        return Ok(GroupAction::trivial(a, n));
    }
    if name.starts_with('[') {
        let images: Vec<Vec<usize>> =
            serde_json::from_str(name).map_err(|e| Error::Parse(format!("explicit action: {e}")))?;
        return GroupAction::from_generator_images(a, n, &images);
    }
    let alpha: Vec<usize> = if name == "inversion" {
        if !n.is_abelian() {
            return Err(Error::InvalidAction("inversion needs an abelian group".into()));
        }
        n.elements().map(|x| n.inv(x)).collect()
    } else if name == "inversion-mod-center" {
        let imgs: Vec<usize> = n.generators().iter().map(|&x| n.inv(x)).collect();
        let map = extend_homomorphism(n, n, &imgs)?;
        if !is_bijective(&map) {
            return Err(Error::InvalidAction("inverting the generators is not an automorphism".into()));
        }
        map
    } else if let Some(rest) = name.strip_prefix("symplectic:") {
        let m: Vec<i64> = rest
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
            .collect::<Result<_>>()?;
        let m: [i64; 4] = m.try_into().map_err(|_| Error::Parse("symplectic needs four entries".into()))?;
        let p = (2..=n.order()).find(|p| p * p * p == n.order()).ok_or_else(|| {
            Error::InvalidAction("symplectic actions need an extraspecial group of order p³".into())
        })?;
        let map = symplectic_action(p, m)?;
        let map_ok = extend_homomorphism(n, n, &n.generators().iter().map(|&g| map[g]).collect::<Vec<_>>())
            .map(|h| h == map)
            .unwrap_or(false);
        if !map_ok {
            return Err(Error::InvalidAction("symplectic map is not an automorphism of this group".into()));
        }
        map
    } else if let Some(rest) = name.strip_prefix("auto-order:") {
        let k: usize = rest.trim().parse().map_err(|_| Error::Parse(format!("bad order {rest:?}")))?;
        find_automorphism(n, k).ok_or_else(|| Error::InvalidAction(format!("no automorphism of order {k}")))?
    } else {
        return Err(Error::InvalidAction(format!("unknown action {name:?}")));
    };
    cyclic_action(n, a, &alpha)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetupSpec {
    pub label: &'static str,
    pub n: CatalogSpec,
    pub a: CatalogSpec,
    pub action: &'static str,
}

impl SetupSpec {
    pub fn build(&self) -> Result<CoprimeSetup> {
        let n = from_catalog(&self.n)?;
        let a = from_catalog(&self.a)?;
        CoprimeSetup::from_action(&named_action(self.action, &n, &a)?)
    }
}

const E3: CatalogSpec = CatalogSpec::Extraspecial { p: 3, exp: 3 };
const E5: CatalogSpec = CatalogSpec::Extraspecial { p: 5, exp: 5 };

/// The coprime setups with odd `|N|`.
pub fn standard_setups() -> Vec<SetupSpec> {
    vec![
        SetupSpec { label: "3^(1+2):C2", n: E3, a: CatalogSpec::Cyclic(2), action: "inversion-mod-center" },
        SetupSpec { label: "3^(1+2):C4", n: E3, a: CatalogSpec::Cyclic(4), action: "symplectic:0,-1,1,0" },
        SetupSpec { label: "5^(1+2):C3", n: E5, a: CatalogSpec::Cyclic(3), action: "symplectic:0,-1,1,-1" },
        SetupSpec { label: "C7:C2", n: CatalogSpec::Cyclic(7), a: CatalogSpec::Cyclic(2), action: "inversion" },
        SetupSpec { label: "C9 trivial C2", n: CatalogSpec::Cyclic(9), a: CatalogSpec::Cyclic(2), action: "trivial" },
    ]
}

/// `Q8` with an automorphism of order 3; `|N|` is even.
pub fn quaternion_setup() -> SetupSpec {
    SetupSpec { label: "Q8:C3", n: CatalogSpec::Quaternion8, a: CatalogSpec::Cyclic(3), action: "auto-order:3" }
}

/// A five with its complement and, when known, a strongly controlling subgroup.
#[derive(Debug, Clone)]
pub struct FiveCase {
    pub label: &'static str,
    pub five: CharacterFive,
    pub h: Subgroup,
}

/// The character of `L` with trivial kernel and least value vector.
pub fn faithful(l: &Subgroup) -> Result<ClassFunction> {
    character_table(l)?
        .irr()
        .iter()
        .find(|c| c.kernel().is_trivial())
        .cloned()
        .ok_or_else(|| Error::HypothesisViolated("L has no faithful irreducible character".into()))
}

fn over_center(label: &'static str, setup: &CoprimeSetup) -> Result<FiveCase> {
    let z = setup.n.center();
    let five = CharacterFive::new(&setup.g, &setup.n, &z, &faithful(&z)?)?.with_control(&setup.g)?;
    let h = find_complement(&five, &setup.g)?;
    Ok(FiveCase { label, five, h })
}

fn self_five(label: &'static str, spec: &CatalogSpec) -> Result<FiveCase> {
    let k = Subgroup::whole(&from_catalog(spec)?);
    let z = k.center();
    let five = CharacterFive::new(&k, &k, &z, &faithful(&z)?)?;
    Ok(FiveCase { label, five, h: z })
}

pub fn standard_fives() -> Result<Vec<FiveCase>> {
    let setups = standard_setups();
    let sl = Subgroup::whole(&from_catalog(&CatalogSpec::Sl23)?);
    let z = sl.center();
    let sl_five = CharacterFive::new(&sl, &sl.sylow(2), &z, &faithful(&z)?)?.with_control(&sl)?;
    let sl_h = find_complement(&sl_five, &sl)?;
    Ok(vec![
        over_center("3^(1+2):C2 over Z", &setups[0].build()?)?,
        over_center("3^(1+2):C4 over Z", &setups[1].build()?)?,
        over_center("5^(1+2):C3 over Z", &setups[2].build()?)?,
        FiveCase { label: "SL(2,3) over Z", five: sl_five, h: sl_h },
        self_five("3^(1+2)+ over Z", &E3)?,
        self_five("3^(1+2)- over Z", &CatalogSpec::Extraspecial { p: 3, exp: 9 })?,
        self_five("Q8 over Z", &CatalogSpec::Quaternion8)?,
    ])
}

/// Catalog groups whose tables are checked exactly.
pub fn table_catalog() -> Vec<CatalogSpec> {
    let mut out: Vec<CatalogSpec> = (1..=12).map(CatalogSpec::Cyclic).collect();
    out.extend([
        CatalogSpec::Dihedral(8),
        CatalogSpec::Dihedral(14),
        CatalogSpec::Quaternion8,
        CatalogSpec::Sym(3),
        CatalogSpec::Sym(4),
        CatalogSpec::Alt(4),
        CatalogSpec::Sl23,
        E3,
        CatalogSpec::Extraspecial { p: 3, exp: 9 },
        E5,
    ]);
    out
}

/// Groups for the form and counting audits, all of order at most 200.
pub fn form_groups() -> Result<Vec<(String, Subgroup)>> {
    let mut out = Vec::new();
    for spec in [
        CatalogSpec::Cyclic(6),
        CatalogSpec::Sym(3),
        CatalogSpec::Quaternion8,
        CatalogSpec::Dihedral(8),
        CatalogSpec::Dihedral(14),
        CatalogSpec::Alt(4),
        CatalogSpec::Sym(4),
        CatalogSpec::Sl23,
        E3,
        CatalogSpec::Extraspecial { p: 3, exp: 9 },
    ] {
        out.push((spec.label(), Subgroup::whole(&from_catalog(&spec)?)));
    }
    for s in &standard_setups()[..2] {
        out.push((s.label.to_string(), s.build()?.g));
    }
    Ok(out)
}
