use super::Subgroup;
use crate::error::{Error, Result};
use std::collections::HashSet;

const SEARCH_LIMIT: u128 = 5_000_000;

/// All subgroups H of G with HK = G and H ∩ K = L, by backtracking over
/// coset representatives of a generating set of G/K. With
/// `up_to_conjugacy`, one representative (the lexicographically minimal
/// conjugate) per G-class is returned.
pub fn complement_search(
    g: &Subgroup,
    k: &Subgroup,
    l: &Subgroup,
    up_to_conjugacy: bool,
) -> Result<Vec<Subgroup>> {
    g.assert_same_group(k)?;
    g.assert_same_group(l)?;
    if !l.is_subgroup_of(k) || !k.is_normal_in(g) || !l.is_normal_in(g) {
        return Err(Error::NotNormal("complement search needs L ≤ K, both normal in G".into()));
    }
    let grp = g.group();
    let target = g.order() / k.order() * l.order();
    // generators of G modulo K
    let mut cur = k.clone();
    let mut gens = Vec::new();
    for &x in g.elements() {
        if !cur.contains(x) {
            gens.push(x);
            cur = cur.join_elements(&[x]);
        }
    }
    let (_, trans) = k.coset_ids(l);
    let space = (trans.len() as u128).saturating_pow(gens.len() as u32);
    if space > SEARCH_LIMIT {
        return Err(Error::OrderCapExceeded { cap: SEARCH_LIMIT as usize });
    }
    let meets_k_in_l = |h: &Subgroup| h.elements().iter().filter(|&&x| k.contains(x)).count() == l.order();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen = HashSet::new();
    let mut stack: Vec<(usize, Subgroup)> = vec![(0, l.clone())];
    while let Some((depth, h)) = stack.pop() {
        if depth == gens.len() {
            if h.order() == target && seen.insert(h.serial()) {
                found.push(h);
            }
            continue;
        }
        for &t in trans.iter().rev() {
            let cand = h.join_elements(&[grp.mul(gens[depth], t)]);
            if cand.order() <= target && meets_k_in_l(&cand) {
                stack.push((depth + 1, cand));
            }
        }
    }
    if up_to_conjugacy {
        let mut reps: Vec<Subgroup> = Vec::new();
        for h in found {
            let m = h.min_conjugate(g);
            if !reps.contains(&m) {
                reps.push(m);
            }
        }
        found = reps;
    }
    found.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{from_catalog, CatalogSpec};

    #[test]
    fn sl23_over_q8_mod_center() {
        let g = from_catalog(&CatalogSpec::Sl23).unwrap();
        let w = Subgroup::whole(&g);
        let q8 = w.sylow(2);
        let z = w.center();
        let all = complement_search(&w, &q8, &z, false).unwrap();
        assert_eq!(all.len(), 4);
        for h in &all {
            assert_eq!(h.order(), 6);
            assert!(h.is_abelian());
            assert_eq!(h.intersection(&q8).unwrap(), z);
        }
        assert_eq!(complement_search(&w, &q8, &z, true).unwrap().len(), 1);
    }

    #[test]
    fn degenerate_and_empty() {
        let g = from_catalog(&CatalogSpec::Sym(3)).unwrap();
        let w = Subgroup::whole(&g);
        let a3 = w.derived();
        assert_eq!(complement_search(&w, &a3, &a3, false).unwrap(), vec![w.clone()]);
        let c4 = from_catalog(&CatalogSpec::Cyclic(4)).unwrap();
        let w4 = Subgroup::whole(&c4);
        let c2 = Subgroup::generated(&c4, &[2]);
        assert!(complement_search(&w4, &c2, &Subgroup::trivial(&c4), false).unwrap().is_empty());
        // S3 over A3: three complements, one class
        let t = Subgroup::trivial(&g);
        assert_eq!(complement_search(&w, &a3, &t, false).unwrap().len(), 3);
        assert_eq!(complement_search(&w, &a3, &t, true).unwrap().len(), 1);
    }
}
