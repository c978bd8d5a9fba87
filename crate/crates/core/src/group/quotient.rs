use super::{Group, Subgroup};
use crate::error::{Error, Result};

/// `G/N` together with the projection from the parent group's indices.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Group,
    /// Quotient index of each parent element of G; `usize::MAX` outside G.
    pub projection: Vec<usize>,
    /// A coset representative for each quotient element.
    pub lifts: Vec<usize>,
}

pub fn quotient(g: &Subgroup, n: &Subgroup) -> Result<Quotient> {
    g.assert_same_group(n)?;
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal("quotient by a non-normal subgroup".into()));
    }
    let parent = g.group();
    let (ids, reps) = g.coset_ids(n);
    let m = reps.len();
    let mut t = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            t.push(ids[parent.mul(a, b)]);
        }
    }
    let identity = ids[parent.identity()] as usize;
    let group = Group::from_trusted_table(m, t, identity, None, None, None);
    let projection = ids.iter().map(|&i| if i == u32::MAX { usize::MAX } else { i as usize }).collect();
    Ok(Quotient { group, projection, lifts: reps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{from_catalog, CatalogSpec};

    #[test]
    fn q8_mod_center_is_klein() {
        let q8 = from_catalog(&CatalogSpec::Quaternion8).unwrap();
        let w = Subgroup::whole(&q8);
        let q = quotient(&w, &w.center()).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.exponent(), 2);
        q.group.verify_axioms().unwrap();
        for a in q8.elements() {
            for b in q8.elements() {
                assert_eq!(q.projection[q8.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
            }
        }
    }

    #[test]
    fn degenerate_quotients() {
        let s3 = from_catalog(&CatalogSpec::Sym(3)).unwrap();
        let w = Subgroup::whole(&s3);
        assert_eq!(quotient(&w, &w).unwrap().group.order(), 1);
        let q = quotient(&w, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        let t = Subgroup::generated(&s3, &[s3.elements().find(|&x| s3.elem_order(x) == 2).unwrap()]);
        assert!(matches!(quotient(&w, &t), Err(Error::NotNormal(_))));
    }
}
