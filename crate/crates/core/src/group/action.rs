use super::{check_cap, Group, Subgroup};
use crate::error::{Error, Result};

/// A right action of `actor` on `target` by automorphisms: `perm(a)[n] = n^a`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    actor: Group,
    target: Group,
    perms: Vec<Vec<usize>>,
}

/// Extends images of `src.generators()` to a homomorphism `src → dst`.
pub fn extend_homomorphism(src: &Group, dst: &Group, images: &[usize]) -> Result<Vec<usize>> {
    let gens = src.generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidAction(format!(
            "expected {} generator images, got {}",
            gens.len(),
            images.len()
        )));
    }
    let mut map = vec![usize::MAX; src.order()];
    map[src.identity()] = dst.identity();
    let mut queue = vec![src.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (k, &g) in gens.iter().enumerate() {
            let y = src.mul(x, g);
            let img = dst.mul(map[x], images[k]);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return Err(Error::InvalidAction("generator images do not define a homomorphism".into()));
            }
        }
        i += 1;
    }
    for a in src.elements() {
        for b in src.elements() {
            if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                return Err(Error::InvalidAction("generator images do not define a homomorphism".into()));
            }
        }
    }
    Ok(map)
}

impl GroupAction {
    /// Validates a full map: one automorphism of `target` per element of `actor`.
    pub fn new(actor: &Group, target: &Group, perms: Vec<Vec<usize>>) -> Result<GroupAction> {
        if perms.len() != actor.order() {
            return Err(Error::InvalidAction("need one permutation per actor element".into()));
        }
        for (a, p) in perms.iter().enumerate() {
            if !is_automorphism(target, p) {
                return Err(Error::InvalidAction(format!("image of actor element {a} is not an automorphism")));
            }
        }
        for a in actor.elements() {
            for b in actor.elements() {
                let ab = &perms[actor.mul(a, b)];
                if (0..target.order()).any(|n| ab[n] != perms[b][perms[a][n]]) {
                    return Err(Error::InvalidAction("map is not a homomorphism into Aut(N)".into()));
                }
            }
        }
        Ok(GroupAction { actor: actor.clone(), target: target.clone(), perms })
    }

    /// One automorphism per element of `actor.generators()`, extended to all of `actor`.
    pub fn from_generator_images(actor: &Group, target: &Group, images: &[Vec<usize>]) -> Result<GroupAction> {
        let gens = actor.generators();
        if images.len() != gens.len() {
            return Err(Error::InvalidAction(format!(
                "expected {} automorphisms (one per actor generator), got {}",
                gens.len(),
                images.len()
            )));
        }
        for p in images {
            if !is_automorphism(target, p) {
                return Err(Error::InvalidAction("generator image is not an automorphism".into()));
            }
        }
        let id: Vec<usize> = (0..target.order()).collect();
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; actor.order()];
        perms[actor.identity()] = Some(id);
        let mut queue = vec![actor.identity()];
        let mut i = 0;
        while i < queue.len() {
            let a = queue[i];
            for (k, &g) in gens.iter().enumerate() {
                let ag = actor.mul(a, g);
                let pa = perms[a].as_ref().unwrap();
                let composed: Vec<usize> = pa.iter().map(|&n| images[k][n]).collect();
                match &perms[ag] {
                    None => {
                        perms[ag] = Some(composed);
                        queue.push(ag);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction("generator images do not define a homomorphism".into()));
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        let perms = perms.into_iter().map(Option::unwrap).collect();
        GroupAction::new(actor, target, perms)
    }

    pub fn trivial(actor: &Group, target: &Group) -> GroupAction {
        let id: Vec<usize> = (0..target.order()).collect();
        GroupAction { actor: actor.clone(), target: target.clone(), perms: vec![id; actor.order()] }
    }

    pub fn actor(&self) -> &Group {
        &self.actor
    }
    pub fn target(&self) -> &Group {
        &self.target
    }

    /// `n^a`.
    pub fn apply(&self, a: usize, n: usize) -> usize {
        self.perms[a][n]
    }

    /// `C_N(A)`, as sorted target indices.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.target.order())
            .filter(|&n| self.perms.iter().all(|p| p[n] == n))
            .collect()
    }
}

fn is_automorphism(g: &Group, p: &[usize]) -> bool {
    if p.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    g.elements().all(|a| g.elements().all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b])))
}

/// `N ⋊ A` with its embedded copies of N and A.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub group: Group,
    pub n: Subgroup,
    pub a: Subgroup,
    /// Index of `(n, 1)` for each element n of N.
    pub n_embed: Vec<usize>,
    /// Index of `(1, a)` for each element a of A.
    pub a_embed: Vec<usize>,
}

/// The semidirect product; element `n·a` has index `n + |N|·a` and
/// `a⁻¹ n a = n^a` inside the product.
pub fn semidirect_product(act: &GroupAction) -> Result<Semidirect> {
    let (nn, aa) = (&act.target, &act.actor);
    let (on, oa) = (nn.order(), aa.order());
    let order = on * oa;
    check_cap(order)?;
    let mut t = Vec::with_capacity(order * order);
    for x in 0..order {
        let (n1, a1) = (x % on, x / on);
        let a1inv = aa.inv(a1);
        for y in 0..order {
            let (n2, a2) = (y % on, y / on);
            let n = nn.mul(n1, act.apply(a1inv, n2));
            t.push((n + on * aa.mul(a1, a2)) as u32);
        }
    }
    let identity = nn.identity() + on * aa.identity();
    let name = match (nn.name(), aa.name()) {
        (Some(a), Some(b)) => Some(format!("{a}:{b}")),
        _ => None,
    };
    let g = Group::from_trusted_table(order, t, identity, name, None, None);
    Ok(embed(g, nn, aa))
}

pub fn direct_product(nn: &Group, aa: &Group) -> Result<Semidirect> {
    let (on, oa) = (nn.order(), aa.order());
    let order = on * oa;
    check_cap(order)?;
    let mut t = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let n = nn.mul(x % on, y % on);
            let a = aa.mul(x / on, y / on);
            t.push((n + on * a) as u32);
        }
    }
    let identity = nn.identity() + on * aa.identity();
    let name = match (nn.name(), aa.name()) {
        (Some(a), Some(b)) => Some(format!("{a}x{b}")),
        _ => None,
    };
    let g = Group::from_trusted_table(order, t, identity, name, None, None);
    Ok(embed(g, nn, aa))
}

fn embed(g: Group, nn: &Group, aa: &Group) -> Semidirect {
    let on = nn.order();
    let n_embed: Vec<usize> = (0..on).map(|n| n + on * aa.identity()).collect();
    let a_embed: Vec<usize> = (0..aa.order()).map(|a| nn.identity() + on * a).collect();
    let mut ne = n_embed.clone();
    ne.sort_unstable();
    let mut ae = a_embed.clone();
    ae.sort_unstable();
    Semidirect {
        n: Subgroup::from_sorted(&g, ne),
        a: Subgroup::from_sorted(&g, ae),
        group: g,
        n_embed,
        a_embed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{from_catalog, CatalogSpec};

    fn inversion(n: &Group) -> Vec<usize> {
        n.elements().map(|x| n.inv(x)).collect()
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let c3 = from_catalog(&CatalogSpec::Cyclic(3)).unwrap();
        let c2 = from_catalog(&CatalogSpec::Cyclic(2)).unwrap();
        let sd = semidirect_product(&GroupAction::trivial(&c2, &c3)).unwrap();
        let dp = direct_product(&c3, &c2).unwrap();
        assert_eq!(sd.group.cayley_rows(), dp.group.cayley_rows());
        assert!(sd.group.is_abelian());
        assert_eq!(sd.group.exponent(), 6);
    }

    #[test]
    fn inversion_on_c7_is_d14() {
        let c7 = from_catalog(&CatalogSpec::Cyclic(7)).unwrap();
        let c2 = from_catalog(&CatalogSpec::Cyclic(2)).unwrap();
        let act = GroupAction::from_generator_images(&c2, &c7, &[inversion(&c7)]).unwrap();
        assert_eq!(act.fixed_points(), vec![0]);
        let sd = semidirect_product(&act).unwrap();
        let g = &sd.group;
        g.verify_axioms().unwrap();
        assert_eq!(g.order(), 14);
        assert!(!g.is_abelian());
        // seven involutions, as in D14
        assert_eq!(g.elements().filter(|&x| g.elem_order(x) == 2).count(), 7);
        let w = Subgroup::whole(g);
        assert!(sd.n.is_normal_in(&w));
        assert_eq!(Subgroup::commutator(&sd.n, &sd.a).unwrap(), sd.n);
        for a in 0..2 {
            for n in 0..7 {
                assert_eq!(g.conj(sd.n_embed[n], sd.a_embed[a]), sd.n_embed[act.apply(a, n)]);
            }
        }
    }

    #[test]
    fn inversion_mod_center_on_extraspecial() {
        let n = from_catalog(&CatalogSpec::Extraspecial { p: 3, exp: 3 }).unwrap();
        let c2 = from_catalog(&CatalogSpec::Cyclic(2)).unwrap();
        let images: Vec<usize> = n.generators().iter().map(|&g| n.inv(g)).collect();
        let auto = extend_homomorphism(&n, &n, &images).unwrap();
        let act = GroupAction::from_generator_images(&c2, &n, &[auto]).unwrap();
        let fixed = act.fixed_points();
        assert_eq!(fixed, Subgroup::whole(&n).center().elements());
        let sd = semidirect_product(&act).unwrap();
        assert_eq!(sd.group.order(), 54);
        sd.group.verify_axioms().unwrap();
    }

    #[test]
    fn rejects_non_automorphisms() {
        let c4 = from_catalog(&CatalogSpec::Cyclic(4)).unwrap();
        let c2 = from_catalog(&CatalogSpec::Cyclic(2)).unwrap();
        assert!(GroupAction::from_generator_images(&c2, &c4, &[vec![0, 2, 1, 3]]).is_err());
        // an automorphism of order 2 cannot be the image of a generator of C3
        let c3 = from_catalog(&CatalogSpec::Cyclic(3)).unwrap();
        assert!(GroupAction::from_generator_images(&c3, &c4, &[inversion(&c4)]).is_err());
    }
}
