use crate::group::Subgroup;
use serde::Serialize;
use std::sync::Arc;

/// Conjugacy classes of a subgroup `H`, computed inside `H` itself.
#[derive(Debug)]
pub struct ClassData {
    pub(crate) sub: Subgroup,
    pub(crate) classes: Vec<Vec<usize>>,
    /// Indexed by element of the parent group; `u32::MAX` outside `H`.
    pub(crate) class_of: Vec<u32>,
    pub(crate) inverse_class: Vec<usize>,
    pub(crate) rep_orders: Vec<u64>,
    pub(crate) power_maps: Vec<(u64, Vec<usize>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub size: usize,
    pub representative: usize,
    pub order: u64,
}

impl ClassData {
    pub(crate) fn compute(sub: &Subgroup) -> ClassData {
        let g = sub.group();
        let gens = sub.generators();
        let mut seen = vec![false; g.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in sub.elements() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                for &s in gens {
                    let y = g.conj(orbit[i], s);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let e = g.identity();
        classes.sort_by_key(|c| (c[0] != e, c.len(), c[0]));
        let mut class_of = vec![u32::MAX; g.order()];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k as u32;
            }
        }
        let inverse_class = classes.iter().map(|c| class_of[g.inv(c[0])] as usize).collect();
        let rep_orders: Vec<u64> = classes.iter().map(|c| g.elem_order(c[0]) as u64).collect();
        let exp = sub.exponent();
        let power_maps = (2..=exp)
            .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
            .map(|p| {
                let map = classes.iter().map(|c| class_of[g.pow(c[0], p as i64)] as usize).collect();
                (p, map)
            })
            .collect();
        ClassData { sub: sub.clone(), classes, class_of, inverse_class, rep_orders, power_maps }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn representative(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn rep_order(&self, k: usize) -> u64 {
        self.rep_orders[k]
    }

    pub fn centralizer_order(&self, k: usize) -> usize {
        self.sub.order() / self.classes[k].len()
    }

    /// Class index of an element of `H`.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        let c = *self.class_of.get(x)?;
        (c != u32::MAX).then_some(c as usize)
    }

    #[inline]
    pub(crate) fn class_index(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    /// Class of `rep^p` for a prime `p` up to the exponent.
    pub fn power_map(&self, p: u64) -> Option<&[usize]> {
        self.power_maps.iter().find(|(q, _)| *q == p).map(|(_, m)| m.as_slice())
    }

    /// Class of `rep(k)^m` for any integer `m`.
    pub fn power_class(&self, k: usize, m: i64) -> usize {
        self.class_index(self.sub.group().pow(self.representative(k), m))
    }

    pub fn summary(&self) -> Vec<ClassSummary> {
        (0..self.len())
            .map(|k| ClassSummary { size: self.size(k), representative: self.representative(k), order: self.rep_order(k) })
            .collect()
    }
}

/// Cached conjugacy classes of `H`.
pub fn class_data(sub: &Subgroup) -> Arc<ClassData> {
    sub.class_cache().get_or_init(|| Arc::new(ClassData::compute(sub))).clone()
}

/// Conjugacy classes of the whole group.
pub fn conjugacy_classes(g: &crate::group::Group) -> Arc<ClassData> {
    class_data(&Subgroup::whole(g))
}
