use super::Group;
use crate::chartab::{CharacterTable, ClassData};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

pub struct SubData {
    serial: u64,
    group: Group,
    elems: Vec<usize>,
    bits: Vec<u64>,
    gens: OnceLock<Vec<usize>>,
    pub(crate) classes: OnceLock<Arc<ClassData>>,
    pub(crate) table: OnceLock<Arc<CharacterTable>>,
}

/// A subgroup of a parent group, stored as its sorted element set.
///
/// Subgroups are interned per parent group: two handles with the same element
/// set share one allocation, so cached class data and character tables are
/// computed once.
#[derive(Clone)]
pub struct Subgroup(Arc<SubData>);

type Registry = Mutex<HashMap<u64, HashMap<Vec<usize>, Subgroup>>>;
static REGISTRY: OnceLock<Registry> = OnceLock::new();
static NEXT_SERIAL: AtomicU64 = AtomicU64::new(1);

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.serial == other.0.serial
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.serial.hash(state)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order() <= 12 {
            write!(f, "Subgroup{:?}", self.0.elems)
        } else {
            write!(f, "Subgroup(order {} of {:?})", self.order(), self.0.group)
        }
    }
}

/// Sorted closure of `gens` under multiplication.
pub(crate) fn closure_of(g: &Group, gens: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    let e = g.identity();
    inside[e] = true;
    let mut list = vec![e];
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != e).collect();
    let mut i = 0;
    while i < list.len() {
        for &s in &gens {
            let p = g.mul(list[i], s);
            if !inside[p] {
                inside[p] = true;
                list.push(p);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

impl Subgroup {
    /// Interns a sorted, duplicate-free element set known to be a subgroup.
    pub(crate) fn from_sorted(group: &Group, elems: Vec<usize>) -> Subgroup {
        let reg = REGISTRY.get_or_init(Default::default);
        let mut map = reg.lock().unwrap();
        let per = map.entry(group.id()).or_default();
        if let Some(s) = per.get(&elems) {
            return s.clone();
        }
        let mut bits = vec![0u64; group.order().div_ceil(64)];
        for &x in &elems {
            bits[x / 64] |= 1 << (x % 64);
        }
        let sub = Subgroup(Arc::new(SubData {
            serial: NEXT_SERIAL.fetch_add(1, Ordering::Relaxed),
            group: group.clone(),
            elems: elems.clone(),
            bits,
            gens: OnceLock::new(),
            classes: OnceLock::new(),
            table: OnceLock::new(),
        }));
        per.insert(elems, sub.clone());
        sub
    }

    /// Validates an arbitrary element set as a subgroup.
    pub fn from_elements(group: &Group, elems: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        if set.iter().any(|&x| x >= group.order()) {
            return Err(Error::HandleMismatch);
        }
        let elems: Vec<usize> = set.into_iter().collect();
        let closed = closure_of(group, &elems);
        if closed != elems {
            return Err(Error::Parse("element set is not a subgroup".into()));
        }
        Ok(Subgroup::from_sorted(group, elems))
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup::from_sorted(group, (0..group.order()).collect())
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::from_sorted(group, vec![group.identity()])
    }

    /// `⟨seeds⟩`.
    pub fn generated(group: &Group, seeds: &[usize]) -> Subgroup {
        Subgroup::from_sorted(group, closure_of(group, seeds))
    }

    pub fn group(&self) -> &Group {
        &self.0.group
    }
    pub fn order(&self) -> usize {
        self.0.elems.len()
    }
    pub fn elements(&self) -> &[usize] {
        &self.0.elems
    }
    pub(crate) fn class_cache(&self) -> &OnceLock<Arc<ClassData>> {
        &self.0.classes
    }
    pub(crate) fn table_cache(&self) -> &OnceLock<Arc<CharacterTable>> {
        &self.0.table
    }
    pub fn serial(&self) -> u64 {
        self.0.serial
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        (self.0.bits[x / 64] >> (x % 64)) & 1 == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.0.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    fn same_group(&self, other: &Subgroup) -> Result<()> {
        if self.0.group == other.0.group {
            Ok(())
        } else {
            Err(Error::HandleMismatch)
        }
    }

    pub(crate) fn assert_same_group(&self, other: &Subgroup) -> Result<()> {
        self.same_group(other)
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> &[usize] {
        self.0.gens.get_or_init(|| {
            let g = &self.0.group;
            let mut gens = Vec::new();
            let mut cur = vec![g.identity()];
            for &x in &self.0.elems {
                if cur.binary_search(&x).is_ok() {
                    continue;
                }
                gens.push(x);
                cur = closure_of(g, &gens);
                if cur.len() == self.order() {
                    break;
                }
            }
            gens
        })
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.0.group == other.0.group
            && self.order() <= other.order()
            && self.0.elems.iter().all(|&x| other.contains(x))
    }

    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.0.elems.iter().fold(1u64, |e, &x| e.lcm(&(self.0.group.elem_order(x) as u64)))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.0.group;
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// `⟨self, extra⟩`.
    pub fn join_elements(&self, extra: &[usize]) -> Subgroup {
        if extra.iter().all(|&x| self.contains(x)) {
            return self.clone();
        }
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(extra);
        Subgroup::generated(&self.0.group, &gens)
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_group(other)?;
        Ok(self.join_elements(other.generators()))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_group(other)?;
        let elems = self.0.elems.iter().copied().filter(|&x| other.contains(x)).collect();
        Ok(Subgroup::from_sorted(&self.0.group, elems))
    }

    /// `self^g = g⁻¹ self g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let grp = &self.0.group;
        let mut elems: Vec<usize> = self.0.elems.iter().map(|&x| grp.conj(x, g)).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(grp, elems)
    }

    /// Whether every element of `self` normalizes `x`.
    pub fn normalizes(&self, x: &Subgroup) -> bool {
        let g = &self.0.group;
        self.generators()
            .iter()
            .all(|&s| x.generators().iter().all(|&y| x.contains(g.conj(y, s))))
    }

    /// Whether `self` is normal in `sup`.
    pub fn is_normal_in(&self, sup: &Subgroup) -> bool {
        self.is_subgroup_of(sup) && sup.normalizes(self)
    }

    /// `C_self(S)`.
    pub fn centralizer(&self, s: &[usize]) -> Subgroup {
        let g = &self.0.group;
        let elems = self
            .0
            .elems
            .iter()
            .copied()
            .filter(|&h| s.iter().all(|&x| g.mul(h, x) == g.mul(x, h)))
            .collect();
        Subgroup::from_sorted(g, elems)
    }

    /// `N_self(X)`.
    pub fn normalizer(&self, x: &Subgroup) -> Subgroup {
        let g = &self.0.group;
        let xg = x.generators();
        let elems = self
            .0
            .elems
            .iter()
            .copied()
            .filter(|&h| xg.iter().all(|&y| x.contains(g.conj(y, h))))
            .collect();
        Subgroup::from_sorted(g, elems)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self.generators())
    }

    /// `[X, Y]`, generated by all commutators `[x, y]`.
    pub fn commutator(x: &Subgroup, y: &Subgroup) -> Result<Subgroup> {
        x.same_group(y)?;
        let g = &x.0.group;
        let mut seeds = BTreeSet::new();
        for &a in x.elements() {
            for &b in y.elements() {
                seeds.insert(g.comm(a, b));
            }
        }
        let seeds: Vec<usize> = seeds.into_iter().collect();
        Ok(Subgroup::generated(g, &seeds))
    }

    pub fn derived(&self) -> Subgroup {
        Subgroup::commutator(self, self).expect("same group")
    }

    /// Smallest subgroup of `self` normal in `self` containing `base` and `seeds`.
    pub fn normal_closure(&self, base: &Subgroup, seeds: &[usize]) -> Subgroup {
        let g = &self.0.group;
        let mut gens: Vec<usize> = base.generators().to_vec();
        gens.extend_from_slice(seeds);
        let mut cur = Subgroup::generated(g, &gens);
        loop {
            let mut grew = false;
            'outer: for &s in self.generators() {
                for &y in cur.generators() {
                    let c = g.conj(y, s);
                    if !cur.contains(c) {
                        cur = cur.join_elements(&[c]);
                        grew = true;
                        break 'outer;
                    }
                }
            }
            if !grew {
                return cur;
            }
        }
    }

    /// `C_{K/L}(X) = {k ∈ K : [k, x] ∈ L for all x ∈ X}`, as a subgroup of K.
    pub fn centralizer_mod(k: &Subgroup, l: &Subgroup, x: &[usize]) -> Subgroup {
        let g = &k.0.group;
        let elems = k
            .0
            .elems
            .iter()
            .copied()
            .filter(|&a| x.iter().all(|&b| l.contains(g.comm(a, b))))
            .collect();
        Subgroup::from_sorted(g, elems)
    }

    /// A Sylow p-subgroup; trivial when p does not divide the order.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let g = &self.0.group;
        let n = self.order() as u64;
        let mut target = 1u64;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            target *= p;
        }
        let is_p_power = |mut k: u64| {
            while k % p == 0 {
                k /= p;
            }
            k == 1
        };
        let mut cur = Subgroup::trivial(g);
        while (cur.order() as u64) < target {
            let norm = self.normalizer(&cur);
            let mut next = None;
            for &x in norm.elements() {
                if cur.contains(x) || !is_p_power(g.elem_order(x) as u64) {
                    continue;
                }
                let cand = cur.join_elements(&[x]);
                if is_p_power(cand.order() as u64) {
                    next = Some(cand);
                    break;
                }
            }
            cur = next.expect("Sylow growth step exists");
        }
        cur
    }

    /// Element-to-coset map for `L ≤ self` (right cosets `Lx`), with coset ids
    /// assigned in order of their smallest element. Elements outside `self`
    /// map to `u32::MAX`.
    pub fn coset_ids(&self, l: &Subgroup) -> (Vec<u32>, Vec<usize>) {
        let g = &self.0.group;
        let mut ids = vec![u32::MAX; g.order()];
        let mut reps = Vec::new();
        for &x in &self.0.elems {
            if ids[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in l.elements() {
                ids[g.mul(y, x)] = id;
            }
        }
        (ids, reps)
    }

    /// Some `h ∈ self` with `⟨L, h⟩ = self`, if `self/L` is cyclic.
    pub fn cyclic_generator_mod(&self, l: &Subgroup) -> Option<usize> {
        let idx = self.order() / l.order();
        let g = &self.0.group;
        self.0.elems.iter().copied().find(|&h| {
            let mut k = 1;
            let mut p = h;
            while !l.contains(p) {
                p = g.mul(p, h);
                k += 1;
            }
            k == idx
        })
    }

    /// Lexicographically minimal conjugate under `sup`, used to name conjugacy classes.
    pub fn min_conjugate(&self, sup: &Subgroup) -> Subgroup {
        let g = &self.0.group;
        let mut best: Option<Vec<usize>> = None;
        for &s in sup.elements() {
            let mut e: Vec<usize> = self.0.elems.iter().map(|&x| g.conj(x, s)).collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
        }
        Subgroup::from_sorted(g, best.unwrap())
    }

    pub fn is_conjugate_in(&self, other: &Subgroup, sup: &Subgroup) -> bool {
        self.order() == other.order()
            && sup.elements().iter().any(|&s| {
                let g = &self.0.group;
                self.generators().iter().all(|&x| other.contains(g.conj(x, s)))
            })
    }
}

/// All normal subgroups of `g`, sorted by (order, element set).
pub fn normal_subgroups(g: &Subgroup) -> Vec<Subgroup> {
    let grp = g.group();
    let triv = Subgroup::trivial(grp);
    let mut by_class: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut found: Vec<Subgroup> = vec![triv.clone()];
    let mut seen_elems = vec![false; grp.order()];
    for &x in g.elements() {
        if seen_elems[x] {
            continue;
        }
        // conjugates of x give the same normal closure
        for &s in g.elements() {
            seen_elems[grp.conj(x, s)] = true;
        }
        let n = g.normal_closure(&triv, &[x]);
        if by_class.insert(n.elements().to_vec(), ()).is_none() {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        let mut j = 0;
        while j < i {
            let joined = found[i].join(&found[j]).unwrap();
            if by_class.insert(joined.elements().to_vec(), ()).is_none() && !joined.is_trivial() {
                found.push(joined);
            }
            j += 1;
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    found.dedup();
    found
}

/// The normal subgroups N of `g` with `L < N ≤ K` that are minimal with this
/// property, sorted by (order, element set). `L` and `K` must be normal in `g`.
pub fn minimal_normal_over(g: &Subgroup, l: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
    let grp = g.group();
    let mut cands: Vec<Subgroup> = Vec::new();
    let mut done = vec![false; grp.order()];
    for &x in k.elements() {
        if l.contains(x) || done[x] {
            continue;
        }
        for &s in g.elements() {
            done[grp.conj(x, s)] = true;
        }
        let n = g.normal_closure(l, &[x]);
        if !cands.contains(&n) {
            cands.push(n);
        }
    }
    let mut minimal: Vec<Subgroup> = cands
        .iter()
        .filter(|n| !cands.iter().any(|m| m != *n && m.is_subgroup_of(n)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    minimal
}
