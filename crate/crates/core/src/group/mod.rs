//! Finite groups as dense Cayley tables, plus the subgroup calculus built on them.
//!
//! Elements are indices `0..order`. Conjugation is written exponentially:
//! `x^g = g⁻¹xg`, and commutators are `[x, y] = x⁻¹y⁻¹xy`.

mod action;
mod catalog;
mod complement;
mod perm;
mod quotient;
mod subgroup;

pub use action::{direct_product, extend_homomorphism, semidirect_product, GroupAction, Semidirect};
pub use catalog::{from_catalog, symplectic_action, CatalogSpec};
pub use complement::complement_search;
pub use perm::Perm;
pub use quotient::{quotient, Quotient};
pub use subgroup::{minimal_normal_over, normal_subgroups, Subgroup};

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

pub const DEFAULT_ORDER_CAP: usize = 2000;

static ORDER_CAP: AtomicUsize = AtomicUsize::new(0);
static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// The largest group order any constructor will materialize.
///
/// Defaults to 2000; `FGCT_ORDER_CAP` in the environment overrides the default
/// unless [`set_order_cap`] was called first.
pub fn order_cap() -> usize {
    let cap = ORDER_CAP.load(Ordering::Relaxed);
    if cap != 0 {
        return cap;
    }
    let cap = std::env::var("FGCT_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_ORDER_CAP);
    ORDER_CAP.store(cap, Ordering::Relaxed);
    cap
}

pub fn set_order_cap(cap: usize) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(order: usize) -> Result<()> {
    let cap = order_cap();
    if order > cap {
        Err(Error::OrderCapExceeded { cap })
    } else {
        Ok(())
    }
}

#[derive(Debug)]
pub struct GroupData {
    id: u64,
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    orders: Vec<u32>,
    exponent: u64,
    generators: Vec<usize>,
    perms: Option<Vec<Perm>>,
    name: Option<String>,
}

/// A cheap, shareable handle to an immutable finite group.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(#{} order {}", self.0.id, self.0.order)?;
        if let Some(n) = &self.0.name {
            write!(f, " {n}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}
impl Eq for Group {}

impl Group {
    /// Builds a group from a table already known to satisfy the axioms.
    pub(crate) fn from_trusted_table(
        order: usize,
        table: Vec<u32>,
        identity: usize,
        name: Option<String>,
        perms: Option<Vec<Perm>>,
        generators: Option<Vec<usize>>,
    ) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            if inv[x] != u32::MAX {
                continue;
            }
            let row = &table[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v as usize == identity).expect("group table");
            inv[x] = y as u32;
            inv[y] = x as u32;
        }
        let mut orders = vec![0u32; order];
        let mut exponent = 1u64;
        for x in 0..order {
            let mut k = 1u32;
            let mut p = x;
            while p != identity {
                p = table[p * order + x] as usize;
                k += 1;
            }
            orders[x] = k;
            exponent = exponent.lcm(&(k as u64));
        }
        let mut data = GroupData {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            order,
            table,
            inv,
            identity,
            orders,
            exponent,
            generators: Vec::new(),
            perms,
            name,
        };
        data.generators = match generators {
            Some(g) => g.into_iter().filter(|&x| x != identity).collect(),
            None => greedy_generators(&data),
        };
        Group(Arc::new(data))
    }

    /// Validates a Cayley table: identity, then associativity, then inverses.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        check_cap(n)?;
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {i} has length {}", row.len())));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::MalformedTable(format!("entry {v} out of range")));
                }
                table.push(v as u32);
            }
        }
        let t = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| t(e, x) == x && t(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        if let Some((a, b, c)) = light_test(n, &table) {
            return Err(Error::NonAssociative(a, b, c));
        }
        for x in 0..n {
            if !(0..n).any(|y| t(x, y) == identity && t(y, x) == identity) {
                return Err(Error::NoInverse(x));
            }
        }
        Ok(Group::from_trusted_table(n, table, identity, None, None, None))
    }

    /// The group generated by the given permutations, enumerated by right multiplication.
    pub fn from_permutations(gens: &[Perm]) -> Result<Group> {
        let degree = gens.iter().map(|g| g.degree()).max().unwrap_or(0);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation("generators have different degrees".into()));
        }
        let cap = order_cap();
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(id, 0usize);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = elems[i].then(g);
                if !index.contains_key(&p) {
                    if elems.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&elems[a].then(&elems[b])] as u32;
            }
        }
        let gen_idx: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let mut dedup = Vec::new();
        for g in gen_idx {
            if g != 0 && !dedup.contains(&g) {
                dedup.push(g);
            }
        }
        Ok(Group::from_trusted_table(n, table, 0, None, Some(elems), Some(dedup)))
    }

    pub(crate) fn with_name(self, name: impl Into<String>) -> Group {
        let mut data = Arc::try_unwrap(self.0).unwrap_or_else(|a| clone_data(&a));
        data.name = Some(name.into());
        Group(Arc::new(data))
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }
    pub fn order(&self) -> usize {
        self.0.order
    }
    pub fn identity(&self) -> usize {
        self.0.identity
    }
    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }
    pub fn generators(&self) -> &[usize] {
        &self.0.generators
    }
    pub fn perm_realization(&self) -> Option<&[Perm]> {
        self.0.perms.as_deref()
    }
    pub fn exponent(&self) -> u64 {
        self.0.exponent
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }
    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.0.orders[a] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let o = self.elem_order(x) as i64;
        let k = k.rem_euclid(o);
        let mut r = self.identity();
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of the group axioms, by Light's associativity test.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        let e = self.identity();
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(Error::NoIdentity);
            }
            if self.mul(self.inv(x), x) != e || self.mul(x, self.inv(x)) != e {
                return Err(Error::NoInverse(x));
            }
        }
        match light_test(n, &self.0.table) {
            Some((a, b, c)) => Err(Error::NonAssociative(a, b, c)),
            None => Ok(()),
        }
    }

    /// Table rows, for serialization and isomorphism checks.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect()
    }
}

fn clone_data(d: &GroupData) -> GroupData {
    GroupData {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        order: d.order,
        table: d.table.clone(),
        inv: d.inv.clone(),
        identity: d.identity,
        orders: d.orders.clone(),
        exponent: d.exponent,
        generators: d.generators.clone(),
        perms: d.perms.clone(),
        name: d.name.clone(),
    }
}

fn greedy_generators(d: &GroupData) -> Vec<usize> {
    let n = d.order;
    let mut inside = vec![false; n];
    inside[d.identity] = true;
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside = vec![false; n];
        inside[d.identity] = true;
        let mut members = vec![d.identity];
        let mut i = 0;
        while i < members.len() {
            for &g in &gens {
                let p = d.table[members[i] * n + g] as usize;
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
        if members.len() == n {
            break;
        }
    }
    gens
}

/// Light's associativity test over a generating set of the magma.
/// Returns a failing triple `(a, b, c)` with `(ab)c != a(bc)`.
fn light_test(n: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    let t = |a: usize, b: usize| table[a * n + b] as usize;
    let mut inside = vec![false; n];
    let mut list: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for g in 0..n {
        if inside[g] {
            continue;
        }
        gens.push(g);
        let mut queue = vec![g];
        inside[g] = true;
        list.push(g);
        while let Some(u) = queue.pop() {
            let mut j = 0;
            while j < list.len() {
                let v = list[j];
                for p in [t(u, v), t(v, u)] {
                    if !inside[p] {
                        inside[p] = true;
                        list.push(p);
                        queue.push(p);
                    }
                }
                j += 1;
            }
        }
        if list.len() == n {
            break;
        }
    }
    for &a in &gens {
        for x in 0..n {
            let xa = t(x, a);
            for y in 0..n {
                if t(xa, y) != t(x, t(a, y)) {
                    return Some((x, a, y));
                }
            }
        }
    }
    None
}
