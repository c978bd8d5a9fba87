//! Conjugacy classes, exact character tables and class-function calculus.

mod classes;
mod classfn;
mod dixon;

pub use classes::{class_data, conjugacy_classes, ClassData, ClassSummary};
pub use classfn::{sum_functions, ClassFunction};

use crate::cyclotomic::{Cyclotomic, NumberField};
use crate::error::{theorem, Error, Result};
use crate::group::{check_cap, Subgroup};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// `Irr(H)`, ordered: trivial character first, then by (degree, values).
#[derive(Debug)]
pub struct CharacterTable {
    classes: Arc<ClassData>,
    irr: Vec<ClassFunction>,
    index: HashMap<Vec<Cyclotomic>, usize>,
}

impl CharacterTable {
    fn compute(sub: &Subgroup) -> Result<CharacterTable> {
        check_cap(sub.order())?;
        let cd = class_data(sub);
        let rows = dixon::irreducibles(&cd)?;
        let mut irr: Vec<ClassFunction> = rows.into_iter().map(|v| ClassFunction::from_values(sub, v)).collect();
        irr.sort_by(|a, b| {
            let ka = (!a.values().iter().all(|v| v.is_one()), a.degree().to_i64(), a.values());
            let kb = (!b.values().iter().all(|v| v.is_one()), b.degree().to_i64(), b.values());
            ka.cmp(&kb)
        });
        let total: i64 = irr.iter().map(|c| c.degree_i64().unwrap_or(0).pow(2)).sum();
        if total != sub.order() as i64 {
            return Err(theorem("sum of squared degrees differs from the group order"));
        }
        for chi in &irr {
            if !chi.norm().is_one() {
                return Err(theorem("computed character does not have norm 1"));
            }
        }
        let index = irr.iter().enumerate().map(|(i, c)| (c.values().to_vec(), i)).collect();
        Ok(CharacterTable { classes: cd, irr, index })
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.classes.subgroup()
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn irr(&self) -> &[ClassFunction] {
        &self.irr
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irr.iter().map(|c| c.degree_i64().expect("integer degree")).collect()
    }

    pub fn index_of(&self, chi: &ClassFunction) -> Option<usize> {
        if chi.subgroup() != self.subgroup() {
            return None;
        }
        self.index.get(chi.values()).copied()
    }

    /// Exact row and column orthogonality.
    pub fn verify_orthogonality(&self) -> Result<()> {
        for (i, a) in self.irr.iter().enumerate() {
            for (j, b) in self.irr.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let want = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != want {
                    return Err(theorem(format!("rows {i} and {j} are not orthonormal")));
                }
            }
        }
        let cd = &self.classes;
        for k in 0..cd.len() {
            for l in k..cd.len() {
                let s = crate::cyclotomic::sum_all(
                    self.irr.iter().map(|c| &c.values()[k] * &c.values()[l].complex_conjugate()),
                );
                let want = if k == l { Cyclotomic::from_integer(cd.centralizer_order(k) as i64) } else { Cyclotomic::zero() };
                if s != want {
                    return Err(theorem(format!("columns {k} and {l} are not orthogonal")));
                }
            }
        }
        Ok(())
    }

    /// Linear characters with `L` in the kernel, i.e. `Lin(H/L)`.
    pub fn linear_mod(&self, l: &Subgroup) -> Vec<ClassFunction> {
        self.irr.iter().filter(|c| c.is_linear() && l.is_subgroup_of(&c.kernel())).cloned().collect()
    }

    /// Irreducible characters of `H/L`, as characters of `H`.
    pub fn irr_mod(&self, l: &Subgroup) -> Vec<ClassFunction> {
        self.irr.iter().filter(|c| l.is_subgroup_of(&c.kernel())).cloned().collect()
    }

    pub fn report(&self) -> TableReport {
        TableReport {
            order: self.subgroup().order(),
            classes: self.classes.summary(),
            degrees: self.degrees(),
            irreducibles: self.irr.iter().map(|c| c.values().to_vec()).collect(),
            fields: self.irr.iter().map(|c| c.field_of_values()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub order: usize,
    pub classes: Vec<ClassSummary>,
    pub degrees: Vec<i64>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
    pub fields: Vec<NumberField>,
}

/// Cached `Irr(H)`.
pub fn character_table(sub: &Subgroup) -> Result<Arc<CharacterTable>> {
    if let Some(t) = sub.table_cache().get() {
        return Ok(t.clone());
    }
    let t = Arc::new(CharacterTable::compute(sub)?);
    // a racing writer may have won; both computed the same table
    let _ = sub.table_cache().set(t);
    Ok(sub.table_cache().get().expect("just set").clone())
}

/// Index of `χ` in `Irr(H)`, or `NotIrreducible`.
pub fn irr_index(chi: &ClassFunction) -> Result<usize> {
    character_table(chi.subgroup())?.index_of(chi).ok_or(Error::NotIrreducible)
}

/// `Irr(G | φ)` for `L ⊴ G` and `φ ∈ Irr(L)`.
pub fn irr_over(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<Vec<ClassFunction>> {
    if phi.subgroup() != l {
        return Err(Error::HandleMismatch);
    }
    l.assert_same_group(g)?;
    if !l.is_normal_in(g) {
        return Err(Error::NotNormal("L is not normal in G".into()));
    }
    irr_index(phi)?;
    let t = character_table(g)?;
    let mut out = Vec::new();
    for chi in t.irr() {
        if !chi.restrict(l)?.inner_product(phi)?.is_zero() {
            out.push(chi.clone());
        }
    }
    Ok(out)
}

/// Inertia group `G_φ = {g : φ^g = φ}`.
pub fn inertia_group(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<Subgroup> {
    if phi.subgroup() != l {
        return Err(Error::HandleMismatch);
    }
    if !l.is_normal_in(g) {
        return Err(Error::NotNormal("L is not normal in G".into()));
    }
    let (_, reps) = g.coset_ids(l);
    let mut keep: Vec<usize> = Vec::new();
    for &r in &reps {
        if phi.conjugate_by(r)? == *phi {
            keep.push(r);
        }
    }
    Ok(l.join_elements(&keep))
}

pub fn is_invariant(g: &Subgroup, phi: &ClassFunction) -> Result<bool> {
    for &x in g.generators() {
        if phi.conjugate_by(x)? != *phi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All extensions of an `H`-invariant `φ ∈ Irr(L)` when `H/L` is cyclic.
pub fn extensions_cyclic(phi: &ClassFunction, h: &Subgroup) -> Result<Vec<ClassFunction>> {
    let l = phi.subgroup().clone();
    if !l.is_normal_in(h) {
        return Err(Error::NotNormal("L is not normal in H".into()));
    }
    if h.cyclic_generator_mod(&l).is_none() {
        return Err(Error::NotCyclic);
    }
    if !is_invariant(h, phi)? {
        return Err(Error::NotInvariant("φ is not H-invariant".into()));
    }
    let exts = irr_over(h, &l, phi)?;
    for chi in &exts {
        if chi.restrict(&l)? != *phi {
            return Err(theorem("constituent over an invariant character of a cyclic section does not extend it"));
        }
    }
    if exts.len() != h.order() / l.order() {
        return Err(theorem("extension count differs from |H/L|"));
    }
    Ok(exts)
}

#[cfg(test)]
mod tests;
