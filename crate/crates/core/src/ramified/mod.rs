//! The form `⟨x,y⟩_φ`, good elements, fully ramified characters, character
//! fives, magic characters and the five-level correspondence.

mod correspond;
mod magic;

pub use correspond::{five_correspondence, parity_correspondence, FiveCorrespondence, PairChecks, Route};
pub use magic::{
    canonical_predicate, canonical_select, coprime_select, find_complement, good_complement_classes,
    magic_search, MagicCharacter,
};

use crate::chartab::{character_table, extensions_cyclic, irr_over, is_invariant, ClassFunction};
use crate::clifford::semi_invariance;
use crate::cyclotomic::{gcd, lcm, Cyclotomic, NumberField};
use crate::error::{hypothesis, theorem, Error, Result};
use crate::group::Subgroup;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Mutex;

/// Whether the element `y` normalizes `l`.
pub(crate) fn elem_normalizes(l: &Subgroup, y: usize) -> bool {
    let g = l.group();
    l.generators().iter().all(|&x| l.contains(g.conj(x, y)))
}

/// Smallest `m ≥ 1` with `x^m ∈ L`.
pub fn order_mod(x: usize, l: &Subgroup) -> u64 {
    let g = l.group();
    let mut p = x;
    let mut m = 1;
    while !l.contains(p) {
        p = g.mul(p, x);
        m += 1;
    }
    m
}

/// Exponent of `K/L`.
pub fn quotient_exponent(k: &Subgroup, l: &Subgroup) -> u64 {
    let (_, reps) = k.coset_ids(l);
    reps.iter().fold(1, |e, &x| lcm(e, order_mod(x, l)))
}

/// All subgroups `U` with `K ≤ U ≤ G`, sorted by (order, element set).
pub fn intermediate_subgroups(g: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
    let (_, reps) = g.coset_ids(k);
    let mut found = vec![k.clone()];
    let mut i = 0;
    while i < found.len() {
        for &r in &reps {
            if found[i].contains(r) {
                continue;
            }
            let u = found[i].join_elements(&[r]);
            if !found.contains(&u) {
                found.push(u);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    found
}

/// Evaluator for `⟨x,y⟩_φ`, caching one extension of `φ` to each `⟨L,x⟩`.
pub struct Form {
    l: Subgroup,
    phi: ClassFunction,
    extensions: Mutex<HashMap<u64, ClassFunction>>,
    invariant_under: Mutex<HashMap<usize, bool>>,
    values: Mutex<HashMap<(usize, usize), Cyclotomic>>,
}

impl Form {
    pub fn new(l: &Subgroup, phi: &ClassFunction) -> Result<Form> {
        if phi.subgroup() != l {
            return Err(Error::HandleMismatch);
        }
        Ok(Form {
            l: l.clone(),
            phi: phi.clone(),
            extensions: Mutex::new(HashMap::new()),
            invariant_under: Mutex::new(HashMap::new()),
            values: Mutex::new(HashMap::new()),
        })
    }

    pub fn phi(&self) -> &ClassFunction {
        &self.phi
    }

    pub fn base(&self) -> &Subgroup {
        &self.l
    }

    fn stabilizes(&self, y: usize) -> Result<bool> {
        if let Some(&b) = self.invariant_under.lock().unwrap().get(&y) {
            return Ok(b);
        }
        let b = elem_normalizes(&self.l, y) && self.phi.conjugate_by(y)? == self.phi;
        self.invariant_under.lock().unwrap().insert(y, b);
        Ok(b)
    }

    fn extension(&self, h0: &Subgroup) -> Result<ClassFunction> {
        if let Some(c) = self.extensions.lock().unwrap().get(&h0.serial()) {
            return Ok(c.clone());
        }
        let chi = extensions_cyclic(&self.phi, h0)?.swap_remove(0);
        self.extensions.lock().unwrap().insert(h0.serial(), chi.clone());
        Ok(chi)
    }

    /// `⟨x,y⟩_φ`, defined when `[x,y] ∈ L` and `x`, `y` stabilize `φ`.
    pub fn pairing(&self, x: usize, y: usize) -> Result<Cyclotomic> {
        let g = self.l.group();
        if !self.stabilizes(x)? || !self.stabilizes(y)? {
            return Err(Error::NotInvariant(format!("φ is not invariant under {x} and {y}")));
        }
        if !self.l.contains(g.comm(x, y)) {
            return Err(Error::FormUndefined(x, y));
        }
        if self.l.contains(x) || self.l.contains(y) {
            return Ok(Cyclotomic::one());
        }
        if let Some(v) = self.values.lock().unwrap().get(&(x, y)) {
            return Ok(v.clone());
        }
        let h0 = self.l.join_elements(&[x]);
        let chi = self.extension(&h0)?;
        // χ(lx) ≠ 0 for some l since Σ_l |χ(lx)|² = |L|
        for &l in self.l.elements() {
            let lx = g.mul(l, x);
            let v = chi.value_at(lx)?;
            if !v.is_zero() {
                let r = chi.value_at(g.conj(lx, y))?.div(v)?;
                self.values.lock().unwrap().insert((x, y), r.clone());
                return Ok(r);
            }
        }
        Err(theorem("extension vanishes on a whole coset of L"))
    }

    /// `h` is `H`-good: `⟨c,h⟩ = 1` for all `c ∈ C_{H/L}(h)`.
    pub fn is_good(&self, h: usize, ctx: &Subgroup) -> Result<bool> {
        let cent = Subgroup::centralizer_mod(ctx, &self.l, &[h]);
        let (_, reps) = cent.coset_ids(&self.l);
        for c in reps {
            if !self.pairing(c, h)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `⟨x,y⟩_φ` for a single pair.
pub fn pairing(x: usize, y: usize, l: &Subgroup, phi: &ClassFunction) -> Result<Cyclotomic> {
    Form::new(l, phi)?.pairing(x, y)
}

/// `h` is `H`-`φ`-good.
pub fn is_good(h: usize, ctx: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<bool> {
    Form::new(l, phi)?.is_good(h, ctx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormLaws {
    pub pairs: usize,
    pub bilinear: bool,
    pub alternating: bool,
    pub coset_invariant: bool,
    pub conjugation_invariant: bool,
    pub galois: bool,
}

impl FormLaws {
    pub fn all(&self) -> bool {
        self.bilinear && self.alternating && self.coset_invariant && self.conjugation_invariant && self.galois
    }
}

/// Audits the laws of `⟨·,·⟩_φ` on every pair of coset representatives of
/// `L` in `G` where the form is defined.
pub fn form_laws(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<FormLaws> {
    if !l.is_normal_in(g) {
        return Err(Error::NotNormal("L is not normal in G".into()));
    }
    if !is_invariant(g, phi)? {
        return Err(Error::NotInvariant("φ is not G-invariant".into()));
    }
    let grp = g.group();
    let form = Form::new(l, phi)?;
    let (_, reps) = g.coset_ids(l);
    let mut conjs: Vec<(i64, Form)> = Vec::new();
    let mut seen: Vec<ClassFunction> = Vec::new();
    for k in crate::cyclotomic::units_mod(g.exponent()) {
        let c = phi.galois_conjugate(k as i64)?;
        if !seen.contains(&c) {
            seen.push(c.clone());
            conjs.push((k as i64, Form::new(l, &c)?));
        }
    }
    let mut out = FormLaws {
        pairs: 0,
        bilinear: true,
        alternating: true,
        coset_invariant: true,
        conjugation_invariant: true,
        galois: true,
    };
    for &x in &reps {
        out.alternating &= form.pairing(x, x)?.is_one();
        for &y in &reps {
            if !l.contains(grp.comm(x, y)) {
                continue;
            }
            out.pairs += 1;
            let v = form.pairing(x, y)?;
            out.alternating &= form.pairing(y, x)? == v.inverse()?;
            for &a in l.elements() {
                out.coset_invariant &= form.pairing(grp.mul(a, x), grp.mul(y, a))? == v;
            }
            for &s in g.generators() {
                out.conjugation_invariant &= form.pairing(grp.conj(x, s), grp.conj(y, s))? == v;
            }
            for (k, f) in &conjs {
                out.galois &= f.pairing(x, y)? == v.galois(*k)?;
            }
            for &x2 in &reps {
                if l.contains(grp.comm(x2, y)) {
                    out.bilinear &= form.pairing(grp.mul(x, x2), y)? == &v * &form.pairing(x2, y)?;
                }
            }
        }
    }
    Ok(out)
}

/// A conjugacy class of `G/L`: `cosets` cosets `Lx`, the least element being `representative`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientClass {
    pub representative: usize,
    pub cosets: usize,
}

/// Conjugacy classes of `G/L`, ordered by representative.
pub fn quotient_classes(g: &Subgroup, l: &Subgroup) -> Vec<QuotientClass> {
    let grp = g.group();
    let (ids, reps) = g.coset_ids(l);
    let mut seen = vec![false; reps.len()];
    let mut out = Vec::new();
    for start in 0..reps.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let r = reps[orbit[i]];
            for &s in g.generators() {
                let j = ids[grp.conj(r, s)] as usize;
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            i += 1;
        }
        let representative = orbit.iter().map(|&j| reps[j]).min().unwrap();
        out.push(QuotientClass { representative, cosets: orbit.len() });
    }
    out.sort_by_key(|c| c.representative);
    out
}

/// The `φ`-good classes of `G/L`.
pub fn good_classes(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<Vec<QuotientClass>> {
    let form = Form::new(l, phi)?;
    let mut out = Vec::new();
    for c in quotient_classes(g, l) {
        if form.is_good(c.representative, g)? {
            out.push(c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GallagherReport {
    pub irr_count: usize,
    pub good_count: usize,
    pub equal: bool,
}

/// `|Irr(G|φ)|` against the number of good classes of `G/L`.
pub fn gallagher_check(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<GallagherReport> {
    if !l.is_normal_in(g) {
        return Err(Error::NotNormal("L is not normal in G".into()));
    }
    if !is_invariant(g, phi)? {
        return Err(Error::NotInvariant("φ is not G-invariant".into()));
    }
    let irr_count = irr_over(g, l, phi)?.len();
    let good_count = good_classes(g, l, phi)?.len();
    Ok(GallagherReport { irr_count, good_count, equal: irr_count == good_count })
}

/// The three tested characterizations of full ramification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RamificationConditions {
    /// `θ_L = nφ` with `n² = |K:L|`.
    pub restriction: bool,
    /// `φ` invariant and `θ` vanishes off `L`.
    pub vanishing: bool,
    /// `φ` invariant and `{L}` the only good class of `K/L`.
    pub only_good: bool,
}

impl RamificationConditions {
    pub fn agree(&self) -> bool {
        self.restriction == self.vanishing && self.vanishing == self.only_good
    }
}

fn exact_sqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == x)
}

/// Evaluates the three conditions independently.
pub fn ramification_conditions(k: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<RamificationConditions> {
    let over = irr_over(k, l, phi)?;
    let kl = (k.order() / l.order()) as u64;
    let restriction = match exact_sqrt(kl) {
        Some(n) => {
            let target = phi.scale(&Cyclotomic::from_integer(n as i64));
            let mut hit = false;
            for th in &over {
                hit |= th.restrict(l)? == target;
            }
            hit
        }
        None => false,
    };
    let invariant = is_invariant(k, phi)?;
    let vanishing = invariant && {
        let cd = over[0].classes();
        (0..cd.len()).all(|c| l.contains(cd.representative(c)) || over[0].values()[c].is_zero())
    };
    let only_good = invariant && good_classes(k, l, phi)?.len() == 1;
    Ok(RamificationConditions { restriction, vanishing, only_good })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullyRamified {
    pub theta: ClassFunction,
    pub n: u64,
}

/// The unique `θ ∈ Irr(K|φ)` and `n` when `φ` is fully ramified in `K`.
pub fn is_fully_ramified(k: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<Option<FullyRamified>> {
    if !l.is_normal_in(k) {
        return Err(Error::NotNormal("L is not normal in K".into()));
    }
    let conds = ramification_conditions(k, l, phi)?;
    if !conds.agree() {
        return Err(theorem(format!("fully ramified characterizations disagree: {conds:?}")));
    }
    if !conds.restriction {
        return Ok(None);
    }
    let over = irr_over(k, l, phi)?;
    if over.len() != 1 {
        return Err(theorem("fully ramified φ with several characters above it"));
    }
    let theta = over.into_iter().next().unwrap();
    let n = (theta.degree_i64().unwrap() / phi.degree_i64().unwrap()) as u64;
    Ok(Some(FullyRamified { theta, n }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiveKind {
    Invariant,
    SemiInvariant,
}

/// `(G, K, L, θ, φ)` with `φ` fully ramified in `K` and (semi-)invariant in `G`.
#[derive(Debug, Clone)]
pub struct CharacterFive {
    pub g: Subgroup,
    pub k: Subgroup,
    pub l: Subgroup,
    pub theta: ClassFunction,
    pub phi: ClassFunction,
    pub n: u64,
    pub kind: FiveKind,
    pub abelian_kl: bool,
    pub odd_kl: bool,
    pub coprime: bool,
    pub strongly_controlled_with: Option<Subgroup>,
}

impl CharacterFive {
    pub fn new(g: &Subgroup, k: &Subgroup, l: &Subgroup, phi: &ClassFunction) -> Result<CharacterFive> {
        g.assert_same_group(k)?;
        g.assert_same_group(l)?;
        if !l.is_subgroup_of(k) || !k.is_normal_in(g) || !l.is_normal_in(g) {
            return Err(Error::NotNormal("a five needs L ≤ K, both normal in G".into()));
        }
        let fr = is_fully_ramified(k, l, phi)?.ok_or_else(|| hypothesis("φ is not fully ramified in K"))?;
        let kind = if is_invariant(g, phi)? {
            FiveKind::Invariant
        } else {
            let q = NumberField::rationals();
            semi_invariance(g, l, phi, &q)?;
            semi_invariance(g, k, &fr.theta, &q)?;
            FiveKind::SemiInvariant
        };
        let kl = (k.order() / l.order()) as u64;
        let gk = (g.order() / k.order()) as u64;
        let grp = k.group();
        let gens = k.generators();
        let abelian_kl = gens.iter().all(|&a| gens.iter().all(|&b| l.contains(grp.comm(a, b))));
        Ok(CharacterFive {
            g: g.clone(),
            k: k.clone(),
            l: l.clone(),
            theta: fr.theta,
            phi: phi.clone(),
            n: fr.n,
            kind,
            abelian_kl,
            odd_kl: kl % 2 == 1,
            coprime: gcd(kl, gk) == 1,
            strongly_controlled_with: None,
        })
    }

    /// Records a strongly controlling `N`, after checking `K ≤ N ≤ G_φ`,
    /// `N ⊴ G`, `C_{K/L}(N) = 1` and `(|N/C_N(K/L)|, |K/L|) = 1`.
    pub fn with_control(mut self, n: &Subgroup) -> Result<CharacterFive> {
        let inertia = crate::chartab::inertia_group(&self.g, &self.l, &self.phi)?;
        if !self.k.is_subgroup_of(n) || !n.is_subgroup_of(&inertia) || !n.is_normal_in(&self.g) {
            return Err(hypothesis("controlling subgroup must satisfy K ≤ N ≤ G_φ with N normal"));
        }
        if Subgroup::centralizer_mod(&self.k, &self.l, n.generators()) != self.l {
            return Err(hypothesis("N has fixed points on K/L"));
        }
        let c = Subgroup::centralizer_mod(n, &self.l, self.k.generators());
        if gcd((n.order() / c.order()) as u64, self.index_kl() as u64) != 1 {
            return Err(hypothesis("|N/C_N(K/L)| is not coprime to |K/L|"));
        }
        self.strongly_controlled_with = Some(n.clone());
        Ok(self)
    }

    pub fn index_kl(&self) -> usize {
        self.k.order() / self.l.order()
    }

    pub fn form(&self) -> Result<Form> {
        Form::new(&self.l, &self.phi)
    }

    /// The same five for `(θ^k, φ^k)`.
    pub fn galois_conjugate(&self, k: i64) -> Result<CharacterFive> {
        let mut out = self.clone();
        out.theta = self.theta.galois_conjugate(k)?;
        out.phi = self.phi.galois_conjugate(k)?;
        Ok(out)
    }

    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "orders": {"G": self.g.order(), "K": self.k.order(), "L": self.l.order()},
            "n": self.n,
            "kind": self.kind,
            "abelian_KL": self.abelian_kl,
            "odd_KL": self.odd_kl,
            "coprime": self.coprime,
            "theta": self.theta,
            "phi": self.phi,
            "field": self.phi.field_of_values(),
        })
    }
}

/// `ζ_e ∈ Q(φ)` for `e = exp(K/L)`.
pub fn root_of_unity_check(five: &CharacterFive) -> bool {
    five.phi.field_of_values().contains_root_of_unity(quotient_exponent(&five.k, &five.l))
}

/// Every `(K, L, φ)` with `L ≤ K` normal subgroups of `G` and `φ ∈ Irr(L)`
/// (by table index), with the three conditions evaluated.
pub fn ramification_scan(g: &Subgroup) -> Result<Vec<(Subgroup, Subgroup, usize, RamificationConditions)>> {
    let normals = crate::group::normal_subgroups(g);
    let mut out = Vec::new();
    for k in &normals {
        for l in &normals {
            if !l.is_subgroup_of(k) {
                continue;
            }
            let t = character_table(l)?;
            for (i, phi) in t.irr().iter().enumerate() {
                out.push((k.clone(), l.clone(), i, ramification_conditions(k, l, phi)?));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
