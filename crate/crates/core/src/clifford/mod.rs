//! Clifford theory over a normal subgroup: inertia groups, Galois orbits,
//! semi-invariance, the induction bijection and the going-down cases.

use crate::chartab::{character_table, irr_index, irr_over, ClassFunction};
use crate::cyclotomic::{lcm, NumberField};
use crate::error::{hypothesis, theorem, Error, Result};
use crate::group::{minimal_normal_over, Subgroup};
use serde::Serialize;

pub use crate::chartab::{inertia_group, is_invariant};

/// Units modulo `m` fixing `f`, i.e. `Gal(Q(ζ_m)/f)`.
fn fixing_units(f: &NumberField, m: u64) -> Vec<u64> {
    crate::cyclotomic::units_mod(m).into_iter().filter(|&k| f.fixed_by(k)).collect()
}

/// The orbit of `φ ∈ Irr(L)` under `Gal(F(φ)/F)`; stands in for the
/// idempotent `Σ_α e_φ^α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisOrbit {
    base: Subgroup,
    field: NumberField,
    members: Vec<ClassFunction>,
}

impl GaloisOrbit {
    pub fn new(phi: &ClassFunction, field: &NumberField) -> Result<GaloisOrbit> {
        irr_index(phi)?;
        let l = phi.subgroup().clone();
        let m = lcm(l.exponent(), field.conductor());
        let t = character_table(&l)?;
        let mut members: Vec<(usize, ClassFunction)> = Vec::new();
        for k in fixing_units(field, m) {
            let c = phi.galois_conjugate(k as i64)?;
            let i = t.index_of(&c).ok_or_else(|| theorem("Galois conjugate of an irreducible is not irreducible"))?;
            if !members.iter().any(|(j, _)| *j == i) {
                members.push((i, c));
            }
        }
        members.sort_by_key(|(i, _)| *i);
        Ok(GaloisOrbit { base: l, field: field.clone(), members: members.into_iter().map(|(_, c)| c).collect() })
    }

    pub fn rational(phi: &ClassFunction) -> Result<GaloisOrbit> {
        GaloisOrbit::new(phi, &NumberField::rationals())
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }
    pub fn field(&self) -> &NumberField {
        &self.field
    }
    pub fn members(&self) -> &[ClassFunction] {
        &self.members
    }

    pub fn contains(&self, c: &ClassFunction) -> bool {
        self.members.contains(c)
    }

    /// `{g ∈ G : orbit^g = orbit}`.
    pub fn stabilizer(&self, g: &Subgroup) -> Result<Subgroup> {
        let l = &self.base;
        if !l.is_normal_in(g) {
            return Err(Error::NotNormal("orbit base is not normal".into()));
        }
        let (_, reps) = g.coset_ids(l);
        let mut keep = Vec::new();
        for &r in &reps {
            if self.contains(&self.members[0].conjugate_by(r)?) {
                keep.push(r);
            }
        }
        Ok(l.join_elements(&keep))
    }

    /// `Irr(G | orbit)`: constituents over any member, in table order.
    pub fn irr_over(&self, g: &Subgroup) -> Result<Vec<ClassFunction>> {
        let t = character_table(g)?;
        let mut idx: Vec<usize> = Vec::new();
        for m in &self.members {
            for c in irr_over(g, &self.base, m)? {
                let i = t.index_of(&c).expect("irreducible");
                if !idx.contains(&i) {
                    idx.push(i);
                }
            }
        }
        idx.sort_unstable();
        Ok(idx.into_iter().map(|i| t.irr()[i].clone()).collect())
    }
}

/// `g ↦ α_g` with `φ^{g α_g} = φ`, on coset representatives of `L` in `G`.
#[derive(Debug, Clone, Serialize)]
pub struct SemiInvarianceCertificate {
    /// Conductor of `F(φ)`; Galois elements are residues modulo it.
    pub modulus: u64,
    /// `(coset representative, α)` with α the least residue of its class in `Γ`.
    pub alpha: Vec<(usize, u64)>,
    #[serde(skip)]
    gamma_stab: Vec<u64>,
    #[serde(skip)]
    coset_of: Vec<u32>,
}

impl SemiInvarianceCertificate {
    /// `α_g` for any `g ∈ G`.
    pub fn alpha_of(&self, g: usize) -> u64 {
        self.alpha[self.coset_of[g] as usize].1
    }

    fn canon(&self, k: u64) -> u64 {
        canonical_gamma(k, self.modulus, &self.gamma_stab)
    }

    pub fn compose(&self, a: u64, b: u64) -> u64 {
        self.canon(a * b % self.modulus.max(1))
    }
}

fn canonical_gamma(k: u64, m: u64, stab: &[u64]) -> u64 {
    if m == 1 {
        return 1;
    }
    stab.iter().map(|&s| s * k % m).min().unwrap()
}

/// Certificate that the `Gal(F(φ)/F)`-orbit of `φ` is `G`-stable, or
/// `NotSemiInvariant` with a witness element.
pub fn semi_invariance(
    g: &Subgroup,
    l: &Subgroup,
    phi: &ClassFunction,
    f: &NumberField,
) -> Result<SemiInvarianceCertificate> {
    if phi.subgroup() != l {
        return Err(Error::HandleMismatch);
    }
    if !l.is_normal_in(g) {
        return Err(Error::NotNormal("L is not normal in G".into()));
    }
    let top = f.compositum(&phi.field_of_values());
    let m = top.conductor();
    let stab = top.stabilizer().to_vec();
    let (coset_of, reps) = g.coset_ids(l);
    // one representative per element of Γ = Gal(F(φ)/F), lifted to a unit modulo lcm(m, exp L)
    let big = lcm(m, l.exponent());
    let mut gamma: Vec<(u64, u64)> = Vec::new();
    for k in fixing_units(f, big) {
        let c = canonical_gamma(k % m.max(1), m, &stab);
        if !gamma.iter().any(|(x, _)| *x == c) {
            gamma.push((c, k));
        }
    }
    gamma.sort_unstable();
    let mut alpha = Vec::with_capacity(reps.len());
    for &r in &reps {
        let conj = phi.conjugate_by(r)?;
        let mut hits = Vec::new();
        for &(c, lift) in &gamma {
            if conj.galois_conjugate(lift as i64)? == *phi {
                hits.push(c);
            }
        }
        match hits.len() {
            0 => return Err(Error::NotSemiInvariant(r)),
            1 => alpha.push((r, hits[0])),
            _ => return Err(theorem("α_g is not unique in Γ")),
        }
    }
    let cert = SemiInvarianceCertificate { modulus: m, alpha, gamma_stab: stab, coset_of };
    // homomorphism and kernel checks
    let grp = g.group();
    let inertia = inertia_group(g, l, phi)?;
    for &(a, ka) in &cert.alpha {
        if (ka == 1) != inertia.contains(a) {
            return Err(theorem("kernel of g ↦ α_g differs from the inertia group"));
        }
        for &(b, kb) in &cert.alpha {
            if cert.alpha_of(grp.mul(a, b)) != cert.compose(ka, kb) {
                return Err(theorem("g ↦ α_g is not a homomorphism"));
            }
        }
    }
    Ok(cert)
}

/// The Clifford correspondence `τ ↦ τ^G` from `Irr(T | orbit)` to `Irr(G | orbit)`.
pub fn clifford_induction_bijection(
    g: &Subgroup,
    t: &Subgroup,
    orbit: &GaloisOrbit,
) -> Result<Vec<(ClassFunction, ClassFunction)>> {
    if orbit.stabilizer(g)? != *t {
        return Err(Error::StabilizerMismatch("T is not the stabilizer of the orbit".into()));
    }
    let below = orbit.irr_over(t)?;
    let above = orbit.irr_over(g)?;
    let tg = character_table(g)?;
    let mut pairs = Vec::with_capacity(below.len());
    let mut hit = vec![false; tg.len()];
    for tau in below {
        let chi = tau.induce(g)?;
        let i = tg.index_of(&chi).ok_or_else(|| theorem("Clifford induction produced a reducible character"))?;
        if hit[i] {
            return Err(theorem("Clifford induction is not injective"));
        }
        hit[i] = true;
        let f = orbit.field();
        if f.compositum(&tau.field_of_values()) != f.compositum(&chi.field_of_values()) {
            return Err(theorem("Clifford induction changed the field of values over F"));
        }
        pairs.push((tau, chi));
    }
    if pairs.len() != above.len() {
        return Err(theorem("Clifford induction is not surjective onto Irr(G | orbit)"));
    }
    for (a, (ta, ca)) in pairs.iter().enumerate() {
        for (tb, cb) in &pairs[a..] {
            if ta.inner_product(tb)? != ca.inner_product(cb)? {
                return Err(theorem("Clifford induction is not an isometry"));
            }
        }
    }
    Ok(pairs)
}

/// The four possibilities for `θ ∈ Irr(K)` over a chief factor `K/L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum GoingDown {
    /// `θ = φ^K` and `F(φ) = F(θ)`.
    InducedSameField,
    /// `θ = φ^K`; `shift` lists `(k, α_k)` realizing `K/L ≅ Gal(F(φ)/F(θ))`.
    InducedGaloisShift { shift: Vec<(usize, u64)> },
    /// `θ_L = φ`.
    Restriction,
    /// `θ_L = eφ` with `e² = |K:L|`.
    FullyRamified { e: u64 },
}

#[derive(Debug, Clone)]
pub struct GoingDownResult {
    pub case: GoingDown,
    pub phi: ClassFunction,
}

/// Whether `K/L` is a chief factor of `G`.
pub fn is_chief_factor(g: &Subgroup, k: &Subgroup, l: &Subgroup) -> bool {
    l.is_subgroup_of(k)
        && l != k
        && k.is_normal_in(g)
        && l.is_normal_in(g)
        && minimal_normal_over(g, l, k) == vec![k.clone()]
}

/// The constituent of `θ_L` with lexicographically least value vector.
pub fn min_constituent(theta: &ClassFunction, l: &Subgroup) -> Result<ClassFunction> {
    let res = theta.restrict(l)?;
    let tl = character_table(l)?;
    let mut best: Option<&ClassFunction> = None;
    for c in tl.irr() {
        if !res.inner_product(c)?.is_zero() && best.is_none_or(|b| c.values() < b.values()) {
            best = Some(c);
        }
    }
    best.cloned().ok_or_else(|| theorem("restriction has no constituent"))
}

pub fn going_down_classify(
    g: &Subgroup,
    k: &Subgroup,
    l: &Subgroup,
    theta: &ClassFunction,
    f: &NumberField,
) -> Result<GoingDownResult> {
    if !is_chief_factor(g, k, l) {
        return Err(Error::NotChief("K/L is not a chief factor of G".into()));
    }
    semi_invariance(g, k, theta, f)?;
    let phi = min_constituent(theta, l)?;
    let e = theta.restrict(l)?.inner_product(&phi)?.to_i64().ok_or_else(|| theorem("non-integral multiplicity"))? as u64;
    let kl = (k.order() / l.order()) as u64;
    let inertia = inertia_group(k, l, &phi)?;
    let t = (k.order() / inertia.order()) as u64;
    let f_theta = f.compositum(&theta.field_of_values());
    let f_phi = f.compositum(&phi.field_of_values());
    let case = if e == 1 && t == 1 {
        GoingDown::Restriction
    } else if e == 1 && t == kl {
        if f_theta == f_phi {
            GoingDown::InducedSameField
        } else {
            // each k ∈ K/L is matched with the Galois element undoing it
            let cert = semi_invariance(k, l, &phi, &f_theta)?;
            GoingDown::InducedGaloisShift { shift: cert.alpha.clone() }
        }
    } else if t == 1 && e * e == kl {
        if f_theta != f_phi {
            return Err(theorem("fully ramified section with F(θ) ≠ F(φ)"));
        }
        GoingDown::FullyRamified { e }
    } else if !is_abelian_section(k, l) {
        return Err(hypothesis("nonabelian chief factor outside the going-down cases"));
    } else {
        return Err(theorem("going-down cases are not exhaustive"));
    };
    Ok(GoingDownResult { case, phi })
}

fn is_abelian_section(k: &Subgroup, l: &Subgroup) -> bool {
    let grp = k.group();
    let gens = k.generators();
    gens.iter().all(|&a| gens.iter().all(|&b| l.contains(grp.comm(a, b))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// Hypothesis check for coprime fixed-point-free action of `A` on `K/L`.
pub fn check_coprime_fpf(a: &Subgroup, k: &Subgroup, l: &Subgroup) -> Result<()> {
    let kl = (k.order() / l.order()) as u64;
    // only the image of A in Aut(K/L) matters, so A ∩ L is factored out
    let al = a.intersection(l)?.order();
    if crate::cyclotomic::gcd((a.order() / al) as u64, kl) != 1 {
        return Err(hypothesis("|A| and |K/L| are not coprime"));
    }
    if Subgroup::centralizer_mod(k, l, a.generators()) != *l {
        return Err(hypothesis("A has nontrivial fixed points on K/L"));
    }
    Ok(())
}

pub fn is_invariant_under(a: &Subgroup, c: &ClassFunction) -> Result<bool> {
    for &x in a.generators() {
        if c.conjugate_by(x)? != *c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique `A`-invariant constituent of `θ_L` (down) or of `φ^K` (up).
pub fn unique_invariant_constituent(
    direction: Direction,
    a: &Subgroup,
    k: &Subgroup,
    l: &Subgroup,
    chi: &ClassFunction,
) -> Result<ClassFunction> {
    check_coprime_fpf(a, k, l)?;
    let (src, dst) = match direction {
        Direction::Down => (k, l),
        Direction::Up => (l, k),
    };
    if chi.subgroup() != src {
        return Err(Error::HandleMismatch);
    }
    irr_index(chi)?;
    if !is_invariant_under(a, chi)? {
        return Err(Error::NotInvariant("character is not A-invariant".into()));
    }
    let cands: Vec<ClassFunction> = match direction {
        Direction::Down => {
            let res = chi.restrict(l)?;
            let t = character_table(l)?;
            let mut v = Vec::new();
            for c in t.irr() {
                if !res.inner_product(c)?.is_zero() {
                    v.push(c.clone());
                }
            }
            v
        }
        Direction::Up => irr_over(k, l, chi)?,
    };
    let mut inv = Vec::new();
    for c in cands {
        if is_invariant_under(a, &c)? {
            inv.push(c);
        }
    }
    if inv.len() != 1 {
        return Err(Error::NonUnique(format!("{} A-invariant constituents in {:?}", inv.len(), dst)));
    }
    Ok(inv.pop().unwrap())
}
