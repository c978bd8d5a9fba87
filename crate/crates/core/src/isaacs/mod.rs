//! The inductive correspondence engine: the strong correspondence over a
//! coprime fixed-point-free section, the Isaacs correspondence
//! `Irr_A(N) → Irr(C_N(A))` for odd `|N|`, and its lift to overgroups.
//!
//! Even `|N|` is refused. With `N = Q8` and `A = C3` acting faithfully the
//! character-level map still exists, but the Schur indices disagree:
//!
//! ```
//! use fgct::corpus::{named_action, catalog};
//! use fgct::group::CatalogSpec;
//! use fgct::isaacs::{isaacs_correspondent, CoprimeSetup};
//! use fgct::{character_table, Cyclotomic, Error};
//!
//! let n = catalog(&CatalogSpec::Quaternion8).unwrap();
//! let a = catalog(&CatalogSpec::Cyclic(3)).unwrap();
//! let act = named_action("auto-order:3", &n, &a).unwrap();
//! let setup = CoprimeSetup::from_action(&act).unwrap();
//!
//! // the degree-2 character of Q8 is A-invariant and quaternionic
//! let chi = setup.invariant_characters().unwrap().into_iter().find(|c| c.degree_i64() == Some(2)).unwrap();
//! assert_eq!(chi.frobenius_schur(), Cyclotomic::from_integer(-1));
//!
//! // C_N(A) = Z(Q8); its faithful character is real with a real representation
//! assert_eq!(setup.c.order(), 2);
//! let sign = character_table(&setup.c).unwrap().irr().iter().find(|c| !c.kernel().is_whole()).unwrap().clone();
//! assert_eq!(sign.frobenius_schur(), Cyclotomic::from_integer(1));
//!
//! // Schur index 2 against 1: no Schur-index-preserving correspondent exists
//! assert_eq!(isaacs_correspondent(&setup, &chi).unwrap_err(), Error::EvenOrder);
//! ```

use crate::chartab::{character_table, inertia_group, irr_index, ClassFunction};
use crate::clifford::{
    clifford_induction_bijection, going_down_classify, is_invariant_under, unique_invariant_constituent, Direction,
    GaloisOrbit, GoingDown,
};
use crate::cyclotomic::{gcd, units_mod, NumberField};
use crate::error::{hypothesis, theorem, Error, ErrorClass, Result};
use crate::group::{minimal_normal_over, semidirect_product, GroupAction, Subgroup};
use crate::ramified::{
    canonical_select, find_complement, five_correspondence, magic_search, parity_correspondence, CharacterFive,
};
use serde::Serialize;

/// `A` acting coprimely on `N` inside `G`, with `AN ⊴ G`.
#[derive(Debug, Clone)]
pub struct CoprimeSetup {
    pub g: Subgroup,
    pub n: Subgroup,
    pub a: Subgroup,
    pub an: Subgroup,
    /// `C_N(A)`.
    pub c: Subgroup,
    /// `N_G(A)`.
    pub u: Subgroup,
    pub action: Option<GroupAction>,
}

impl CoprimeSetup {
    /// The semidirect product `N ⋊ A` of an action.
    pub fn from_action(act: &GroupAction) -> Result<CoprimeSetup> {
        let sd = semidirect_product(act)?;
        let g = Subgroup::whole(&sd.group);
        let mut s = CoprimeSetup::within(&g, &sd.n, &sd.a)?;
        s.action = Some(act.clone());
        Ok(s)
    }

    /// `N` and `A` as subgroups of an overgroup `G` with `AN ⊴ G`.
    pub fn within(g: &Subgroup, n: &Subgroup, a: &Subgroup) -> Result<CoprimeSetup> {
        g.assert_same_group(n)?;
        g.assert_same_group(a)?;
        if gcd(n.order() as u64, a.order() as u64) != 1 {
            return Err(Error::NotCoprime(a.order() as i64, n.order() as u64));
        }
        if !n.is_subgroup_of(g) || !a.is_subgroup_of(g) || !a.normalizes(n) {
            return Err(Error::InvalidAction("A must normalize N inside G".into()));
        }
        let an = n.join(a)?;
        if !an.is_normal_in(g) {
            return Err(Error::NotNormal("AN is not normal in G".into()));
        }
        let c = n.centralizer(a.generators());
        let u = g.normalizer(a);
        Ok(CoprimeSetup { g: g.clone(), n: n.clone(), a: a.clone(), an, c, u, action: None })
    }

    fn require_odd(&self) -> Result<()> {
        if self.n.order() % 2 == 0 {
            return Err(Error::EvenOrder);
        }
        Ok(())
    }

    /// `Irr_A(N)` in table order.
    pub fn invariant_characters(&self) -> Result<Vec<ClassFunction>> {
        let mut out = Vec::new();
        for c in character_table(&self.n)?.irr() {
            if is_invariant_under(&self.a, c)? {
                out.push(c.clone());
            }
        }
        Ok(out)
    }

    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "orders": {"G": self.g.order(), "N": self.n.order(), "A": self.a.order(), "C": self.c.order(), "U": self.u.order()},
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepTag {
    /// Clifford induction from the stabilizer of a Galois orbit.
    InertiaReduction,
    /// `θ_L = φ`: restriction.
    ChiefRestriction,
    /// `θ = φ^K`: Clifford induction from `T ∩ H`.
    ChiefInduced,
    /// `θ_L = nφ`: the five correspondence through a magic character.
    FullyRamifiedStep,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharSummary {
    pub degree: i64,
    pub field: NumberField,
    pub values: ClassFunction,
}

impl CharSummary {
    fn of(c: &ClassFunction) -> CharSummary {
        CharSummary { degree: c.degree_i64().unwrap_or(0), field: c.field_of_values(), values: c.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepOrders {
    #[serde(rename = "G")]
    pub g: usize,
    #[serde(rename = "T")]
    pub t: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "H")]
    pub h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceStep {
    pub tag: StepTag,
    pub depth: usize,
    pub orders: StepOrders,
    pub input: CharSummary,
    pub output: Option<CharSummary>,
    /// The factor this step contributes to `χ(1)/χ*(1)`.
    pub local_ratio: u64,
    /// Values of the canonical magic character on `H ∩ G_φ`.
    pub psi: Option<ClassFunction>,
    /// Whether the parity rule was run and agreed.
    pub parity: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceTrace {
    pub initial: CharSummary,
    #[serde(rename = "final")]
    pub final_: CharSummary,
    pub steps: Vec<CorrespondenceStep>,
}

impl CorrespondenceTrace {
    /// `χ(1)/χ*(1)` is the product of the local ratios.
    pub fn ratio_consistent(&self) -> bool {
        let prod: i64 = self.steps.iter().map(|s| s.local_ratio as i64).product();
        self.final_.degree > 0 && self.initial.degree % self.final_.degree == 0 && self.initial.degree / self.final_.degree == prod
    }

    /// Every step has its output and the last character is the final one.
    pub fn is_complete(&self) -> bool {
        self.steps.iter().all(|s| s.output.is_some())
    }
}

/// Internal choices of the engine; the outcome must not depend on them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Strategy {
    /// Take the last `A`-invariant constituent of `χ_K` instead of the first.
    pub reverse_theta: bool,
    /// Refine through the last minimal normal subgroup instead of the first.
    pub reverse_chief: bool,
}

impl Strategy {
    pub fn all() -> Vec<Strategy> {
        let mut out = Vec::new();
        for reverse_theta in [false, true] {
            for reverse_chief in [false, true] {
                out.push(Strategy { reverse_theta, reverse_chief });
            }
        }
        out
    }
}

struct Engine {
    strategy: Strategy,
    steps: Vec<CorrespondenceStep>,
    depth: usize,
}

/// One level of the recursion: `χ ∈ Irr(T | Galois orbit of θ)` with
/// `K ≤ T ⊴ G`.
#[derive(Clone)]
struct Level<'a> {
    g: &'a Subgroup,
    t: &'a Subgroup,
    k: &'a Subgroup,
    l: &'a Subgroup,
    m: &'a Subgroup,
    theta: &'a ClassFunction,
    phi: &'a ClassFunction,
}

fn as_theorem(e: Error, what: &str) -> Error {
    match e.class() {
        ErrorClass::Internal => e,
        _ => theorem(format!("{what}: {e}")),
    }
}

fn partner_up(pairs: &[(ClassFunction, ClassFunction)], chi: &ClassFunction) -> Result<ClassFunction> {
    pairs
        .iter()
        .find(|(_, c)| c == chi)
        .map(|(t, _)| t.clone())
        .ok_or_else(|| theorem("character is not in the image of Clifford induction"))
}

fn partner_down(pairs: &[(ClassFunction, ClassFunction)], tau: &ClassFunction) -> Result<ClassFunction> {
    pairs
        .iter()
        .find(|(t, _)| t == tau)
        .map(|(_, c)| c.clone())
        .ok_or_else(|| theorem("character is not in the domain of Clifford induction"))
}

impl Engine {
    fn new(strategy: Strategy) -> Engine {
        Engine { strategy, steps: Vec::new(), depth: 0 }
    }

    fn open(&mut self, tag: StepTag, lv: &Level, h: &Subgroup, chi: &ClassFunction, ratio: u64) -> usize {
        self.steps.push(CorrespondenceStep {
            tag,
            depth: self.depth,
            orders: StepOrders { g: lv.g.order(), t: lv.t.order(), k: lv.k.order(), l: lv.l.order(), h: h.order() },
            input: CharSummary::of(chi),
            output: None,
            local_ratio: ratio,
            psi: None,
            parity: None,
        });
        self.steps.len() - 1
    }

    fn close(&mut self, i: usize, xi: &ClassFunction) {
        self.steps[i].output = Some(CharSummary::of(xi));
    }

    /// `χ ↦ ξ ∈ Irr(T ∩ N_G(M) | Galois orbit of φ)`.
    fn run(&mut self, lv: &Level, chi: &ClassFunction) -> Result<ClassFunction> {
        let (g, t, k, l, m) = (lv.g, lv.t, lv.k, lv.l, lv.m);
        if (k.order() / l.order()) % 2 == 0 {
            return Err(Error::HypothesisViolated("|K/L| is even; the correspondence fails for even sections".into()));
        }
        let h = g.normalizer(m);
        let th = t.intersection(&h)?;
        if k == l {
            if h != *g {
                return Err(theorem("K = L but N_G(M) < G"));
            }
            return Ok(chi.clone());
        }

        let orbit = GaloisOrbit::rational(lv.theta)?;
        let ust = orbit.stabilizer(g)?;
        if ust != *g {
            let i = self.open(StepTag::InertiaReduction, lv, &h, chi, 1);
            let t2 = t.intersection(&ust)?;
            let pairs = clifford_induction_bijection(t, &t2, &orbit).map_err(|e| as_theorem(e, "inertia reduction"))?;
            let tau = partner_up(&pairs, chi)?;
            self.depth += 1;
            let inner = Level { g: &ust, t: &t2, ..lv.clone() };
            let xi2 = self.run(&inner, &tau)?;
            self.depth -= 1;
            let th2 = th.intersection(&ust)?;
            let below = GaloisOrbit::rational(lv.phi)?;
            let pairs = clifford_induction_bijection(&th, &th2, &below).map_err(|e| as_theorem(e, "inertia reduction below"))?;
            let xi = partner_down(&pairs, &xi2)?;
            self.close(i, &xi);
            return Ok(xi);
        }

        let mins = minimal_normal_over(g, l, k);
        if mins.len() != 1 || mins[0] != *k {
            let np = if self.strategy.reverse_chief { mins.last() } else { mins.first() };
            let np = np.ok_or_else(|| theorem("no minimal normal subgroup between L and K"))?.clone();
            let eta = unique_invariant_constituent(Direction::Up, m, &np, l, lv.phi)
                .map_err(|e| as_theorem(e, "chief refinement"))?;
            let mn = m.join(&np)?;
            let upper = Level { l: &np, m: &mn, phi: &eta, ..lv.clone() };
            let xi1 = self.run(&upper, chi)?;
            let h1 = g.normalizer(&mn);
            let t1 = t.intersection(&h1)?;
            let lower = Level { g: &h1, t: &t1, k: &np, theta: &eta, ..lv.clone() };
            return self.run(&lower, &xi1);
        }

        let gd = going_down_classify(g, k, l, lv.theta, &NumberField::rationals())
            .map_err(|e| as_theorem(e, "going down"))?;
        match gd.case {
            GoingDown::Restriction => {
                let i = self.open(StepTag::ChiefRestriction, lv, &h, chi, 1);
                let xi = chi.restrict(&th)?;
                irr_index(&xi).map_err(|_| theorem("restriction to T ∩ H is reducible"))?;
                self.close(i, &xi);
                Ok(xi)
            }
            GoingDown::InducedSameField => {
                let kl = (k.order() / l.order()) as u64;
                let i = self.open(StepTag::ChiefInduced, lv, &h, chi, kl);
                let below = GaloisOrbit::rational(lv.phi)?;
                let pairs = clifford_induction_bijection(t, &th, &below).map_err(|e| as_theorem(e, "induced case"))?;
                let xi = partner_up(&pairs, chi)?;
                self.close(i, &xi);
                Ok(xi)
            }
            GoingDown::InducedGaloisShift { .. } => {
                Err(theorem("φ is semi-invariant in K although F(θ) cannot be smaller than F(φ)"))
            }
            GoingDown::FullyRamified { e } => self.fully_ramified(lv, &h, &th, chi, e),
        }
    }

    fn fully_ramified(
        &mut self,
        lv: &Level,
        h: &Subgroup,
        th: &Subgroup,
        chi: &ClassFunction,
        e: u64,
    ) -> Result<ClassFunction> {
        let (g, t, k, l, m) = (lv.g, lv.t, lv.k, lv.l, lv.m);
        let i = self.open(StepTag::FullyRamifiedStep, lv, h, chi, e);
        // the member of the orbit under χ, with its M-invariant partner
        let res = chi.restrict(k)?;
        let mut theta = None;
        for c in GaloisOrbit::rational(lv.theta)?.members() {
            if !res.inner_product(c)?.is_zero() {
                theta = Some(c.clone());
                break;
            }
        }
        let theta = theta.ok_or_else(|| theorem("χ lies over no member of the orbit of θ"))?;
        let phi = unique_invariant_constituent(Direction::Down, m, k, l, &theta)
            .map_err(|e| as_theorem(e, "fully ramified step"))?;
        let gphi = inertia_group(g, l, &phi)?;
        let hphi = h.intersection(&gphi)?;
        let tphi = t.intersection(&gphi)?;
        let mk = m.join(k)?;
        let five = CharacterFive::new(&gphi, k, l, &phi)
            .and_then(|f| f.with_control(&mk))
            .map_err(|e| as_theorem(e, "five at the inertia group"))?;
        if five.theta != theta {
            return Err(theorem("the five's θ differs from the constituent of χ"));
        }
        let built = find_complement(&five, &mk).map_err(|e| as_theorem(e, "complement"))?;
        if !built.is_conjugate_in(&hphi, &gphi) {
            return Err(theorem("N_G(M) ∩ G_φ is not conjugate to the constructed complement"));
        }
        let sols = magic_search(&five, &hphi).map_err(|e| as_theorem(e, "magic search"))?;
        let psi = canonical_select(&sols, &five, &hphi).map_err(|e| as_theorem(e, "canonical magic character"))?.psi;
        let corr = five_correspondence(&five, &hphi, &psi, &tphi)?;
        let parity = if (tphi.order() / l.order()) % 2 == 1 {
            let par = parity_correspondence(&five, &hphi, &tphi)?;
            if !par.same_pairs(&corr) {
                return Err(theorem("parity rule and magic character disagree"));
            }
            Some(true)
        } else {
            None
        };
        let single = GaloisOrbit::new(&theta, &theta.field_of_values())?;
        let pairs = clifford_induction_bijection(t, &tphi, &single).map_err(|e| as_theorem(e, "Clifford to T_φ"))?;
        let chi1 = partner_up(&pairs, chi)?;
        let xi1 = corr.image(&chi1).ok_or_else(|| theorem("five correspondence misses χ"))?.clone();
        let thphi = th.intersection(&gphi)?;
        let below = GaloisOrbit::new(&phi, &phi.field_of_values())?;
        let pairs = clifford_induction_bijection(th, &thphi, &below).map_err(|e| as_theorem(e, "Clifford from H_φ"))?;
        let xi = partner_down(&pairs, &xi1)?;
        self.steps[i].psi = Some(psi);
        self.steps[i].parity = parity;
        self.close(i, &xi);
        Ok(xi)
    }

    fn attach(&self, e: Error) -> Error {
        match e.class() {
            ErrorClass::Internal => {
                let trace = serde_json::to_string(&self.steps).unwrap_or_default();
                theorem(format!("{e}; trace so far: {trace}"))
            }
            _ => e,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StrongCorrespondence {
    #[serde(skip)]
    pub h: Subgroup,
    pub n: i64,
    pub pairs: Vec<(ClassFunction, ClassFunction)>,
    pub traces: Vec<CorrespondenceTrace>,
}

fn check_strong(g: &Subgroup, k: &Subgroup, l: &Subgroup, m: &Subgroup, theta: &ClassFunction, phi: &ClassFunction) -> Result<()> {
    if theta.subgroup() != k || phi.subgroup() != l {
        return Err(Error::HandleMismatch);
    }
    if !l.is_subgroup_of(k) || !l.is_subgroup_of(m) || !k.is_normal_in(g) || !l.is_normal_in(g) {
        return Err(Error::NotNormal("need L ≤ K, L ≤ M with K, L normal in G".into()));
    }
    let kl = (k.order() / l.order()) as u64;
    if kl % 2 == 0 {
        return Err(Error::HypothesisViolated("|K/L| is even; the correspondence fails for even sections".into()));
    }
    if !m.join(k)?.is_normal_in(g) {
        return Err(Error::NotNormal("MK is not normal in G".into()));
    }
    crate::clifford::check_coprime_fpf(m, k, l)?;
    if !is_invariant_under(m, theta)? || !is_invariant_under(m, phi)? {
        return Err(Error::NotInvariant("θ and φ must be M-invariant".into()));
    }
    if theta.restrict(l)?.inner_product(phi)?.is_zero() {
        return Err(hypothesis("φ is not a constituent of θ_L"));
    }
    Ok(())
}

/// `Irr(G | orbit of θ) ↔ Irr(H | orbit of φ)` for `H = N_G(M)`, orbits
/// taken under `Gal(Q̄/Q)`.
pub fn strong_correspondence(
    g: &Subgroup,
    k: &Subgroup,
    l: &Subgroup,
    m: &Subgroup,
    theta: &ClassFunction,
    phi: &ClassFunction,
) -> Result<StrongCorrespondence> {
    check_strong(g, k, l, m, theta, phi)?;
    let h = g.normalizer(m);
    let lv = Level { g, t: g, k, l, m, theta, phi };
    let domain = GaloisOrbit::rational(theta)?.irr_over(g)?;
    let codomain = GaloisOrbit::rational(phi)?.irr_over(&h)?;
    let mut pairs = Vec::with_capacity(domain.len());
    let mut traces = Vec::with_capacity(domain.len());
    for chi in domain {
        let mut eng = Engine::new(Strategy::default());
        let xi = eng.run(&lv, &chi).map_err(|e| eng.attach(e))?;
        traces.push(CorrespondenceTrace { initial: CharSummary::of(&chi), final_: CharSummary::of(&xi), steps: eng.steps });
        pairs.push((chi, xi));
    }
    let n = theta.degree_i64().unwrap_or(0) / phi.degree_i64().unwrap_or(1);
    check_bijection(&pairs, &codomain, Some(n))?;
    Ok(StrongCorrespondence { h, n, pairs, traces })
}

/// Injective onto `codomain`, constant degree ratio, fields preserved.
fn check_bijection(pairs: &[(ClassFunction, ClassFunction)], codomain: &[ClassFunction], ratio: Option<i64>) -> Result<()> {
    if pairs.len() != codomain.len() || !codomain.iter().all(|c| pairs.iter().any(|(_, x)| x == c)) {
        return Err(theorem(format!("not a bijection onto a set of {} characters", codomain.len())));
    }
    let ratio = ratio.or_else(|| pairs.first().map(|(c, x)| c.degree_i64().unwrap_or(0) / x.degree_i64().unwrap_or(1)));
    for (c, x) in pairs {
        if c.field_of_values() != x.field_of_values() {
            return Err(theorem("the correspondence changes the field of values"));
        }
        if Some(c.degree_i64().unwrap_or(0)) != ratio.map(|r| r * x.degree_i64().unwrap_or(0)) {
            return Err(theorem("degree ratio is not constant"));
        }
    }
    Ok(())
}

/// One pass of the recursion on `(N, A)` inside `Ĝ`.
#[derive(Debug, Clone)]
struct Stage {
    k: Subgroup,
    l: Subgroup,
    m: Subgroup,
    theta: ClassFunction,
    phi: ClassFunction,
}

struct IsaacsRun {
    chi_star: ClassFunction,
    trace: CorrespondenceTrace,
    stages: Vec<Stage>,
}

fn isaacs_run(setup: &CoprimeSetup, chi: &ClassFunction, strategy: Strategy) -> Result<IsaacsRun> {
    setup.require_odd()?;
    if chi.subgroup() != &setup.n {
        return Err(Error::HandleMismatch);
    }
    irr_index(chi)?;
    if !is_invariant_under(&setup.a, chi)? {
        return Err(Error::NotInvariant("χ is not A-invariant".into()));
    }
    let a = &setup.a;
    let mut ghat = setup.an.clone();
    let mut n = setup.n.clone();
    let mut cur = chi.clone();
    let mut eng = Engine::new(strategy);
    let mut stages = Vec::new();
    loop {
        let k = Subgroup::commutator(&n, a)?;
        if k.is_trivial() {
            break;
        }
        let l = k.derived();
        let res = cur.restrict(&k)?;
        let mut cands = Vec::new();
        for c in character_table(&k)?.irr() {
            if !res.inner_product(c)?.is_zero() && is_invariant_under(a, c)? {
                cands.push(c.clone());
            }
        }
        let theta = if strategy.reverse_theta { cands.pop() } else { cands.into_iter().next() }
            .ok_or_else(|| theorem("χ_K has no A-invariant constituent"))?;
        let phi = unique_invariant_constituent(Direction::Down, a, &k, &l, &theta)?;
        let m = a.join(&l)?;
        let h = ghat.normalizer(&m);
        let lv = Level { g: &ghat, t: &n, k: &k, l: &l, m: &m, theta: &theta, phi: &phi };
        let xi = eng.run(&lv, &cur).map_err(|e| eng.attach(e))?;
        let next = n.intersection(&h)?;
        if next.order() >= n.order() || !is_invariant_under(a, &xi)? {
            return Err(eng.attach(theorem("the recursion did not descend to an A-invariant character of LC")));
        }
        stages.push(Stage { k, l, m, theta, phi });
        ghat = h;
        n = next;
        cur = xi;
    }
    if n != setup.c {
        return Err(theorem("the recursion ended away from C_N(A)"));
    }
    let trace = CorrespondenceTrace { initial: CharSummary::of(chi), final_: CharSummary::of(&cur), steps: eng.steps };
    Ok(IsaacsRun { chi_star: cur, trace, stages })
}

/// The Isaacs correspondent `χ* ∈ Irr(C_N(A))` of `χ ∈ Irr_A(N)`.
pub fn isaacs_correspondent(setup: &CoprimeSetup, chi: &ClassFunction) -> Result<(ClassFunction, CorrespondenceTrace)> {
    let run = isaacs_run(setup, chi, Strategy::default())?;
    Ok((run.chi_star, run.trace))
}

/// Whether every strategy gives the same `χ*`; a failed run counts as a difference.
pub fn verify_trace_independence(setup: &CoprimeSetup, chi: &ClassFunction, variants: &[Strategy]) -> bool {
    let mut first: Option<ClassFunction> = None;
    for &s in variants {
        match isaacs_run(setup, chi, s) {
            Ok(run) => match &first {
                None => first = Some(run.chi_star),
                Some(f) if *f != run.chi_star => return false,
                _ => {}
            },
            Err(_) => return false,
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsaacsChecks {
    pub bijective: bool,
    pub fields_preserved: bool,
    pub galois_equivariant: bool,
    pub u_equivariant: bool,
    pub degrees_divide: bool,
    pub traces_consistent: bool,
    pub trace_independent: bool,
}

impl IsaacsChecks {
    pub fn all(&self) -> bool {
        self.bijective
            && self.fields_preserved
            && self.galois_equivariant
            && self.u_equivariant
            && self.degrees_divide
            && self.traces_consistent
            && self.trace_independent
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsaacsBijection {
    pub pairs: Vec<(ClassFunction, ClassFunction)>,
    pub traces: Vec<CorrespondenceTrace>,
    pub checks: IsaacsChecks,
    /// Recorded, not machine-checked.
    pub schur_indices: &'static str,
}

/// The whole map `Irr_A(N) → Irr(C)` with its audits.
pub fn isaacs_bijection(setup: &CoprimeSetup) -> Result<IsaacsBijection> {
    setup.require_odd()?;
    let domain = setup.invariant_characters()?;
    let mut pairs = Vec::with_capacity(domain.len());
    let mut traces = Vec::with_capacity(domain.len());
    let mut trace_independent = true;
    for chi in &domain {
        let (star, trace) = isaacs_correspondent(setup, chi)?;
        trace_independent &= verify_trace_independence(setup, chi, &Strategy::all());
        pairs.push((chi.clone(), star));
        traces.push(trace);
    }
    let irr_c = character_table(&setup.c)?.irr().to_vec();
    let bijective = pairs.len() == irr_c.len()
        && irr_c.iter().all(|c| pairs.iter().filter(|(_, x)| x == c).count() == 1);
    let fields_preserved = pairs.iter().all(|(c, x)| c.field_of_values() == x.field_of_values());
    let degrees_divide = pairs
        .iter()
        .all(|(c, x)| matches!((c.degree_i64(), x.degree_i64()), (Some(a), Some(b)) if b > 0 && a % b == 0));
    let traces_consistent = traces.iter().all(|t| t.is_complete() && t.ratio_consistent());
    let image = |c: &ClassFunction| pairs.iter().find(|(d, _)| d == c).map(|(_, x)| x.clone());
    let mut galois_equivariant = true;
    for k in units_mod(setup.n.exponent()) {
        for (c, x) in &pairs {
            let moved = c.galois_conjugate(k as i64)?;
            galois_equivariant &= image(&moved) == Some(x.galois_conjugate(k as i64)?);
        }
    }
    let mut u_equivariant = true;
    for &y in setup.u.generators() {
        for (c, x) in &pairs {
            u_equivariant &= image(&c.conjugate_by(y)?) == Some(x.conjugate_by(y)?);
        }
    }
    let checks = IsaacsChecks {
        bijective,
        fields_preserved,
        galois_equivariant,
        u_equivariant,
        degrees_divide,
        traces_consistent,
        trace_independent,
    };
    Ok(IsaacsBijection { pairs, traces, checks, schur_indices: "asserted by theory, not machine-checked" })
}

#[derive(Debug, Clone, Serialize)]
pub struct AboveCorrespondence {
    pub chi_star: ClassFunction,
    /// `Irr(G | orbit of χ) ↔ Irr(U | orbit of χ*)`, orbits under
    /// conjugation and `Gal(Q̄/Q)`.
    pub pairs: Vec<(ClassFunction, ClassFunction)>,
    /// The part of `pairs` lying over `χ` itself.
    pub over_chi: usize,
    pub ratio: i64,
}

/// The correspondence above `χ` and `χ*`, assembled stage by stage in the
/// overgroup.
pub fn above_correspondence(setup: &CoprimeSetup, chi: &ClassFunction) -> Result<AboveCorrespondence> {
    let run = isaacs_run(setup, chi, Strategy::default())?;
    let mut levels = vec![setup.g.clone()];
    for st in &run.stages {
        let next = levels.last().unwrap().normalizer(&st.m);
        levels.push(next);
    }
    if *levels.last().unwrap() != setup.u {
        return Err(theorem("iterated normalizers do not end at N_G(A)"));
    }
    let domain = GaloisOrbit::rational(chi)?.irr_over(&setup.g)?;
    let codomain = GaloisOrbit::rational(&run.chi_star)?.irr_over(&setup.u)?;
    let mut pairs = Vec::with_capacity(domain.len());
    for rho in domain {
        let mut cur = rho.clone();
        let mut eng = Engine::new(Strategy::default());
        for (st, g) in run.stages.iter().zip(&levels) {
            let lv = Level { g, t: g, k: &st.k, l: &st.l, m: &st.m, theta: &st.theta, phi: &st.phi };
            cur = eng.run(&lv, &cur).map_err(|e| eng.attach(e))?;
        }
        pairs.push((rho, cur));
    }
    check_bijection(&pairs, &codomain, None)?;
    let res_n = |c: &ClassFunction| -> Result<bool> { Ok(!c.restrict(&setup.n)?.inner_product(chi)?.is_zero()) };
    let res_c = |c: &ClassFunction| -> Result<bool> { Ok(!c.restrict(&setup.c)?.inner_product(&run.chi_star)?.is_zero()) };
    let mut over_chi = 0;
    for (r, x) in &pairs {
        let (a, b) = (res_n(r)?, res_c(x)?);
        if a != b {
            return Err(theorem("a character over χ is matched with one not over χ*"));
        }
        over_chi += a as usize;
    }
    let ratio = pairs.first().map(|(c, x)| c.degree_i64().unwrap_or(0) / x.degree_i64().unwrap_or(1)).unwrap_or(1);
    Ok(AboveCorrespondence { chi_star: run.chi_star, pairs, over_chi, ratio })
}

#[cfg(test)]
mod tests;
