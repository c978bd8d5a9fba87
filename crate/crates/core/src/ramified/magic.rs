use super::correspond::solve_pairs;
use super::{intermediate_subgroups, order_mod, CharacterFive, FiveKind};
use crate::chartab::{character_table, sum_functions, ClassFunction};
use crate::cyclotomic::{prime_factors, Cyclotomic};
use crate::error::{hypothesis, theorem, Error, Result};
use crate::group::{complement_search, Subgroup};
use num_traits::ToPrimitive;
use serde::Serialize;

/// A character-level magic character: a genuine character of `H/L`
/// meeting every necessary condition derived from a magic representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MagicCharacter {
    #[serde(skip)]
    pub host: Subgroup,
    pub psi: ClassFunction,
    pub genuine: bool,
    pub det_order: u64,
    pub canonical: bool,
    pub rational: bool,
}

/// `HK = G` and `H ∩ K = L`.
pub(crate) fn is_complement(five: &CharacterFive, h: &Subgroup) -> bool {
    h.is_subgroup_of(&five.g)
        && five.l.is_subgroup_of(h)
        && h.elements().iter().filter(|&&x| five.k.contains(x)).count() == five.l.order()
        && h.order() * five.k.order() == five.g.order() * five.l.order()
}

fn controlled_pieces(five: &CharacterFive, n: &Subgroup) -> Result<Subgroup> {
    if !five.abelian_kl {
        return Err(hypothesis("complement construction needs K/L abelian"));
    }
    let checked = five.clone().with_control(n)?;
    drop(checked);
    Ok(Subgroup::centralizer_mod(n, &five.l, five.k.generators()))
}

/// Every element of `H ∩ C` is `K`-good.
fn good_on(five: &CharacterFive, h: &Subgroup, c: &Subgroup) -> Result<bool> {
    let form = five.form()?;
    let hc = h.intersection(c)?;
    let (_, reps) = hc.coset_ids(&five.l);
    for x in reps {
        if !form.is_good(x, &five.k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The complement `H = N_G(M)` where `B` is the radical of the form on
/// `C = C_N(K/L)` against `K` and `M/B` complements `C/B` in `N/B`.
pub fn find_complement(five: &CharacterFive, n: &Subgroup) -> Result<Subgroup> {
    let c = controlled_pieces(five, n)?;
    if five.k == five.l {
        return Ok(five.g.clone());
    }
    let form = five.form()?;
    let (_, reps) = c.coset_ids(&five.l);
    let mut radical = Vec::new();
    for x in reps {
        let mut ok = true;
        for &k in five.k.generators() {
            if !form.pairing(x, k)?.is_one() {
                ok = false;
                break;
            }
        }
        if ok {
            radical.push(x);
        }
    }
    let b = five.l.join_elements(&radical);
    if b.intersection(&five.k)? != five.l || b.order() * five.k.order() != c.order() * five.l.order() {
        return Err(theorem("the radical B does not satisfy B ∩ K = L and BK = C"));
    }
    if !b.is_normal_in(&five.g) {
        return Err(theorem("the radical B is not normal in G"));
    }
    let m = complement_search(n, &c, &b, true)?
        .into_iter()
        .next()
        .ok_or_else(|| theorem("C/B has no complement in N/B"))?;
    let h = five.g.normalizer(&m);
    if !is_complement(five, &h) {
        return Err(theorem("N_G(M) is not a complement of K/L"));
    }
    if !good_on(five, &h, &c)? {
        return Err(theorem("H ∩ C_N(K/L) contains an element that is not good"));
    }
    Ok(h)
}

/// All complements `H/L` of `K/L` whose intersection with `C_N(K/L)` is
/// good, one per conjugacy class, by exhaustive search.
pub fn good_complement_classes(five: &CharacterFive, n: &Subgroup) -> Result<Vec<Subgroup>> {
    let c = controlled_pieces(five, n)?;
    let mut reps: Vec<Subgroup> = Vec::new();
    for h in complement_search(&five.g, &five.k, &five.l, false)? {
        if good_on(five, &h, &c)? && !reps.iter().any(|r| r.is_conjugate_in(&h, &five.g)) {
            reps.push(h);
        }
    }
    Ok(reps)
}

/// Nonnegative `m` with `Σ m_i d_i = n` and `Σ m_i² = s`, lexicographically.
fn multiplicity_vectors(degrees: &[i64], n: i64, s: i64) -> Vec<Vec<i64>> {
    fn rec(d: &[i64], i: usize, n: i64, s: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == d.len() {
            if n == 0 && s == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0;
        while m * d[i] <= n && m * m <= s {
            cur.push(m);
            rec(d, i + 1, n - m * d[i], s - m * m, cur, out);
            cur.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, n, s, &mut Vec::new(), &mut out);
    out
}

/// `|ψ(h)|²` forced on each class of `H`: `|C_{K/L}(h)|` on good classes, else 0.
fn prescribed_moduli(five: &CharacterFive, h: &Subgroup) -> Result<Vec<i64>> {
    let form = five.form()?;
    let cd = crate::chartab::class_data(h);
    let mut out = Vec::with_capacity(cd.len());
    for c in 0..cd.len() {
        let x = cd.representative(c);
        if form.is_good(x, &five.k)? {
            let cent = Subgroup::centralizer_mod(&five.k, &five.l, &[x]);
            out.push((cent.order() / five.l.order()) as i64);
        } else {
            out.push(0);
        }
    }
    Ok(out)
}

/// Every genuine character `ψ` of `H/L` with `ψ(1) = n`, the prescribed
/// moduli, and `χ_H = ψξ` inducing a bijection `Irr(G|θ) → Irr(H|φ)`.
pub fn magic_search(five: &CharacterFive, h: &Subgroup) -> Result<Vec<MagicCharacter>> {
    if five.kind != FiveKind::Invariant {
        return Err(hypothesis("magic characters are searched for invariant fives"));
    }
    if !is_complement(five, h) {
        return Err(hypothesis("H is not a complement of K/L in G/L"));
    }
    let moduli = prescribed_moduli(five, h)?;
    let cd = crate::chartab::class_data(h);
    let total: i64 = (0..cd.len()).map(|c| cd.size(c) as i64 * moduli[c]).sum();
    if total % h.order() as i64 != 0 {
        return Err(Error::NoSolution("prescribed moduli give a non-integral norm".into()));
    }
    let s = total / h.order() as i64;
    let table = character_table(h)?;
    let quotient_irr = table.irr_mod(&five.l);
    let degrees: Vec<i64> = quotient_irr.iter().map(|c| c.degree_i64().unwrap()).collect();
    let mut found: Vec<MagicCharacter> = Vec::new();
    for m in multiplicity_vectors(&degrees, five.n as i64, s) {
        let parts: Vec<ClassFunction> = quotient_irr
            .iter()
            .zip(&m)
            .filter(|(_, &k)| k > 0)
            .map(|(c, &k)| c.scale(&Cyclotomic::from_integer(k)))
            .collect();
        let psi = sum_functions(h, &parts)?;
        let ok = psi.abs_squared()?.iter().zip(&moduli).all(|(a, &b)| a.to_i64() == Some(b) && a.is_integer());
        if !ok || solve_pairs(five, h, &psi, &five.g)?.is_err() {
            continue;
        }
        let canonical = five.odd_kl && canonical_predicate(five, h, &psi)?;
        found.push(MagicCharacter {
            host: h.clone(),
            det_order: psi.determinantal_order()?,
            rational: psi.is_rational(),
            genuine: true,
            canonical,
            psi,
        });
    }
    if found.is_empty() {
        return Err(Error::NoSolution("no character of H/L meets the magic conditions".into()));
    }
    found.sort_by(|a, b| a.psi.values().cmp(b.psi.values()));
    // the solution set is stable under Lin(H/L)
    for sol in &found {
        for lam in table.linear_mod(&five.l) {
            let moved = sol.psi.tensor(&lam)?;
            if !found.iter().any(|f| f.psi == moved) {
                return Err(theorem("magic solutions are not closed under Lin(H/L)"));
            }
        }
    }
    Ok(found)
}

fn only_trivial_odd(chi: &ClassFunction) -> Result<bool> {
    let m = chi.multiplicities()?;
    Ok(m[0] % 2 == 1 && m[1..].iter().all(|x| x % 2 == 0))
}

/// `o(ψ)` is a π-number and, for `p ∈ π` and `Q ∈ Syl_p(H)`, `1_Q` is the
/// only constituent of `ψ_Q` of odd multiplicity.
pub fn canonical_predicate(five: &CharacterFive, h: &Subgroup, psi: &ClassFunction) -> Result<bool> {
    let pi = prime_factors(five.index_kl() as u64);
    let ord = psi.determinantal_order()?;
    if !prime_factors(ord).iter().all(|p| pi.contains(p)) {
        return Ok(false);
    }
    for &p in &pi {
        let q = h.sylow(p);
        if !only_trivial_odd(&psi.restrict(&q)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The canonical magic character among `solutions`.
pub fn canonical_select(solutions: &[MagicCharacter], five: &CharacterFive, h: &Subgroup) -> Result<MagicCharacter> {
    if !five.odd_kl {
        return Err(hypothesis("canonical magic characters need |K/L| odd"));
    }
    let mut hits = Vec::new();
    for s in solutions {
        if canonical_predicate(five, h, &s.psi)? {
            hits.push(s);
        }
    }
    let psi = match hits.len() {
        0 if five.abelian_kl => return Err(theorem("odd abelian five without a canonical magic character")),
        0 => return Err(Error::NoneCanonical),
        1 => hits[0],
        k if five.abelian_kl => return Err(theorem(format!("{k} canonical magic characters"))),
        k => return Err(Error::MultipleCanonical(k)),
    };
    if !psi.psi.field_of_values().is_subfield_of(&five.phi.field_of_values()) {
        return Err(theorem("canonical magic character has values outside Q(φ)"));
    }
    for v in intermediate_subgroups(h, &five.l) {
        if (v.order() / five.l.order()) % 2 == 1 && !only_trivial_odd(&psi.psi.restrict(&v)?)? {
            return Err(theorem("canonical ψ restricted to an odd V/L has an odd constituent besides 1_V"));
        }
    }
    let mut out = psi.clone();
    out.canonical = true;
    Ok(out)
}

/// The unique magic character of determinant 1 for a coprime five.
pub fn coprime_select(solutions: &[MagicCharacter], five: &CharacterFive) -> Result<MagicCharacter> {
    if !five.coprime {
        return Err(hypothesis("|G:K| and |K:L| are not coprime"));
    }
    let mut hits = Vec::new();
    for s in solutions {
        if s.psi.determinant()?.values().iter().all(|v| v.is_one()) {
            hits.push(s);
        }
    }
    if hits.len() != 1 {
        return Err(theorem(format!("{} magic characters of determinant 1 for a coprime five", hits.len())));
    }
    let psi = hits[0];
    if !psi.rational || !psi.psi.nowhere_zero() {
        return Err(theorem("determinant-1 magic character is not rational and nowhere zero"));
    }
    let cd = psi.psi.classes();
    let n = five.n as i64;
    for c in 0..cd.len() {
        let x = cd.representative(c);
        let o = order_mod(x, &five.l);
        let ps = prime_factors(o);
        if ps.len() != 1 {
            continue;
        }
        let p = ps[0] as i64;
        let v = psi.psi.values()[c].to_i64().ok_or_else(|| theorem("rational ψ with non-integral value"))?;
        let cent = Subgroup::centralizer_mod(&five.k, &five.l, &[x]).order() / five.l.order();
        if (v - n).rem_euclid(p) != 0 || v * v != cent as i64 {
            return Err(theorem("ψ(x) fails ψ(x) ≡ n mod p or ψ(x)² = |C_{K/L}(x)|"));
        }
    }
    Ok(psi.clone())
}
