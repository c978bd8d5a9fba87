use super::magic::is_complement;
use super::CharacterFive;
use crate::chartab::{character_table, irr_over, ClassFunction};
use crate::cyclotomic::{units_mod, Cyclotomic, NumberField};
use crate::error::{hypothesis, theorem, Error, Result};
use crate::group::Subgroup;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Route {
    /// `χ_{U∩H} = ψ ξ`.
    Magic,
    /// `(χ_{U∩H}, ξ)` odd.
    Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairChecks {
    pub isometry: bool,
    pub degree_ratio: bool,
    pub galois: bool,
    pub multiplication: bool,
}

/// The bijection `Irr(U|θ) ↔ Irr(U∩H|φ)` for one intermediate `U`.
#[derive(Debug, Clone, Serialize)]
pub struct FiveCorrespondence {
    #[serde(skip)]
    pub u: Subgroup,
    #[serde(skip)]
    pub uh: Subgroup,
    pub route: Route,
    pub psi: Option<ClassFunction>,
    pub pairs: Vec<(ClassFunction, ClassFunction)>,
    pub checks: PairChecks,
}

impl FiveCorrespondence {
    /// The partner of `χ`, if `χ` is in the domain.
    pub fn image(&self, chi: &ClassFunction) -> Option<&ClassFunction> {
        self.pairs.iter().find(|(c, _)| c == chi).map(|(_, x)| x)
    }

    /// The same bijection, ignoring the route.
    pub fn same_pairs(&self, other: &FiveCorrespondence) -> bool {
        self.pairs.len() == other.pairs.len() && self.pairs.iter().all(|p| other.pairs.contains(p))
    }
}

/// `ψ` moved from `H` to `U` along `U/K ≅ (U∩H)/L`.
fn transport(five: &CharacterFive, h: &Subgroup, psi: &ClassFunction, u: &Subgroup) -> Result<ClassFunction> {
    let (ids, reps) = five.g.coset_ids(&five.k);
    let mut via = vec![usize::MAX; reps.len()];
    for &x in h.elements() {
        via[ids[x] as usize] = x;
    }
    let cd = crate::chartab::class_data(u);
    let mut values = Vec::with_capacity(cd.len());
    for c in 0..cd.len() {
        values.push(psi.value_at(via[ids[cd.representative(c)] as usize])?.clone());
    }
    ClassFunction::new(u, values)
}

fn check_level(five: &CharacterFive, h: &Subgroup, u: &Subgroup) -> Result<Subgroup> {
    if !is_complement(five, h) {
        return Err(hypothesis("H is not a complement of K/L in G/L"));
    }
    if !five.k.is_subgroup_of(u) || !u.is_subgroup_of(&five.g) {
        return Err(hypothesis("U must satisfy K ≤ U ≤ G"));
    }
    u.intersection(h)
}

/// Pairs `(χ, ξ)` with `χ_{U∩H} = ψξ` and `ξ^U = ψ̄χ`, or the reason no
/// bijection arises.
pub(crate) fn solve_pairs(
    five: &CharacterFive,
    h: &Subgroup,
    psi: &ClassFunction,
    u: &Subgroup,
) -> Result<std::result::Result<Vec<(ClassFunction, ClassFunction)>, String>> {
    let uh = check_level(five, h, u)?;
    let above = irr_over(u, &five.k, &five.theta)?;
    let below = irr_over(&uh, &five.l, &five.phi)?;
    if above.len() != below.len() {
        return Ok(Err(format!("|Irr(U|θ)| = {} but |Irr(U∩H|φ)| = {}", above.len(), below.len())));
    }
    let psi_uh = psi.restrict(&uh)?;
    let psi_bar_u = transport(five, h, psi, u)?.complex_conjugate();
    let mut used = vec![false; below.len()];
    let mut pairs = Vec::with_capacity(above.len());
    for chi in above {
        let res = chi.restrict(&uh)?;
        let up = psi_bar_u.tensor(&chi)?;
        let mut hit = None;
        for (j, xi) in below.iter().enumerate() {
            if psi_uh.tensor(xi)? == res && xi.induce(u)? == up {
                if hit.is_some() {
                    return Ok(Err("χ_H = ψξ has several solutions".into()));
                }
                hit = Some(j);
            }
        }
        let Some(j) = hit else {
            return Ok(Err("χ_H = ψξ has no solution in Irr(U∩H|φ)".into()));
        };
        if used[j] {
            return Ok(Err("two characters share a partner".into()));
        }
        used[j] = true;
        pairs.push((chi, below[j].clone()));
    }
    Ok(Ok(pairs))
}

/// Isometry, degree ratio `n`, equivariance under `Gal(Q_e/F)` and
/// compatibility with multiplication by `Irr(U/K)`.
fn verify_pairs(
    five: &CharacterFive,
    u: &Subgroup,
    uh: &Subgroup,
    pairs: &[(ClassFunction, ClassFunction)],
    field: &NumberField,
) -> Result<PairChecks> {
    let mut isometry = true;
    for (i, (ci, xi)) in pairs.iter().enumerate() {
        for (cj, xj) in &pairs[i..] {
            isometry &= ci.inner_product(cj)? == xi.inner_product(xj)?;
        }
    }
    let n = Cyclotomic::from_integer(five.n as i64);
    let degree_ratio = pairs.iter().all(|(c, x)| *c.degree() == &n * x.degree());
    let mut galois = true;
    for k in units_mod(u.exponent()) {
        if !field.fixed_by(k) {
            continue;
        }
        for (c, x) in pairs {
            let moved = (c.galois_conjugate(k as i64)?, x.galois_conjugate(k as i64)?);
            galois &= pairs.contains(&moved);
        }
    }
    let mut multiplication = true;
    let above: Vec<&ClassFunction> = pairs.iter().map(|(c, _)| c).collect();
    for beta in character_table(u)?.irr_mod(&five.k) {
        let beta_h = beta.restrict(uh)?;
        for (c, x) in pairs {
            let prod = c.tensor(&beta)?;
            let mut image = ClassFunction::zero(uh);
            for (j, cj) in above.iter().enumerate() {
                let m = prod.inner_product(cj)?;
                if !m.is_zero() {
                    image = image.add(&pairs[j].1.scale(&m))?;
                }
            }
            multiplication &= image == x.tensor(&beta_h)?;
        }
    }
    let checks = PairChecks { isometry, degree_ratio, galois, multiplication };
    if !(isometry && degree_ratio && galois && multiplication) {
        return Err(theorem(format!("five correspondence fails a structural check: {checks:?}")));
    }
    Ok(checks)
}

/// `Irr(U|θ) ↔ Irr(U∩H|φ)` via `χ_{U∩H} = ψ_{U∩H} ξ`.
pub fn five_correspondence(
    five: &CharacterFive,
    h: &Subgroup,
    psi: &ClassFunction,
    u: &Subgroup,
) -> Result<FiveCorrespondence> {
    let uh = check_level(five, h, u)?;
    let pairs = solve_pairs(five, h, psi, u)?.map_err(Error::NotBijective)?;
    let field = five.phi.field_of_values().compositum(&psi.field_of_values());
    let checks = verify_pairs(five, u, &uh, &pairs, &field)?;
    Ok(FiveCorrespondence {
        u: u.clone(),
        psi: Some(psi.restrict(&uh)?),
        uh,
        route: Route::Magic,
        pairs,
        checks,
    })
}

/// The relation `(χ_{U∩H}, ξ)` odd, checked to be a perfect matching.
pub fn parity_correspondence(five: &CharacterFive, h: &Subgroup, u: &Subgroup) -> Result<FiveCorrespondence> {
    let uh = check_level(five, h, u)?;
    if (u.order() / five.l.order()) % 2 == 0 {
        return Err(hypothesis("parity rule needs |U:L| odd"));
    }
    if !five.abelian_kl && !five.coprime {
        return Err(hypothesis("parity rule needs an abelian or coprime five"));
    }
    let above = irr_over(u, &five.k, &five.theta)?;
    let below = irr_over(&uh, &five.l, &five.phi)?;
    let mut odd = vec![vec![false; below.len()]; above.len()];
    for (i, chi) in above.iter().enumerate() {
        let res = chi.restrict(&uh)?;
        for (j, xi) in below.iter().enumerate() {
            let m = res.inner_product(xi)?.to_i64().ok_or_else(|| theorem("non-integral multiplicity"))?;
            odd[i][j] = m % 2 != 0;
        }
    }
    let rows_ok = odd.iter().all(|r| r.iter().filter(|&&b| b).count() == 1);
    let cols_ok = (0..below.len()).all(|j| odd.iter().filter(|r| r[j]).count() == 1);
    if above.len() != below.len() || !rows_ok || !cols_ok {
        return Err(Error::NotAMatching("odd multiplicities do not pair Irr(U|θ) with Irr(U∩H|φ)".into()));
    }
    let pairs: Vec<(ClassFunction, ClassFunction)> = above
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, below[odd[i].iter().position(|&b| b).unwrap()].clone()))
        .collect();
    let checks = verify_pairs(five, u, &uh, &pairs, &five.phi.field_of_values())?;
    Ok(FiveCorrespondence { u: u.clone(), uh, route: Route::Parity, psi: None, pairs, checks })
}
