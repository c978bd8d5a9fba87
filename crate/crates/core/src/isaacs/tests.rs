use super::*;
use crate::corpus::{faithful, named_action, quaternion_setup, standard_setups};
use crate::group::{from_catalog, CatalogSpec, Group};
use proptest::prelude::{prop_assert, proptest, Just, ProptestConfig};
use proptest::strategy::Strategy as _;

fn setup(i: usize) -> CoprimeSetup {
    standard_setups()[i].build().unwrap()
}

/// Oracle: the partner of `χ` is the unique `ξ ∈ Irr(C)` with `(χ_C, ξ)`
/// odd, checked here only where that rule is known to hold (`C = Z(N)`).
fn odd_partner(chi: &ClassFunction, c: &Subgroup) -> ClassFunction {
    let res = chi.restrict(c).unwrap();
    let odd: Vec<ClassFunction> = character_table(c)
        .unwrap()
        .irr()
        .iter()
        .filter(|x| res.inner_product(x).unwrap().to_i64().unwrap() % 2 == 1)
        .cloned()
        .collect();
    assert_eq!(odd.len(), 1);
    odd[0].clone()
}

#[test]
fn trivial_action_is_the_identity() {
    let s = setup(4);
    assert_eq!(s.c, s.n);
    for chi in s.invariant_characters().unwrap() {
        let (star, trace) = isaacs_correspondent(&s, &chi).unwrap();
        assert_eq!(star, chi);
        assert!(trace.steps.is_empty());
        assert!(verify_trace_independence(&s, &chi, &super::Strategy::all()));
    }
    let chi = s.invariant_characters().unwrap()[3].clone();
    let above = above_correspondence(&s, &chi).unwrap();
    assert!(above.pairs.iter().all(|(r, x)| r == x));
}

#[test]
fn dihedral_fourteen() {
    let s = setup(3);
    let inv = s.invariant_characters().unwrap();
    assert_eq!(inv, vec![ClassFunction::trivial(&s.n)]);
    assert!(s.c.is_trivial());
    let (star, trace) = isaacs_correspondent(&s, &inv[0]).unwrap();
    assert_eq!(star, ClassFunction::trivial(&s.c));
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].tag, StepTag::ChiefRestriction);
}

fn check_extraspecial(s: &CoprimeSetup, p: i64) {
    let z = s.n.center();
    assert_eq!(s.c, z);
    let bij = isaacs_bijection(s).unwrap();
    assert!(bij.checks.all(), "{:?}", bij.checks);
    assert_eq!(bij.pairs.len(), s.c.order());
    for (chi, star) in &bij.pairs {
        if chi.degree_i64() == Some(1) {
            assert_eq!(*chi, ClassFunction::trivial(&s.n));
            assert_eq!(*star, ClassFunction::trivial(&s.c));
        } else {
            assert_eq!(chi.degree_i64(), Some(p));
            let phi = odd_partner(chi, &z);
            assert_eq!(chi.restrict(&z).unwrap().inner_product(&phi).unwrap().to_i64(), Some(p));
            assert_eq!(*star, phi);
        }
    }
    for t in &bij.traces {
        assert!(t.ratio_consistent());
    }
}

#[test]
fn extraspecial_by_inversion() {
    let s = setup(0);
    check_extraspecial(&s, 3);
    // -1 on N/Z fixes every line, so the section is refined twice
    let chi = s.invariant_characters().unwrap().into_iter().find(|c| c.degree_i64() == Some(3)).unwrap();
    let (_, trace) = isaacs_correspondent(&s, &chi).unwrap();
    let tags: Vec<StepTag> = trace.steps.iter().map(|t| t.tag).collect();
    assert_eq!(tags, vec![StepTag::ChiefInduced, StepTag::ChiefRestriction]);
}

#[test]
fn extraspecial_by_c4() {
    let s = setup(1);
    check_extraspecial(&s, 3);
    let chi = s.invariant_characters().unwrap().into_iter().find(|c| c.degree_i64() == Some(3)).unwrap();
    let (_, trace) = isaacs_correspondent(&s, &chi).unwrap();
    assert_eq!(trace.steps.len(), 1);
    let step = &trace.steps[0];
    assert_eq!(step.tag, StepTag::FullyRamifiedStep);
    assert_eq!(step.local_ratio, 3);
    assert_eq!(step.parity, Some(true));
    assert_eq!(step.psi.as_ref().unwrap().degree_i64(), Some(3));
}

#[test]
fn extraspecial_five_by_c3() {
    check_extraspecial(&setup(2), 5);
}

#[test]
fn even_order_is_refused() {
    let s = quaternion_setup().build().unwrap();
    let chi = s.invariant_characters().unwrap()[0].clone();
    assert_eq!(isaacs_correspondent(&s, &chi).unwrap_err(), Error::EvenOrder);
    assert_eq!(isaacs_bijection(&s).unwrap_err(), Error::EvenOrder);
    assert!(!verify_trace_independence(&s, &chi, &super::Strategy::all()));
}

#[test]
fn setup_errors() {
    let n = from_catalog(&CatalogSpec::Cyclic(3)).unwrap();
    let a = from_catalog(&CatalogSpec::Cyclic(6)).unwrap();
    let act = GroupAction::trivial(&a, &n);
    assert!(matches!(CoprimeSetup::from_action(&act), Err(Error::NotCoprime(..))));

    let s = setup(0);
    let t = character_table(&s.n).unwrap();
    let moved = t.irr().iter().find(|c| !is_invariant_under(&s.a, c).unwrap()).unwrap();
    assert!(matches!(isaacs_correspondent(&s, moved), Err(Error::NotInvariant(_))));
}

#[test]
fn strong_correspondence_cases() {
    let s = setup(0);
    let z = s.n.center();
    let m = s.a.join(&z).unwrap();
    let phi = faithful(&z).unwrap();
    let theta = character_table(&s.n).unwrap().irr().iter().find(|c| c.degree_i64() == Some(3)).unwrap().clone();
    let theta = if theta.restrict(&z).unwrap().inner_product(&phi).unwrap().is_zero() {
        theta.complex_conjugate()
    } else {
        theta
    };
    let sc = strong_correspondence(&s.g, &s.n, &z, &m, &theta, &phi).unwrap();
    assert_eq!(sc.h.order(), 6);
    assert_eq!(sc.n, 3);
    assert_eq!(sc.pairs.len(), 4);
    for (c, x) in &sc.pairs {
        assert_eq!(c.degree_i64(), Some(3));
        assert_eq!(x.degree_i64(), Some(1));
    }

    let triv = strong_correspondence(&s.g, &z, &z, &s.g, &phi, &phi).unwrap();
    assert!(triv.pairs.iter().all(|(c, x)| c == x));
    assert!(triv.traces.iter().all(|t| t.steps.is_empty()));

    let sl = Subgroup::whole(&from_catalog(&CatalogSpec::Sl23).unwrap());
    let q8 = sl.sylow(2);
    let zs = sl.center();
    let c3 = sl.sylow(3);
    let m = c3.join(&zs).unwrap();
    let fz = faithful(&zs).unwrap();
    let th = character_table(&q8).unwrap().irr().iter().find(|c| c.degree_i64() == Some(2)).unwrap().clone();
    assert!(matches!(strong_correspondence(&sl, &q8, &zs, &m, &th, &fz), Err(Error::HypothesisViolated(_))));
}

#[test]
fn above_in_the_semidirect_product() {
    let s = setup(0);
    let chi = s.invariant_characters().unwrap().into_iter().find(|c| c.degree_i64() == Some(3)).unwrap();
    let above = above_correspondence(&s, &chi).unwrap();
    assert_eq!(s.u.order(), 6);
    // Galois orbit {χ, χ̄}, two extensions each
    assert_eq!(above.pairs.len(), 4);
    assert_eq!(above.over_chi, 2);
    assert_eq!(above.ratio, 3);
    let (star, _) = isaacs_correspondent(&s, &chi).unwrap();
    assert_eq!(above.chi_star, star);
}

#[test]
fn above_in_a_proper_overgroup() {
    // C2 = square of the C4 acting on 3^{1+2}; AN has index 2
    let big = setup(1);
    let a4 = &big.a;
    let gen = *a4.generators().first().unwrap();
    let grp = big.g.group();
    let a2 = Subgroup::generated(grp, &[grp.pow(gen, 2)]);
    let s = CoprimeSetup::within(&big.g, &big.n, &a2).unwrap();
    assert_eq!(s.an.order(), 54);
    assert_eq!(s.u.order(), 12);
    for chi in s.invariant_characters().unwrap() {
        let above = above_correspondence(&s, &chi).unwrap();
        let (star, _) = isaacs_correspondent(&s, &chi).unwrap();
        assert_eq!(above.chi_star, star);
        assert_eq!(above.ratio, chi.degree_i64().unwrap() / star.degree_i64().unwrap());
        for (r, x) in &above.pairs {
            assert_eq!(r.field_of_values(), x.field_of_values());
        }
    }
}

#[test]
fn named_actions() {
    let n = from_catalog(&CatalogSpec::Quaternion8).unwrap();
    let a = from_catalog(&CatalogSpec::Cyclic(3)).unwrap();
    let s = CoprimeSetup::from_action(&named_action("auto-order:3", &n, &a).unwrap()).unwrap();
    assert_eq!(s.c.order(), 2);
    assert!(named_action("auto-order:5", &n, &a).is_err());
    assert!(named_action("inversion", &n, &a).is_err());
    assert!(named_action("bogus", &n, &a).is_err());
}

fn relabel(g: &Group, sigma: &[usize]) -> Group {
    let n = g.order();
    let mut rows = vec![vec![0; n]; n];
    for a in g.elements() {
        for b in g.elements() {
            rows[sigma[a]][sigma[b]] = sigma[g.mul(a, b)];
        }
    }
    Group::from_cayley(&rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn natural_under_relabeling(sigma in Just((0..54usize).collect::<Vec<_>>()).prop_shuffle()) {
        let s = setup(0);
        let g2 = relabel(s.g.group(), &sigma);
        let img = |sub: &Subgroup| {
            let e: Vec<usize> = sub.elements().iter().map(|&x| sigma[x]).collect();
            Subgroup::from_elements(&g2, &e).unwrap()
        };
        let s2 = CoprimeSetup::within(&Subgroup::whole(&g2), &img(&s.n), &img(&s.a)).unwrap();
        let same = |x: &ClassFunction, y: &ClassFunction| {
            x.subgroup().elements().iter().all(|&e| x.value_at(e).unwrap() == y.value_at(sigma[e]).unwrap())
        };
        for chi in s.invariant_characters().unwrap() {
            let (star, _) = isaacs_correspondent(&s, &chi).unwrap();
            let chi2 = s2.invariant_characters().unwrap().into_iter().find(|c| same(&chi, c)).unwrap();
            let (star2, _) = isaacs_correspondent(&s2, &chi2).unwrap();
            prop_assert!(same(&star, &star2));
        }
    }
}
