use super::*;
use crate::chartab::ClassFunction;
use crate::group::{
    extend_homomorphism, from_catalog, semidirect_product, symplectic_action, CatalogSpec, Group, GroupAction, Semidirect,
};

fn cat(spec: CatalogSpec) -> Group {
    from_catalog(&spec).unwrap()
}

fn faithful_of(sub: &Subgroup) -> ClassFunction {
    let t = character_table(sub).unwrap();
    t.irr().iter().find(|c| c.kernel().is_trivial()).unwrap().clone()
}

/// `C_m` acting on `p^{1+2}` (exponent p) through a symplectic matrix.
fn extraspecial_by(p: usize, m: usize, mat: [i64; 4]) -> Semidirect {
    let n = cat(CatalogSpec::Extraspecial { p, exp: p });
    let a = cat(CatalogSpec::Cyclic(m));
    let perm = symplectic_action(p, mat).unwrap();
    let act = GroupAction::from_generator_images(&a, &n, &[perm]).unwrap();
    semidirect_product(&act).unwrap()
}

fn inversion_mod_center() -> Semidirect {
    let n = cat(CatalogSpec::Extraspecial { p: 3, exp: 3 });
    let c2 = cat(CatalogSpec::Cyclic(2));
    let images: Vec<usize> = n.generators().iter().map(|&x| n.inv(x)).collect();
    let auto = extend_homomorphism(&n, &n, &images).unwrap();
    let act = GroupAction::from_generator_images(&c2, &n, &[auto]).unwrap();
    semidirect_product(&act).unwrap()
}

fn five_over_center(sd: &Semidirect) -> CharacterFive {
    let g = Subgroup::whole(&sd.group);
    let z = sd.n.center();
    CharacterFive::new(&g, &sd.n, &z, &faithful_of(&z)).unwrap()
}

/// Oracle: `χ((lx)^y)/χ(lx)` over every extension `χ` and every admissible `l`,
/// required to be unanimous.
fn pairing_oracle(x: usize, y: usize, l: &Subgroup, phi: &ClassFunction) -> Cyclotomic {
    let g = l.group();
    let h0 = l.join_elements(&[x]);
    let mut seen: Option<Cyclotomic> = None;
    for chi in extensions_cyclic(phi, &h0).unwrap() {
        for &a in l.elements() {
            let lx = g.mul(a, x);
            let v = chi.value_at(lx).unwrap();
            if v.is_zero() {
                continue;
            }
            let r = chi.value_at(g.conj(lx, y)).unwrap().div(v).unwrap();
            match &seen {
                None => seen = Some(r),
                Some(s) => assert_eq!(*s, r, "pairing depends on choices"),
            }
        }
    }
    seen.unwrap()
}

#[test]
fn pairing_on_the_extraspecial_group() {
    let g = cat(CatalogSpec::Extraspecial { p: 3, exp: 3 });
    let w = Subgroup::whole(&g);
    let z = w.center();
    let (x, y) = (g.generators()[0], g.generators()[1]);
    let c = g.comm(x, y);
    assert!(z.contains(c) && c != g.identity());
    let tz = character_table(&z).unwrap();
    let phi = tz.irr().iter().find(|f| *f.value_at(c).unwrap() == Cyclotomic::root_of_unity(3, 1)).unwrap();
    let form = Form::new(&z, phi).unwrap();
    assert_eq!(form.pairing(x, y).unwrap(), Cyclotomic::root_of_unity(3, 1));
    assert_eq!(pairing_oracle(x, y, &z, phi), Cyclotomic::root_of_unity(3, 1));
    assert!(form.pairing(x, x).unwrap().is_one());
    assert!(form.pairing(c, y).unwrap().is_one());
    // every pair in G agrees with the oracle
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(form.pairing(a, b).unwrap(), pairing_oracle(a, b, &z, phi));
        }
    }
}

#[test]
fn pairing_errors() {
    let s3 = cat(CatalogSpec::Sym(3));
    let w = Subgroup::whole(&s3);
    let one = Subgroup::trivial(&s3);
    let triv = ClassFunction::trivial(&one);
    let (x, y) = (s3.generators()[0], s3.generators()[1]);
    assert!(matches!(pairing(x, y, &one, &triv), Err(Error::FormUndefined(..))));
    let a3 = w.derived();
    let phi = faithful_of(&a3);
    let t = *w.elements().iter().find(|&&e| !a3.contains(e)).unwrap();
    assert!(matches!(pairing(t, t, &a3, &phi), Err(Error::NotInvariant(_))));
}

/// Bilinearity, alternation, inversion symmetry, coset and conjugation
/// invariance, and the Galois law, on every valid pair.
fn check_form_laws(g: &Subgroup, l: &Subgroup, phi: &ClassFunction) {
    let grp = g.group();
    let form = Form::new(l, phi).unwrap();
    let els = g.elements();
    let defined = |a: usize, b: usize| l.contains(grp.comm(a, b));
    let exp = l.exponent();
    let conjs: Vec<(u64, Form)> = crate::cyclotomic::units_mod(exp)
        .into_iter()
        .map(|k| (k, Form::new(l, &phi.galois_conjugate(k as i64).unwrap()).unwrap()))
        .collect();
    for &x in els {
        assert!(form.pairing(x, x).unwrap().is_one());
        for &y in els {
            if !defined(x, y) {
                continue;
            }
            let v = form.pairing(x, y).unwrap();
            assert_eq!(form.pairing(y, x).unwrap(), v.inverse().unwrap());
            for &a in l.elements() {
                assert_eq!(form.pairing(grp.mul(x, a), grp.mul(y, a)).unwrap(), v);
            }
            for &s in g.generators() {
                assert_eq!(form.pairing(grp.conj(x, s), grp.conj(y, s)).unwrap(), v);
            }
            for (k, f) in &conjs {
                assert_eq!(f.pairing(x, y).unwrap(), v.galois(*k as i64).unwrap());
            }
            for &x2 in els {
                if defined(x2, y) {
                    let prod = form.pairing(grp.mul(x, x2), y).unwrap();
                    assert_eq!(prod, &v * &form.pairing(x2, y).unwrap());
                }
            }
        }
    }
}

#[test]
fn form_laws_on_small_fives() {
    let q8 = Subgroup::whole(&cat(CatalogSpec::Quaternion8));
    let z = q8.center();
    check_form_laws(&q8, &z, &faithful_of(&z));
    let e27 = Subgroup::whole(&cat(CatalogSpec::Extraspecial { p: 3, exp: 9 }));
    let z = e27.center();
    for phi in character_table(&z).unwrap().irr() {
        check_form_laws(&e27, &z, phi);
    }
    let sl = Subgroup::whole(&cat(CatalogSpec::Sl23));
    let z = sl.center();
    check_form_laws(&sl, &z, &faithful_of(&z));
}

#[test]
fn good_elements() {
    let q8 = Subgroup::whole(&cat(CatalogSpec::Quaternion8));
    let z = q8.center();
    let phi = faithful_of(&z);
    let good = good_classes(&q8, &z, &phi).unwrap();
    assert_eq!(good, vec![QuotientClass { representative: 0, cosets: 1 }]);
    assert!(is_good(q8.group().identity(), &q8, &z, &phi).unwrap());

    // χ(h) ≠ 0 for χ over φ forces h to be good; powers coprime to |K/L|
    let sd = inversion_mod_center();
    let g = Subgroup::whole(&sd.group);
    let z = sd.n.center();
    for phi in character_table(&z).unwrap().irr() {
        let form = Form::new(&z, phi).unwrap();
        let over = irr_over(&g, &z, phi).unwrap();
        for h in g.elements().iter().copied() {
            if over.iter().any(|c| !c.value_at(h).unwrap().is_zero()) {
                assert!(form.is_good(h, &g).unwrap());
            }
            for m in [2i64, 4, 5] {
                let hm = sd.group.pow(h, m);
                if form.is_good(hm, &sd.n).unwrap() {
                    assert!(form.is_good(h, &sd.n).unwrap());
                }
            }
        }
    }
}

#[test]
fn gallagher_counts() {
    let q8 = Subgroup::whole(&cat(CatalogSpec::Quaternion8));
    let z = q8.center();
    let r = gallagher_check(&q8, &z, &faithful_of(&z)).unwrap();
    assert_eq!((r.irr_count, r.good_count, r.equal), (1, 1, true));

    let c6 = Subgroup::whole(&cat(CatalogSpec::Cyclic(6)));
    let c3 = c6.sylow(3);
    let r = gallagher_check(&c6, &c3, &faithful_of(&c3)).unwrap();
    assert_eq!((r.irr_count, r.good_count, r.equal), (2, 2, true));

    let r = gallagher_check(&c6, &c6, &faithful_of(&c6)).unwrap();
    assert_eq!((r.irr_count, r.good_count), (1, 1));

    let s3 = Subgroup::whole(&cat(CatalogSpec::Sym(3)));
    let a3 = s3.derived();
    assert!(matches!(gallagher_check(&s3, &a3, &faithful_of(&a3)), Err(Error::NotInvariant(_))));
}

#[test]
fn fully_ramified_examples() {
    let q8 = Subgroup::whole(&cat(CatalogSpec::Quaternion8));
    let z = q8.center();
    let fr = is_fully_ramified(&q8, &z, &faithful_of(&z)).unwrap().unwrap();
    assert_eq!(fr.n, 2);
    assert_eq!(fr.theta.degree_i64(), Some(2));

    let fr = is_fully_ramified(&z, &z, &faithful_of(&z)).unwrap().unwrap();
    assert_eq!((fr.n, fr.theta), (1, faithful_of(&z)));

    let c3 = Subgroup::whole(&cat(CatalogSpec::Cyclic(3)));
    let one = Subgroup::trivial(c3.group());
    assert!(is_fully_ramified(&c3, &one, &ClassFunction::trivial(&one)).unwrap().is_none());

    for spec in [
        CatalogSpec::Quaternion8,
        CatalogSpec::Dihedral(8),
        CatalogSpec::Sl23,
        CatalogSpec::Alt(4),
        CatalogSpec::Extraspecial { p: 3, exp: 3 },
    ] {
        let g = Subgroup::whole(&cat(spec));
        for (k, l, i, conds) in ramification_scan(&g).unwrap() {
            assert!(conds.agree(), "{conds:?}");
            if !conds.restriction || !k.is_abelian() && !l.is_trivial() && k == l {
                continue;
            }
            let phi = character_table(&l).unwrap().irr()[i].clone();
            let five = CharacterFive::new(&k, &k, &l, &phi).unwrap();
            assert!(root_of_unity_check(&five) || !five.abelian_kl);
        }
    }
}

#[test]
fn nondegenerate_form_iff_fully_ramified() {
    for spec in [CatalogSpec::Quaternion8, CatalogSpec::Dihedral(8), CatalogSpec::Extraspecial { p: 3, exp: 3 }] {
        let k = Subgroup::whole(&cat(spec));
        let z = k.center();
        for phi in character_table(&z).unwrap().irr() {
            let form = Form::new(&z, phi).unwrap();
            let (_, reps) = k.coset_ids(&z);
            let radical = reps
                .iter()
                .filter(|&&x| reps.iter().all(|&y| form.pairing(x, y).unwrap().is_one()))
                .count();
            let fr = is_fully_ramified(&k, &z, phi).unwrap().is_some();
            assert_eq!(radical == 1, fr);
        }
    }
}

#[test]
fn root_of_unity_checks() {
    let sd = inversion_mod_center();
    assert!(root_of_unity_check(&five_over_center(&sd)));
    let q8 = Subgroup::whole(&cat(CatalogSpec::Quaternion8));
    let z = q8.center();
    let five = CharacterFive::new(&q8, &q8, &z, &faithful_of(&z)).unwrap();
    assert!(root_of_unity_check(&five));
    let five = CharacterFive::new(&z, &z, &z, &faithful_of(&z)).unwrap();
    assert!(root_of_unity_check(&five));
}

#[test]
fn complements_of_controlled_fives() {
    let sl = Subgroup::whole(&cat(CatalogSpec::Sl23));
    let q8 = sl.sylow(2);
    let z = sl.center();
    let five = CharacterFive::new(&sl, &q8, &z, &faithful_of(&z)).unwrap().with_control(&sl).unwrap();
    let h = find_complement(&five, &sl).unwrap();
    assert_eq!(h.order(), 6);
    assert!(h.is_abelian());
    let classes = good_complement_classes(&five, &sl).unwrap();
    assert_eq!(classes.len(), 1);
    assert!(classes[0].is_conjugate_in(&h, &sl));

    let sd = inversion_mod_center();
    let g = Subgroup::whole(&sd.group);
    let five = five_over_center(&sd).with_control(&g).unwrap();
    let h = find_complement(&five, &g).unwrap();
    let z = sd.n.center();
    assert_eq!(h, z.join(&sd.a).unwrap());
    let classes = good_complement_classes(&five, &g).unwrap();
    assert_eq!(classes.len(), 1);
    assert!(classes[0].is_conjugate_in(&h, &g));

    let degenerate = CharacterFive::new(&g, &z, &z, &faithful_of(&z)).unwrap();
    let degenerate = CharacterFive { strongly_controlled_with: None, ..degenerate };
    assert!(find_complement(&degenerate, &g).is_err() || find_complement(&degenerate, &g).unwrap() == g);
}

/// Oracle for the inversion example: `ψ(1) = 3`, `ψ(τ) = ε` with `ε² = 1`;
/// the determinant is `sgn^{(3-ε)/2}` and canonicity reduces to it being trivial.
#[test]
fn magic_characters_of_the_inversion_five() {
    let sd = inversion_mod_center();
    let five = five_over_center(&sd);
    let g = Subgroup::whole(&sd.group);
    let z = sd.n.center();
    let h = z.join(&sd.a).unwrap();
    let tau = sd.a_embed[1];
    let sols = magic_search(&five, &h).unwrap();
    assert_eq!(sols.len(), 2);
    let mut seen: Vec<i64> = sols.iter().map(|s| s.psi.value_at(tau).unwrap().to_i64().unwrap()).collect();
    seen.sort_unstable();
    assert_eq!(seen, vec![-1, 1]);
    for eps in [-1i64, 1] {
        let sgn_mult = (3 - eps) / 2;
        let det_trivial = sgn_mult % 2 == 0;
        let sol = sols.iter().find(|s| s.psi.value_at(tau).unwrap().to_i64() == Some(eps)).unwrap();
        assert_eq!(sol.canonical, det_trivial);
        assert_eq!(canonical_predicate(&five, &h, &sol.psi).unwrap(), det_trivial);
        assert_eq!(sol.det_order == 1, det_trivial);
    }
    let can = canonical_select(&sols, &five, &h).unwrap();
    let cop = coprime_select(&sols, &five).unwrap();
    assert_eq!(can.psi, cop.psi);
    assert_eq!(can.psi.value_at(tau).unwrap().to_i64(), Some(-1));
    assert_eq!(can.psi.degree_i64(), Some(3));
    assert!(can.rational);

    // U = G: the two 3-dimensional extensions of θ swap signs against ξ
    let corr = five_correspondence(&five, &h, &can.psi, &g).unwrap();
    assert_eq!(corr.pairs.len(), 2);
    for (chi, xi) in &corr.pairs {
        assert_eq!(*chi.value_at(tau).unwrap(), -xi.value_at(tau).unwrap().clone());
    }
    let corr = five_correspondence(&five, &h, &can.psi, &sd.n).unwrap();
    assert_eq!(corr.pairs, vec![(five.theta.clone(), five.phi.clone())]);
}

#[test]
fn magic_characters_for_c4_action() {
    let sd = extraspecial_by(3, 4, [0, -1, 1, 0]);
    let five = five_over_center(&sd);
    let z = sd.n.center();
    let h = z.join(&sd.a).unwrap();
    let sols = magic_search(&five, &h).unwrap();
    assert_eq!(sols.len(), 4);
    let can = canonical_select(&sols, &five, &h).unwrap();
    assert_eq!(can, coprime_select(&sols, &five).unwrap());
    for u in intermediate_subgroups(&five.g, &five.k) {
        five_correspondence(&five, &h, &can.psi, &u).unwrap();
    }
}

#[test]
fn coprime_order_three_action() {
    let sd = extraspecial_by(5, 3, [0, -1, 1, -1]);
    let five = five_over_center(&sd);
    let z = sd.n.center();
    let h = z.join(&sd.a).unwrap();
    let sols = magic_search(&five, &h).unwrap();
    assert!(sols.iter().all(|s| s.psi.nowhere_zero()));
    let cop = coprime_select(&sols, &five).unwrap();
    let x = sd.a_embed[1];
    assert_eq!(cop.psi.value_at(x).unwrap().to_i64(), Some(-1));
    let can = canonical_select(&sols, &five, &h).unwrap();
    assert_eq!(can.psi, cop.psi);
    for u in intermediate_subgroups(&five.g, &five.k) {
        let a = five_correspondence(&five, &h, &can.psi, &u).unwrap();
        let b = parity_correspondence(&five, &h, &u).unwrap();
        assert!(a.same_pairs(&b));
    }
}

#[test]
fn parity_on_the_five_itself() {
    let k = Subgroup::whole(&cat(CatalogSpec::Extraspecial { p: 3, exp: 3 }));
    let z = k.center();
    let phi = faithful_of(&z);
    let five = CharacterFive::new(&k, &k, &z, &phi).unwrap();
    let corr = parity_correspondence(&five, &z, &k).unwrap();
    assert_eq!(corr.pairs, vec![(five.theta.clone(), phi.clone())]);
    assert_eq!(five.theta.restrict(&z).unwrap().inner_product(&phi).unwrap().to_i64(), Some(3));

    let sols = magic_search(&five, &z).unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0].psi.degree_i64(), Some(3));

    let trivial = CharacterFive::new(&z, &z, &z, &phi).unwrap();
    let sols = magic_search(&trivial, &z).unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0].psi, ClassFunction::trivial(&z));
    assert_eq!(coprime_select(&sols, &trivial).unwrap().psi, ClassFunction::trivial(&z));
}

#[test]
fn canonical_character_is_galois_equivariant() {
    let sd = extraspecial_by(3, 4, [0, -1, 1, 0]);
    let five = five_over_center(&sd);
    let z = sd.n.center();
    let h = z.join(&sd.a).unwrap();
    let can = canonical_select(&magic_search(&five, &h).unwrap(), &five, &h).unwrap();
    let other = five.galois_conjugate(5).unwrap();
    let can2 = canonical_select(&magic_search(&other, &h).unwrap(), &other, &h).unwrap();
    assert_eq!(can2.psi, can.psi.galois_conjugate(5).unwrap());
}

#[test]
fn correspondence_commutes_with_restriction() {
    let sd = extraspecial_by(3, 4, [0, -1, 1, 0]);
    let five = five_over_center(&sd);
    let z = sd.n.center();
    let h = z.join(&sd.a).unwrap();
    let can = canonical_select(&magic_search(&five, &h).unwrap(), &five, &h).unwrap();
    let levels = intermediate_subgroups(&five.g, &five.k);
    let corrs: Vec<FiveCorrespondence> =
        levels.iter().map(|u| five_correspondence(&five, &h, &can.psi, u).unwrap()).collect();
    for (i, small) in corrs.iter().enumerate() {
        for big in &corrs[i..] {
            if !small.u.is_subgroup_of(&big.u) {
                continue;
            }
            for (chi, xi) in &big.pairs {
                // ι(χ_U) = (ιχ)_{U∩H}, expanding χ_U over Irr(U|θ)
                let res = chi.restrict(&small.u).unwrap();
                let mut image = ClassFunction::zero(&small.uh);
                for (c, x) in &small.pairs {
                    let m = res.inner_product(c).unwrap();
                    image = image.add(&x.scale(&m)).unwrap();
                }
                assert_eq!(image, xi.restrict(&small.uh).unwrap());
            }
        }
    }
}
