use super::*;
use crate::group::{from_catalog, CatalogSpec, Group};

fn cat(spec: CatalogSpec) -> Group {
    from_catalog(&spec).unwrap()
}

fn whole(g: &Group) -> Subgroup {
    Subgroup::whole(g)
}

/// Brute-force class sizes: orbit of each element under conjugation by everything.
fn brute_class_sizes(g: &Group) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = g.elements().map(|y| g.conj(x, y)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        sizes.push(orbit.len());
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn class_sizes_match_brute_force() {
    for spec in [
        CatalogSpec::Sym(3),
        CatalogSpec::Quaternion8,
        CatalogSpec::Dihedral(10),
        CatalogSpec::Alt(4),
        CatalogSpec::Sl23,
        CatalogSpec::Extraspecial { p: 3, exp: 3 },
    ] {
        let g = cat(spec);
        let cd = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = cd.classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, brute_class_sizes(&g));
        for k in 0..cd.len() {
            assert_eq!(cd.size(k) * cd.centralizer_order(k), g.order());
        }
        assert_eq!(cd.representative(0), g.identity());
    }
    let s3 = conjugacy_classes(&cat(CatalogSpec::Sym(3)));
    assert_eq!(s3.classes().iter().map(|c| c.len()).collect::<Vec<_>>(), vec![1, 2, 3]);
    let q8 = conjugacy_classes(&cat(CatalogSpec::Quaternion8));
    assert_eq!(q8.classes().iter().map(|c| c.len()).collect::<Vec<_>>(), vec![1, 1, 2, 2, 2]);
    let c5 = conjugacy_classes(&cat(CatalogSpec::Cyclic(5)));
    assert_eq!(c5.len(), 5);
}

#[test]
fn power_maps_follow_representatives() {
    let g = cat(CatalogSpec::Sl23);
    let cd = conjugacy_classes(&g);
    for (p, map) in &cd.power_maps {
        for k in 0..cd.len() {
            assert_eq!(map[k], cd.class_index(g.pow(cd.representative(k), *p as i64)));
        }
    }
    assert!(cd.power_map(2).is_some() && cd.power_map(3).is_some() && cd.power_map(5).is_some());
}

#[test]
fn small_tables() {
    let s3 = character_table(&whole(&cat(CatalogSpec::Sym(3)))).unwrap();
    assert_eq!(s3.degrees(), vec![1, 1, 2]);
    s3.verify_orthogonality().unwrap();

    let c3 = character_table(&whole(&cat(CatalogSpec::Cyclic(3)))).unwrap();
    assert_eq!(c3.degrees(), vec![1, 1, 1]);
    let f = NumberField::cyclotomic(3);
    assert!(c3.irr()[1..].iter().all(|c| c.field_of_values() == f));

    let e27 = character_table(&whole(&cat(CatalogSpec::Extraspecial { p: 3, exp: 3 }))).unwrap();
    let mut d = e27.degrees();
    d.sort_unstable();
    assert_eq!(d, [vec![1; 9], vec![3, 3]].concat());
    e27.verify_orthogonality().unwrap();

    let q8 = character_table(&whole(&cat(CatalogSpec::Quaternion8))).unwrap();
    let two = q8.irr().iter().find(|c| c.degree_i64() == Some(2)).unwrap();
    assert!(two.field_of_values().is_rational());
    let mut vals: Vec<i64> = two.values().iter().map(|v| v.to_i64().unwrap()).collect();
    vals.sort_unstable();
    assert_eq!(vals, vec![-2, 0, 0, 0, 2]);
}

#[test]
fn every_catalog_table_is_orthogonal() {
    for spec in [
        CatalogSpec::Dihedral(8),
        CatalogSpec::Dihedral(12),
        CatalogSpec::Alt(4),
        CatalogSpec::Sym(4),
        CatalogSpec::Sl23,
        CatalogSpec::Cyclic(12),
        CatalogSpec::Extraspecial { p: 3, exp: 9 },
        CatalogSpec::Alt(5),
    ] {
        let g = cat(spec);
        let t = character_table(&whole(&g)).unwrap();
        t.verify_orthogonality().unwrap();
        for d in t.degrees() {
            assert_eq!(g.order() as i64 % d, 0);
        }
        assert!(t.irr()[0].values().iter().all(|v| v.is_one()));
    }
}

#[test]
fn tables_of_proper_subgroups() {
    let g = cat(CatalogSpec::Sl23);
    let w = whole(&g);
    let q8 = w.sylow(2);
    assert_eq!(q8.order(), 8);
    let t = character_table(&q8).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
    t.verify_orthogonality().unwrap();
}

#[test]
fn induction_and_restriction() {
    let g = cat(CatalogSpec::Sym(3));
    let w = whole(&g);
    let a3 = w.derived();
    let triv = ClassFunction::trivial(&a3);
    let ind = triv.induce(&w).unwrap();
    let t = character_table(&w).unwrap();
    let sign = &t.irr()[1];
    assert_eq!(ind, ClassFunction::trivial(&w).add(sign).unwrap());

    let two = &t.irr()[2];
    let res = two.restrict(&a3).unwrap();
    let ta = character_table(&a3).unwrap();
    let phi = &ta.irr()[1];
    assert_eq!(res, phi.add(&phi.complex_conjugate()).unwrap());
}

#[test]
fn frobenius_reciprocity_exhaustive() {
    let g = cat(CatalogSpec::Sl23);
    let w = whole(&g);
    let tg = character_table(&w).unwrap();
    for h in [w.sylow(2), w.sylow(3), w.center()] {
        let th = character_table(&h).unwrap();
        for a in th.irr() {
            let ind = a.induce(&w).unwrap();
            for chi in tg.irr() {
                let lhs = ind.inner_product(chi).unwrap();
                let rhs = a.inner_product(&chi.restrict(&h).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn irr_over_examples() {
    let q8 = cat(CatalogSpec::Quaternion8);
    let w = whole(&q8);
    let z = w.center();
    let tz = character_table(&z).unwrap();
    let faithful = &tz.irr()[1];
    let over = irr_over(&w, &z, faithful).unwrap();
    assert_eq!(over.len(), 1);
    assert_eq!(over[0].degree_i64(), Some(2));

    let triv = Subgroup::trivial(&q8);
    let all = irr_over(&w, &triv, &ClassFunction::trivial(&triv)).unwrap();
    assert_eq!(all.len(), 5);

    let s3 = cat(CatalogSpec::Sym(3));
    let ws = whole(&s3);
    let a3 = ws.derived();
    let ta = character_table(&a3).unwrap();
    let over = irr_over(&ws, &a3, &ta.irr()[1]).unwrap();
    assert_eq!(over.len(), 1);
    assert_eq!(over[0].degree_i64(), Some(2));

    // φ^G = 2χ, so the count of distinct constituents is 1 while the norm is 4
    let ind = faithful.induce(&w).unwrap();
    assert_eq!(ind.norm(), Cyclotomic::from_integer(4));
    assert_eq!(ind.constituents().unwrap().len(), over.len());
}

#[test]
fn determinants() {
    let s3 = cat(CatalogSpec::Sym(3));
    let w = whole(&s3);
    let t = character_table(&w).unwrap();
    let det = t.irr()[2].determinant().unwrap();
    assert_eq!(det, t.irr()[1]);
    assert_eq!(t.irr()[2].determinantal_order().unwrap(), 2);
    assert_eq!(t.irr()[1].determinant().unwrap(), t.irr()[1]);

    let c2 = cat(CatalogSpec::Cyclic(2));
    let wc = whole(&c2);
    let tc = character_table(&wc).unwrap();
    assert_eq!(ClassFunction::regular(&wc).determinant().unwrap(), tc.irr()[1]);

    let bad = t.irr()[1].sub(&t.irr()[0]).unwrap();
    assert_eq!(bad.determinant(), Err(Error::NotGenuineCharacter));
}

#[test]
fn determinant_twists_by_linear_characters() {
    let g = cat(CatalogSpec::Sl23);
    let w = whole(&g);
    let t = character_table(&w).unwrap();
    for chi in t.irr() {
        for lam in t.irr().iter().filter(|c| c.is_linear()) {
            let d = chi.degree_i64().unwrap() as u64;
            let lhs = chi.tensor(lam).unwrap().determinant().unwrap();
            let mut pow = ClassFunction::trivial(&w);
            for _ in 0..d {
                pow = pow.tensor(lam).unwrap();
            }
            let rhs = chi.determinant().unwrap().tensor(&pow).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn galois_permutes_irreducibles() {
    let g = cat(CatalogSpec::Extraspecial { p: 3, exp: 3 });
    let w = whole(&g);
    let t = character_table(&w).unwrap();
    for k in [1, 2] {
        let mut image: Vec<usize> =
            t.irr().iter().map(|c| t.index_of(&c.galois_conjugate(k).unwrap()).unwrap()).collect();
        image.sort_unstable();
        assert_eq!(image, (0..t.len()).collect::<Vec<_>>());
    }
    assert!(t.irr()[0].galois_conjugate(3).is_err());
    let big: Vec<&ClassFunction> = t.irr().iter().filter(|c| c.degree_i64() == Some(3)).collect();
    assert_eq!(&big[0].galois_conjugate(2).unwrap(), big[1]);
}

#[test]
fn cyclic_extensions() {
    // L = Z(Q8) inside a cyclic subgroup of order 4
    let q8 = cat(CatalogSpec::Quaternion8);
    let w = whole(&q8);
    let z = w.center();
    let x = q8.elements().find(|&x| q8.elem_order(x) == 4).unwrap();
    let c4 = Subgroup::generated(&q8, &[x]);
    let phi = character_table(&z).unwrap().irr()[1].clone();
    let ext = extensions_cyclic(&phi, &c4).unwrap();
    assert_eq!(ext.len(), 2);
    for e in &ext {
        assert_eq!(e.field_of_values(), NumberField::cyclotomic(4));
    }
    assert_eq!(extensions_cyclic(&phi, &z).unwrap(), vec![phi.clone()]);

    let c6 = cat(CatalogSpec::Cyclic(6));
    let w6 = whole(&c6);
    let c3 = w6.sylow(3);
    let f = character_table(&c3).unwrap().irr()[1].clone();
    assert_eq!(extensions_cyclic(&f, &w6).unwrap().len(), 2);

    // S3 over A3: the faithful character is not invariant
    let s3 = cat(CatalogSpec::Sym(3));
    let ws = whole(&s3);
    let a3 = ws.derived();
    let f = character_table(&a3).unwrap().irr()[1].clone();
    assert!(matches!(extensions_cyclic(&f, &ws), Err(Error::NotInvariant(_))));
    // Q8 over its center is not cyclic
    assert_eq!(extensions_cyclic(&phi, &w), Err(Error::NotCyclic));
}

#[test]
fn schur_indicators() {
    let q8 = cat(CatalogSpec::Quaternion8);
    let t = character_table(&whole(&q8)).unwrap();
    let two = t.irr().iter().find(|c| c.degree_i64() == Some(2)).unwrap();
    assert_eq!(two.frobenius_schur(), Cyclotomic::from_integer(-1));
    let c3 = cat(CatalogSpec::Cyclic(3));
    let t3 = character_table(&whole(&c3)).unwrap();
    assert!(t3.irr()[1].frobenius_schur().is_zero());
}

#[test]
fn order_cap_is_enforced() {
    let g = cat(CatalogSpec::Cyclic(12));
    let w = whole(&g);
    assert!(crate::group::check_cap(w.order()).is_ok());
}
