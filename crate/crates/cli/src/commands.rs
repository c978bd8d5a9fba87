use crate::select::{character, Ambient};
use fgct::chartab::{irr_index, irr_over};
use fgct::group::normal_subgroups;
use fgct::isaacs::{
    above_correspondence, isaacs_bijection, isaacs_correspondent, verify_trace_independence, CoprimeSetup,
    CorrespondenceTrace, Strategy,
};
use fgct::ramified::{
    canonical_select, coprime_select, find_complement, five_correspondence, form_laws, gallagher_check,
    good_complement_classes, intermediate_subgroups, magic_search, parity_correspondence, quotient_classes,
    quotient_exponent, ramification_scan, root_of_unity_check, CharacterFive, Form, FiveKind,
};
use fgct::verify::{items, run_item, summarize, ItemReport};
use fgct::{character_table, ClassFunction, Error, Result, Subgroup};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;

/// What a command produced, before it is wrapped into a report.
pub struct Outcome {
    pub result: Value,
    pub checks: Vec<(String, bool)>,
    /// Timing beyond the total, kept apart from the deterministic part.
    pub timing: Option<Value>,
    pub tsv: Option<String>,
}

impl Outcome {
    fn new(result: Value) -> Outcome {
        Outcome { result, checks: Vec::new(), timing: None, tsv: None }
    }

    fn check(mut self, name: &str, ok: bool) -> Outcome {
        self.checks.push((name.to_string(), ok));
        self
    }
}

fn values(c: &ClassFunction) -> Vec<String> {
    c.values().iter().map(ToString::to_string).collect()
}

/// An irreducible character by its table index, degree and field.
pub fn char_json(c: &ClassFunction, verbose: bool) -> Value {
    let mut v = json!({
        "index": irr_index(c).ok(),
        "degree": c.degree_i64(),
        "field": c.field_of_values().to_string(),
    });
    if verbose {
        v["values"] = json!(values(c));
    }
    v
}

fn sub_json(s: &Subgroup) -> Value {
    json!({"order": s.order(), "generators": s.generators()})
}

pub fn table(amb: &Ambient) -> Result<Outcome> {
    let g = &amb.g;
    let t = character_table(g)?;
    let cd = t.classes();
    let degrees = t.degrees();
    let classes: Vec<Value> = (0..cd.len())
        .map(|k| {
            let rep = cd.representative(k);
            json!({"size": cd.size(k), "representative": rep, "order": g.group().elem_order(rep)})
        })
        .collect();
    let irr: Vec<Value> = t.irr().iter().map(|c| json!({"degree": c.degree_i64(), "field": c.field_of_values().to_string(), "values": values(c)})).collect();

    let mut tsv = String::from("class");
    for k in 0..cd.len() {
        tsv.push_str(&format!("\t{k}"));
    }
    tsv.push_str("\nsize");
    for k in 0..cd.len() {
        tsv.push_str(&format!("\t{}", cd.size(k)));
    }
    tsv.push_str("\norder");
    for k in 0..cd.len() {
        tsv.push_str(&format!("\t{}", g.group().elem_order(cd.representative(k))));
    }
    for (i, c) in t.irr().iter().enumerate() {
        tsv.push_str(&format!("\nX{i}"));
        for v in values(c) {
            tsv.push('\t');
            tsv.push_str(&v);
        }
    }
    tsv.push('\n');

    let sum: i64 = degrees.iter().map(|d| d * d).sum();
    let mut out = Outcome::new(json!({
        "order": g.order(),
        "class_count": cd.len(),
        "degrees": degrees,
        "classes": classes,
        "irreducibles": irr,
    }))
    .check("orthogonality", t.verify_orthogonality().is_ok())
    .check("degree_sum", sum == g.order() as i64);
    out.tsv = Some(tsv);
    Ok(out)
}

fn section(amb: &Ambient, l: &str, phi: &str) -> Result<(Subgroup, ClassFunction)> {
    let l = amb.subgroup(l)?;
    let phi = character(&l, phi)?;
    Ok((l, phi))
}

pub fn form(amb: &Ambient, l: &str, phi: &str, verbose: bool) -> Result<Outcome> {
    let g = &amb.g;
    let (l, phi) = section(amb, l, phi)?;
    let laws = form_laws(g, &l, &phi)?;
    let f = Form::new(&l, &phi)?;
    let (_, reps) = g.coset_ids(&l);
    let grp = g.group();
    let mut grid = Vec::with_capacity(reps.len());
    for &x in &reps {
        let mut row = Vec::with_capacity(reps.len());
        for &y in &reps {
            row.push(if l.contains(grp.comm(x, y)) { json!(f.pairing(x, y)?.to_string()) } else { Value::Null });
        }
        grid.push(row);
    }
    Ok(Outcome::new(json!({
        "G": g.order(),
        "L": sub_json(&l),
        "phi": char_json(&phi, verbose),
        "coset_representatives": reps,
        "grid": grid,
        "defined_pairs": laws.pairs,
    }))
    .check("bilinear", laws.bilinear)
    .check("alternating", laws.alternating)
    .check("coset_invariant", laws.coset_invariant)
    .check("conjugation_invariant", laws.conjugation_invariant)
    .check("galois", laws.galois))
}

pub fn good(amb: &Ambient, l: &str, phi: &str, verbose: bool) -> Result<Outcome> {
    let g = &amb.g;
    let (l, phi) = section(amb, l, phi)?;
    let report = gallagher_check(g, &l, &phi)?;
    let f = Form::new(&l, &phi)?;
    let mut classes = Vec::new();
    for c in quotient_classes(g, &l) {
        let good = f.is_good(c.representative, g)?;
        classes.push(json!({"representative": c.representative, "cosets": c.cosets, "good": good}));
    }
    Ok(Outcome::new(json!({
        "G": g.order(),
        "L": sub_json(&l),
        "phi": char_json(&phi, verbose),
        "classes": classes,
        "good_classes": report.good_count,
        "irr_over_phi": report.irr_count,
    }))
    .check("gallagher_count", report.equal))
}

pub fn ramified(amb: &Ambient) -> Result<Outcome> {
    let g = &amb.g;
    let normals = normal_subgroups(g);
    let pos = |s: &Subgroup| normals.iter().position(|x| x == s);
    let mut rows = Vec::new();
    let mut agree = true;
    let mut roots = true;
    for (k, l, i, conds) in ramification_scan(g)? {
        agree &= conds.agree();
        let fully = conds.restriction && k != l;
        let root = if fully {
            let table = character_table(&l)?;
            let phi = &table.irr()[i];
            let ok = phi.field_of_values().contains_root_of_unity(quotient_exponent(&k, &l));
            roots &= ok;
            Some(ok)
        } else {
            None
        };
        rows.push(json!({
            "K": {"normal": pos(&k), "order": k.order()},
            "L": {"normal": pos(&l), "order": l.order()},
            "phi": i,
            "conditions": conds,
            "fully_ramified": fully,
            "root_of_unity": root,
        }));
    }
    let count = rows.iter().filter(|r| r["fully_ramified"] == json!(true)).count();
    Ok(Outcome::new(json!({"G": g.order(), "normal_subgroups": normals.len(), "sections": rows, "fully_ramified": count}))
        .check("conditions_agree", agree)
        .check("roots_of_unity", roots))
}

pub struct FiveArgs<'a> {
    pub k: &'a str,
    pub l: &'a str,
    pub phi: &'a str,
    pub control: Option<&'a str>,
    pub complement: Option<&'a str>,
}

pub fn five(amb: &Ambient, args: &FiveArgs, verbose: bool) -> Result<Outcome> {
    let g = &amb.g;
    let k = amb.subgroup(args.k)?;
    let (l, phi) = section(amb, args.l, args.phi)?;
    let mut five = CharacterFive::new(g, &k, &l, &phi)?;
    if five.kind != FiveKind::Invariant {
        return Err(Error::HypothesisViolated("the five command needs φ invariant in G".into()));
    }
    let mut checks: Vec<(String, bool)> = vec![("root_of_unity".into(), root_of_unity_check(&five))];
    let h = if let Some(c) = args.control {
        five = five.with_control(&amb.subgroup(c)?)?;
        let n = five.strongly_controlled_with.clone().expect("control recorded");
        let h = find_complement(&five, &n)?;
        let classes = good_complement_classes(&five, &n)?;
        checks.push(("complement_unique".into(), classes.len() == 1 && classes[0].is_conjugate_in(&h, g)));
        h
    } else if let Some(c) = args.complement {
        amb.subgroup(c)?
    } else if k == *g {
        l.clone()
    } else {
        return Err(Error::HypothesisViolated("give --control or --complement to fix H".into()));
    };
    checks.push(("complement".into(), h.join(&k)? == *g && h.intersection(&k)? == l));

    let sols = magic_search(&five, &h)?;
    let (psi, rule) = if five.odd_kl {
        (canonical_select(&sols, &five, &h)?, "canonical")
    } else if five.coprime {
        (coprime_select(&sols, &five)?, "determinant one")
    } else {
        let s = sols.first().cloned().ok_or_else(|| Error::NoSolution("no magic character".into()))?;
        (s, "first solution")
    };
    if five.odd_kl && five.coprime {
        checks.push(("canonical_is_coprime".into(), coprime_select(&sols, &five)?.psi == psi.psi));
    }
    let solutions: Vec<Value> = sols
        .iter()
        .map(|s| json!({"psi": values(&s.psi), "det_order": s.det_order, "rational": s.rational}))
        .collect();

    let mut levels = Vec::new();
    let mut structural = true;
    let mut parity_ok = true;
    for u in intermediate_subgroups(g, &k) {
        let corr = five_correspondence(&five, &h, &psi.psi, &u)?;
        let c = corr.checks;
        structural &= c.isometry && c.degree_ratio && c.galois && c.multiplication;
        let parity = if (u.order() / l.order()) % 2 == 1 && (five.abelian_kl || five.coprime) {
            let same = parity_correspondence(&five, &h, &u)?.same_pairs(&corr);
            parity_ok &= same;
            Some(same)
        } else {
            None
        };
        let pairs: Vec<Value> =
            corr.pairs.iter().map(|(a, b)| json!({"chi": char_json(a, verbose), "xi": char_json(b, verbose)})).collect();
        levels.push(json!({"U": u.order(), "checks": c, "parity_agrees": parity, "pairs": pairs}));
    }
    checks.push(("correspondence".into(), structural));
    checks.push(("parity".into(), parity_ok));

    let mut out = Outcome::new(json!({
        "five": five.describe(),
        "H": sub_json(&h),
        "magic_solutions": solutions,
        "psi": {"rule": rule, "values": values(&psi.psi), "degree": psi.psi.degree_i64(), "det_order": psi.det_order, "rational": psi.rational},
        "levels": levels,
    }));
    out.checks = checks;
    Ok(out)
}

fn setup_of(amb: &Ambient) -> Result<&CoprimeSetup> {
    amb.setup.as_ref().ok_or_else(|| Error::Parse("this command needs --n and --a".into()))
}

fn trace_json(t: &CorrespondenceTrace, verbose: bool) -> Value {
    if verbose {
        return serde_json::to_value(t).expect("serializable");
    }
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| json!({"tag": s.tag, "depth": s.depth, "orders": s.orders, "local_ratio": s.local_ratio, "parity": s.parity}))
        .collect();
    json!({"steps": steps, "ratio_consistent": t.ratio_consistent()})
}

pub fn isaacs(amb: &Ambient, chi: Option<&str>, verbose: bool) -> Result<Outcome> {
    let s = setup_of(amb)?;
    if let Some(sel) = chi {
        let chi = character(&s.n, sel)?;
        let (star, trace) = isaacs_correspondent(s, &chi)?;
        let independent = verify_trace_independence(s, &chi, &Strategy::all());
        return Ok(Outcome::new(json!({
            "setup": s.describe(),
            "pairs": [{"chi": char_json(&chi, verbose), "image": char_json(&star, verbose), "trace": trace_json(&trace, verbose)}],
        }))
        .check("field_preserved", chi.field_of_values() == star.field_of_values())
        .check("ratio_consistent", trace.ratio_consistent())
        .check("trace_independent", independent));
    }
    let bij = isaacs_bijection(s)?;
    let pairs: Vec<Value> = bij
        .pairs
        .iter()
        .zip(&bij.traces)
        .map(|((c, x), t)| json!({"chi": char_json(c, verbose), "image": char_json(x, verbose), "trace": trace_json(t, verbose)}))
        .collect();
    let c = bij.checks;
    Ok(Outcome::new(json!({"setup": s.describe(), "pairs": pairs, "schur_indices": bij.schur_indices}))
        .check("bijective", c.bijective)
        .check("fields_preserved", c.fields_preserved)
        .check("galois_equivariant", c.galois_equivariant)
        .check("u_equivariant", c.u_equivariant)
        .check("degrees_divide", c.degrees_divide)
        .check("traces_consistent", c.traces_consistent)
        .check("trace_independent", c.trace_independent))
}

pub fn above(amb: &Ambient, chi: Option<&str>, verbose: bool) -> Result<Outcome> {
    let s = setup_of(amb)?;
    let domain = match chi {
        Some(sel) => vec![character(&s.n, sel)?],
        None => s.invariant_characters()?,
    };
    let mut rows = Vec::new();
    let mut star_ok = true;
    let mut ratio_ok = true;
    let mut fields_ok = true;
    let mut count_ok = true;
    for chi in &domain {
        let ab = above_correspondence(s, chi)?;
        let (star, _) = isaacs_correspondent(s, chi)?;
        star_ok &= ab.chi_star == star;
        ratio_ok &= chi.degree_i64().zip(star.degree_i64()).is_some_and(|(a, b)| a == ab.ratio * b);
        fields_ok &= ab.pairs.iter().all(|(r, x)| r.field_of_values() == x.field_of_values());
        count_ok &= ab.over_chi == irr_over(&s.g, &s.n, chi)?.len();
        let pairs: Vec<Value> =
            ab.pairs.iter().map(|(r, x)| json!({"chi": char_json(r, verbose), "image": char_json(x, verbose)})).collect();
        rows.push(json!({
            "chi": char_json(chi, verbose),
            "chi_star": char_json(&ab.chi_star, verbose),
            "ratio": ab.ratio,
            "over_chi": ab.over_chi,
            "pairs": pairs,
        }));
    }
    Ok(Outcome::new(json!({"setup": s.describe(), "correspondences": rows}))
        .check("matches_isaacs", star_ok)
        .check("degree_ratio", ratio_ok)
        .check("fields_preserved", fields_ok)
        .check("over_chi_count", count_ok))
}

pub fn verify(threads: Option<usize>, criterion: Option<u8>) -> Result<Outcome> {
    let list: Vec<_> = items().into_iter().filter(|it| criterion.is_none_or(|c| it.criterion == c)).collect();
    if list.is_empty() {
        return Err(Error::Parse("no verification items selected".into()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let runs: Vec<(ItemReport, u128)> = pool.install(|| {
        list.par_iter()
            .map(|it| {
                let t0 = Instant::now();
                let r = run_item(it);
                (r, t0.elapsed().as_millis())
            })
            .collect()
    });
    let reports: Vec<ItemReport> = runs.iter().map(|(r, _)| r.clone()).collect();
    let timing: serde_json::Map<String, Value> = runs.iter().map(|(r, ms)| (r.id.clone(), json!(ms))).collect();
    let summary: Vec<_> = summarize(&reports).into_iter().filter(|s| s.items > 0).collect();
    let mut out = Outcome::new(json!({"items": reports, "criteria": summary}));
    for s in &summary {
        out.checks.push((format!("criterion_{}", s.criterion), s.pass));
    }
    out.timing = Some(Value::Object(timing));
    Ok(out)
}
