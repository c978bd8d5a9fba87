//! Subgroup and character selectors given on the command line.

use fgct::corpus::{named_action, parse_group_arg};
use fgct::group::normal_subgroups;
use fgct::isaacs::CoprimeSetup;
use fgct::{character_table, ClassFunction, Error, Result, Subgroup};

/// The ambient group of a job, with the pieces of a coprime setup when the
/// group was built from `--n/--a/--action`.
pub struct Ambient {
    pub g: Subgroup,
    pub setup: Option<CoprimeSetup>,
}

impl Ambient {
    pub fn from_group(spec: &str) -> Result<Ambient> {
        Ok(Ambient { g: Subgroup::whole(&parse_group_arg(spec)?), setup: None })
    }

    pub fn from_setup(n: &str, a: &str, action: &str, a_power: Option<i64>) -> Result<Ambient> {
        let n = parse_group_arg(n)?;
        let a = parse_group_arg(a)?;
        let mut setup = CoprimeSetup::from_action(&named_action(action, &n, &a)?)?;
        if let Some(k) = a_power {
            let grp = setup.g.group().clone();
            let gen = *setup
                .a
                .elements()
                .iter()
                .find(|&&x| grp.elem_order(x) == setup.a.order())
                .ok_or_else(|| Error::InvalidAction("--a-power needs a cyclic acting group".into()))?;
            let sub = Subgroup::generated(&grp, &[grp.pow(gen, k)]);
            setup = CoprimeSetup::within(&setup.g, &setup.n, &sub)?;
        }
        Ok(Ambient { g: setup.g.clone(), setup: Some(setup) })
    }

    fn named(&self, name: &str) -> Option<Subgroup> {
        match name {
            "G" | "whole" => return Some(self.g.clone()),
            "1" | "trivial" => return Some(Subgroup::trivial(self.g.group())),
            _ => {}
        }
        let s = self.setup.as_ref()?;
        Some(match name {
            "N" => s.n.clone(),
            "A" => s.a.clone(),
            "AN" => s.an.clone(),
            "C" => s.c.clone(),
            "U" => s.u.clone(),
            _ => return None,
        })
    }

    /// `G`, `1`, `N`, `A`, `AN`, `C`, `U`, `center`, `derived`, `sylow(p)`,
    /// `center(X)`, `derived(X)`, `sylow(p,X)`, `normal(i)` (index into the
    /// normal subgroups of `G` by order), or a JSON array of generators.
    pub fn subgroup(&self, spec: &str) -> Result<Subgroup> {
        let spec = spec.trim();
        if spec.starts_with('[') {
            let gens: Vec<usize> =
                serde_json::from_str(spec).map_err(|e| Error::Parse(format!("generator list: {e}")))?;
            if let Some(&bad) = gens.iter().find(|&&x| x >= self.g.order()) {
                return Err(Error::Parse(format!("element {bad} is outside the group")));
            }
            return Ok(Subgroup::generated(self.g.group(), &gens));
        }
        if let Some(s) = self.named(spec) {
            return Ok(s);
        }
        let (head, arg) = match spec.split_once('(') {
            Some((h, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced selector {spec:?}")))?;
                (h.trim(), Some(inner.trim()))
            }
            None => (spec, None),
        };
        let base = |x: Option<&str>| match x {
            Some(x) if !x.is_empty() => self.subgroup(x),
            _ => Ok(self.g.clone()),
        };
        match head {
            "center" => Ok(base(arg)?.center()),
            "derived" => Ok(base(arg)?.derived()),
            "sylow" => {
                let arg = arg.ok_or_else(|| Error::Parse("sylow needs a prime".into()))?;
                let (p, rest) = match arg.split_once(',') {
                    Some((p, r)) => (p, Some(r)),
                    None => (arg, None),
                };
                let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
                Ok(base(rest)?.sylow(p))
            }
            "normal" => {
                let i: usize = arg
                    .and_then(|a| a.parse().ok())
                    .ok_or_else(|| Error::Parse("normal(i) needs an index".into()))?;
                let all = normal_subgroups(&self.g);
                let n = all.len();
                all.into_iter().nth(i).ok_or_else(|| Error::Parse(format!("only {n} normal subgroups")))
            }
            _ => Err(Error::Parse(format!("unknown subgroup selector {spec:?}"))),
        }
    }
}

/// A character of `l`: a table index, or a comma-separated filter over
/// `trivial`, `faithful`, `rational`, `degree=d`, `conductor=n`, which must
/// match exactly one character unless `first` is among the tokens.
pub fn character(l: &Subgroup, spec: &str) -> Result<ClassFunction> {
    let table = character_table(l)?;
    let irr = table.irr();
    let spec = spec.trim();
    if let Ok(i) = spec.parse::<usize>() {
        return irr
            .get(i)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("character index {i} out of range (table has {})", irr.len())));
    }
    let mut first = false;
    let mut keep: Vec<&ClassFunction> = irr.iter().collect();
    for tok in spec.split(',').map(str::trim) {
        let num = |v: &str| v.parse::<i64>().map_err(|_| Error::Parse(format!("bad number in {tok:?}")));
        match tok.split_once('=') {
            Some(("degree", v)) => {
                let d = num(v)?;
                keep.retain(|c| c.degree_i64() == Some(d));
            }
            Some(("conductor", v)) => {
                let n = num(v)?;
                keep.retain(|c| c.field_of_values().conductor() as i64 == n);
            }
            Some(_) => return Err(Error::Parse(format!("unknown character filter {tok:?}"))),
            None => match tok {
                "first" => first = true,
                "trivial" => keep.retain(|c| c.values().iter().all(|v| v.is_one())),
                "faithful" => keep.retain(|c| c.kernel().is_trivial()),
                "rational" => keep.retain(|c| c.is_rational()),
                _ => return Err(Error::Parse(format!("unknown character filter {tok:?}"))),
            },
        }
    }
    match keep.len() {
        0 => Err(Error::Parse(format!("no character matches {spec:?}"))),
        1 => Ok(keep[0].clone()),
        _ if first => Ok(keep[0].clone()),
        k => Err(Error::Parse(format!("{k} characters match {spec:?}; refine the filter or add \"first\""))),
    }
}
