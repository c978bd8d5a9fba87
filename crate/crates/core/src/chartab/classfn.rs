use super::{class_data, character_table, ClassData};
use crate::cyclotomic::{gcd, sum_all, Cyclotomic, NumberField};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// A class function of a subgroup `H`: one value per conjugacy class of `H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassFunction {
    sub: Subgroup,
    values: Vec<Cyclotomic>,
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

impl ClassFunction {
    pub fn new(sub: &Subgroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != class_data(sub).len() {
            return Err(Error::Parse(format!(
                "class function needs {} values, got {}",
                class_data(sub).len(),
                values.len()
            )));
        }
        Ok(ClassFunction { sub: sub.clone(), values })
    }

    pub(crate) fn from_values(sub: &Subgroup, values: Vec<Cyclotomic>) -> Self {
        ClassFunction { sub: sub.clone(), values }
    }

    /// Builds a class function from a value on every element of `H`.
    pub fn from_fn(sub: &Subgroup, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let cd = class_data(sub);
        let values = (0..cd.len()).map(|k| f(cd.representative(k))).collect();
        ClassFunction { sub: sub.clone(), values }
    }

    pub fn trivial(sub: &Subgroup) -> Self {
        let n = class_data(sub).len();
        ClassFunction { sub: sub.clone(), values: vec![Cyclotomic::one(); n] }
    }

    pub fn zero(sub: &Subgroup) -> Self {
        let n = class_data(sub).len();
        ClassFunction { sub: sub.clone(), values: vec![Cyclotomic::zero(); n] }
    }

    pub fn regular(sub: &Subgroup) -> Self {
        let n = class_data(sub).len();
        let mut values = vec![Cyclotomic::zero(); n];
        values[0] = Cyclotomic::from_integer(sub.order() as i64);
        ClassFunction { sub: sub.clone(), values }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn classes(&self) -> Arc<ClassData> {
        class_data(&self.sub)
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// The degree as an integer, when it is one.
    pub fn degree_i64(&self) -> Option<i64> {
        self.values[0].to_i64()
    }

    /// Value at an element of `H`.
    pub fn value_at(&self, x: usize) -> Result<&Cyclotomic> {
        let cd = class_data(&self.sub);
        let k = cd.class_of(x).ok_or(Error::HandleMismatch)?;
        Ok(&self.values[k])
    }

    pub(crate) fn at(&self, cd: &ClassData, x: usize) -> &Cyclotomic {
        &self.values[cd.class_index(x)]
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.sub == other.sub {
            Ok(())
        } else {
            Err(Error::HandleMismatch)
        }
    }

    /// `(α, β) = |H|⁻¹ Σ α(h) conj(β(h))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        self.check_same(other)?;
        let cd = class_data(&self.sub);
        let ord = self.sub.order();
        let terms = (0..cd.len()).filter(|&k| !self.values[k].is_zero() && !other.values[k].is_zero()).map(|k| {
            let prod = &self.values[k] * &other.values[k].complex_conjugate();
            prod.scale(&ratio(cd.size(k), ord))
        });
        Ok(sum_all(terms))
    }

    pub fn norm(&self) -> Cyclotomic {
        self.inner_product(self).expect("same subgroup")
    }

    /// Restriction to a subgroup `K ≤ H`.
    pub fn restrict(&self, to: &Subgroup) -> Result<ClassFunction> {
        if !to.is_subgroup_of(&self.sub) {
            return Err(Error::HandleMismatch);
        }
        if *to == self.sub {
            return Ok(self.clone());
        }
        let src = class_data(&self.sub);
        let dst = class_data(to);
        let values = (0..dst.len()).map(|k| self.at(&src, dst.representative(k)).clone()).collect();
        Ok(ClassFunction { sub: to.clone(), values })
    }

    /// Induction to an overgroup `G ≥ H`.
    pub fn induce(&self, to: &Subgroup) -> Result<ClassFunction> {
        if !self.sub.is_subgroup_of(to) {
            return Err(Error::HandleMismatch);
        }
        if *to == self.sub {
            return Ok(self.clone());
        }
        let src = class_data(&self.sub);
        let dst = class_data(to);
        let mut sums: Vec<Vec<Cyclotomic>> = vec![Vec::new(); dst.len()];
        for k in 0..src.len() {
            if self.values[k].is_zero() {
                continue;
            }
            let gk = dst.class_index(src.representative(k));
            sums[gk].push(self.values[k].scale(&ratio(src.size(k), 1)));
        }
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(k, terms)| {
                // |C_G(g)| / |H| times the sum over H ∩ class(g)
                sum_all(terms).scale(&ratio(dst.centralizer_order(k), self.sub.order()))
            })
            .collect();
        Ok(ClassFunction { sub: to.clone(), values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction { sub: self.sub.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Pointwise product.
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    /// Pointwise quotient; fails where `other` vanishes.
    pub fn divide(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.div(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    pub fn complex_conjugate(&self) -> ClassFunction {
        ClassFunction { sub: self.sub.clone(), values: self.values.iter().map(|v| v.complex_conjugate()).collect() }
    }

    /// Value-wise Galois action `ζ ↦ ζ^k`; `k` must be prime to `exp(H)`.
    pub fn galois_conjugate(&self, k: i64) -> Result<ClassFunction> {
        let e = self.sub.exponent();
        if gcd(k.rem_euclid(e as i64) as u64, e) != 1 {
            return Err(Error::NotCoprime(k, e));
        }
        let values = self.values.iter().map(|v| v.galois(k)).collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    /// `φ^g(x) = φ(g x g⁻¹)`, for `g` normalizing `H`.
    pub fn conjugate_by(&self, g: usize) -> Result<ClassFunction> {
        let grp = self.sub.group();
        let gi = grp.inv(g);
        if !self.sub.elements().iter().all(|&x| self.sub.contains(grp.conj(x, gi))) {
            return Err(Error::NotNormal("conjugating element does not normalize the subgroup".into()));
        }
        let cd = class_data(&self.sub);
        let values = (0..cd.len()).map(|k| self.at(&cd, grp.conj(cd.representative(k), gi)).clone()).collect();
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    pub fn field_of_values(&self) -> NumberField {
        NumberField::generated_by(&self.values)
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(|v| v.is_rational())
    }

    pub fn is_linear(&self) -> bool {
        self.values[0].is_one()
    }

    /// `ker χ = {h : χ(h) = χ(1)}`.
    pub fn kernel(&self) -> Subgroup {
        let cd = class_data(&self.sub);
        let elems: Vec<usize> = (0..cd.len())
            .filter(|&k| self.values[k] == self.values[0])
            .flat_map(|k| cd.class(k).iter().copied())
            .collect();
        Subgroup::generated(self.sub.group(), &elems)
    }

    /// Multiplicities against `Irr(H)`, in table order.
    pub fn decompose(&self) -> Result<Vec<Cyclotomic>> {
        let t = character_table(&self.sub)?;
        t.irr.iter().map(|chi| self.inner_product(chi)).collect()
    }

    /// Integer multiplicities, or `NotGenuineCharacter`.
    pub fn multiplicities(&self) -> Result<Vec<i64>> {
        let m = self.decompose()?;
        m.iter()
            .map(|c| c.to_i64().filter(|&x| x >= 0).ok_or(Error::NotGenuineCharacter))
            .collect()
    }

    pub fn is_character(&self) -> bool {
        self.multiplicities().is_ok()
    }

    pub fn is_irreducible(&self) -> bool {
        character_table(&self.sub).map(|t| t.index_of(self).is_some()).unwrap_or(false)
    }

    /// Irreducible constituents `(table index, multiplicity)` of a genuine character.
    pub fn constituents(&self) -> Result<Vec<(usize, i64)>> {
        Ok(self.multiplicities()?.into_iter().enumerate().filter(|(_, m)| *m > 0).collect())
    }

    /// Eigenvalue exponents of a representation affording `self` at class `k`:
    /// `m[i]` is the multiplicity of `ζ_o^i`, where `o` is the representative's order.
    pub fn eigenvalue_multiplicities(&self, k: usize) -> Result<Vec<i64>> {
        let cd = class_data(&self.sub);
        let o = cd.rep_order(k);
        let vals: Vec<&Cyclotomic> = (0..o).map(|t| &self.values[cd.power_class(k, t as i64)]).collect();
        let oinv = ratio(1, o as usize);
        let mut out = Vec::with_capacity(o as usize);
        for i in 0..o {
            let terms = vals.iter().enumerate().map(|(t, v)| {
                let e = (o - (i * t as u64) % o) % o;
                *v * &Cyclotomic::root_of_unity(o, e as i64)
            });
            let m = sum_all(terms).scale(&oinv);
            let m = m.to_i64().filter(|&x| x >= 0).ok_or(Error::NotGenuineCharacter)?;
            out.push(m);
        }
        Ok(out)
    }

    /// `det χ`, computed from the eigenvalue multisets on cyclic subgroups.
    pub fn determinant(&self) -> Result<ClassFunction> {
        if self.multiplicities().is_err() {
            return Err(Error::NotGenuineCharacter);
        }
        let cd = class_data(&self.sub);
        let mut values = Vec::with_capacity(cd.len());
        for k in 0..cd.len() {
            let o = cd.rep_order(k);
            let m = self.eigenvalue_multiplicities(k)?;
            let s: u64 = m.iter().enumerate().map(|(i, &c)| (i as u64 * c as u64) % o).sum::<u64>() % o;
            values.push(Cyclotomic::root_of_unity(o, s as i64));
        }
        Ok(ClassFunction { sub: self.sub.clone(), values })
    }

    /// Order of a linear character (lcm of the orders of its values).
    pub fn linear_order(&self) -> Result<u64> {
        let mut ord = 1u64;
        for v in &self.values {
            let o = v.root_order().ok_or(Error::NotIrreducible)?;
            ord = num_integer::lcm(ord, o);
        }
        Ok(ord)
    }

    /// `o(χ)`: the order of `det χ`.
    pub fn determinantal_order(&self) -> Result<u64> {
        self.determinant()?.linear_order()
    }

    /// Frobenius–Schur indicator `|H|⁻¹ Σ χ(h²)`.
    pub fn frobenius_schur(&self) -> Cyclotomic {
        let cd = class_data(&self.sub);
        let ord = self.sub.order();
        let g = self.sub.group();
        let terms = (0..cd.len()).map(|k| {
            let sq = cd.class_index(g.mul(cd.representative(k), cd.representative(k)));
            self.values[sq].scale(&ratio(cd.size(k), ord))
        });
        sum_all(terms)
    }

    /// Whether every value is nonzero.
    pub fn nowhere_zero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    /// `|χ(h)|²` on each class, required to be rational.
    pub fn abs_squared(&self) -> Result<Vec<BigRational>> {
        self.values
            .iter()
            .map(|v| v.abs_squared().to_rational().ok_or_else(|| crate::error::theorem("|x|^2 is not rational")))
            .collect()
    }

    pub fn is_nonnegative_real_degree(&self) -> bool {
        self.values[0].to_rational().is_some_and(|d| !d.is_negative() && !d.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.values).expect("serializable")
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// Sum of class functions on one subgroup.
pub fn sum_functions(sub: &Subgroup, items: &[ClassFunction]) -> Result<ClassFunction> {
    let n = class_data(sub).len();
    let mut cols: Vec<Vec<Cyclotomic>> = vec![Vec::new(); n];
    for f in items {
        if f.subgroup() != sub {
            return Err(Error::HandleMismatch);
        }
        for (k, v) in f.values().iter().enumerate() {
            cols[k].push(v.clone());
        }
    }
    Ok(ClassFunction::from_values(sub, cols.into_iter().map(sum_all).collect()))
}
