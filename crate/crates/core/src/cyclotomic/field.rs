use super::{euler_phi, gcd, lcm, Cyclotomic};
use serde::Serialize;
use std::fmt;

/// An abelian number field, given as the fixed field of a subgroup of
/// `(Z/n)^*` acting on `Q(ζ_n)`, with `n` the minimal such conductor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumberField {
    conductor: u64,
    /// Sorted residues fixing the field; for `n = 1` this is `[1]`.
    stabilizer: Vec<u64>,
}

fn residue(k: u64, n: u64) -> u64 {
    if n == 1 {
        1
    } else {
        k % n
    }
}

pub(crate) fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField { conductor: 1, stabilizer: vec![1] }
    }

    /// The full cyclotomic field `Q(ζ_n)`.
    pub fn cyclotomic(n: u64) -> Self {
        Self::from_stabilizer(n, vec![1])
    }

    /// The smallest field containing every value.
    pub fn generated_by(values: &[Cyclotomic]) -> Self {
        let n = values.iter().fold(1, |acc, v| lcm(acc, v.conductor()));
        let stab: Vec<u64> = units(n)
            .into_iter()
            .filter(|&k| values.iter().all(|v| v.galois_mod(k, n) == *v))
            .collect();
        Self::from_stabilizer(n, stab)
    }

    fn from_stabilizer(n: u64, stab: Vec<u64>) -> Self {
        let us = units(n);
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        for m in divisors {
            // the field sits in Q(ζ_m) iff every k ≡ 1 (mod m) fixes it
            let ok = us.iter().filter(|&&k| residue(k, m) == 1).all(|k| stab.binary_search(k).is_ok());
            if ok {
                let mut s: Vec<u64> = stab.iter().map(|&k| residue(k, m)).collect();
                s.sort_unstable();
                s.dedup();
                return NumberField { conductor: m, stabilizer: s };
            }
        }
        unreachable!("m = n always qualifies")
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn stabilizer(&self) -> &[u64] {
        &self.stabilizer
    }

    pub fn degree(&self) -> u64 {
        euler_phi(self.conductor) / self.stabilizer.len() as u64
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// Whether the unit `k` (modulo a multiple of the conductor) fixes the field.
    pub fn fixed_by(&self, k: u64) -> bool {
        self.stabilizer.binary_search(&residue(k, self.conductor)).is_ok()
    }

    pub fn contains(&self, x: &Cyclotomic) -> bool {
        let n = lcm(self.conductor, x.conductor());
        units(n).into_iter().filter(|&k| self.fixed_by(k)).all(|k| x.galois_mod(k, n) == *x)
    }

    pub fn is_subfield_of(&self, other: &NumberField) -> bool {
        let n = lcm(self.conductor, other.conductor);
        units(n).into_iter().filter(|&k| other.fixed_by(k)).all(|k| self.fixed_by(k))
    }

    /// Whether `ζ_e` lies in the field.
    pub fn contains_root_of_unity(&self, e: u64) -> bool {
        let n = lcm(self.conductor, e);
        units(n).into_iter().filter(|&k| self.fixed_by(k)).all(|k| residue(k, e) == 1)
    }

    pub fn compositum(&self, other: &NumberField) -> Self {
        let n = lcm(self.conductor, other.conductor);
        let stab = units(n).into_iter().filter(|&k| self.fixed_by(k) && other.fixed_by(k)).collect();
        Self::from_stabilizer(n, stab)
    }

    /// Residues modulo `modulus` (a multiple of both conductors) that fix
    /// `self` and represent `Gal(self·other / self)`, one per coset of the
    /// compositum's stabilizer.
    pub fn relative_galois(&self, other: &NumberField, modulus: u64) -> Vec<u64> {
        let top = self.compositum(other);
        let mut seen: Vec<Vec<u64>> = Vec::new();
        let mut reps = Vec::new();
        for k in units(modulus) {
            if !self.fixed_by(k) {
                continue;
            }
            let mut coset: Vec<u64> =
                top.stabilizer.iter().map(|&s| residue(s * k, top.conductor)).collect();
            coset.sort_unstable();
            if !seen.contains(&coset) {
                seen.push(coset);
                reps.push(k);
            }
        }
        reps
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "Q")
        } else if self.stabilizer.len() == 1 {
            write!(f, "Q(z{})", self.conductor)
        } else {
            write!(f, "Q(z{})^{:?}", self.conductor, self.stabilizer)
        }
    }
}
