//! Permutations of `0..degree`, composed left to right: `p * q` applies `p` first.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)` or `(0,1)`; `()` is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let bad = |m: &str| Error::InvalidPermutation(format!("{s:?}: {m}"));
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = &rest[1..close];
            let pts: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p >= degree {
                    return Err(bad("point out of range"));
                }
                if seen[p] {
                    return Err(bad("point repeated"));
                }
                seen[p] = true;
            }
            for (i, &p) in pts.iter().enumerate() {
                images[p] = pts[(i + 1) % pts.len()] as u32;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if done[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !done[i] {
                done[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles("(0 1 2)(3,4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(Perm::parse_cycles("(0 0)", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }
}
