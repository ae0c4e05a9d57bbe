//! Permutations of `{1, ..., n}`.
//!
//! Internally points are stored 0-based; every textual form (cycle notation,
//! `Display`) is 1-based. Products compose left to right: `a * b` applies `a`
//! first and then `b`, so conjugation is `a^b = b^-1 * a * b`.

use std::fmt;
use std::ops::Mul;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 1-based images: `images[i]` is the image of point `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, &im) in images.iter().enumerate() {
            if im == 0 || im > n {
                return Err(GroupError::MalformedPermutation(format!(
                    "image {im} of point {} outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[im - 1], true) {
                return Err(GroupError::MalformedPermutation(format!("point {im} is hit twice")));
            }
            out.push((im - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// 0-based constructor used by the internal algorithms; callers guarantee bijectivity.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| x as usize == i)
        });
        Permutation { images }
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(GroupError::MalformedPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(GroupError::MalformedPermutation(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation such as `(1 2 3)(4 5)`; `()` or an empty
    /// string is the identity. Whitespace is ignored around parentheses and commas
    /// may separate points.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        parse_cycles(degree, text).map_err(|(column, message)| GroupError::Parse {
            line: 1,
            column,
            message,
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `p`.
    #[inline]
    pub fn image(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    /// 1-based images of every point.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// `self^by = by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[by.images[i] as usize] = by.images[x as usize];
        }
        Permutation { images: out }
    }

    /// `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Self {
        self.inverse().compose(&other.inverse()).compose(self).compose(other)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Element order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// First (smallest) 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x as usize).map(|(i, _)| i)
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point, in order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Extends to a larger degree, fixing the new points, optionally shifting all points.
    pub(crate) fn embed(&self, degree: usize, shift: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + shift] = x + shift as u32;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

// Returns (1-based column, message) on failure.
fn parse_cycles(degree: usize, text: &str) -> std::result::Result<Permutation, (usize, String)> {
    let chars: Vec<char> = text.chars().collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            c if c.is_whitespace() || c == ',' => i += 1,
            '(' => {
                if current.is_some() {
                    return Err((col, "nested '('".into()));
                }
                current = Some(Vec::new());
                i += 1;
            }
            ')' => match current.take() {
                Some(cy) => {
                    if !cy.is_empty() {
                        cycles.push(cy);
                    }
                    i += 1;
                }
                None => return Err((col, "unmatched ')'".into())),
            },
            d if d.is_ascii_digit() => {
                let Some(cy) = current.as_mut() else {
                    return Err((col, "point outside parentheses".into()));
                };
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let p: usize = s.parse().map_err(|_| (col, format!("bad point '{s}'")))?;
                if p == 0 || p > degree {
                    return Err((col, format!("point {p} outside 1..={degree}")));
                }
                cy.push(p);
            }
            other => return Err((col, format!("unexpected character '{other}'"))),
        }
    }
    if current.is_some() {
        return Err((chars.len() + 1, "unclosed '('".into()));
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| (1, e.to_string()))
}
