//! Named groups, the group-spec text format, and report output.

use crate::classifiers::ClassReport;
use crate::error::{GroupError, Result};
use crate::group::{direct_product, PermGroup};
use crate::perm::Permutation;

const MAX_NATURAL_DEGREE: usize = 8;

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

fn perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("valid constructor cycles")
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic group needs n ≥ 1".into()));
    }
    PermGroup::new(n, vec![perm(n, &[cycle(1..=n)])])
}

pub fn elementary_abelian(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(GroupError::InvalidParameter("rank must be at least 1".into()));
    }
    let degree = p * k;
    let gens = (0..k).map(|i| perm(degree, &[cycle(i * p + 1..=i * p + p)])).collect();
    PermGroup::new(degree, gens)
}

/// Dihedral group of order `2n`; `n = 1` and `n = 2` give `C2` and the Klein four-group.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(GroupError::InvalidParameter("dihedral group needs n ≥ 1".into())),
        1 => PermGroup::from_cycles(2, &["(1 2)"]),
        2 => PermGroup::from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        _ => {
            let refl: Vec<Vec<usize>> = (2..=n).filter(|&i| i < n + 2 - i).map(|i| vec![i, n + 2 - i]).collect();
            PermGroup::new(n, vec![perm(n, &[cycle(1..=n)]), perm(n, &refl)])
        }
    }
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_NATURAL_DEGREE {
        return Err(GroupError::InvalidParameter(format!("symmetric degree {n} outside 1..=8")));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::new(n, vec![perm(n, &[vec![1, 2]]), perm(n, &[cycle(1..=n)])])
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_NATURAL_DEGREE {
        return Err(GroupError::InvalidParameter(format!("alternating degree {n} outside 1..=8")));
    }
    let gens = (3..=n).map(|k| perm(n, &[vec![1, 2, k]])).collect();
    PermGroup::new(n, gens)
}

/// `x ↦ x + 1` and `x ↦ ax` on the residues mod `p`, `a` a primitive root.
pub fn affine_line(p: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    let root = (1..p)
        .find(|&a| (1..p - 1).all(|e| (0..e).fold(1, |acc, _| acc * a % p) != 1))
        .unwrap_or(1);
    let shift: Vec<usize> = (0..p).map(|x| (x + 1) % p + 1).collect();
    let scale: Vec<usize> = (0..p).map(|x| x * root % p + 1).collect();
    PermGroup::new(p, vec![Permutation::from_images(&shift)?, Permutation::from_images(&scale)?])
}

// right action v ↦ vM on the nonzero vectors of F_p^2, vector (a, b) on point a + pb
fn linear_on_vectors(p: usize, matrices: &[[[usize; 2]; 2]]) -> Result<PermGroup> {
    let degree = p * p - 1;
    let gens = matrices
        .iter()
        .map(|m| {
            let images: Vec<usize> = (1..=degree)
                .map(|v| {
                    let (a, b) = (v % p, v / p);
                    let x = (a * m[0][0] + b * m[1][0]) % p;
                    let y = (a * m[0][1] + b * m[1][1]) % p;
                    x + p * y
                })
                .collect();
            Permutation::from_images(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

fn checked(g: Result<PermGroup>, order: u128) -> Result<PermGroup> {
    let g = g?;
    if g.order() != order {
        return Err(GroupError::Checksum { expected: order, found: g.order() });
    }
    Ok(g)
}

/// Quaternion group acting regularly on the nonzero vectors of `F_3^2`.
pub fn quaternion8() -> Result<PermGroup> {
    checked(linear_on_vectors(3, &[[[0, 2], [1, 0]], [[1, 1], [1, 2]]]), 8)
}

/// `SL(2,3)` on the 8 nonzero vectors of `F_3^2`.
pub fn sl2_3() -> Result<PermGroup> {
    checked(linear_on_vectors(3, &[[[1, 1], [0, 1]], [[0, 2], [1, 0]]]), 24)
}

/// `GL(2,3)` on the 8 nonzero vectors of `F_3^2`.
pub fn gl2_3() -> Result<PermGroup> {
    checked(linear_on_vectors(3, &[[[1, 1], [0, 1]], [[0, 2], [1, 0]], [[2, 0], [0, 1]]]), 48)
}

/// `SL(2,5)` on the 24 nonzero vectors of `F_5^2`.
pub fn sl2_5() -> Result<PermGroup> {
    checked(linear_on_vectors(5, &[[[1, 1], [0, 1]], [[0, 4], [1, 0]]]), 120)
}

/// `C5 ⋊ C4` on 5 points: `x ↦ x + 1` and `x ↦ 2x`.
pub fn frobenius20() -> PermGroup {
    PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(2 3 5 4)"]).expect("valid generators")
}

/// `(C5 × C5) ⋊ C4` with the generator of `C4` squaring every element, on
/// 10 points; returns the group and its two coordinate subgroups of order 5.
pub fn order100_example() -> (PermGroup, PermGroup, PermGroup) {
    let g = PermGroup::from_cycles(
        10,
        &["(1 2 3 4 5)", "(6 7 8 9 10)", "(2 3 5 4)(7 8 10 9)"],
    )
    .expect("valid generators");
    let m = PermGroup::from_cycles(10, &["(1 2 3 4 5)"]).expect("valid generators");
    let n = PermGroup::from_cycles(10, &["(6 7 8 9 10)"]).expect("valid generators");
    (g, m, n)
}

/// Generators of `PΓL(2,9)` on the projective line over `F_9 = F_3[i]`
/// (point `a + 3b + 1` for `a + bi`, point 10 for infinity): `x ↦ x + 1`,
/// `x ↦ (1+i)x`, `x ↦ -1/x` and `x ↦ x³`.
pub const AUT_A6_GENERATORS: [&str; 4] = [
    "(1 2 3)(4 5 6)(7 8 9)",
    "(2 5 7 8 3 9 4 6)",
    "(1 10)(2 3)(5 8)(6 9)",
    "(4 7)(5 8)(6 9)",
];

pub fn aut_a6() -> Result<PermGroup> {
    checked(PermGroup::from_cycles(10, &AUT_A6_GENERATORS), 1440)
}

/// A named group of the default corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
}

fn entry(name: impl Into<String>, group: PermGroup) -> CorpusEntry {
    CorpusEntry { name: name.into(), group }
}

/// The fixed verification corpus, in a fixed order.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let ok = |r: Result<PermGroup>| r.expect("corpus constructor");
    let mut out = vec![entry("trivial", PermGroup::trivial(1))];
    for n in [2, 3, 4, 6, 8, 9, 12] {
        out.push(entry(format!("C{n}"), ok(cyclic(n))));
    }
    for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2)] {
        out.push(entry(format!("C{p}^{k}"), ok(elementary_abelian(p, k))));
    }
    for n in [3, 4, 5, 6, 8] {
        out.push(entry(format!("D{}", 2 * n), ok(dihedral(n))));
    }
    out.push(entry("Q8", ok(quaternion8())));
    for n in [3, 4, 5] {
        out.push(entry(format!("S{n}"), ok(symmetric(n))));
    }
    for n in [4, 5] {
        out.push(entry(format!("A{n}"), ok(alternating(n))));
    }
    out.push(entry("Frob20", frobenius20()));
    out.push(entry("AGL(1,7)", ok(affine_line(7))));
    out.push(entry("SL(2,3)", ok(sl2_3())));
    out.push(entry("GL(2,3)", ok(gl2_3())));
    out.push(entry("SL(2,5)", ok(sl2_5())));
    out.push(entry("C5^2:C4", order100_example().0));
    let products: [(&str, PermGroup, PermGroup); 9] = [
        ("C4xC2", ok(cyclic(4)), ok(cyclic(2))),
        ("C2xS3", ok(cyclic(2)), ok(symmetric(3))),
        ("S3xS3", ok(symmetric(3)), ok(symmetric(3))),
        ("C4xS3", ok(cyclic(4)), ok(symmetric(3))),
        ("C2xA4", ok(cyclic(2)), ok(alternating(4))),
        ("C2xS4", ok(cyclic(2)), ok(symmetric(4))),
        ("C3xFrob20", ok(cyclic(3)), frobenius20()),
        ("C2xA5", ok(cyclic(2)), ok(alternating(5))),
        ("S3xA5", ok(symmetric(3)), ok(alternating(5))),
    ];
    for (name, a, b) in products {
        out.push(entry(name, direct_product(&a, &b)));
    }
    out.push(entry("Aut(A6)", ok(aut_a6())));
    out
}

/// Text description of a group: `name:`, `degree:`, one `gen:` per generator
/// and an optional `order:` checksum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub expected_order: Option<u128>,
}

impl GroupSpec {
    pub fn of(name: &str, g: &PermGroup) -> GroupSpec {
        GroupSpec {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|x| x.to_string()).collect(),
            expected_order: Some(g.order()),
        }
    }

    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut name = None;
        let mut degree = None;
        let mut gens: Vec<(usize, usize, String)> = Vec::new();
        let mut order = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.len() - trimmed.len();
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(parse_error(line, indent + 1, "expected `key: value`"));
            };
            let value_col = indent + key.len() + 2 + (value.len() - value.trim_start().len());
            let value = value.trim();
            let number = |what: &str| -> Result<u128> {
                value
                    .parse::<u128>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| parse_error(line, value_col, &format!("{what} must be a positive integer")))
            };
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "degree" => degree = Some(number("degree")? as usize),
                "gen" => gens.push((line, value_col, value.to_string())),
                "order" => order = Some(number("order")?),
                other => return Err(parse_error(line, indent + 1, &format!("unknown key `{other}`"))),
            }
        }
        let degree = degree.ok_or_else(|| parse_error(text.lines().count().max(1), 1, "missing `degree:`"))?;
        for (line, col, g) in &gens {
            Permutation::parse(degree, g).map_err(|e| match e {
                GroupError::Parse { column, message, .. } => GroupError::Parse {
                    line: *line,
                    column: col + column - 1,
                    message,
                },
                other => other,
            })?;
        }
        Ok(GroupSpec {
            name: name.unwrap_or_default(),
            degree,
            generators: gens.into_iter().map(|(_, _, g)| g).collect(),
            expected_order: order,
        })
    }

    pub fn build(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(self.degree, g))
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::new(self.degree, gens)?;
        if let Some(expected) = self.expected_order {
            if expected != g.order() {
                return Err(GroupError::Checksum { expected, found: g.order() });
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            out.push_str(&format!("name: {}\n", self.name));
        }
        out.push_str(&format!("degree: {}\n", self.degree));
        for g in &self.generators {
            out.push_str(&format!("gen: {g}\n"));
        }
        if let Some(o) = self.expected_order {
            out.push_str(&format!("order: {o}\n"));
        }
        out
    }
}

fn parse_error(line: usize, column: usize, message: &str) -> GroupError {
    GroupError::Parse { line, column, message: message.to_string() }
}

/// Parses a spec and builds its group, enforcing the checksum.
pub fn load_spec(text: &str) -> Result<PermGroup> {
    GroupSpec::parse(text)?.build()
}

pub fn save_spec(name: &str, g: &PermGroup) -> String {
    GroupSpec::of(name, g).to_text()
}

/// The report as pretty-printed JSON.
pub fn save_report(report: &ClassReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialises");
    s.push('\n');
    s
}
