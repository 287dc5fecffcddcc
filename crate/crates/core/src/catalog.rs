//! Named group constructors and generator-file ingestion.
//!
//! Catalog grammar: `cyclic(n)`, `dihedral(n)`, `symmetric(n)`,
//! `alternating(n)`, `quaternion8`, `sl23`, and
//! `direct_product(spec, spec)` with nesting. Symmetric, alternating,
//! dihedral and cyclic groups act naturally; `quaternion8` and `sl23` ship
//! as hard-coded left-regular representations; direct products act on the
//! disjoint union of the factors' points.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_SIZE_LIMIT};
use crate::perm::Perm;
use std::fmt;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    Sl23,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

// Left-regular representations, elements in a fixed enumeration order.
// Quaternion units ordered 1, -1, i, -i, j, -j, k, -k; the generators are
// left multiplication by i and j.
const QUATERNION8_GENS: [[u32; 8]; 2] = [
    [2, 3, 1, 0, 6, 7, 5, 4],
    [4, 5, 7, 6, 1, 0, 2, 3],
];

// SL(2,3) matrices enumerated lexicographically by entries (a,b,c,d) over
// GF(3); generators are left multiplication by [[0,-1],[1,0]] (order 4)
// and [[1,1],[0,1]] (order 3).
const SL23_GENS: [[u32; 24]; 2] = [
    [
        6, 12, 9, 15, 21, 18, 3, 22, 13, 4, 19, 7, 5, 16, 10, 0, 20, 11, 1, 23, 8, 2, 17,
        14,
    ],
    [
        20, 23, 17, 13, 7, 10, 9, 19, 1, 12, 16, 0, 6, 22, 2, 21, 5, 14, 15, 4, 11, 18, 3,
        8,
    ],
];

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut parser = SpecParser {
            text,
            pos: 0,
        };
        let spec = parser.parse_spec()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(Error::UnsupportedSpec(format!(
                "trailing input after spec: '{}'",
                &text[parser.pos..]
            )));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_limit(DEFAULT_SIZE_LIMIT)
    }

    pub fn build_with_limit(&self, limit: usize) -> Result<FiniteGroup> {
        let (degree, generators) = self.permutations()?;
        FiniteGroup::generate(degree, generators, limit)
    }

    fn permutations(&self) -> Result<(usize, Vec<Perm>)> {
        match self {
            GroupSpec::Cyclic(n) => {
                let n = check_param(*n)?;
                if n == 1 {
                    return Ok((1, vec![]));
                }
                Ok((n, vec![full_cycle(n)]))
            }
            GroupSpec::Dihedral(n) => {
                let n = check_param(*n)?;
                match n {
                    1 => Ok((2, vec![Perm::parse_cycles("(0 1)", 2)?])),
                    2 => Ok((
                        4,
                        vec![
                            Perm::parse_cycles("(0 1)", 4)?,
                            Perm::parse_cycles("(2 3)", 4)?,
                        ],
                    )),
                    _ => {
                        let rot = full_cycle(n);
                        let refl =
                            Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
                        Ok((n, vec![rot, refl]))
                    }
                }
            }
            GroupSpec::Symmetric(n) => {
                let n = check_param(*n as u64)?;
                if n == 1 {
                    return Ok((1, vec![]));
                }
                let mut gens = vec![Perm::parse_cycles("(0 1)", n)?];
                if n > 2 {
                    gens.push(full_cycle(n));
                }
                Ok((n, gens))
            }
            GroupSpec::Alternating(n) => {
                let n = check_param(*n as u64)?;
                if n <= 2 {
                    return Ok((n, vec![]));
                }
                let mut gens = vec![Perm::parse_cycles("(0 1 2)", n)?];
                if n > 3 {
                    if n % 2 == 1 {
                        gens.push(full_cycle(n));
                    } else {
                        let mut images: Vec<u32> = (0..n as u32).collect();
                        for i in 1..n {
                            images[i] = if i == n - 1 { 1 } else { i as u32 + 1 };
                        }
                        gens.push(Perm::from_images(images)?);
                    }
                }
                Ok((n, gens))
            }
            GroupSpec::Quaternion8 => Ok((
                8,
                QUATERNION8_GENS
                    .iter()
                    .map(|imgs| Perm::from_images(imgs.to_vec()))
                    .collect::<Result<_>>()?,
            )),
            GroupSpec::Sl23 => Ok((
                24,
                SL23_GENS
                    .iter()
                    .map(|imgs| Perm::from_images(imgs.to_vec()))
                    .collect::<Result<_>>()?,
            )),
            GroupSpec::DirectProduct(a, b) => {
                let (da, gens_a) = a.permutations()?;
                let (db, gens_b) = b.permutations()?;
                let degree = da + db;
                let mut gens = Vec::new();
                for g in gens_a {
                    let mut images: Vec<u32> = (0..degree as u32).collect();
                    for i in 0..da {
                        images[i] = g.apply(i as u32);
                    }
                    gens.push(Perm::from_images(images)?);
                }
                for g in gens_b {
                    let mut images: Vec<u32> = (0..degree as u32).collect();
                    for i in 0..db {
                        images[da + i] = da as u32 + g.apply(i as u32);
                    }
                    gens.push(Perm::from_images(images)?);
                }
                Ok((degree, gens))
            }
        }
    }
}

fn check_param(n: u64) -> Result<usize> {
    if n == 0 || n > 100_000 {
        return Err(Error::UnsupportedSpec(format!(
            "parameter {n} out of supported range"
        )));
    }
    Ok(n as usize)
}

fn full_cycle(n: usize) -> Perm {
    Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())
        .expect("rotation is a bijection")
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::UnsupportedSpec(format!(
                "expected '{c}' at position {} in '{}'",
                self.pos, self.text
            )))
        }
    }

    fn parse_name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..]
            .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        self.text[start..self.pos].to_string()
    }

    fn parse_int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::UnsupportedSpec(format!("expected integer in '{}'", self.text)))
    }

    fn parse_spec(&mut self) -> Result<GroupSpec> {
        let name = self.parse_name();
        match name.as_str() {
            "quaternion8" => Ok(GroupSpec::Quaternion8),
            "sl23" => Ok(GroupSpec::Sl23),
            "cyclic" | "dihedral" | "symmetric" | "alternating" => {
                self.eat('(')?;
                let n = self.parse_int()?;
                self.eat(')')?;
                Ok(match name.as_str() {
                    "cyclic" => GroupSpec::Cyclic(n),
                    "dihedral" => GroupSpec::Dihedral(n),
                    "symmetric" => GroupSpec::Symmetric(n as u32),
                    _ => GroupSpec::Alternating(n as u32),
                })
            }
            "direct_product" => {
                self.eat('(')?;
                let a = self.parse_spec()?;
                self.eat(',')?;
                let b = self.parse_spec()?;
                self.eat(')')?;
                Ok(GroupSpec::DirectProduct(Box::new(a), Box::new(b)))
            }
            "" => Err(Error::UnsupportedSpec(format!(
                "empty group name in '{}'",
                self.text
            ))),
            other => Err(Error::UnsupportedSpec(format!("unknown group '{other}'"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::Alternating(n) => write!(f, "alternating({n})"),
            GroupSpec::Quaternion8 => write!(f, "quaternion8"),
            GroupSpec::Sl23 => write!(f, "sl23"),
            GroupSpec::DirectProduct(a, b) => write!(f, "direct_product({a}, {b})"),
        }
    }
}

/// Load a group from the generator-file format: a `degree d` header line,
/// then one permutation per line in cycle notation; `#` starts a comment.
pub fn load_group_file(path: &Path, limit: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_group_file(&text, limit)
}

pub fn parse_group_file(text: &str, limit: usize) -> Result<FiniteGroup> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = line.strip_prefix("degree").ok_or(Error::Parse {
                    line: lineno + 1,
                    msg: "expected 'degree d' header".into(),
                })?;
                let d: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad degree '{}'", rest.trim()),
                })?;
                degree = Some(d);
            }
            Some(d) => {
                let p = Perm::parse_cycles(line, d).map_err(|e| Error::Parse {
                    line: lineno + 1,
                    msg: e.to_string(),
                })?;
                generators.push(p);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'degree d' header".into(),
    })?;
    FiniteGroup::generate(degree, generators, limit)
}
