//! Permutations of {0, ..., d-1} with cycle-notation parsing and printing.

use crate::error::{Error, Result};
use crate::rational::lcm_u64;
use std::fmt;

/// A permutation stored as its image vector: `images[i]` is where point `i`
/// goes. The derived `Ord` is lexicographic on images, which makes the
/// identity the minimum of every degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if (img as usize) >= d {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {d}"
                )));
            }
            if seen[img as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} repeated"
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start as u32;
            loop {
                seen[p as usize] = true;
                len += 1;
                p = self.apply(p);
                if p as usize == start {
                    break;
                }
            }
            ord = lcm_u64(ord, len);
        }
        ord
    }

    /// Disjoint cycles, each rotated to start at its smallest point, sorted
    /// by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start as u32;
            loop {
                seen[p as usize] = true;
                cyc.push(p);
                p = self.apply(p);
                if p as usize == start {
                    break;
                }
            }
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
        }
        cycles
    }

    /// Parse cycle notation such as `(0 1)(2 3)`; points may also be
    /// comma-separated. The identity is `()` or the empty string.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let bad = |msg: String| Error::InvalidPermutation(msg);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        let mut chars = text.chars().peekable();
        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(bad(format!("expected '(' but found '{c}'"))),
            }
            let mut cycle: Vec<u32> = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    None => return Err(bad("unclosed cycle".into())),
                    Some(c) if c.is_ascii_digit() => num.push(c),
                    Some(c) if c.is_whitespace() || c == ',' => {
                        if !num.is_empty() {
                            cycle.push(parse_point(&num, degree)?);
                            num.clear();
                        }
                    }
                    Some(')') => {
                        if !num.is_empty() {
                            cycle.push(parse_point(&num, degree)?);
                        }
                        break;
                    }
                    Some(c) => return Err(bad(format!("unexpected character '{c}'"))),
                }
            }
            for &p in &cycle {
                if moved[p as usize] {
                    return Err(bad(format!("repeated point {p}")));
                }
                moved[p as usize] = true;
            }
            for i in 0..cycle.len() {
                images[cycle[i] as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }
}

fn parse_point(s: &str, degree: usize) -> Result<u32> {
    let p: u32 = s
        .parse()
        .map_err(|_| Error::InvalidPermutation(format!("bad point '{s}'")))?;
    if (p as usize) >= degree {
        return Err(Error::InvalidPermutation(format!(
            "point {p} out of range for degree {degree}"
        )));
    }
    Ok(p)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_then_left() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        // (a.compose(b))(1): b sends 1 -> 2, a fixes 2.
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let p = Perm::parse_cycles("(0 1 2 3)(4 5)", 6).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn order_of_products_of_cycles() {
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(Perm::parse_cycles("(0 1 2)", 5).unwrap().order(), 3);
        assert_eq!(Perm::parse_cycles("(0 1)(2 3 4)", 5).unwrap().order(), 6);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Perm::parse_cycles("(0 1)(2 3)", 5).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        let commas = Perm::parse_cycles("(0,1)(2,3)", 5).unwrap();
        assert_eq!(p, commas);
    }

    #[test]
    fn parse_rejects_repeated_point() {
        let err = Perm::parse_cycles("(0 0 1)", 3).unwrap_err();
        assert!(err.to_string().contains("repeated point"));
        let err = Perm::parse_cycles("(0 1)(1 2)", 3).unwrap_err();
        assert!(err.to_string().contains("repeated point"));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(Perm::parse_cycles("(0 7)", 3).is_err());
    }

    #[test]
    fn identity_is_lexicographic_minimum() {
        let id = Perm::identity(4);
        let other = Perm::parse_cycles("(2 3)", 4).unwrap();
        assert!(id < other);
    }
}
