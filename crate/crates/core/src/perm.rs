//! Permutations on `{0..degree-1}` and their cycle notation.

use std::fmt;

use crate::error::Error;

/// A permutation stored by images: point `i` goes to `images[i]`.
///
/// Products compose left to right, so `a.then(&b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPerm(format!(
                    "images {images:?} are not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::DegreeMismatch {
                        line: 0,
                        point: p,
                        degree,
                    });
                }
                if touched[p] {
                    return Err(Error::InvalidPerm(format!(
                        "point {p} appears twice in cycles {cycles:?}"
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.images.len()..degree);
        Perm { images }
    }

    /// Moves every point up by `offset` inside a permutation of degree `degree`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset;
        }
        Perm { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, in order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses whitespace-separated cycles such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, String> {
        let mut cycles = Vec::new();
        let mut chars = text.trim().chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(format!("expected '(' but found {c:?}"));
            }
            chars.next();
            let mut body = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                if c == ')' {
                    closed = true;
                    break;
                }
                if c == '(' {
                    return Err("nested '(' inside a cycle".into());
                }
                body.push(c);
            }
            if !closed {
                return Err("unterminated cycle, missing ')'".into());
            }
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| format!("bad point {s:?} in cycle"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
        }
        for cycle in &cycles {
            if let Some(&p) = cycle.iter().find(|&&p| p >= degree) {
                return Err(format!("point {p} outside degree {degree}"));
            }
        }
        Perm::from_cycles(degree, &cycles).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
