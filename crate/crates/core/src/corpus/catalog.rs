//! Built-in small groups given by permutation generators.

use std::path::PathBuf;

use crate::group::GroupSpec;
use crate::perm::Perm;
use crate::theorems::counterexample::counterexample_spec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin,
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub tags: Vec<String>,
    pub source: Source,
}

impl CorpusEntry {
    pub fn builtin(spec: GroupSpec, tags: &[&str]) -> Self {
        CorpusEntry {
            spec,
            tags: tags.iter().map(|t| t.to_string()).collect(),
            source: Source::Builtin,
        }
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

fn perm(degree: usize, f: impl Fn(usize) -> usize) -> Perm {
    Perm::from_images((0..degree).map(f).collect()).expect("bijection")
}

/// `Cₙ` acting regularly on `n` points.
pub fn cyclic(n: usize) -> GroupSpec {
    let gens = if n == 1 {
        vec![]
    } else {
        vec![perm(n, |i| (i + 1) % n)]
    };
    GroupSpec::new(format!("C{n}"), n, gens).expect("valid")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> GroupSpec {
    let gens = vec![perm(n, |i| (i + 1) % n), perm(n, |i| (n - i) % n)];
    GroupSpec::new(format!("D{}", 2 * n), n, gens).expect("valid")
}

/// Dicyclic group `⟨a, b | a^{2m}, b² = a^m, b⁻¹ab = a⁻¹⟩` of order `4m`,
/// acting on itself by right multiplication. Point `i + 2m·j` is `aⁱbʲ`.
pub fn dicyclic(name: &str, m: usize) -> GroupSpec {
    let n = 2 * m;
    let times = |i: usize, j: usize, k: usize, l: usize| -> usize {
        // aⁱbʲ · aᵏbˡ with b aᵏ = a⁻ᵏ b
        let k = if j == 1 { (n - k) % n } else { k };
        let mut e = (i + k) % n;
        let mut b = j + l;
        if b == 2 {
            e = (e + m) % n;
            b = 0;
        }
        e + n * b
    };
    let a = perm(2 * n, |p| times(p % n, p / n, 1, 0));
    let b = perm(2 * n, |p| times(p % n, p / n, 0, 1));
    GroupSpec::new(name, 2 * n, vec![a, b]).expect("valid")
}

pub fn symmetric(n: usize) -> GroupSpec {
    let gens = if n < 2 {
        vec![]
    } else {
        vec![
            perm(n, |i| (i + 1) % n),
            perm(n, |i| [1, 0].get(i).copied().unwrap_or(i)),
        ]
    };
    GroupSpec::new(format!("S{n}"), n, gens).expect("valid")
}

pub fn alternating(n: usize) -> GroupSpec {
    assert!(n >= 3, "alternating groups need at least 3 points");
    let three = perm(n, |i| match i {
        0 => 1,
        1 => 2,
        2 => 0,
        _ => i,
    });
    let long = if n % 2 == 1 {
        perm(n, |i| (i + 1) % n)
    } else {
        // (1 2 … n-1) is an even permutation when n is even
        perm(n, |i| if i == 0 { 0 } else { i % (n - 1) + 1 })
    };
    GroupSpec::new(format!("A{n}"), n, vec![three, long]).expect("valid")
}

/// `SL(2,3)` acting on the 8 nonzero vectors of the plane over the field of 3 elements.
pub fn sl23() -> GroupSpec {
    let vectors: Vec<(usize, usize)> = (0..9)
        .map(|i| (i / 3, i % 3))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    let apply = |m: [[usize; 2]; 2]| {
        perm(8, |i| {
            let (x, y) = vectors[i];
            index((
                (m[0][0] * x + m[0][1] * y) % 3,
                (m[1][0] * x + m[1][1] * y) % 3,
            ))
        })
    };
    let gens = vec![apply([[1, 1], [0, 1]]), apply([[0, 2], [1, 0]])];
    GroupSpec::new("SL(2,3)", 8, gens).expect("valid")
}

/// `Cₚ × Cₚ` on two disjoint `p`-cycles.
pub fn elementary_abelian(p: usize) -> GroupSpec {
    let gens = vec![
        perm(2 * p, |i| if i < p { (i + 1) % p } else { i }),
        perm(2 * p, |i| if i >= p { p + (i - p + 1) % p } else { i }),
    ];
    GroupSpec::new(format!("C{p}xC{p}"), 2 * p, gens).expect("valid")
}

/// `G × H` acting on the disjoint union of the two point sets.
pub fn spec_direct_product(a: &GroupSpec, b: &GroupSpec) -> GroupSpec {
    let degree = a.degree + b.degree;
    let gens = a
        .generators
        .iter()
        .map(|g| g.extend(degree))
        .chain(b.generators.iter().map(|g| g.shifted(a.degree, degree)))
        .collect();
    GroupSpec::new(format!("{}x{}", a.name, b.name), degree, gens).expect("valid")
}

/// The built-in corpus in canonical order.
pub fn builtin_catalog() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=24 {
        let tags: &[&str] = if n == 1 {
            &["cyclic", "abelian", "trivial"]
        } else {
            &["cyclic", "abelian"]
        };
        out.push(CorpusEntry::builtin(cyclic(n), tags));
    }
    for n in 3..=12usize {
        let tags: &[&str] = if n.is_power_of_two() {
            &["dihedral", "nilpotent"]
        } else {
            &["dihedral"]
        };
        out.push(CorpusEntry::builtin(dihedral(n), tags));
    }
    out.push(CorpusEntry::builtin(
        dicyclic("Q8", 2),
        &["quaternion", "nilpotent"],
    ));
    out.push(CorpusEntry::builtin(
        dicyclic("Q16", 4),
        &["quaternion", "nilpotent"],
    ));
    out.push(CorpusEntry::builtin(
        symmetric(3),
        &["symmetric", "supersoluble"],
    ));
    out.push(CorpusEntry::builtin(
        symmetric(4),
        &["symmetric", "soluble"],
    ));
    out.push(CorpusEntry::builtin(
        symmetric(5),
        &["symmetric", "insoluble"],
    ));
    out.push(CorpusEntry::builtin(
        alternating(4),
        &["alternating", "soluble"],
    ));
    out.push(CorpusEntry::builtin(
        alternating(5),
        &["alternating", "simple"],
    ));
    out.push(CorpusEntry::builtin(sl23(), &["soluble"]));
    for p in [2, 3, 5] {
        out.push(CorpusEntry::builtin(
            elementary_abelian(p),
            &["abelian", "elementary-abelian"],
        ));
    }
    out.push(CorpusEntry::builtin(
        counterexample_spec(),
        &["counterexample", "soluble"],
    ));
    let q8 = dicyclic("Q8", 2);
    let pairs = [
        (symmetric(3), cyclic(2)),
        (symmetric(3), cyclic(5)),
        (symmetric(3), symmetric(3)),
        (alternating(4), cyclic(2)),
        (q8, cyclic(3)),
        (symmetric(4), cyclic(2)),
        (symmetric(4), cyclic(3)),
        (symmetric(3), symmetric(4)),
        (alternating(5), cyclic(2)),
        (alternating(5), cyclic(3)),
    ];
    for (a, b) in &pairs {
        out.push(CorpusEntry::builtin(
            spec_direct_product(a, b),
            &["direct-product"],
        ));
    }
    out
}

/// Looks a built-in group up by name, ignoring ASCII case.
pub fn find_builtin(name: &str) -> Option<CorpusEntry> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.spec.name.eq_ignore_ascii_case(name))
}

/// A built-in group by name, or a direct product `AxB` of resolvable names.
pub fn resolve_group(name: &str) -> Option<CorpusEntry> {
    if let Some(e) = find_builtin(name) {
        return Some(e);
    }
    name.match_indices(['x', 'X']).find_map(|(i, _)| {
        let a = resolve_group(&name[..i])?;
        let b = resolve_group(&name[i + 1..])?;
        Some(CorpusEntry::builtin(
            spec_direct_product(&a.spec, &b.spec),
            &["direct-product"],
        ))
    })
}
