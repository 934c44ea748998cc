//! Built-in group families, specifier parsing, and group-file ingestion.
//!
//! Specifier grammar: `C:n` (cyclic), `D:n` (dihedral of order 2n), `S:n`
//! and `A:n` (symmetric/alternating, n ≤ 8), `Q:n` (generalized quaternion,
//! n a power of two in 8..=64), `SL23`, products of those joined with `x`
//! (`C:3xC:4`), or `file:<path>` for a group description file.
//!
//! Group files are UTF-8 text: a `degree N` header line, then one generator
//! per line in disjoint-cycle notation over 0-based points. Blank lines and
//! `#` comments are ignored.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{close_group, FiniteGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cyclic(u64),
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    Quaternion(u64),
    Sl23,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C:{n}"),
            Family::Dihedral(n) => write!(f, "D:{n}"),
            Family::Symmetric(n) => write!(f, "S:{n}"),
            Family::Alternating(n) => write!(f, "A:{n}"),
            Family::Quaternion(n) => write!(f, "Q:{n}"),
            Family::Sl23 => write!(f, "SL23"),
        }
    }
}

impl Family {
    /// A permutation realization: (degree, generators).
    fn generators(&self) -> (usize, Vec<Permutation>) {
        match *self {
            Family::Cyclic(n) => {
                let n = n as usize;
                if n == 1 {
                    return (1, vec![]);
                }
                (n, vec![cycle_perm(n)])
            }
            Family::Dihedral(1) => (2, vec![Permutation::from_cycles(2, &[vec![0, 1]]).unwrap()]),
            Family::Dihedral(2) => (
                4,
                vec![
                    Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
                    Permutation::from_cycles(4, &[vec![2, 3]]).unwrap(),
                ],
            ),
            Family::Dihedral(n) => {
                let n = n as usize;
                let reflection: Vec<u32> =
                    (0..n).map(|i| ((n - i) % n) as u32).collect();
                (n, vec![cycle_perm(n), Permutation::from_images(reflection).unwrap()])
            }
            Family::Symmetric(n) => {
                let n = n as usize;
                if n == 1 {
                    return (1, vec![]);
                }
                let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1]]).unwrap()];
                if n > 2 {
                    gens.push(cycle_perm(n));
                }
                (n, gens)
            }
            Family::Alternating(n) => {
                let n = n as usize;
                if n <= 2 {
                    return (n.max(1), vec![]);
                }
                let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
                if n > 3 {
                    let cycle: Vec<u32> = if n % 2 == 1 {
                        (0..n as u32).collect()
                    } else {
                        (1..n as u32).collect()
                    };
                    gens.push(Permutation::from_cycles(n, &[cycle]).unwrap());
                }
                (n, gens)
            }
            Family::Quaternion(n) => {
                let n = n as usize;
                let m = n / 2;
                let table = multiplication_table(n, |x, y| quaternion_mult(m, x, y));
                regular_representation(&table, &[1, m])
            }
            Family::Sl23 => {
                let mats = sl23_matrices();
                let index_of = |m: &[u64; 4]| mats.iter().position(|x| x == m).unwrap();
                let table = multiplication_table(24, |x, y| {
                    index_of(&mat2_mult(&mats[x], &mats[y]))
                });
                let t = index_of(&[1, 1, 0, 1]);
                let w = index_of(&[0, 2, 1, 0]);
                regular_representation(&table, &[t, w])
            }
        }
    }
}

fn cycle_perm(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap()
}

/// Generalized quaternion multiplication on aⁱbᵉ encoded as i + e·m,
/// with a^m = 1, b² = a^(m/2), b·a = a⁻¹·b.
fn quaternion_mult(m: usize, x: usize, y: usize) -> usize {
    let (i, e) = (x % m, x / m);
    let (j, f) = (y % m, y / m);
    match (e, f) {
        (0, _) => (i + j) % m + f * m,
        (1, 0) => (i + m - j) % m + m,
        (1, 1) => ((i + m - j) % m + m / 2) % m,
        _ => unreachable!("encoding uses e, f ∈ {{0, 1}}"),
    }
}

fn mat2_mult(a: &[u64; 4], b: &[u64; 4]) -> [u64; 4] {
    [
        (a[0] * b[0] + a[1] * b[2]) % 3,
        (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3,
    ]
}

/// The 24 matrices of SL(2, 3) in lexicographic entry order.
fn sl23_matrices() -> Vec<[u64; 4]> {
    let mut mats = Vec::with_capacity(24);
    for a in 0..3u64 {
        for b in 0..3u64 {
            for c in 0..3u64 {
                for d in 0..3u64 {
                    if (3 + a * d % 3 - b * c % 3) % 3 == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    debug_assert_eq!(mats.len(), 24);
    mats
}

fn multiplication_table(n: usize, mult: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| mult(x, y)).collect()).collect()
}

/// Left-regular permutations of the chosen generators.
fn regular_representation(
    table: &[Vec<usize>],
    gens: &[usize],
) -> (usize, Vec<Permutation>) {
    let n = table.len();
    let perms = gens
        .iter()
        .map(|&g| {
            let images: Vec<u32> = (0..n).map(|x| table[g][x] as u32).collect();
            Permutation::from_images(images).expect("rows of a group table are bijections")
        })
        .collect();
    (n, perms)
}

/// A parsed group specifier: a product of built-in families, or a path to a
/// group description file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpecifier {
    Product(Vec<Family>),
    File(PathBuf),
}

impl GroupSpecifier {
    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpecifier::Product(fams) => {
                fams.iter().map(Family::to_string).collect::<Vec<_>>().join("x")
            }
            GroupSpecifier::File(path) => format!("file:{}", path.display()),
        }
    }
}

fn parse_family(text: &str, pos: usize) -> Result<Family> {
    if text == "SL23" {
        return Ok(Family::Sl23);
    }
    let Some((tag, num)) = text.split_once(':') else {
        return Err(Error::Parse { pos, msg: format!("expected FAMILY:n or SL23, got {text:?}") });
    };
    let n: u64 = num
        .parse()
        .map_err(|_| Error::Parse { pos, msg: format!("bad family parameter {num:?}") })?;
    if n == 0 {
        return Err(Error::Parse { pos, msg: "family parameter must be at least 1".into() });
    }
    match tag {
        "C" => Ok(Family::Cyclic(n)),
        "D" => Ok(Family::Dihedral(n)),
        "S" if n <= 8 => Ok(Family::Symmetric(n)),
        "A" if n <= 8 => Ok(Family::Alternating(n)),
        "S" | "A" => Err(Error::UnsupportedFamily(format!("{tag}:{n} (n ≤ 8)"))),
        "Q" if (8..=64).contains(&n) && n.is_power_of_two() => Ok(Family::Quaternion(n)),
        "Q" => Err(Error::UnsupportedFamily(format!(
            "Q:{n} (n must be a power of two in 8..=64)"
        ))),
        other => Err(Error::UnsupportedFamily(other.to_string())),
    }
}

/// Parse a group specifier; round-trips through `canonical_name`.
pub fn parse_specifier(text: &str) -> Result<GroupSpecifier> {
    let text = text.trim();
    if let Some(path) = text.strip_prefix("file:") {
        if path.is_empty() {
            return Err(Error::Parse { pos: 5, msg: "empty file path".into() });
        }
        return Ok(GroupSpecifier::File(PathBuf::from(path)));
    }
    let mut families = Vec::new();
    let mut pos = 0;
    for atom in text.split('x') {
        if atom.is_empty() {
            return Err(Error::Parse { pos, msg: "empty product factor".into() });
        }
        families.push(parse_family(atom, pos)?);
        pos += atom.len() + 1;
    }
    Ok(GroupSpecifier::Product(families))
}

/// Parse a group description file body into (degree, generators).
pub fn parse_group_file(content: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in content.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let Some(n) = line.strip_prefix("degree") else {
                    return Err(Error::Parse {
                        pos: lineno + 1,
                        msg: format!("expected 'degree N' header, got {line:?}"),
                    });
                };
                let n: usize = n.trim().parse().map_err(|_| Error::Parse {
                    pos: lineno + 1,
                    msg: format!("bad degree {:?}", n.trim()),
                })?;
                if n == 0 {
                    return Err(Error::Parse { pos: lineno + 1, msg: "degree must be ≥ 1".into() });
                }
                degree = Some(n);
            }
            Some(d) => generators.push(Permutation::from_cycle_string(d, line).map_err(
                |e| match e {
                    Error::Parse { msg, .. } | Error::InvalidPermutation(msg) => Error::Parse {
                        pos: lineno + 1,
                        msg,
                    },
                    other => other,
                },
            )?),
        }
    }
    let degree = degree.ok_or(Error::Parse { pos: 1, msg: "missing 'degree N' header".into() })?;
    Ok((degree, generators))
}

fn read_group_file(path: &Path) -> Result<(usize, Vec<Permutation>)> {
    let content = std::fs::read_to_string(path)?;
    parse_group_file(&content)
}

/// Realize a specifier as a permutation group. Product factors act on
/// disjoint point sets.
pub fn build_group(spec: &GroupSpecifier, cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpecifier::File(path) => {
            let (degree, gens) = read_group_file(path)?;
            close_group(degree, gens, cap)
        }
        GroupSpecifier::Product(families) => {
            let parts: Vec<(usize, Vec<Permutation>)> =
                families.iter().map(Family::generators).collect();
            let degree: usize = parts.iter().map(|(d, _)| d).sum();
            let mut generators = Vec::new();
            let mut offset = 0usize;
            for (d, gens) in parts {
                for g in gens {
                    let mut images: Vec<u32> = (0..degree as u32).collect();
                    for (i, &im) in g.images().iter().enumerate() {
                        images[offset + i] = offset as u32 + im;
                    }
                    generators.push(Permutation::from_images(images)?);
                }
                offset += d;
            }
            close_group(degree, generators, cap)
        }
    }
}

/// The default verification catalog: all C:n (n ≤ 64), D:n (3 ≤ n ≤ 64),
/// S:n (2 ≤ n ≤ 6), A:n (3 ≤ n ≤ 6), Q:8..Q:32, SL23, and C:mxC:n with
/// 2 ≤ m ≤ n and m·n ≤ 64.
pub fn default_catalog() -> Vec<GroupSpecifier> {
    let mut specs = Vec::new();
    for n in 1..=64 {
        specs.push(GroupSpecifier::Product(vec![Family::Cyclic(n)]));
    }
    for n in 3..=64 {
        specs.push(GroupSpecifier::Product(vec![Family::Dihedral(n)]));
    }
    for n in 2..=6 {
        specs.push(GroupSpecifier::Product(vec![Family::Symmetric(n)]));
    }
    for n in 3..=6 {
        specs.push(GroupSpecifier::Product(vec![Family::Alternating(n)]));
    }
    for n in [8, 16, 32] {
        specs.push(GroupSpecifier::Product(vec![Family::Quaternion(n)]));
    }
    specs.push(GroupSpecifier::Product(vec![Family::Sl23]));
    for m in 2..=8u64 {
        for n in m..=64 {
            if m * n <= 64 {
                specs.push(GroupSpecifier::Product(vec![
                    Family::Cyclic(m),
                    Family::Cyclic(n),
                ]));
            }
        }
    }
    specs
}
