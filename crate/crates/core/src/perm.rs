//! Permutations of {0, …, degree−1} in image-array form.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image array: point i maps to `images[i]`.
///
/// The derived `Ord` is lexicographic on the image array, which is the
/// element ordering used everywhere for deterministic output. The identity
/// is the lexicographic minimum among all permutations of a given degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Build from an image array, checking it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {im} out of range for degree {n}"
                )));
            }
            if seen[im as usize] {
                return Err(Error::InvalidPermutation(format!("repeated image {im}")));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                if (pt as usize) >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} out of range for degree {degree}"
                    )));
                }
                if moved[pt as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears in two cycles"
                    )));
                }
                moved[pt as usize] = true;
                images[pt as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parse disjoint-cycle notation like `(0 1 2)(3 4)`; `()` is the identity.
    pub fn from_cycle_string(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.trim();
        let base = text.len() - rest.len();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse {
                    pos: base + text.trim().len() - rest.len(),
                    msg: "expected '('".into(),
                });
            }
            let close = rest.find(')').ok_or(Error::Parse {
                pos: base + text.trim().len() - rest.len(),
                msg: "unclosed cycle".into(),
            })?;
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let pt: u32 = tok.parse().map_err(|_| Error::Parse {
                    pos: base + text.trim().len() - rest.len(),
                    msg: format!("bad point {tok:?}"),
                })?;
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&im| self.images[im as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Order = lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles_with_fixed_points(false) {
            order = num_integer::lcm(order, cycle.len() as u64);
        }
        order
    }

    /// Cycle decomposition, each cycle starting at its least point,
    /// cycles ordered by least point. Fixed points included on request.
    fn cycles_with_fixed_points(&self, keep_fixed: bool) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut pt = self.images[start] as usize;
            while pt != start {
                seen[pt] = true;
                cycle.push(pt as u32);
                pt = self.images[pt] as usize;
            }
            if cycle.len() > 1 || keep_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        self.cycles_with_fixed_points(false)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
