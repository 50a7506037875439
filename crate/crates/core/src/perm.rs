//! Permutations of {0, .., n-1} as image vectors.

use std::fmt;

use crate::zmod::lcm;

/// A permutation stored as its image vector: `apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Build from an image vector; `None` if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        if !is_perm_images(&images) {
            return None;
        }
        Some(Perm { images })
    }

    /// Build from 1-based images as written in input files.
    pub fn from_one_based(images: &[usize]) -> Option<Perm> {
        if images.iter().any(|&v| v == 0 || v > images.len()) {
            return None;
        }
        Perm::from_images(images.iter().map(|&v| v - 1).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            images: (0..self.len()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.images[v] == i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Exponent of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64)) as usize
    }
}

pub(crate) fn is_perm_images(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &v in images {
        if v >= images.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({:?})", self.images)
    }
}

/// Cycle notation with 1-based points; fixed points omitted, identity is "()".
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            write!(f, "(")?;
            for (k, &p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let swap = Perm::transposition(3, 0, 1);
        let rot = Perm::from_images(vec![1, 2, 0]).unwrap();
        let c = swap.compose(&rot);
        // rot: 0->1, then swap: 1->0
        assert_eq!(c.apply(0), 0);
        assert_eq!(c.apply(2), 1);
    }

    #[test]
    fn inverse_and_order() {
        let rot = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert!(rot.compose(&rot.inverse()).is_identity());
        assert_eq!(rot.order(), 3);
        let p = Perm::from_images(vec![1, 0, 3, 4, 2]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(Perm::identity(4).is_involution());
        assert!(Perm::transposition(5, 1, 3).is_involution());
        assert!(!rot.is_involution());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![2, 1]).is_none());
        assert!(Perm::from_one_based(&[2, 1]).is_some());
        assert!(Perm::from_one_based(&[0, 1]).is_none());
    }

    #[test]
    fn display_cycles() {
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm::transposition(3, 0, 1).to_string(), "(1 2)");
        let rot = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(rot.to_string(), "(1 2 3)");
    }
}
