//! Column groups: subgroups of S_n generated by the column maps u_x, l_x.

use std::collections::BTreeSet;

use super::{BirackError, FiniteBirack};
use crate::perm::Perm;

/// Closure is refused above this set size; the breadth-first search walks
/// the whole subgroup of S_n.
pub const COLUMN_GROUP_MAX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnGroup {
    pub order: usize,
    pub generators: Vec<Perm>,
}

impl FiniteBirack {
    /// The subgroup of S_n generated by `{u_x, l_x : x ∈ subset}`, computed
    /// by breadth-first closure under composition. `subset` is 0-based;
    /// the empty subset yields the trivial group.
    pub fn column_group(&self, subset: &[usize]) -> Result<ColumnGroup, BirackError> {
        let n = self.size();
        if n > COLUMN_GROUP_MAX {
            return Err(BirackError::ColumnGroupLimit {
                n,
                max: COLUMN_GROUP_MAX,
            });
        }
        let mut generators: Vec<Perm> = Vec::new();
        for &x in subset {
            if x >= n {
                return Err(BirackError::ElementOutOfRange { index: x, n });
            }
            for (map, table) in [(self.u_map(x), "U"), (self.l_map(x), "L")] {
                let p = map.ok_or(BirackError::ColumnNotPermutation { table, col: x + 1 })?;
                if !generators.contains(&p) {
                    generators.push(p);
                }
            }
        }
        let mut elements: BTreeSet<Perm> = BTreeSet::new();
        elements.insert(Perm::identity(n));
        let mut frontier: Vec<Perm> = elements.iter().cloned().collect();
        while let Some(g) = frontier.pop() {
            for gen in &generators {
                let h = gen.compose(&g);
                if elements.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        Ok(ColumnGroup {
            order: elements.len(),
            generators,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birack::TsrParams;

    fn fox_kei() -> FiniteBirack {
        FiniteBirack::tsr(&TsrParams::new(3, 2, 2, 1).unwrap())
    }

    #[test]
    fn fox_kei_full_column_group_is_symmetric() {
        // The three u_x are the maps y ↦ 2y + 2x, the reflections of S_3;
        // all l_x are the identity.
        let b = fox_kei();
        let g = b.column_group(&[0, 1, 2]).unwrap();
        assert_eq!(g.order, 6);
        for gen in &g.generators {
            assert!(gen.is_involution());
        }
    }

    #[test]
    fn singleton_subset_gives_order_two() {
        let b = fox_kei();
        for x in 0..3 {
            let g = b.column_group(&[x]).unwrap();
            assert_eq!(g.order, 2);
        }
    }

    #[test]
    fn trivial_kei_and_empty_subset() {
        let b = FiniteBirack::from_fn(4, |x, y| (y, x));
        assert_eq!(b.column_group(&[0, 1, 2, 3]).unwrap().order, 1);
        assert_eq!(b.column_group(&[]).unwrap().order, 1);
    }

    #[test]
    fn resource_guard() {
        let b = FiniteBirack::from_fn(11, |x, y| (y, x));
        assert!(matches!(
            b.column_group(&[0]),
            Err(BirackError::ColumnGroupLimit { n: 11, max: 10 })
        ));
    }
}
