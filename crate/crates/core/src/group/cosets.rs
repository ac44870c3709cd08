use alloc::vec;
use alloc::vec::Vec;

use super::{ClassFunction, Group, Subgroup};
use crate::error::Result;
use crate::linalg::int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Smallest element index in the double coset.
    pub representative: usize,
    pub size: usize,
}

/// The double cosets `N x H` of a group, listed by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub cosets: Vec<DoubleCoset>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c.size).collect()
    }
}

impl Group {
    /// Decomposes the group into double cosets `N x H`.
    pub fn double_cosets(&self, n: &Subgroup, h: &Subgroup) -> Result<DoubleCosetDecomposition> {
        n.check_parent(self)?;
        h.check_parent(self)?;
        let mut seen = vec![false; self.order()];
        let mut cosets = Vec::new();
        let mut left = Vec::with_capacity(h.order());
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            left.clear();
            left.extend(h.members().iter().map(|&y| self.mul(x, y)));
            let mut size = 0;
            for &a in n.members() {
                for &y in &left {
                    let z = self.mul(a, y);
                    if !seen[z] {
                        seen[z] = true;
                        size += 1;
                    }
                }
            }
            cosets.push(DoubleCoset { representative: x, size });
        }
        Ok(DoubleCosetDecomposition { cosets })
    }

    /// Character of the permutation module on `G/H`: at each class, the
    /// number of cosets fixed by the class representative.
    pub fn fixed_points_character(&self, h: &Subgroup) -> Result<ClassFunction> {
        h.check_parent(self)?;
        let values = self
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let meet = c.members.iter().filter(|&&x| h.contains(x)).count();
                int((meet * self.order() / (c.size() * h.order())) as i64)
            })
            .collect();
        Ok(ClassFunction::new(values))
    }
}
