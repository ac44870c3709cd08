//! Finite permutation groups stored by explicit element enumeration.

mod classfn;
mod cosets;
mod named;
mod perm;
mod subgroup;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

pub use classfn::ClassFunction;
pub use cosets::DoubleCosetDecomposition;
pub use named::{named_group, GroupSpec, NamedGroup};
pub use perm::Perm;
pub use subgroup::Subgroup;

use crate::error::{Error, Result};

/// Default cap on the order of a generated group.
pub const DEFAULT_MAX_ORDER: usize = 10_000;
/// Default cap on the group order for subgroup enumeration.
pub const DEFAULT_SUBGROUP_ENUM_CAP: usize = 200;

// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 512;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Smallest element index in the class.
    pub representative: usize,
    /// Element indices, ascending.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug)]
pub struct Group {
    degree: usize,
    elements: Vec<Perm>,
    index: BTreeMap<Perm, usize>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl Group {
    /// Closure of `gens` under composition, with the default order cap.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Arc<Group>> {
        Self::generate_with_cap(degree, gens, DEFAULT_MAX_ORDER)
    }

    /// Closure of `gens`. Elements are listed breadth-first from the
    /// identity, multiplying by the generators in the order given.
    pub fn generate_with_cap(degree: usize, gens: &[Perm], cap: usize) -> Result<Arc<Group>> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = BTreeMap::new();
        index.insert(id, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&elements[x]);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let inverse = elements.iter().map(|g| index[&g.inverse()]).collect();
        let mut group = Group {
            degree,
            elements,
            index,
            generators,
            inverse,
            table: None,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        if group.order() <= TABLE_LIMIT {
            group.build_table();
        }
        group.compute_classes();
        Ok(Arc::new(group))
    }

    fn build_table(&mut self) {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.index[&self.elements[a].compose(&self.elements[b])] as u32);
            }
        }
        self.table = Some(table);
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let k = classes.len();
            class_of[x] = k;
            let mut members = vec![x];
            let mut frontier = vec![x];
            while let Some(y) = frontier.pop() {
                for &g in &self.generators {
                    let z = self.conjugate(y, g);
                    if class_of[z] == usize::MAX {
                        class_of[z] = k;
                        members.push(z);
                        frontier.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: x, members });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of a permutation in the element list, if it belongs to the group.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the identity.
    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn s3() -> Arc<Group> {
        let t = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        Group::generate(3, &[t, c]).unwrap()
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_group() {
        let g = Group::generate(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let t = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        let c = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(
            Group::generate_with_cap(4, &[t, c], 10).unwrap_err(),
            Error::OrderCapExceeded { cap: 10 }
        );
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let c = Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let g = Group::generate(5, &[c]).unwrap();
        assert!(g.conjugacy_classes().iter().all(|c| c.size() == 1));
    }

    #[test]
    fn multiplication_matches_composition() {
        let g = s3();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }

    #[test]
    fn rejects_generator_of_wrong_degree() {
        let t = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        assert!(matches!(Group::generate(3, &[t]), Err(Error::InvalidPermutation(_))));
    }
}
