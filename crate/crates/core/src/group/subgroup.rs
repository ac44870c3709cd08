use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Group, DEFAULT_SUBGROUP_ENUM_CAP};
use crate::error::{Error, Result};

/// A subgroup of a parent [`Group`], held as a sorted set of element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    fn from_sorted(parent: Arc<Group>, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { parent, members, mask }
    }

    pub fn whole(parent: &Arc<Group>) -> Self {
        Self::from_sorted(parent.clone(), (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Arc<Group>) -> Self {
        Self::from_sorted(parent.clone(), vec![parent.identity()])
    }

    /// Subgroup with the given members; rejects sets that are not closed.
    pub fn from_members(parent: &Arc<Group>, members: &[usize]) -> Result<Self> {
        let mut m: Vec<usize> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&x| x >= parent.order()) {
            return Err(Error::ShapeMismatch { expected: parent.order(), found: *m.last().unwrap() });
        }
        let s = Self::from_sorted(parent.clone(), m);
        if !s.contains(parent.identity()) {
            return Err(Error::NotClosed);
        }
        for &a in &s.members {
            for &b in &s.members {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(s)
    }

    /// Smallest subgroup containing the given elements.
    pub fn generated_by(parent: &Arc<Group>, gens: &[usize]) -> Self {
        let mut mask = vec![false; parent.order()];
        let id = parent.identity();
        mask[id] = true;
        let mut members = vec![id];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = parent.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup { parent: parent.clone(), members, mask }
    }

    /// Elements satisfying `pred`; the predicate must cut out a subgroup.
    pub fn from_predicate(parent: &Arc<Group>, pred: impl Fn(usize) -> bool) -> Result<Self> {
        let members: Vec<usize> = (0..parent.order()).filter(|&i| pred(i)).collect();
        Self::from_members(parent, &members)
    }

    #[inline]
    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn belongs_to(&self, g: &Group) -> bool {
        core::ptr::eq(Arc::as_ptr(&self.parent), g)
    }

    pub(crate) fn check_parent(&self, g: &Group) -> Result<()> {
        if self.belongs_to(g) {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .members
                .iter()
                .all(|&g| self.members.iter().all(|&x| self.contains(self.parent.conjugate(x, g))))
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut m: Vec<usize> = self.members.iter().map(|&x| self.parent.conjugate(x, g)).collect();
        m.sort_unstable();
        Self::from_sorted(self.parent.clone(), m)
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.members.iter().filter(|&&x| other.contains(x)).count()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let m = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted(self.parent.clone(), m)
    }

    /// Greedy generating set: members in ascending order that enlarge the
    /// subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial(&self.parent);
        for &x in &self.members {
            if !current.contains(x) {
                gens.push(x);
                current = Subgroup::generated_by(&self.parent, &gens);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Lexicographically smallest member set among all conjugates.
    pub fn canonical_conjugate(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut best = self.members.clone();
        let mut buf = Vec::with_capacity(self.order());
        for h in 0..g.order() {
            buf.clear();
            buf.extend(self.members.iter().map(|&x| g.conjugate(x, h)));
            buf.sort_unstable();
            if buf < best {
                best.clone_from(&buf);
            }
        }
        best
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        self.order() == other.order() && self.canonical_conjugate() == other.canonical_conjugate()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("order", &self.order()).field("members", &self.members).finish()
    }
}

impl Group {
    /// One representative per conjugacy class of subgroups, using the
    /// default enumeration cap.
    pub fn subgroups_up_to_conjugacy(self: &Arc<Self>) -> Result<Vec<Subgroup>> {
        self.subgroups_up_to_conjugacy_with_cap(DEFAULT_SUBGROUP_ENUM_CAP)
    }

    /// Cyclic-extension enumeration: start from cyclic subgroups and adjoin
    /// single elements to class representatives until nothing new appears.
    /// Each class is represented by its lexicographically smallest conjugate;
    /// output is sorted by order, then member set.
    pub fn subgroups_up_to_conjugacy_with_cap(self: &Arc<Self>, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order() > cap {
            return Err(Error::SubgroupEnumerationCap { order: self.order(), cap });
        }
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut work: Vec<Subgroup> = Vec::new();
        for x in 0..self.order() {
            let c = Subgroup::generated_by(self, &[x]);
            let key = c.canonical_conjugate();
            if seen.insert(key.clone()) {
                work.push(Subgroup::from_sorted(self.clone(), key));
            }
        }
        let mut i = 0;
        while i < work.len() {
            let s = work[i].clone();
            let gens = s.generators();
            for x in 0..self.order() {
                if s.contains(x) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(x);
                let t = Subgroup::generated_by(self, &ext);
                let key = t.canonical_conjugate();
                if seen.insert(key.clone()) {
                    work.push(Subgroup::from_sorted(self.clone(), key));
                }
            }
            i += 1;
        }
        work.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(work)
    }
}
