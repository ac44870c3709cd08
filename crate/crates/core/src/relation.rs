//! Relations `Σ nᵢ·Hᵢ` between permutation representations: integer
//! combinations of subgroups whose permutation characters cancel.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{ClassFunction, Group, Subgroup};
use crate::linalg::{QMatrix, Rational};

#[derive(Clone, Debug)]
pub struct BrauerRelation {
    group: Arc<Group>,
    terms: Vec<(Subgroup, i64)>,
}

/// Outcome of [`BrauerRelation::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The weighted character sum is `value ≠ 0` on conjugacy class `class`.
    Fails { class: usize, value: Rational },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

impl BrauerRelation {
    /// A candidate relation; zero coefficients are dropped. Whether the
    /// characters actually cancel is checked by [`verify`](Self::verify).
    pub fn new(group: &Arc<Group>, terms: Vec<(Subgroup, i64)>) -> Result<Self> {
        for (h, _) in &terms {
            h.check_parent(group)?;
        }
        let terms = terms.into_iter().filter(|(_, n)| *n != 0).collect();
        Ok(BrauerRelation { group: group.clone(), terms })
    }

    pub fn empty(group: &Arc<Group>) -> Self {
        BrauerRelation { group: group.clone(), terms: Vec::new() }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn terms(&self) -> &[(Subgroup, i64)] {
        &self.terms
    }

    pub fn coefficients(&self) -> Vec<i64> {
        self.terms.iter().map(|(_, n)| *n).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> BrauerRelation {
        BrauerRelation {
            group: self.group.clone(),
            terms: self.terms.iter().filter(|_| k != 0).map(|(h, n)| (h.clone(), n * k)).collect(),
        }
    }

    /// `Σ n·χ_{Ind_H 1}` as a class function.
    pub fn character_sum(&self) -> ClassFunction {
        let mut sum = ClassFunction::zero(self.group.conjugacy_classes().len());
        for (h, n) in &self.terms {
            let chi = self.group.fixed_points_character(h).expect("subgroup parent checked at construction");
            sum = &sum + &(&chi * *n);
        }
        sum
    }

    pub fn verify(&self) -> Verdict {
        match self.character_sum().values().iter().enumerate().find(|(_, v)| !v.is_zero()) {
            None => Verdict::Holds,
            Some((class, value)) => Verdict::Fails { class, value: value.clone() },
        }
    }
}

/// Basis of all relations supported on `subgroups` (default: one subgroup
/// per conjugacy class), read off the integer kernel of the
/// classes × subgroups matrix of permutation characters.
pub fn find_relations(g: &Arc<Group>, subgroups: Option<&[Subgroup]>) -> Result<Vec<BrauerRelation>> {
    let owned;
    let subs = match subgroups {
        Some(s) => s,
        None => {
            owned = g.subgroups_up_to_conjugacy()?;
            &owned
        }
    };
    let classes = g.conjugacy_classes().len();
    let chars = subs.iter().map(|h| g.fixed_points_character(h)).collect::<Result<Vec<_>>>()?;
    let m = QMatrix::from_fn(classes, subs.len(), |i, j| chars[j].values()[i].clone());
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let terms = v
                .iter()
                .zip(subs)
                .map(|(c, h)| Ok((h.clone(), c.to_i64().ok_or(Error::CoefficientOverflow)?)))
                .collect::<Result<Vec<_>>>()?;
            BrauerRelation::new(g, terms)
        })
        .collect()
}
