use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_traits::Zero;

use super::Group;
use crate::linalg::{int, Rational};

/// A function on the conjugacy classes of a group, one value per class in
/// the group's class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        ClassFunction { values }
    }

    pub fn zero(classes: usize) -> Self {
        ClassFunction { values: (0..classes).map(|_| Rational::zero()).collect() }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(1/|G|) Σ_c |c| a(c) b(c)`. Values are rational, so no conjugation
    /// is needed.
    pub fn inner_product(&self, other: &ClassFunction, group: &Group) -> Rational {
        let total: Rational = group
            .conjugacy_classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| int(c.size() as i64) * a * b)
            .sum();
        total / int(group.order() as i64)
    }

    pub fn scale(&self, s: &Rational) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|v| v * s).collect() }
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;

    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.values.len(), rhs.values.len());
        ClassFunction { values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect() }
    }
}

impl Mul<i64> for &ClassFunction {
    type Output = ClassFunction;

    fn mul(self, rhs: i64) -> ClassFunction {
        self.scale(&int(rhs))
    }
}
