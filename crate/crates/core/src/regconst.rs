//! Regulator constants of a relation and the set of representations whose
//! constant has odd p-adic valuation.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ClassFunction, Group, Subgroup};
use crate::linalg::{int, ord_p, square_class, QMatrix, Rational, SquareClass};
use crate::relation::BrauerRelation;
use crate::rep::{invariant_pairing, Pairing, Representation};

/// One factor of a regulator constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDeterminant {
    pub subgroup_order: usize,
    pub coefficient: i64,
    pub fixed_dim: usize,
    /// `det((1/|H|)⟨,⟩ | V^H)` on the canonical fixed-space basis.
    pub determinant: Rational,
}

#[derive(Clone, Debug)]
pub struct RegulatorConstant {
    pub value: SquareClass,
    /// `∏ det^n` over the terms, before reduction modulo squares.
    pub exact: Rational,
    pub terms: Vec<TermDeterminant>,
}

impl RegulatorConstant {
    pub fn ord_p(&self, p: u64) -> Result<i64> {
        ord_p(&self.exact, p)
    }
}

fn pow(q: &Rational, n: i64) -> Rational {
    let base = if n < 0 { q.recip() } else { q.clone() };
    (0..n.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
}

fn exact_product(terms: &[TermDeterminant]) -> Rational {
    terms.iter().fold(Rational::one(), |acc, t| acc * pow(&t.determinant, t.coefficient))
}

fn reduce(terms: Vec<TermDeterminant>) -> Result<RegulatorConstant> {
    // terms with even exponent are squares and do not affect the class
    let odd = terms
        .iter()
        .filter(|t| t.coefficient % 2 != 0)
        .fold(Rational::one(), |acc, t| acc * &t.determinant);
    Ok(RegulatorConstant { value: square_class(&odd)?, exact: exact_product(&terms), terms })
}

/// `det((1/|H|)·⟨,⟩)` on the canonical basis of `V^H`; 1 when the fixed
/// space is zero.
pub fn gram_det_fixed(v: &Representation, pairing: &Pairing, h: &Subgroup) -> Result<Rational> {
    fixed_gram_det(v, pairing, h).map(|(_, det)| det)
}

fn fixed_gram_det(v: &Representation, pairing: &Pairing, h: &Subgroup) -> Result<(usize, Rational)> {
    if pairing.dim() != v.dim() {
        return Err(Error::ShapeMismatch { expected: v.dim(), found: pairing.dim() });
    }
    let basis = v.fixed_subspace(h)?;
    if basis.cols() == 0 {
        return Ok((0, Rational::one()));
    }
    let gram = basis.congruence(pairing.gram()).scale(&Rational::new(1.into(), (h.order() as i64).into()));
    let det = gram.determinant()?;
    if det.is_zero() {
        return Err(Error::DegeneratePairing("fixed space"));
    }
    Ok((basis.cols(), det))
}

fn term_determinants(theta: &BrauerRelation, v: &Representation, pairing: &Pairing) -> Result<Vec<TermDeterminant>> {
    if !alloc::sync::Arc::ptr_eq(theta.group(), v.group()) {
        return Err(Error::GroupMismatch);
    }
    theta
        .terms()
        .iter()
        .map(|(h, n)| {
            let (fixed_dim, determinant) = fixed_gram_det(v, pairing, h)?;
            Ok(TermDeterminant { subgroup_order: h.order(), coefficient: *n, fixed_dim, determinant })
        })
        .collect()
}

fn default_pairing(v: &Representation) -> Result<Pairing> {
    invariant_pairing(v, &QMatrix::identity(v.dim()))
}

/// `C(Θ, V) = ∏ det((1/|H|)⟨,⟩ | V^H)^n` modulo squares. Without an
/// explicit pairing the identity form averaged over the group is used.
pub fn regulator_constant(
    theta: &BrauerRelation,
    v: &Representation,
    pairing: Option<&Pairing>,
) -> Result<RegulatorConstant> {
    let owned;
    let pairing = match pairing {
        Some(p) => p,
        None => {
            owned = default_pairing(v)?;
            &owned
        }
    };
    reduce(term_determinants(theta, v, pairing)?)
}

/// `det((1/|N|)⟨,⟩ | ℚ[G/H]^N) = ∏_{x ∈ N\G/H} |NxH| / (|N|·|H|)` for the
/// standard pairing on the permutation module.
pub fn double_coset_det(g: &Group, n: &Subgroup, h: &Subgroup) -> Result<Rational> {
    let denom = int((n.order() * h.order()) as i64);
    Ok(g
        .double_cosets(n, h)?
        .cosets
        .iter()
        .fold(Rational::one(), |acc, c| acc * int(c.size as i64) / &denom))
}

/// `C(Θ, ℚ[G/H])` for the standard pairing, from double coset sizes alone.
pub fn regulator_constant_perm(theta: &BrauerRelation, h: &Subgroup) -> Result<RegulatorConstant> {
    let g = theta.group();
    h.check_parent(g)?;
    let terms = theta
        .terms()
        .iter()
        .map(|(n, k)| {
            let dc = g.double_cosets(n, h)?;
            Ok(TermDeterminant {
                subgroup_order: n.order(),
                coefficient: *k,
                fixed_dim: dc.len(),
                determinant: double_coset_det(g, n, h)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reduce(terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SThetaEntry {
    pub label: String,
    pub ord_p: i64,
}

impl SThetaEntry {
    pub fn is_member(&self) -> bool {
        self.ord_p % 2 != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SThetaReport {
    pub p: u64,
    /// One entry per supplied representation, in input order.
    pub entries: Vec<SThetaEntry>,
    /// True when the supplied representations are pairwise orthogonal and
    /// decompose every permutation character of the relation exactly, so
    /// any other representation has zero fixed spaces on all terms.
    pub exhaustive: bool,
}

impl SThetaReport {
    pub fn members(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| e.is_member()).map(|e| e.label.as_str()).collect()
    }
}

fn decomposes_exactly(g: &Group, target: &ClassFunction, chars: &[ClassFunction]) -> bool {
    let mut sum = ClassFunction::zero(target.len());
    for chi in chars {
        let norm = chi.inner_product(chi, g);
        if norm.is_zero() {
            continue;
        }
        let m = target.inner_product(chi, g) / norm;
        if !m.is_integer() || m < Rational::zero() {
            return false;
        }
        sum = &sum + &chi.scale(&m);
    }
    &sum == target
}

/// Valuation `ord_p C(Θ, ρ)` for each supplied self-dual representation;
/// members of S_Θ are those with odd valuation. Uses the averaged identity
/// pairing and never factors the constants.
pub fn s_theta(theta: &BrauerRelation, reps: &[(&str, &Representation)], p: u64) -> Result<SThetaReport> {
    crate::linalg::check_prime(p)?;
    let g = theta.group();
    for (label, v) in reps {
        if !alloc::sync::Arc::ptr_eq(g, v.group()) {
            return Err(Error::GroupMismatch);
        }
        v.check_self_dual().map_err(|class| Error::NotSelfDual { label: (*label).into(), class })?;
    }
    let mut entries = Vec::with_capacity(reps.len());
    for (label, v) in reps {
        let pairing = default_pairing(v)?;
        let terms = term_determinants(theta, v, &pairing)?;
        entries.push(SThetaEntry { label: (*label).into(), ord_p: ord_p(&exact_product(&terms), p)? });
    }
    let chars: Vec<ClassFunction> = reps.iter().map(|(_, v)| v.character()).collect();
    let orthogonal = chars.iter().enumerate().all(|(i, a)| {
        chars[i + 1..].iter().all(|b| a.inner_product(b, g).is_zero())
    });
    let exhaustive = orthogonal
        && theta
            .terms()
            .iter()
            .all(|(h, _)| g.fixed_points_character(h).is_ok_and(|t| decomposes_exactly(g, &t, &chars)));
    Ok(SThetaReport { p, entries, exhaustive })
}
