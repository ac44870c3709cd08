//! Exact rational matrix representations: permutation modules, invariant
//! pairings, fixed subspaces, intertwiners and orthogonal splitting.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ClassFunction, Group, Subgroup};
use crate::linalg::{int, QMatrix, Rational};

// Above this order the homomorphism check runs on (generator, element)
// pairs instead of all pairs.
const EXHAUSTIVE_CHECK_LIMIT: usize = 48;

/// A homomorphism from a permutation group into GL_n(ℚ), stored as one
/// matrix per group element.
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<Group>,
    dim: usize,
    images: Vec<QMatrix>,
}

/// Symmetric nondegenerate G-invariant bilinear form, given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    gram: QMatrix,
}

/// A representation together with a chosen invariant pairing.
#[derive(Clone, Debug)]
pub struct PairedRepresentation {
    pub rep: Representation,
    pub pairing: Pairing,
}

impl Representation {
    /// Builds a representation from one matrix per element (in the group's
    /// element order) and checks the homomorphism property.
    pub fn new(group: &Arc<Group>, images: Vec<QMatrix>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::ShapeMismatch { expected: group.order(), found: images.len() });
        }
        let dim = images.first().map_or(0, QMatrix::rows);
        if let Some(bad) = images.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch { expected: dim, found: bad.rows().max(bad.cols()) });
        }
        let rep = Representation { group: group.clone(), dim, images };
        rep.verify()?;
        Ok(rep)
    }

    pub(crate) fn from_parts(group: Arc<Group>, dim: usize, images: Vec<QMatrix>) -> Self {
        Representation { group, dim, images }
    }

    pub fn trivial(group: &Arc<Group>) -> Self {
        Representation {
            group: group.clone(),
            dim: 1,
            images: vec![QMatrix::identity(1); group.order()],
        }
    }

    /// Checks `ρ(g)ρ(h) = ρ(gh)` on all pairs for small groups, and on all
    /// (generator, element) pairs otherwise; the latter already implies the
    /// full property by induction on word length.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        if self.images[g.identity()] != QMatrix::identity(self.dim) {
            return Err(Error::NotARepresentation);
        }
        let lefts: Vec<usize> = if g.order() <= EXHAUSTIVE_CHECK_LIMIT {
            (0..g.order()).collect()
        } else {
            g.generators().to_vec()
        };
        for &a in &lefts {
            for b in 0..g.order() {
                if &self.images[a] * &self.images[b] != self.images[g.mul(a, b)] {
                    return Err(Error::NotARepresentation);
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn image(&self, g: usize) -> &QMatrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[QMatrix] {
        &self.images
    }

    fn same_group(&self, other: &Representation) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Trace at one representative per conjugacy class.
    pub fn character(&self) -> ClassFunction {
        ClassFunction::new(
            self.group
                .conjugacy_classes()
                .iter()
                .map(|c| self.images[c.representative].trace())
                .collect(),
        )
    }

    /// `Ok(())` when χ(g) = χ(g⁻¹) on every class, otherwise the index of a
    /// witnessing class.
    pub fn check_self_dual(&self) -> core::result::Result<(), usize> {
        let g = &self.group;
        let chi = self.character();
        for (k, c) in g.conjugacy_classes().iter().enumerate() {
            let inv_class = g.class_of(g.inv(c.representative));
            if chi.values()[k] != chi.values()[inv_class] {
                return Err(k);
            }
        }
        Ok(())
    }

    /// `(1/|H|) Σ_{h∈H} ρ(h)`.
    pub fn projector(&self, h: &Subgroup) -> Result<QMatrix> {
        h.check_parent(&self.group)?;
        let mut sum = QMatrix::zeros(self.dim, self.dim);
        for &x in h.members() {
            sum = &sum + &self.images[x];
        }
        Ok(sum.scale(&Rational::new(One::one(), (h.order() as i64).into())))
    }

    /// Basis of the H-fixed vectors as the columns of a `dim x k` matrix.
    ///
    /// The space is the column space of the projector onto H-invariants; it
    /// is computed as the common kernel of `ρ(s) − 1` over generators `s` of
    /// H and returned in reduced echelon position with primitive integer
    /// columns, so the basis depends only on the space.
    pub fn fixed_subspace(&self, h: &Subgroup) -> Result<QMatrix> {
        h.check_parent(&self.group)?;
        let id = QMatrix::identity(self.dim);
        let mut constraints = QMatrix::zeros(0, self.dim);
        for s in h.generators() {
            constraints = constraints.vstack(&(&self.images[s] - &id));
        }
        let kernel = constraints.kernel_basis();
        if kernel.is_empty() {
            return Ok(QMatrix::zeros(self.dim, 0));
        }
        let spanning = QMatrix::from_int_columns(self.dim, &kernel);
        Ok(spanning.column_space())
    }

    /// `V ⊕ W`, block-diagonal.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.same_group(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Representation::from_parts(self.group.clone(), self.dim + other.dim, images))
    }
}

impl Pairing {
    /// Validates a Gram matrix against a representation: symmetric,
    /// nondegenerate and `ρ(g)ᵀ·gram·ρ(g) = gram` for all g.
    pub fn new(rep: &Representation, gram: QMatrix) -> Result<Self> {
        if gram.rows() != rep.dim() || gram.cols() != rep.dim() {
            return Err(Error::ShapeMismatch { expected: rep.dim(), found: gram.rows() });
        }
        if !gram.is_symmetric() {
            return Err(Error::SeedNotSymmetric);
        }
        if gram.determinant()?.is_zero() {
            return Err(Error::DegeneratePairing("the whole space"));
        }
        if rep.images().iter().any(|m| m.congruence(&gram) != gram) {
            return Err(Error::PairingNotInvariant);
        }
        Ok(Pairing { gram })
    }

    pub(crate) fn from_gram_unchecked(gram: QMatrix) -> Self {
        Pairing { gram }
    }

    pub fn identity(dim: usize) -> Self {
        Pairing { gram: QMatrix::identity(dim) }
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }
}

impl PairedRepresentation {
    pub fn trivial(group: &Arc<Group>) -> Self {
        PairedRepresentation { rep: Representation::trivial(group), pairing: Pairing::identity(1) }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &PairedRepresentation) -> Result<PairedRepresentation> {
        Ok(PairedRepresentation {
            rep: self.rep.direct_sum(&other.rep)?,
            pairing: Pairing { gram: self.pairing.gram.block_diag(&other.pairing.gram) },
        })
    }
}

/// Left cosets `xH`, each labelled by its smallest element; returns the
/// coset label of every element and the list of coset minima.
pub(crate) fn left_cosets(g: &Group, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(h.index());
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for &y in h.members() {
            coset_of[g.mul(x, y)] = k;
        }
    }
    (coset_of, reps)
}

/// The permutation module ℚ[G/H] on left cosets with its standard basis
/// (ordered by smallest coset element) and the identity pairing.
pub fn perm_rep(g: &Arc<Group>, h: &Subgroup) -> Result<PairedRepresentation> {
    h.check_parent(g)?;
    let (coset_of, reps) = left_cosets(g, h);
    let n = reps.len();
    let images = (0..g.order())
        .map(|x| {
            let mut m = QMatrix::zeros(n, n);
            for (k, &r) in reps.iter().enumerate() {
                m.set(coset_of[g.mul(x, r)], k, Rational::one());
            }
            m
        })
        .collect();
    Ok(PairedRepresentation {
        rep: Representation::from_parts(g.clone(), n, images),
        pairing: Pairing::identity(n),
    })
}

/// Averages a positive-definite symmetric seed over the group:
/// `Σ_g ρ(g)ᵀ·seed·ρ(g)`.
pub fn invariant_pairing(v: &Representation, seed: &QMatrix) -> Result<Pairing> {
    if seed.rows() != v.dim() || seed.cols() != v.dim() {
        return Err(Error::ShapeMismatch { expected: v.dim(), found: seed.rows() });
    }
    if !seed.is_symmetric() {
        return Err(Error::SeedNotSymmetric);
    }
    if !seed.is_positive_definite() {
        return Err(Error::SeedNotPositiveDefinite);
    }
    let mut gram = QMatrix::zeros(v.dim(), v.dim());
    for m in v.images() {
        gram = &gram + &m.congruence(seed);
    }
    Ok(Pairing { gram })
}

/// Basis of `Hom_G(V, W)`: matrices X (dim W × dim V) with
/// `ρ_W(g)·X = X·ρ_V(g)`, solved on the group generators.
pub fn hom_basis(v: &Representation, w: &Representation) -> Result<Vec<QMatrix>> {
    v.same_group(w)?;
    let (dv, dw) = (v.dim(), w.dim());
    let unknowns = dv * dw;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let gens = v.group().generators();
    let mut system = QMatrix::zeros(gens.len() * unknowns, unknowns);
    for (gi, &s) in gens.iter().enumerate() {
        let (mw, mv) = (w.image(s), v.image(s));
        for i in 0..dw {
            for j in 0..dv {
                let row = gi * unknowns + i * dv + j;
                // (ρ_W X)_{ij} = Σ_k ρ_W[i][k] X[k][j]
                for k in 0..dw {
                    let a = mw.get(i, k);
                    if !a.is_zero() {
                        let col = k * dv + j;
                        let cur = system.get(row, col) + a;
                        system.set(row, col, cur);
                    }
                }
                // (X ρ_V)_{ij} = Σ_k X[i][k] ρ_V[k][j]
                for k in 0..dv {
                    let b = mv.get(k, j);
                    if !b.is_zero() {
                        let col = i * dv + k;
                        let cur = system.get(row, col) - b;
                        system.set(row, col, cur);
                    }
                }
            }
        }
    }
    Ok(system
        .kernel_basis()
        .into_iter()
        .map(|vec| QMatrix::from_fn(dw, dv, |i, j| Rational::from_integer(vec[i * dv + j].clone())))
        .collect())
}

/// Orthogonal complement in V (for V's pairing) of the sum of the images
/// of all intertwiners W → V, as a representation with the restricted
/// pairing. The basis of the complement is the canonical kernel basis.
pub fn split_off(v: &PairedRepresentation, w: &Representation) -> Result<PairedRepresentation> {
    v.rep.same_group(w)?;
    let dv = v.dim();
    let q = v.pairing.gram();
    let homs = hom_basis(w, &v.rep)?;
    let complement = if homs.is_empty() {
        QMatrix::identity(dv)
    } else {
        let mut span = QMatrix::zeros(dv, 0);
        for x in &homs {
            span = span.hstack(x);
        }
        let span = span.column_space();
        let constraints = &span.transpose() * q;
        let kernel = constraints.kernel_basis();
        QMatrix::from_int_columns(dv, &kernel)
    };
    let m = complement.cols();
    let group = v.rep.group().clone();
    if m == 0 {
        return Ok(PairedRepresentation {
            rep: Representation::from_parts(group.clone(), 0, vec![QMatrix::zeros(0, 0); group.order()]),
            pairing: Pairing::from_gram_unchecked(QMatrix::zeros(0, 0)),
        });
    }
    let restricted = complement.congruence(q);
    if restricted.determinant()?.is_zero() {
        return Err(Error::DegeneratePairing("the complement"));
    }
    // coordinates of u in the complement: (CᵀQC)⁻¹ CᵀQ u
    let coords = restricted.solve(&(&complement.transpose() * q))?;
    let mut images = Vec::with_capacity(group.order());
    for x in 0..group.order() {
        let moved = v.rep.image(x) * &complement;
        let mx = &coords * &moved;
        if group.generators().contains(&x) && &complement * &mx != moved {
            return Err(Error::NotARepresentation);
        }
        images.push(mx);
    }
    Ok(PairedRepresentation {
        rep: Representation::from_parts(group, m, images),
        pairing: Pairing::from_gram_unchecked(restricted),
    })
}

/// `(1/|G|)·Σ_c |c|·χ_V(c)·χ_W(c)`.
pub fn character_inner_product(v: &Representation, w: &Representation) -> Rational {
    v.character().inner_product(&w.character(), v.group())
}

/// Dimension of the H-fixed space predicted by the character:
/// `(1/|H|) Σ_{h∈H} χ_V(h)`.
pub fn fixed_dimension_from_character(v: &Representation, h: &Subgroup) -> Rational {
    let total: Rational = h.members().iter().map(|&x| v.image(x).trace()).sum();
    total / int(h.order() as i64)
}
