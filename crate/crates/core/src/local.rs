//! Splitting of a prime in the fixed fields of subgroups, Tamagawa
//! valuations from reduction models, and the resulting parity prediction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::linalg::{check_prime, ord_p_u64};
use crate::regconst::{s_theta, SThetaReport};
use crate::relation::BrauerRelation;
use crate::rep::{character_inner_product, Representation};

/// Hypotheses under which the parity prediction holds.
pub const PARITY_CAVEAT: &str = "Conditional result. Hypotheses: A/K is principally polarised; \
for p = 2 the principal polarisation must also be induced by a K-rational divisor. \
Tamagawa numbers come from the supplied reduction models; Neron differential factors are taken as 1.";

/// How the local Tamagawa number behaves in extensions of the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionModel {
    Good,
    /// Split multiplicative with base Tamagawa number `c`; a prime with
    /// ramification index `e` above it has Tamagawa number `e·c`.
    SplitMultiplicative { c: u64 },
    /// Tamagawa number for each `(e, f)`.
    Custom(BTreeMap<(u64, u64), u64>),
}

impl fmt::Display for ReductionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionModel::Good => write!(f, "good"),
            ReductionModel::SplitMultiplicative { c } => write!(f, "split_multiplicative:{c}"),
            ReductionModel::Custom(table) => {
                write!(f, "custom:")?;
                for (i, ((e, ff), v)) in table.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{e},{ff}={v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Decomposition and inertia groups of one prime of the base field.
#[derive(Clone, Debug)]
pub struct LocalPrimeData {
    pub label: String,
    decomposition: Subgroup,
    inertia: Subgroup,
    pub model: ReductionModel,
}

impl LocalPrimeData {
    /// Checks `I ⊴ D` and that `D/I` is cyclic.
    pub fn new(label: &str, decomposition: Subgroup, inertia: Subgroup, model: ReductionModel) -> Result<Self> {
        if !Arc::ptr_eq(decomposition.parent(), inertia.parent()) {
            return Err(Error::ForeignSubgroup);
        }
        check_local_pair(&decomposition, &inertia)?;
        Ok(LocalPrimeData { label: label.into(), decomposition, inertia, model })
    }

    pub fn decomposition(&self) -> &Subgroup {
        &self.decomposition
    }

    pub fn inertia(&self) -> &Subgroup {
        &self.inertia
    }

    /// The rational prime named by a label of the form `l=11`, if any.
    pub fn residue_characteristic(&self) -> Option<u64> {
        self.label.strip_prefix("l=")?.trim().parse().ok()
    }
}

fn check_local_pair(d: &Subgroup, i: &Subgroup) -> Result<()> {
    if !i.is_normal_in(d) {
        return Err(Error::NotNormal);
    }
    let g = d.parent();
    let mut gens = i.generators();
    gens.push(g.identity());
    let cyclic = d.members().iter().any(|&x| {
        *gens.last_mut().unwrap() = x;
        Subgroup::generated_by(g, &gens).order() == d.order()
    });
    if cyclic {
        Ok(())
    } else {
        Err(Error::QuotientNotCyclic)
    }
}

/// Multiset of `(e, f)` over the primes above a fixed prime, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplittingType(pub Vec<(u64, u64)>);

impl SplittingType {
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.0
    }

    /// `Σ e·f`, the degree of the field.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(e, f)| e * f).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (e, ff)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({e},{ff})")?;
        }
        write!(f, "}}")
    }
}

/// Splitting of a prime with decomposition group `D` and inertia `I` in
/// the fixed field of `H`: one `(e, f)` per double coset `D x H`, with
/// `e = [I : I ∩ xHx⁻¹]` and `e·f = [D : D ∩ xHx⁻¹]`.
pub fn splitting(g: &Group, h: &Subgroup, d: &Subgroup, i: &Subgroup) -> Result<SplittingType> {
    h.check_parent(g)?;
    d.check_parent(g)?;
    i.check_parent(g)?;
    check_local_pair(d, i)?;
    let mut parts: Vec<(u64, u64)> = g
        .double_cosets(d, h)?
        .cosets
        .iter()
        .map(|c| {
            let conj = h.conjugate_by(c.representative);
            let e = i.order() / i.intersection_order(&conj);
            let ef = d.order() / d.intersection_order(&conj);
            (e as u64, (ef / e) as u64)
        })
        .collect();
    parts.sort_unstable();
    Ok(SplittingType(parts))
}

/// `ord_p` of the product of Tamagawa numbers over the primes of a
/// splitting.
pub fn tamagawa_ord(model: &ReductionModel, s: &SplittingType, p: u64) -> Result<i64> {
    check_prime(p)?;
    match model {
        ReductionModel::Good => Ok(0),
        ReductionModel::SplitMultiplicative { c } => {
            if *c == 0 {
                return Err(Error::ZeroValue);
            }
            let base = ord_p_u64(*c, p)?;
            s.0.iter().try_fold(0, |acc, (e, _)| Ok(acc + base + ord_p_u64(*e, p)?))
        }
        ReductionModel::Custom(table) => s.0.iter().try_fold(0, |acc, &(e, f)| {
            let v = table.get(&(e, f)).ok_or(Error::MissingTamagawaEntry { e, f })?;
            Ok(acc + ord_p_u64(*v, p)?)
        }),
    }
}

/// `Σ_primes Σ_terms n · tamagawa_ord(model, splitting(G, H, D, I), p)`.
pub fn c_ratio_ord(theta: &BrauerRelation, primes: &[LocalPrimeData], p: u64) -> Result<i64> {
    check_prime(p)?;
    let g = theta.group();
    let mut total = 0;
    for prime in primes {
        for (h, n) in theta.terms() {
            let s = splitting(g, h, &prime.decomposition, &prime.inertia)?;
            total += n * tamagawa_ord(&prime.model, &s, p)?;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug)]
pub struct ParityReport {
    pub relation: BrauerRelation,
    pub p: u64,
    pub s_theta: SThetaReport,
    pub c_ratio_ord: i64,
    /// Labels of the members of S_Θ, in input order.
    pub members: Vec<String>,
    pub odd: bool,
    pub conclusion: String,
    pub warnings: Vec<String>,
    pub caveat: &'static str,
}

impl ParityReport {
    pub fn c_ratio_ord_mod2(&self) -> u8 {
        self.c_ratio_ord.rem_euclid(2) as u8
    }
}

fn conclusion(members: &[String], odd: bool) -> String {
    let parity = if odd { "odd" } else { "even" };
    if members.is_empty() {
        return if odd {
            String::from("S_theta is empty but the local term is odd: the inputs are inconsistent")
        } else {
            String::from("S_theta is empty and the local term is even")
        };
    }
    let sum: Vec<String> = members.iter().map(|m| format!("m_{m}")).collect();
    format!("{} is {parity}", sum.join(" + "))
}

/// Combines S_Θ with the Tamagawa valuation of the local data into the
/// parity of `Σ_{ρ ∈ S_Θ} m_ρ`.
pub fn predict_parity(
    theta: &BrauerRelation,
    reps: &[(&str, &Representation)],
    primes: &[LocalPrimeData],
    p: u64,
) -> Result<ParityReport> {
    let st = s_theta(theta, reps, p)?;
    let c = c_ratio_ord(theta, primes, p)?;
    let members: Vec<String> = st.members().into_iter().map(String::from).collect();
    let odd = c.rem_euclid(2) == 1;
    let mut warnings = Vec::new();
    if !st.exhaustive {
        warnings.push(String::from(
            "the supplied representations do not account for every permutation character of the relation; \
             S_theta may be incomplete",
        ));
    }
    for (label, v) in reps {
        if character_inner_product(v, v) != crate::linalg::int(1) {
            warnings.push(format!(
                "{label} is not absolutely irreducible; m_{label} counts a Q-rational block whose Q_p-constituents share its regulator constant"
            ));
        }
    }
    for prime in primes {
        if prime.residue_characteristic() == Some(p) && prime.model != ReductionModel::Good {
            warnings.push(format!(
                "{} has residue characteristic p; Neron differential factors may contribute there",
                prime.label
            ));
        }
    }
    if members.is_empty() && odd {
        warnings.push(String::from("odd local term with empty S_theta"));
    }
    Ok(ParityReport {
        relation: theta.clone(),
        p,
        s_theta: st,
        c_ratio_ord: c,
        conclusion: conclusion(&members, odd),
        members,
        odd,
        warnings,
        caveat: PARITY_CAVEAT,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, GroupSpec, NamedGroup};
    use alloc::string::ToString;
    use alloc::vec;

    fn gl2_3() -> NamedGroup {
        named_group(&GroupSpec::Gl2(3)).unwrap()
    }

    fn sub<'a>(ng: &'a NamedGroup, name: &str) -> &'a Subgroup {
        ng.subgroup(name).unwrap()
    }

    #[test]
    fn x1_11_splittings() {
        let ng = gl2_3();
        let (d, i) = (sub(&ng, "D"), sub(&ng, "I"));
        let s1 = splitting(&ng.group, sub(&ng, "U1"), d, i).unwrap();
        let s2 = splitting(&ng.group, sub(&ng, "U2"), d, i).unwrap();
        assert_eq!(s1, SplittingType(vec![(1, 2), (3, 1), (3, 1)]));
        assert_eq!(s2, SplittingType(vec![(1, 1), (1, 1), (3, 2)]));
        let model = ReductionModel::SplitMultiplicative { c: 1 };
        assert_eq!(tamagawa_ord(&model, &s1, 3).unwrap(), 2);
        assert_eq!(tamagawa_ord(&model, &s2, 3).unwrap(), 1);
        assert_eq!(tamagawa_ord(&ReductionModel::Good, &s1, 3).unwrap(), 0);
    }

    #[test]
    fn whole_group_is_one_point() {
        let ng = gl2_3();
        let s = splitting(&ng.group, sub(&ng, "G"), sub(&ng, "D"), sub(&ng, "I")).unwrap();
        assert_eq!(s, SplittingType(vec![(1, 1)]));
        assert_eq!(s.to_string(), "{(1,1)}");
    }

    #[test]
    fn rejects_bad_local_pairs() {
        let ng = gl2_3();
        // U1 is not normal in G
        assert_eq!(
            LocalPrimeData::new("x", sub(&ng, "G").clone(), sub(&ng, "U1").clone(), ReductionModel::Good).unwrap_err(),
            Error::NotNormal
        );
        // G/1 is not cyclic
        assert_eq!(
            LocalPrimeData::new("x", sub(&ng, "G").clone(), sub(&ng, "1").clone(), ReductionModel::Good).unwrap_err(),
            Error::QuotientNotCyclic
        );
        assert!(LocalPrimeData::new("l=11", sub(&ng, "D").clone(), sub(&ng, "I").clone(), ReductionModel::Good).is_ok());
    }

    #[test]
    fn custom_table_gap() {
        let s = SplittingType(vec![(1, 2), (3, 1)]);
        let mut table = BTreeMap::new();
        table.insert((1, 2), 9);
        let model = ReductionModel::Custom(table);
        assert_eq!(tamagawa_ord(&model, &s, 3).unwrap_err(), Error::MissingTamagawaEntry { e: 3, f: 1 });
        assert_eq!(model.to_string(), "custom:1,2=9");
    }

    #[test]
    fn split_multiplicative_with_p_dividing_c() {
        let s = SplittingType(vec![(1, 1), (3, 2)]);
        assert_eq!(tamagawa_ord(&ReductionModel::SplitMultiplicative { c: 9 }, &s, 3).unwrap(), 5);
        assert_eq!(tamagawa_ord(&ReductionModel::SplitMultiplicative { c: 0 }, &s, 3).unwrap_err(), Error::ZeroValue);
    }

    #[test]
    fn residue_characteristic_from_label() {
        let ng = gl2_3();
        let lp = LocalPrimeData::new("l=11", sub(&ng, "D").clone(), sub(&ng, "I").clone(), ReductionModel::Good).unwrap();
        assert_eq!(lp.residue_characteristic(), Some(11));
    }

    #[test]
    fn conclusion_wording() {
        assert_eq!(conclusion(&[String::from("rho")], true), "m_rho is odd");
        let labels = vec![String::from("1"), String::from("eps"), String::from("rho")];
        assert_eq!(conclusion(&labels, false), "m_1 + m_eps + m_rho is even");
    }
}
