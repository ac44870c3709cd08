//! Standard relations and ℚ-rational constituents for the named group
//! families.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GroupSpec, NamedGroup, Subgroup};
use crate::relation::{find_relations, BrauerRelation};
use crate::rep::{perm_rep, split_off, PairedRepresentation};

/// Named subgroups carrying the standard relation of each family.
pub fn relation_support(spec: &GroupSpec) -> &'static [&'static str] {
    match spec {
        GroupSpec::Cyclic(_) => &[],
        GroupSpec::Dihedral(_) => &["1", "C2", "Cn", "G"],
        GroupSpec::Gl2(_) => &["U1", "U2"],
        GroupSpec::BorelQuotient(_) => &["1", "L", "M", "G"],
    }
}

fn support(ng: &NamedGroup) -> Result<Vec<Subgroup>> {
    relation_support(&ng.spec)
        .iter()
        .map(|&name| {
            let name = match (name, &ng.spec) {
                ("Cn", GroupSpec::Dihedral(order)) => format!("C{}", order / 2),
                _ => String::from(name),
            };
            ng.subgroup(&name).cloned().ok_or(Error::UnsupportedGroup(name))
        })
        .collect()
}

/// The unique relation supported on [`relation_support`], if there is one.
pub fn default_relation(ng: &NamedGroup) -> Result<Option<BrauerRelation>> {
    let subs = support(ng)?;
    if subs.is_empty() {
        return Ok(None);
    }
    let mut rels = find_relations(&ng.group, Some(&subs))?;
    Ok(if rels.len() == 1 { rels.pop() } else { None })
}

fn minus(v: &PairedRepresentation, parts: &[&PairedRepresentation]) -> Result<PairedRepresentation> {
    parts.iter().try_fold(v.clone(), |acc, w| split_off(&acc, &w.rep))
}

/// Labelled ℚ-rational constituents built from permutation modules:
///
/// * dihedral: `1`, `eps`, `rho`
/// * gl2: `1`, `sigma`, `rho`
/// * borel quotient: `1`, `eps`, one block `chi{d}` for each divisor
///   `d > 2` of `p − 1` (characters of exact order `d`), and `rho`
/// * cyclic: `1`
pub fn standard_reps(ng: &NamedGroup) -> Result<Vec<(String, PairedRepresentation)>> {
    let g = &ng.group;
    let sub = |name: &str| ng.subgroup(name).ok_or_else(|| Error::UnsupportedGroup(String::from(name)));
    let one = PairedRepresentation::trivial(g);
    let reps = match ng.spec {
        GroupSpec::Cyclic(_) => vec![(String::from("1"), one)],
        GroupSpec::Dihedral(order) => {
            let eps = minus(&perm_rep(g, sub(&format!("C{}", order / 2))?)?, &[&one])?;
            let rho = minus(&perm_rep(g, sub("C2")?)?, &[&one])?;
            vec![(String::from("1"), one), (String::from("eps"), eps), (String::from("rho"), rho)]
        }
        GroupSpec::Gl2(_) => {
            let sigma = minus(&perm_rep(g, sub("B")?)?, &[&one])?;
            let rho = minus(&perm_rep(g, sub("U1")?)?, &[&one, &sigma])?;
            vec![(String::from("1"), one), (String::from("sigma"), sigma), (String::from("rho"), rho)]
        }
        GroupSpec::BorelQuotient(p) => {
            let m = (p - 1) as usize;
            // blocks[d] holds the characters of exact order d
            let mut blocks: Vec<(usize, PairedRepresentation)> = vec![(1, one.clone())];
            for d in (2..=m).filter(|d| m % d == 0) {
                let lower: Vec<&PairedRepresentation> =
                    blocks.iter().filter(|(e, _)| d % e == 0).map(|(_, r)| r).collect();
                let block = minus(&perm_rep(g, sub(&format!("K{d}"))?)?, &lower)?;
                blocks.push((d, block));
            }
            let rho = minus(&perm_rep(g, sub("L")?)?, &[&one])?;
            let mut out: Vec<(String, PairedRepresentation)> = blocks
                .into_iter()
                .map(|(d, r)| {
                    let label = match d {
                        1 => String::from("1"),
                        2 => String::from("eps"),
                        _ => format!("chi{d}"),
                    };
                    (label, r)
                })
                .collect();
            out.push((String::from("rho"), rho));
            out
        }
    };
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;
    use crate::rep::character_inner_product;
    use num_traits::Zero;

    fn dims(ng: &NamedGroup) -> Vec<(String, usize)> {
        standard_reps(ng).unwrap().into_iter().map(|(l, r)| (l, r.dim())).collect()
    }

    #[test]
    fn dihedral_constituents() {
        let ng = named_group(&GroupSpec::Dihedral(10)).unwrap();
        assert_eq!(dims(&ng), vec![("1".into(), 1), ("eps".into(), 1), ("rho".into(), 4)]);
        assert_eq!(default_relation(&ng).unwrap().unwrap().coefficients(), vec![1, -2, -1, 2]);
    }

    #[test]
    fn borel_constituents() {
        let ng = named_group(&GroupSpec::BorelQuotient(7)).unwrap();
        let d = dims(&ng);
        assert_eq!(
            d,
            vec![
                ("1".into(), 1),
                ("eps".into(), 1),
                ("chi3".into(), 2),
                ("chi6".into(), 2),
                ("rho".into(), 6)
            ]
        );
        // ⟨χ,χ⟩ is the number of absolutely irreducible constituents
        let reps = standard_reps(&ng).unwrap();
        let norms: Vec<_> = reps.iter().map(|(_, r)| character_inner_product(&r.rep, &r.rep)).collect();
        assert_eq!(norms, [1, 1, 2, 2, 1].map(crate::linalg::int).to_vec());
        for (i, (_, a)) in reps.iter().enumerate() {
            for (_, b) in &reps[i + 1..] {
                assert!(character_inner_product(&a.rep, &b.rep).is_zero());
            }
        }
        assert_eq!(default_relation(&ng).unwrap().unwrap().coefficients(), vec![1, -6, -1, 6]);
    }

    #[test]
    fn cyclic_has_no_default_relation() {
        let ng = named_group(&GroupSpec::Cyclic(6)).unwrap();
        assert!(default_relation(&ng).unwrap().is_none());
        assert_eq!(dims(&ng), vec![("1".into(), 1)]);
    }
}
