//! Resolution of a parsed [`JobConfig`] into groups, subgroups, a relation,
//! representations and local data.

use std::sync::Arc;

use brauerpar_core::group::{named_group, Group, GroupSpec, NamedGroup, Perm, Subgroup, DEFAULT_MAX_ORDER};
use brauerpar_core::local::LocalPrimeData;
use brauerpar_core::presets::{default_relation, standard_reps};
use brauerpar_core::relation::{find_relations, BrauerRelation, Verdict};
use brauerpar_core::rep::{perm_rep, split_off, PairedRepresentation};

use crate::config::{CycleWord, GroupSource, JobConfig, RelationSpec, RepBase};
use crate::CliError;

pub struct Job {
    pub group: Arc<Group>,
    /// `gl2:3` for named groups, `custom (degree n)` otherwise.
    pub group_label: String,
    pub spec: Option<GroupSpec>,
    pub subgroups: Vec<(String, Subgroup)>,
    pub relation: Option<BrauerRelation>,
    pub reps: Vec<(String, PairedRepresentation)>,
    pub primes: Vec<LocalPrimeData>,
    pub p: Option<u64>,
}

fn unresolved(what: &str, name: &str) -> CliError {
    CliError::Resolve(format!("unknown {what} '{name}'"))
}

fn perm(degree: usize, w: &CycleWord) -> Result<Perm, CliError> {
    Perm::from_cycles(degree, &w.0).map_err(|e| CliError::Resolve(format!("generator {w}: {e}")))
}

impl Job {
    pub fn build(cfg: &JobConfig) -> Result<Job, CliError> {
        let source = cfg.group.as_ref().ok_or_else(|| CliError::Resolve(String::from("no group given")))?;
        let (group, group_label, spec, mut subgroups) = match source {
            GroupSource::Named(spec) => {
                let ng = named_group(spec).map_err(|e| CliError::core(format!("group {spec}"), e))?;
                (ng.group, spec.to_string(), Some(*spec), ng.subgroups)
            }
            GroupSource::Generators { degree, generators } => {
                let gens = generators.iter().map(|w| perm(*degree, w)).collect::<Result<Vec<_>, _>>()?;
                let g = Group::generate_with_cap(*degree, &gens, DEFAULT_MAX_ORDER)
                    .map_err(|e| CliError::core(String::from("group"), e))?;
                let subs = vec![(String::from("1"), Subgroup::trivial(&g)), (String::from("G"), Subgroup::whole(&g))];
                (g, format!("custom (degree {degree})"), None, subs)
            }
        };
        for (name, words) in &cfg.subgroups {
            if subgroups.iter().any(|(n, _)| n == name) {
                return Err(CliError::Resolve(format!("subgroup '{name}' clashes with a built-in name")));
            }
            let mut idx = Vec::new();
            for w in words {
                let p = perm(group.degree(), w)?;
                idx.push(group.index_of(&p).ok_or_else(|| {
                    CliError::Resolve(format!("generator {w} of subgroup '{name}' is not in the group"))
                })?);
            }
            subgroups.push((name.clone(), Subgroup::generated_by(&group, &idx)));
        }
        let named = spec.map(|spec| NamedGroup { spec, group: group.clone(), subgroups: subgroups.clone() });
        let lookup = |name: &str| {
            subgroups.iter().find(|(n, _)| n == name).map(|(_, s)| s.clone()).ok_or_else(|| unresolved("subgroup", name))
        };

        let relation = match &cfg.relation {
            Some(RelationSpec::Terms(terms)) => {
                let terms = terms.iter().map(|(n, c)| Ok((lookup(n)?, *c))).collect::<Result<Vec<_>, CliError>>()?;
                let theta = BrauerRelation::new(&group, terms).map_err(|e| CliError::core(String::from("relation"), e))?;
                if let Verdict::Fails { class, value } = theta.verify() {
                    return Err(CliError::RelationFails { class, value: value.to_string() });
                }
                Some(theta)
            }
            Some(RelationSpec::Search(names)) => {
                let subs = names.iter().map(|n| lookup(n)).collect::<Result<Vec<_>, _>>()?;
                let mut rels =
                    find_relations(&group, Some(&subs)).map_err(|e| CliError::core(String::from("relation search"), e))?;
                match rels.len() {
                    0 => return Err(CliError::NoRelation(names.join(", "))),
                    1 => rels.pop(),
                    n => {
                        return Err(CliError::Resolve(format!(
                            "{n} independent relations on {}; give the terms explicitly",
                            names.join(", ")
                        )))
                    }
                }
            }
            None => match &named {
                Some(ng) => default_relation(ng).map_err(|e| CliError::core(String::from("standard relation"), e))?,
                None => None,
            },
        };

        let trivial = PairedRepresentation::trivial(&group);
        let mut pool: Vec<(String, PairedRepresentation)> = vec![(String::from("1"), trivial)];
        if cfg.reps.is_empty() {
            if let Some(ng) = &named {
                pool = standard_reps(ng).map_err(|e| CliError::core(String::from("standard representations"), e))?;
            }
        }
        for (label, recipe) in &cfg.reps {
            let find = |name: &str| {
                pool.iter().find(|(l, _)| l == name).map(|(_, r)| r.clone()).ok_or_else(|| unresolved("representation", name))
            };
            let ctx = |e| CliError::core(format!("representation {label}"), e);
            let mut v = match &recipe.base {
                RepBase::Perm(h) => perm_rep(&group, &lookup(h)?).map_err(ctx)?,
                RepBase::From(r) => find(r)?,
                RepBase::Sum(parts) => {
                    let mut acc = find(&parts[0])?;
                    for p in &parts[1..] {
                        acc = acc.direct_sum(&find(p)?).map_err(ctx)?;
                    }
                    acc
                }
            };
            for r in &recipe.remove {
                v = split_off(&v, &find(r)?.rep).map_err(ctx)?;
            }
            pool.push((label.clone(), v));
        }
        let reps = match &cfg.selected {
            Some(sel) => sel
                .iter()
                .map(|l| pool.iter().find(|(x, _)| x == l).cloned().ok_or_else(|| unresolved("representation", l)))
                .collect::<Result<Vec<_>, _>>()?,
            None => pool,
        };

        let primes = cfg
            .primes
            .iter()
            .map(|p| {
                LocalPrimeData::new(&p.label, lookup(&p.decomposition)?, lookup(&p.inertia)?, p.model.clone())
                    .map_err(|e| CliError::core(format!("prime {}", p.label), e))
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Job { group, group_label, spec, subgroups, relation, reps, primes, p: cfg.p })
    }

    /// Name of `h`: its own name, `name~` for a conjugate of a named
    /// subgroup, otherwise `H<order>`.
    pub fn name_of(&self, h: &Subgroup) -> String {
        if let Some((n, _)) = self.subgroups.iter().find(|(_, s)| s == h) {
            return n.clone();
        }
        if let Some((n, _)) = self.subgroups.iter().find(|(_, s)| s.is_conjugate_to(h)) {
            return format!("{n}~");
        }
        format!("H{}", h.order())
    }
}
