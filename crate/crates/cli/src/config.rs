//! Line-oriented job configuration.
//!
//! ```text
//! # comment
//! [group]
//! spec = gl2:3                      # or: degree = 4  +  generators = (0 1 2 3); (0 2)
//!
//! [subgroup "H"]
//! generators = (0 2)(1 3); (0 1)    # () alone is the trivial subgroup
//!
//! [relation]
//! terms = U1:1, U2:-1               # or: search = 1, C2, C3, G
//!
//! [rep "sigma"]
//! perm = B                          # or: sum = a, b   or: from = rho
//! remove = 1                        # optional
//!
//! [prime "l=11"]
//! decomposition = D
//! inertia = I
//! model = split_multiplicative:1    # good | custom:1,2=3;3,1=9
//!
//! [job]
//! p = 3
//! reps = 1, sigma, rho              # optional; default is 1 followed by every [rep]
//! ```
//!
//! Section headers are `[name]` or `[name "label"]`. Keys within a section
//! may appear in any order; unknown sections or keys are errors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use brauerpar_core::group::GroupSpec;
use brauerpar_core::local::ReductionModel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, field '{field}': {message}")]
pub struct ConfigError {
    pub line: usize,
    pub field: String,
    pub message: String,
}

fn err<T>(line: usize, field: &str, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError { line, field: field.into(), message: message.into() })
}

/// A permutation in cycle notation, points numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWord(pub Vec<Vec<u32>>);

impl FromStr for CycleWord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' in '{s}'"))?;
            let end = body.find(')').ok_or_else(|| format!("unclosed cycle in '{s}'"))?;
            let points = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| format!("bad point '{t}' in '{s}'")))
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[end + 1..].trim_start();
        }
        if s.is_empty() {
            return Err(String::from("empty permutation; write () for the identity"));
        }
        Ok(CycleWord(cycles))
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for c in &self.0 {
            let pts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Named(GroupSpec),
    Generators { degree: usize, generators: Vec<CycleWord> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationSpec {
    Terms(Vec<(String, i64)>),
    /// Find the unique relation supported on these subgroups.
    Search(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepBase {
    Perm(String),
    Sum(Vec<String>),
    From(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepRecipe {
    pub base: RepBase,
    pub remove: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSpec {
    pub label: String,
    pub decomposition: String,
    pub inertia: String,
    pub model: ReductionModel,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JobConfig {
    pub group: Option<GroupSource>,
    pub subgroups: Vec<(String, Vec<CycleWord>)>,
    pub relation: Option<RelationSpec>,
    pub reps: Vec<(String, RepRecipe)>,
    pub primes: Vec<PrimeSpec>,
    pub p: Option<u64>,
    /// Representations to analyse, in order.
    pub selected: Option<Vec<String>>,
}

pub fn parse_model(s: &str) -> Result<ReductionModel, String> {
    let s = s.trim();
    if s == "good" {
        return Ok(ReductionModel::Good);
    }
    if let Some(c) = s.strip_prefix("split_multiplicative:") {
        let c: u64 = c.trim().parse().map_err(|_| format!("bad Tamagawa number '{c}'"))?;
        if c == 0 {
            return Err(String::from("Tamagawa number must be positive"));
        }
        return Ok(ReductionModel::SplitMultiplicative { c });
    }
    if let Some(body) = s.strip_prefix("custom:") {
        let mut table = BTreeMap::new();
        for entry in body.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let (ef, v) = entry.split_once('=').ok_or_else(|| format!("expected e,f=c in '{entry}'"))?;
            let (e, f) = ef.split_once(',').ok_or_else(|| format!("expected e,f in '{ef}'"))?;
            let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad number '{}'", t.trim()));
            let (e, f, v) = (num(e)?, num(f)?, num(v)?);
            if e == 0 || f == 0 || v == 0 {
                return Err(format!("entries must be positive in '{entry}'"));
            }
            if table.insert((e, f), v).is_some() {
                return Err(format!("duplicate entry for ({e},{f})"));
            }
        }
        return Ok(ReductionModel::Custom(table));
    }
    Err(format!("unknown reduction model '{s}' (expected good, split_multiplicative:c or custom:e,f=c;...)"))
}

fn names(v: &str) -> Vec<String> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn words(v: &str) -> Result<Vec<CycleWord>, String> {
    v.split(';').map(str::trim).filter(|s| !s.is_empty()).map(CycleWord::from_str).collect()
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_-'=.".contains(c))
}

struct Section {
    kind: String,
    label: Option<String>,
    line: usize,
    entries: Vec<(usize, String, String)>,
}

impl Section {
    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        let i = self.entries.iter().position(|(_, k, _)| k == key)?;
        let (line, _, v) = self.entries.remove(i);
        Some((line, v))
    }

    fn finish(self) -> Result<(), ConfigError> {
        match self.entries.first() {
            Some((line, key, _)) => err(*line, key, format!("unknown key in [{}]", self.kind)),
            None => Ok(()),
        }
    }

    fn label(&self) -> Result<String, ConfigError> {
        match &self.label {
            Some(l) if valid_name(l) => Ok(l.clone()),
            Some(l) => err(self.line, &self.kind, format!("invalid name '{l}'")),
            None => err(self.line, &self.kind, format!("[{}] needs a quoted name", self.kind)),
        }
    }
}

fn split_sections(text: &str) -> Result<Vec<Section>, ConfigError> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(header) = content.strip_prefix('[') {
            let header = header.strip_suffix(']').ok_or(ConfigError {
                line,
                field: String::from("section"),
                message: String::from("missing ']'"),
            })?;
            let (kind, label) = match header.split_once(' ') {
                Some((k, rest)) => {
                    let rest = rest.trim();
                    let label = rest.strip_prefix('"').and_then(|r| r.strip_suffix('"'));
                    match label {
                        Some(l) => (k.to_string(), Some(l.to_string())),
                        None => return err(line, "section", format!("expected quoted name, found '{rest}'")),
                    }
                }
                None => (header.trim().to_string(), None),
            };
            sections.push(Section { kind, label, line, entries: Vec::new() });
            continue;
        }
        let (key, value) = match content.split_once('=') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => return err(line, content, "expected key = value"),
        };
        match sections.last_mut() {
            Some(s) => {
                if s.entries.iter().any(|(_, k, _)| k == key) {
                    return err(line, key, "duplicate key");
                }
                s.entries.push((line, key.to_string(), value.to_string()));
            }
            None => return err(line, key, "entry outside of any section"),
        }
    }
    Ok(sections)
}

fn required(s: &mut Section, key: &str) -> Result<(usize, String), ConfigError> {
    s.take(key).map_or_else(|| err(s.line, key, format!("[{}] requires '{key}'", s.kind)), Ok)
}

impl JobConfig {
    pub fn parse(text: &str) -> Result<JobConfig, ConfigError> {
        let mut cfg = JobConfig::default();
        let mut seen_relation = false;
        let mut seen_job = false;
        for mut s in split_sections(text)? {
            let single = |seen: &mut bool, s: &Section| {
                if s.label.is_some() {
                    return err(s.line, &s.kind, format!("[{}] takes no name", s.kind));
                }
                if std::mem::replace(seen, true) {
                    return err(s.line, &s.kind, format!("[{}] given twice", s.kind));
                }
                Ok(())
            };
            match s.kind.as_str() {
                "group" => {
                    let mut seen = cfg.group.is_some();
                    single(&mut seen, &s)?;
                    cfg.group = Some(match s.take("spec") {
                        Some((line, v)) => {
                            if let Some((l, _)) = s.take("degree").or_else(|| s.take("generators")) {
                                return err(l, "spec", "give either spec or degree/generators");
                            }
                            GroupSource::Named(v.parse().or_else(|e| err(line, "spec", format!("{e}")))?)
                        }
                        None => {
                            let (dl, d) = required(&mut s, "degree")?;
                            let degree =
                                d.parse::<usize>().or_else(|_| err(dl, "degree", format!("bad degree '{d}'")))?;
                            let (gl, g) = required(&mut s, "generators")?;
                            let generators = words(&g).or_else(|m| err(gl, "generators", m))?;
                            GroupSource::Generators { degree, generators }
                        }
                    });
                }
                "subgroup" => {
                    let name = s.label()?;
                    if cfg.subgroups.iter().any(|(n, _)| *n == name) {
                        return err(s.line, "subgroup", format!("subgroup '{name}' defined twice"));
                    }
                    let (gl, g) = required(&mut s, "generators")?;
                    let gens = words(&g).or_else(|m| err(gl, "generators", m))?;
                    cfg.subgroups.push((name, gens));
                }
                "relation" => {
                    single(&mut seen_relation, &s)?;
                    cfg.relation = Some(match (s.take("terms"), s.take("search")) {
                        (Some((line, v)), None) => {
                            let terms = v
                                .split(',')
                                .map(str::trim)
                                .filter(|t| !t.is_empty())
                                .map(|t| {
                                    let (n, c) = t.rsplit_once(':').ok_or_else(|| format!("expected name:coefficient, found '{t}'"))?;
                                    let c = c.trim().parse::<i64>().map_err(|_| format!("bad coefficient in '{t}'"))?;
                                    Ok((n.trim().to_string(), c))
                                })
                                .collect::<Result<Vec<_>, String>>()
                                .or_else(|m| err(line, "terms", m))?;
                            if terms.is_empty() {
                                return err(line, "terms", "no terms");
                            }
                            RelationSpec::Terms(terms)
                        }
                        (None, Some((line, v))) => {
                            let n = names(&v);
                            if n.is_empty() {
                                return err(line, "search", "no subgroups");
                            }
                            RelationSpec::Search(n)
                        }
                        (Some((line, _)), Some(_)) => return err(line, "terms", "give either terms or search"),
                        (None, None) => return err(s.line, "relation", "[relation] requires 'terms' or 'search'"),
                    });
                }
                "rep" => {
                    let label = s.label()?;
                    if label == "1" || cfg.reps.iter().any(|(l, _)| *l == label) {
                        return err(s.line, "rep", format!("representation '{label}' already defined"));
                    }
                    let bases = [s.take("perm"), s.take("sum"), s.take("from")];
                    let base = match bases {
                        [Some((_, h)), None, None] => RepBase::Perm(h),
                        [None, Some((line, v)), None] => {
                            let parts = names(&v);
                            if parts.is_empty() {
                                return err(line, "sum", "no summands");
                            }
                            RepBase::Sum(parts)
                        }
                        [None, None, Some((_, r))] => RepBase::From(r),
                        _ => return err(s.line, "rep", "give exactly one of perm, sum, from"),
                    };
                    let remove = s.take("remove").map(|(_, v)| names(&v)).unwrap_or_default();
                    cfg.reps.push((label, RepRecipe { base, remove }));
                }
                "prime" => {
                    let label = s.label()?;
                    if cfg.primes.iter().any(|p| p.label == label) {
                        return err(s.line, "prime", format!("prime '{label}' defined twice"));
                    }
                    let (_, decomposition) = required(&mut s, "decomposition")?;
                    let (_, inertia) = required(&mut s, "inertia")?;
                    let (ml, m) = required(&mut s, "model")?;
                    let model = parse_model(&m).or_else(|e| err(ml, "model", e))?;
                    cfg.primes.push(PrimeSpec { label, decomposition, inertia, model });
                }
                "job" => {
                    single(&mut seen_job, &s)?;
                    if let Some((line, v)) = s.take("p") {
                        cfg.p = Some(v.parse().or_else(|_| err(line, "p", format!("bad prime '{v}'")))?);
                    }
                    if let Some((line, v)) = s.take("reps") {
                        let n = names(&v);
                        if n.is_empty() {
                            return err(line, "reps", "no representations");
                        }
                        cfg.selected = Some(n);
                    }
                }
                other => return err(s.line, "section", format!("unknown section [{other}]")),
            }
            s.finish()?;
        }
        Ok(cfg)
    }
}

fn join_words(ws: &[CycleWord]) -> String {
    ws.iter().map(CycleWord::to_string).collect::<Vec<_>>().join("; ")
}

impl fmt::Display for JobConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blocks: Vec<String> = Vec::new();
        match &self.group {
            Some(GroupSource::Named(spec)) => blocks.push(format!("[group]\nspec = {spec}\n")),
            Some(GroupSource::Generators { degree, generators }) => blocks.push(format!(
                "[group]\ndegree = {degree}\ngenerators = {}\n",
                join_words(generators)
            )),
            None => {}
        }
        for (name, gens) in &self.subgroups {
            blocks.push(format!("[subgroup \"{name}\"]\ngenerators = {}\n", join_words(gens)));
        }
        match &self.relation {
            Some(RelationSpec::Terms(t)) => {
                let terms: Vec<String> = t.iter().map(|(n, c)| format!("{n}:{c}")).collect();
                blocks.push(format!("[relation]\nterms = {}\n", terms.join(", ")));
            }
            Some(RelationSpec::Search(n)) => blocks.push(format!("[relation]\nsearch = {}\n", n.join(", "))),
            None => {}
        }
        for (label, r) in &self.reps {
            let base = match &r.base {
                RepBase::Perm(h) => format!("perm = {h}"),
                RepBase::Sum(parts) => format!("sum = {}", parts.join(", ")),
                RepBase::From(x) => format!("from = {x}"),
            };
            let mut b = format!("[rep \"{label}\"]\n{base}\n");
            if !r.remove.is_empty() {
                b.push_str(&format!("remove = {}\n", r.remove.join(", ")));
            }
            blocks.push(b);
        }
        for p in &self.primes {
            blocks.push(format!(
                "[prime \"{}\"]\ndecomposition = {}\ninertia = {}\nmodel = {}\n",
                p.label, p.decomposition, p.inertia, p.model
            ));
        }
        if self.p.is_some() || self.selected.is_some() {
            let mut b = String::from("[job]\n");
            if let Some(p) = self.p {
                b.push_str(&format!("p = {p}\n"));
            }
            if let Some(sel) = &self.selected {
                b.push_str(&format!("reps = {}\n", sel.join(", ")));
            }
            blocks.push(b);
        }
        f.write_str(&blocks.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_words() {
        let w: CycleWord = "(0 2)(1, 4 3)".parse().unwrap();
        assert_eq!(w.0, vec![vec![0, 2], vec![1, 4, 3]]);
        assert_eq!(w.to_string(), "(0 2)(1 4 3)");
        assert_eq!("()".parse::<CycleWord>().unwrap().0, Vec::<Vec<u32>>::new());
        assert!("(0 1".parse::<CycleWord>().is_err());
        assert!("0 1".parse::<CycleWord>().is_err());
        assert!("(0 x)".parse::<CycleWord>().is_err());
    }

    #[test]
    fn models() {
        assert_eq!(parse_model("good").unwrap(), ReductionModel::Good);
        assert_eq!(parse_model("split_multiplicative:4").unwrap(), ReductionModel::SplitMultiplicative { c: 4 });
        let m = parse_model("custom:1,2=3; 3,1=9").unwrap();
        assert_eq!(m.to_string(), "custom:1,2=3;3,1=9");
        assert!(parse_model("split_multiplicative:0").is_err());
        assert!(parse_model("additive").is_err());
        assert!(parse_model("custom:1,2=3;1,2=4").is_err());
    }

    #[test]
    fn diagnostics_carry_line_and_field() {
        let e = JobConfig::parse("[group]\nspec = gl2:3\n\n[prime \"l=11\"]\ndecomposition = D\ninertia = I\nmodel = weird\n")
            .unwrap_err();
        assert_eq!((e.line, e.field.as_str()), (7, "model"));
        let e = JobConfig::parse("[group]\nspec = gl2:3\ncolour = red\n").unwrap_err();
        assert_eq!((e.line, e.field.as_str()), (3, "colour"));
        let e = JobConfig::parse("p = 3\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = JobConfig::parse("[job]\np = three\n").unwrap_err();
        assert_eq!((e.line, e.field.as_str()), (2, "p"));
        let e = JobConfig::parse("[rep \"x\"]\nperm = B\nsum = a, b\n").unwrap_err();
        assert_eq!(e.field, "rep");
        let e = JobConfig::parse("[bogus]\n").unwrap_err();
        assert_eq!(e.field, "section");
    }

    #[test]
    fn comments_and_ordering() {
        let cfg = JobConfig::parse("# header\n[job]\nreps = 1, rho # trailing\np = 5\n").unwrap();
        assert_eq!(cfg.p, Some(5));
        assert_eq!(cfg.selected, Some(vec!["1".into(), "rho".into()]));
    }
}
