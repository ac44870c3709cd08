use brauerpar_core::local::{c_ratio_ord, predict_parity, splitting, tamagawa_ord, PARITY_CAVEAT};
use brauerpar_core::regconst::{regulator_constant, s_theta, RegulatorConstant};
use brauerpar_core::relation::{find_relations, BrauerRelation};
use brauerpar_core::rep::Representation;

use crate::config::{JobConfig, RelationSpec};
use crate::job::Job;
use crate::report::Report;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Relations,
    Regconst,
    Stheta,
    Splitting,
    Parity,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Relations => "relations",
            Command::Regconst => "regconst",
            Command::Stheta => "stheta",
            Command::Splitting => "splitting",
            Command::Parity => "parity",
        }
    }
}

fn core(ctx: &str) -> impl Fn(brauerpar_core::Error) -> CliError + '_ {
    move |e| CliError::core(ctx.to_string(), e)
}

fn start(job: &Job, command: Command) -> Report {
    let mut r = Report::default();
    r.header.push(format!("brauerpar {}", command.name()));
    r.header.push(format!(
        "group: {} (order {}, degree {})",
        job.group_label,
        job.group.order(),
        job.group.degree()
    ));
    if let Some(p) = job.p {
        r.header.push(format!("p: {p}"));
    }
    r.set("command", command.name());
    r.set("group", &job.group_label);
    r.set("order", job.group.order());
    if let Some(p) = job.p {
        r.set("p", p);
    }
    r
}

fn finish(mut r: Report) -> Report {
    r.section("caveat").push(PARITY_CAVEAT.to_string());
    r
}

fn relation_strings(job: &Job, theta: &BrauerRelation) -> (String, String) {
    let mut human = String::new();
    let mut machine = Vec::new();
    for (k, (h, c)) in theta.terms().iter().enumerate() {
        let name = job.name_of(h);
        let sign = match (k, *c < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let mag = c.unsigned_abs();
        if mag == 1 {
            human.push_str(&format!("{sign}{name}"));
        } else {
            human.push_str(&format!("{sign}{mag}*{name}"));
        }
        machine.push(format!("{name}:{c}"));
    }
    if human.is_empty() {
        human.push('0');
    }
    (human, machine.join(","))
}

fn require_relation(job: &Job) -> Result<&BrauerRelation, CliError> {
    job.relation.as_ref().ok_or(CliError::MissingInput(
        "no relation: add a [relation] section (the group has no standard one)",
    ))
}

fn require_p(job: &Job) -> Result<u64, CliError> {
    job.p.ok_or(CliError::MissingInput("p is required: pass --p or set p in [job]"))
}

fn relation_section(r: &mut Report, job: &Job, theta: &BrauerRelation) {
    let (human, machine) = relation_strings(job, theta);
    let lines = r.section("relation");
    lines.push(format!("Theta = {human}"));
    for (h, c) in theta.terms() {
        lines.push(format!("  {:<6} order {:>4}  coefficient {c}", job.name_of(h), h.order()));
    }
    r.set("relation", machine);
}

fn constant_section(r: &mut Report, job: &Job, theta: &BrauerRelation) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for (label, v) in &job.reps {
        let c: RegulatorConstant =
            regulator_constant(theta, &v.rep, Some(&v.pairing)).map_err(core(&format!("C(Theta,{label})")))?;
        let ord = job.p.map(|p| c.ord_p(p)).transpose().map_err(core("valuation"))?;
        rows.push((label.clone(), c, ord));
    }
    let lines = r.section("regulator constants");
    for (label, c, ord) in &rows {
        let suffix = match (ord, job.p) {
            (Some(k), Some(p)) => format!("  ord_{p} = {k}"),
            _ => String::new(),
        };
        lines.push(format!("C(Theta,{label}) = {}{suffix}", c.value));
        for (t, (h, _)) in c.terms.iter().zip(theta.terms()) {
            lines.push(format!(
                "  {:<6} n = {:>3}  dim = {}  det = {}",
                job.name_of(h),
                t.coefficient,
                t.fixed_dim,
                t.determinant
            ));
        }
    }
    for (label, c, ord) in rows {
        r.set(format!("c_theta.{label}"), &c.value);
        if let Some(k) = ord {
            r.set(format!("ord_p.{label}"), k);
        }
    }
    Ok(())
}

fn rep_refs(job: &Job) -> Vec<(&str, &Representation)> {
    job.reps.iter().map(|(l, v)| (l.as_str(), &v.rep)).collect()
}

fn members_value(members: &[&str]) -> String {
    members.join(",")
}

fn stheta_section(r: &mut Report, job: &Job, theta: &BrauerRelation, p: u64) -> Result<(), CliError> {
    let st = s_theta(theta, &rep_refs(job), p).map_err(core("S_theta"))?;
    let members = st.members();
    let lines = r.section("S_theta");
    for e in &st.entries {
        let tag = if e.is_member() { "  member" } else { "" };
        lines.push(format!("ord_{p} C(Theta,{}) = {}{tag}", e.label, e.ord_p));
    }
    lines.push(format!("S_theta = {{{}}}", members.join(", ")));
    lines.push(format!(
        "exhaustive: {}",
        if st.exhaustive { "yes" } else { "no (other representations may have nonzero fixed spaces)" }
    ));
    let value = members_value(&members);
    r.set("s_theta", value);
    r.set("s_theta_exhaustive", st.exhaustive);
    Ok(())
}

fn splitting_section(r: &mut Report, job: &Job) -> Result<(), CliError> {
    if job.primes.is_empty() {
        return Err(CliError::MissingInput("no local data: add [prime \"...\"] sections"));
    }
    let targets: Vec<_> = match &job.relation {
        Some(theta) => theta.terms().iter().map(|(h, _)| h.clone()).collect(),
        None => job.subgroups.iter().map(|(_, h)| h.clone()).collect(),
    };
    let mut lines = Vec::new();
    let mut machine = Vec::new();
    for prime in &job.primes {
        lines.push(format!(
            "prime {}: D order {}, I order {}, model {}",
            prime.label,
            prime.decomposition().order(),
            prime.inertia().order(),
            prime.model
        ));
        for h in &targets {
            let name = job.name_of(h);
            let s = splitting(&job.group, h, prime.decomposition(), prime.inertia()).map_err(core("splitting"))?;
            let mut line = format!("  {name:<6} {s}");
            machine.push((format!("splitting.{}.{name}", prime.label), s.to_string()));
            if let Some(p) = job.p {
                let t = tamagawa_ord(&prime.model, &s, p).map_err(core(&format!("prime {}", prime.label)))?;
                line.push_str(&format!("  ord_{p} Tamagawa = {t}"));
                machine.push((format!("tamagawa_ord.{}.{name}", prime.label), t.to_string()));
            }
            lines.push(line);
        }
    }
    if let (Some(theta), Some(p)) = (&job.relation, job.p) {
        let c = c_ratio_ord(theta, &job.primes, p).map_err(core("c_ratio_ord"))?;
        lines.push(format!("c_ratio_ord = {c}"));
        machine.push((String::from("c_ratio_ord"), c.to_string()));
        machine.push((String::from("c_ratio_ord_mod2"), c.rem_euclid(2).to_string()));
    }
    r.section("splittings").extend(lines);
    for (k, v) in machine {
        r.set(k, v);
    }
    Ok(())
}

fn relations(cfg: &JobConfig) -> Result<Report, CliError> {
    let mut base = cfg.clone();
    let search = match base.relation.take() {
        Some(RelationSpec::Search(names)) => Some(names),
        _ => None,
    };
    let job = Job::build(&base)?;
    let subs = match &search {
        Some(names) => names
            .iter()
            .map(|n| {
                job.subgroups
                    .iter()
                    .find(|(m, _)| m == n)
                    .map(|(_, h)| h.clone())
                    .ok_or_else(|| CliError::Resolve(format!("unknown subgroup '{n}'")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => job.group.subgroups_up_to_conjugacy().map_err(core("subgroup enumeration"))?,
    };
    let rels = find_relations(&job.group, Some(&subs)).map_err(core("relation search"))?;
    let mut r = start(&job, Command::Relations);
    let lines = r.section("subgroups");
    for (k, h) in subs.iter().enumerate() {
        let mut gens: Vec<String> = h.generators().iter().map(|&g| job.group.element(g).to_string()).collect();
        if gens.is_empty() {
            gens.push(String::from("()"));
        }
        lines.push(format!("#{k:<3} {:<6} order {:>4}  generators {}", job.name_of(h), h.order(), gens.join(" ")));
    }
    let lines = r.section("relations");
    if rels.is_empty() {
        lines.push(String::from("no relations found"));
    }
    let mut machine = Vec::new();
    for (k, theta) in rels.iter().enumerate() {
        let (human, m) = relation_strings(&job, theta);
        lines.push(format!("Theta_{} = {human}", k + 1));
        machine.push((format!("relation.{}", k + 1), m));
    }
    r.set("relations_count", rels.len());
    for (k, v) in machine {
        r.set(k, v);
    }
    Ok(finish(r))
}

pub fn execute(command: Command, cfg: &JobConfig) -> Result<Report, CliError> {
    if command == Command::Relations {
        return relations(cfg);
    }
    let job = Job::build(cfg)?;
    let mut r = start(&job, command);
    match command {
        Command::Relations => unreachable!(),
        Command::Regconst => {
            let theta = require_relation(&job)?;
            relation_section(&mut r, &job, theta);
            constant_section(&mut r, &job, theta)?;
        }
        Command::Stheta => {
            let theta = require_relation(&job)?;
            let p = require_p(&job)?;
            relation_section(&mut r, &job, theta);
            stheta_section(&mut r, &job, theta, p)?;
        }
        Command::Splitting => {
            if let Some(theta) = &job.relation {
                relation_section(&mut r, &job, theta);
            }
            splitting_section(&mut r, &job)?;
        }
        Command::Parity => {
            let theta = require_relation(&job)?;
            let p = require_p(&job)?;
            relation_section(&mut r, &job, theta);
            constant_section(&mut r, &job, theta)?;
            stheta_section(&mut r, &job, theta, p)?;
            if !job.primes.is_empty() {
                splitting_section(&mut r, &job)?;
            }
            let report = predict_parity(theta, &rep_refs(&job), &job.primes, p).map_err(core("parity"))?;
            let lines = r.section("parity");
            lines.push(format!("ord_{p} of the Tamagawa quotient = {}", report.c_ratio_ord));
            lines.push(format!("conclusion: {}", report.conclusion));
            for w in &report.warnings {
                lines.push(format!("warning: {w}"));
            }
            if job.primes.is_empty() {
                r.set("c_ratio_ord", report.c_ratio_ord);
                r.set("c_ratio_ord_mod2", report.c_ratio_ord_mod2());
            }
            r.set("parity", if report.odd { "odd" } else { "even" });
            r.set("conclusion", &report.conclusion);
        }
    }
    Ok(finish(r))
}
