//! Constructors for the group families used in the worked examples:
//! cyclic, dihedral, GL₂(𝔽_p) on nonzero vectors, and the affine group
//! `(1 *; 0 *)` of order p(p−1).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Group, Perm, Subgroup};
use crate::error::{Error, Result};
use crate::linalg::is_prime;

/// Largest p accepted for `gl2(p)`.
pub const GL2_MAX_P: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order (2n, acting on an n-gon).
    Dihedral(usize),
    Gl2(u64),
    /// The matrices `(1 *; 0 *)` in GL₂(𝔽_p), realised as x ↦ ax + b on 𝔽_p.
    BorelQuotient(u64),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Gl2(p) => write!(f, "gl2:{p}"),
            GroupSpec::BorelQuotient(p) => write!(f, "borel_quotient:{p}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedGroup(s.to_string());
        let (family, arg) = s.trim().split_once(':').ok_or_else(unsupported)?;
        let n: u64 = arg.trim().parse().map_err(|_| unsupported())?;
        match family.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(n as usize)),
            "dihedral" => Ok(GroupSpec::Dihedral(n as usize)),
            "gl2" => Ok(GroupSpec::Gl2(n)),
            "borel_quotient" | "borel" => Ok(GroupSpec::BorelQuotient(n)),
            _ => Err(unsupported()),
        }
    }
}

/// A constructed group with its named, distinguished subgroups.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub spec: GroupSpec,
    pub group: Arc<Group>,
    pub subgroups: Vec<(String, Subgroup)>,
}

impl NamedGroup {
    pub fn subgroup(&self, name: &str) -> Option<&Subgroup> {
        self.subgroups.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// Name of the first distinguished subgroup equal to `h`.
    pub fn name_of(&self, h: &Subgroup) -> Option<&str> {
        self.subgroups.iter().find(|(_, s)| s == h).map(|(n, _)| n.as_str())
    }
}

pub fn named_group(spec: &GroupSpec) -> Result<NamedGroup> {
    match *spec {
        GroupSpec::Cyclic(n) => cyclic(n),
        GroupSpec::Dihedral(order) => dihedral(order),
        GroupSpec::Gl2(p) => gl2(p),
        GroupSpec::BorelQuotient(p) => borel_quotient(p),
    }
    .map_err(|e| match e {
        Error::UnsupportedGroup(_) => Error::UnsupportedGroup(spec.to_string()),
        e => e,
    })
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn cyclic(n: usize) -> Result<NamedGroup> {
    if n == 0 {
        return Err(Error::UnsupportedGroup(String::new()));
    }
    let r = Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    let gens = if n == 1 { vec![] } else { vec![r] };
    let group = Group::generate(n, &gens)?;
    let gen = if n == 1 { group.identity() } else { group.generators()[0] };
    let mut subgroups = vec![("1".to_string(), Subgroup::trivial(&group))];
    for d in divisors(n) {
        if d == 1 || d == n {
            continue;
        }
        let mut x = group.identity();
        for _ in 0..n / d {
            x = group.mul(x, gen);
        }
        subgroups.push((format!("C{d}"), Subgroup::generated_by(&group, &[x])));
    }
    if n > 1 {
        subgroups.push(("G".to_string(), Subgroup::whole(&group)));
    }
    Ok(NamedGroup { spec: GroupSpec::Cyclic(n), group, subgroups })
}

fn dihedral(order: usize) -> Result<NamedGroup> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::UnsupportedGroup(String::new()));
    }
    let n = (order / 2) as u32;
    let r = Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    let s = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
    let group = Group::generate(n as usize, &[r.clone(), s.clone()])?;
    let ri = group.index_of(&r).unwrap();
    let si = group.index_of(&s).unwrap();
    let subgroups = vec![
        ("1".to_string(), Subgroup::trivial(&group)),
        ("C2".to_string(), Subgroup::generated_by(&group, &[si])),
        (format!("C{n}"), Subgroup::generated_by(&group, &[ri])),
        ("G".to_string(), Subgroup::whole(&group)),
    ];
    Ok(NamedGroup { spec: GroupSpec::Dihedral(order), group, subgroups })
}

pub(crate) fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

fn is_square_mod(x: u64, p: u64) -> bool {
    x % p != 0 && (1..p).any(|y| y * y % p == x % p)
}

/// Matrix `(a b; c d)` of an element of GL₂(𝔽_p) acting on nonzero vectors
/// `(x, y)` indexed by `x + p·y − 1`.
fn gl2_entries(g: &Perm, p: u64) -> [u64; 4] {
    let decode = |i: usize| {
        let v = i as u64 + 1;
        (v % p, v / p)
    };
    let (a, c) = decode(g.apply(0));
    let (b, d) = decode(g.apply((p - 1) as usize));
    [a, b, c, d]
}

fn gl2_perm(m: [u64; 4], p: u64) -> Result<Perm> {
    let [a, b, c, d] = m;
    let n = p * p - 1;
    let images = (0..n)
        .map(|i| {
            let v = i + 1;
            let (x, y) = (v % p, v / p);
            let (x2, y2) = ((a * x + b * y) % p, (c * x + d * y) % p);
            (x2 + p * y2 - 1) as u32
        })
        .collect();
    Perm::from_images(images)
}

fn gl2(p: u64) -> Result<NamedGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > GL2_MAX_P {
        return Err(Error::UnsupportedGroup(String::new()));
    }
    let w = primitive_root(p);
    let gens = [[w, 0, 0, 1], [1, 1, 0, 1], [0, 1, 1, 0]]
        .into_iter()
        .map(|m| gl2_perm(m, p))
        .collect::<Result<Vec<_>>>()?;
    let group = Group::generate((p * p - 1) as usize, &gens)?;
    let entries: Vec<[u64; 4]> = group.elements().iter().map(|g| gl2_entries(g, p)).collect();
    let by = |pred: &dyn Fn([u64; 4]) -> bool| Subgroup::from_predicate(&group, |i| pred(entries[i]));
    let sq = |x: u64| is_square_mod(x, p);
    let subgroups = vec![
        ("1".to_string(), Subgroup::trivial(&group)),
        ("B".to_string(), by(&|[_, _, c, _]| c == 0)?),
        ("U1".to_string(), by(&|[a, _, c, _]| c == 0 && sq(a))?),
        ("U2".to_string(), by(&|[_, _, c, d]| c == 0 && sq(d))?),
        ("D".to_string(), by(&|[_, _, c, d]| c == 0 && d == 1)?),
        ("I".to_string(), by(&|[a, _, c, d]| c == 0 && a == 1 && d == 1)?),
        ("G".to_string(), Subgroup::whole(&group)),
    ];
    Ok(NamedGroup { spec: GroupSpec::Gl2(p), group, subgroups })
}

fn borel_quotient(p: u64) -> Result<NamedGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let w = primitive_root(p);
    let affine = |a: u64, b: u64| Perm::from_images((0..p).map(|x| ((a * x + b) % p) as u32).collect());
    let group = Group::generate(p as usize, &[affine(1, 1)?, affine(w, 0)?])?;
    // x ↦ ax + b, recovered from the images of 0 and 1
    let coeffs: Vec<(u64, u64)> = group
        .elements()
        .iter()
        .map(|g| {
            let b = g.apply(0) as u64;
            ((g.apply(1) as u64 + p - b) % p, b)
        })
        .collect();
    let mut subgroups = vec![
        ("1".to_string(), Subgroup::trivial(&group)),
        ("L".to_string(), Subgroup::from_predicate(&group, |i| coeffs[i].1 == 0)?),
        ("M".to_string(), Subgroup::from_predicate(&group, |i| coeffs[i].0 == 1)?),
        ("G".to_string(), Subgroup::whole(&group)),
    ];
    let m = (p - 1) as usize;
    for d in divisors(m) {
        if d == 1 {
            continue;
        }
        let dth_powers: Vec<u64> = (1..p).map(|x| (0..d).fold(1, |acc, _| acc * x % p)).collect();
        subgroups.push((
            format!("K{d}"),
            Subgroup::from_predicate(&group, |i| dth_powers.contains(&coeffs[i].0))?,
        ));
    }
    Ok(NamedGroup { spec: GroupSpec::BorelQuotient(p), group, subgroups })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &NamedGroup) -> Vec<(String, usize)> {
        g.subgroups.iter().map(|(n, s)| (n.clone(), s.order())).collect()
    }

    /// Independent count of GL₂(𝔽_p) by enumerating all 2×2 matrices.
    fn gl2_order_by_enumeration(p: u64) -> usize {
        let mut count = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c) % p != 0 {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn dihedral_six() {
        let g = named_group(&GroupSpec::Dihedral(6)).unwrap();
        assert_eq!(g.group.order(), 6);
        let o: Vec<usize> = g.subgroups.iter().map(|(_, s)| s.order()).collect();
        assert_eq!(o, vec![1, 2, 3, 6]);
    }

    #[test]
    fn gl2_three() {
        let g = named_group(&GroupSpec::Gl2(3)).unwrap();
        assert_eq!(g.group.order(), gl2_order_by_enumeration(3));
        assert_eq!(g.group.order(), 48);
        assert_eq!(g.group.degree(), 8);
        assert_eq!(g.subgroup("B").unwrap().order(), 12);
        assert_eq!(g.subgroup("U1").unwrap().order(), 6);
        assert_eq!(g.subgroup("U2").unwrap().order(), 6);
        assert_eq!(g.subgroup("D").unwrap().order(), 6);
        assert_eq!(g.subgroup("I").unwrap().order(), 3);
        assert_eq!(g.group.conjugacy_classes().len(), 8);
    }

    #[test]
    fn gl2_five() {
        let g = named_group(&GroupSpec::Gl2(5)).unwrap();
        assert_eq!(g.group.order(), gl2_order_by_enumeration(5));
        assert_eq!(g.subgroup("B").unwrap().order(), 80);
        assert_eq!(g.subgroup("U1").unwrap().order(), 40);
    }

    #[test]
    fn gl2_matrix_decoding_is_multiplicative() {
        let p = 3;
        let g = named_group(&GroupSpec::Gl2(p)).unwrap();
        let grp = &g.group;
        for a in 0..grp.order() {
            for b in 0..grp.order() {
                let [a1, b1, c1, d1] = gl2_entries(grp.element(a), p);
                let [a2, b2, c2, d2] = gl2_entries(grp.element(b), p);
                let prod = [
                    (a1 * a2 + b1 * c2) % p,
                    (a1 * b2 + b1 * d2) % p,
                    (c1 * a2 + d1 * c2) % p,
                    (c1 * b2 + d1 * d2) % p,
                ];
                assert_eq!(gl2_entries(grp.element(grp.mul(a, b)), p), prod);
            }
        }
    }

    #[test]
    fn borel_quotient_five() {
        let g = named_group(&GroupSpec::BorelQuotient(5)).unwrap();
        assert_eq!(g.group.order(), 20);
        let o = orders(&g);
        assert!(o.contains(&("L".to_string(), 4)));
        assert!(o.contains(&("M".to_string(), 5)));
        assert_eq!(g.subgroup("L").unwrap().index(), 5);
        assert_eq!(g.subgroup("M").unwrap().index(), 4);
        assert_eq!(g.subgroup("K2").unwrap().order(), 10);
        assert_eq!(g.subgroup("K4").unwrap().order(), 5);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(named_group(&GroupSpec::Gl2(4)), Err(Error::NotPrime(4))));
        assert!(matches!(named_group(&GroupSpec::Gl2(11)), Err(Error::UnsupportedGroup(_))));
        assert!(matches!(named_group(&GroupSpec::Dihedral(5)), Err(Error::UnsupportedGroup(_))));
        assert!("sporadic:12".parse::<GroupSpec>().is_err());
        assert_eq!("dihedral:10".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(10));
        assert_eq!("borel:5".parse::<GroupSpec>().unwrap(), GroupSpec::BorelQuotient(5));
    }

    #[test]
    fn cyclic_subgroups() {
        let g = named_group(&GroupSpec::Cyclic(12)).unwrap();
        let o: Vec<usize> = g.subgroups.iter().map(|(_, s)| s.order()).collect();
        assert_eq!(o, vec![1, 2, 3, 4, 6, 12]);
        let t = named_group(&GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(t.group.order(), 1);
    }
}
