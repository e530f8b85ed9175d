use std::collections::{BTreeMap, BTreeSet};

use gtype_boundary::{boundary_code_table, Boundary, BoundaryCodeTable, Code, Leaf};
use gtype_core::GeometricType;
use gtype_obstructions::is_pseudo_anosov_class;

use crate::error::SurfaceError;
use crate::germ::{germs, Germ};

/// The periodic codes of one boundary periodic point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorClass {
    pub codes: BTreeSet<Code>,
    pub s_germs: Vec<Germ>,
    pub u_germs: Vec<Germ>,
    /// 1 for a code on both boundaries, 2 otherwise.
    pub a_values: BTreeMap<Code, u8>,
    /// Least `q >= 1` with `sigma^q` mapping the class onto itself.
    pub orbit_period: usize,
}

impl SectorClass {
    /// Prong count by germs.
    pub fn prongs(&self) -> usize {
        self.s_germs.len()
    }

    pub fn a_sum(&self) -> usize {
        self.a_values.values().map(|&a| a as usize).sum()
    }

    fn shifted(&self, k: i64) -> BTreeSet<Code> {
        self.codes.iter().map(|c| c.shift(k)).collect()
    }
}

/// Classes in one shift orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub period: usize,
    pub prongs: usize,
    /// Index into `SurfaceReport::classes` of the class with the least code.
    pub representative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    pub classes: Vec<SectorClass>,
    pub orbits: Vec<Orbit>,
    /// Prongs to number of orbits with that many.
    pub spectrum: BTreeMap<usize, usize>,
    /// `sum (2 - P)` over classes.
    pub twice_chi: i64,
    pub chi: i64,
    pub genus: i64,
    /// Every disagreement between the two prong counts, or between stable and
    /// unstable germs. Empty for a consistent report.
    pub warnings: Vec<String>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }
}

fn orbit_period(class: &SectorClass, bound: usize) -> Result<usize, SurfaceError> {
    (1..=bound)
        .find(|&q| class.shifted(q as i64) == class.codes)
        .ok_or_else(|| SurfaceError::Inconsistent(format!("class has no shift period up to {bound}")))
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Sector classes without the class precondition: every code of
/// `Per_s` and `Per_u`, closed under the periodic s and u pairings.
pub fn sector_classes_unchecked(b: &Boundary, table: &BoundaryCodeTable) -> Result<Vec<SectorClass>, SurfaceError> {
    let codes: Vec<Code> = table.per_s.union(&table.per_u).cloned().collect();
    let index: BTreeMap<&Code, usize> = codes.iter().enumerate().map(|(p, c)| (c, p)).collect();
    let mut dsu = Dsu((0..codes.len()).collect());
    for leaf in [Leaf::S, Leaf::U] {
        for (w, v, _) in b.leaves(leaf).all_periodic_pairs() {
            let (w, v) = if leaf == Leaf::U { (w.reversed(), v.reversed()) } else { (w.clone(), v.clone()) };
            match (index.get(&w), index.get(&v)) {
                (Some(&x), Some(&y)) => dsu.union(x, y),
                _ => {
                    return Err(SurfaceError::Inconsistent(format!(
                        "paired codes {w} and {v} are not periodic boundary codes"
                    )))
                }
            }
        }
    }
    let s_germs = germs(b.leaves(Leaf::S), false)?;
    let u_germs = germs(b.leaves(Leaf::U), true)?;
    let mut groups: BTreeMap<usize, BTreeSet<Code>> = BTreeMap::new();
    for (p, c) in codes.iter().enumerate() {
        groups.entry(dsu.find(p)).or_default().insert(c.clone());
    }
    let cycle_lcm = table
        .gamma_orbits
        .cycles
        .iter()
        .chain(&table.upsilon_orbits.cycles)
        .fold(1, |acc, c| lcm(acc, c.len()));
    let bound = 2 * b.geometric_type().n() * cycle_lcm;
    let pick = |all: &BTreeSet<Germ>, set: &BTreeSet<Code>, only_other: &BTreeSet<Code>| -> Vec<Germ> {
        let mut v: Vec<Germ> = all.iter().filter(|g| set.contains(g.codes()[0])).cloned().collect();
        v.extend(set.intersection(only_other).map(|c| Germ::Interior { code: c.clone() }));
        v
    };
    let only_s: BTreeSet<Code> = table.per_s.difference(&table.per_u).cloned().collect();
    let only_u: BTreeSet<Code> = table.per_u.difference(&table.per_s).cloned().collect();
    let mut out = Vec::new();
    for set in groups.into_values() {
        let a_values = set
            .iter()
            .map(|c| (c.clone(), if table.corner.contains(c) { 1 } else { 2 }))
            .collect();
        let mut class = SectorClass {
            s_germs: pick(&s_germs, &set, &only_u),
            u_germs: pick(&u_germs, &set, &only_s),
            codes: set,
            a_values,
            orbit_period: 0,
        };
        class.orbit_period = orbit_period(&class, bound)?;
        out.push(class);
    }
    out.sort_by(|x, y| x.codes.cmp(&y.codes));
    Ok(out)
}

fn require_class(t: &GeometricType) -> Result<(), SurfaceError> {
    let v = is_pseudo_anosov_class(t);
    if v.in_class {
        return Ok(());
    }
    let names: Vec<&str> = v.reasons.iter().map(|r| r.name()).collect();
    let why = if names.is_empty() { v.status.to_string() } else { names.join(",") };
    Err(SurfaceError::NotInClass(why))
}

/// Needs a binary type in the pseudo-Anosov class.
pub fn sector_classes(t: &GeometricType) -> Result<Vec<SectorClass>, SurfaceError> {
    require_class(t)?;
    let b = Boundary::new(t)?;
    sector_classes_unchecked(&b, &boundary_code_table(t)?)
}

/// The full report with every inconsistency listed in `warnings` rather than
/// raised. Skips the class precondition.
pub fn surface_report_unchecked(t: &GeometricType) -> Result<SurfaceReport, SurfaceError> {
    let b = Boundary::new(t)?;
    let table = boundary_code_table(t)?;
    let classes = sector_classes_unchecked(&b, &table)?;
    let mut warnings = Vec::new();
    for c in &classes {
        let first = c.codes.iter().next().map(|x| x.to_string()).unwrap_or_default();
        if c.s_germs.len() != c.u_germs.len() {
            warnings.push(format!("class of {first}: {} stable germs, {} unstable germs", c.s_germs.len(), c.u_germs.len()));
        }
        if c.a_sum() % 2 != 0 || c.a_sum() / 2 != c.prongs() {
            warnings.push(format!("class of {first}: {} prongs by germs, a-sum {}", c.prongs(), c.a_sum()));
        }
        if c.prongs() == 0 {
            warnings.push(format!("class of {first}: no germs"));
        }
    }
    let mut orbits = Vec::new();
    let mut covered = vec![false; classes.len()];
    for p in 0..classes.len() {
        if covered[p] {
            continue;
        }
        for k in 0..classes[p].orbit_period {
            let img = classes[p].shifted(k as i64);
            if let Some(x) = classes.iter().position(|c| c.codes == img) {
                covered[x] = true;
            } else {
                warnings.push(format!("shift of class {p} is not a class"));
            }
        }
        orbits.push(Orbit { period: classes[p].orbit_period, prongs: classes[p].prongs(), representative: p });
    }
    let mut spectrum = BTreeMap::new();
    for o in &orbits {
        *spectrum.entry(o.prongs).or_insert(0) += 1;
    }
    let twice_chi: i64 = classes.iter().map(|c| 2 - c.prongs() as i64).sum();
    if twice_chi % 2 != 0 {
        warnings.push(format!("sum of (2 - P) is odd: {twice_chi}"));
    }
    let chi = twice_chi.div_euclid(2);
    let genus = (2 - chi).div_euclid(2);
    if (2 - chi) % 2 != 0 || genus < 0 {
        warnings.push(format!("chi={chi} gives no closed orientable genus"));
    }
    Ok(SurfaceReport { classes, orbits, spectrum, twice_chi, chi, genus, warnings })
}

/// Fails on the class precondition and on any inconsistency.
pub fn surface_report(t: &GeometricType) -> Result<SurfaceReport, SurfaceError> {
    require_class(t)?;
    let r = surface_report_unchecked(t)?;
    if !r.warnings.is_empty() {
        return Err(SurfaceError::Inconsistent(r.warnings.join("; ")));
    }
    Ok(r)
}

pub fn prong_spectrum(t: &GeometricType) -> Result<BTreeMap<usize, usize>, SurfaceError> {
    Ok(surface_report(t)?.spectrum)
}

pub fn euler_characteristic(t: &GeometricType) -> Result<i64, SurfaceError> {
    Ok(surface_report(t)?.chi)
}

pub fn genus(t: &GeometricType) -> Result<i64, SurfaceError> {
    Ok(surface_report(t)?.genus)
}
