use std::fmt;

use gtype_algebra::{default_budget, double_boundaries, mixing_report, DoubleBoundary, MixingReport, PowerSeq};
use gtype_core::GeometricType;

use crate::conditions::{find_impasse, find_type1, find_type2, find_type3};
use crate::error::ObstructionError;
use crate::witness::{ConditionWitness, Indices, Kind};

const KINDS: [Kind; 4] = [Kind::Impasse, Kind::Type1, Kind::Type2, Kind::Type3];

/// Searches one condition on `p`, reporting it at power `m`.
pub fn find_condition(p: &GeometricType, kind: Kind, m: usize) -> Option<ConditionWitness> {
    let indices = match kind {
        Kind::Impasse => find_impasse(p).map(|stripe| Indices::Impasse { stripe }),
        Kind::Type1 => find_type1(p).map(|(comp, r, r2)| Indices::Type1 { comp, r, r2 }),
        Kind::Type2 => find_type2(p).map(|(a, b, r, r2)| Indices::Type2 { a, b, r, r2 }),
        Kind::Type3 => find_type3(p).map(|(s1, s2, s3, r, r2)| Indices::Type3 { s1, s2, s3, r, r2 }),
    }?;
    Some(ConditionWitness { power: m, indices })
}

pub fn condition_type1(t: &GeometricType) -> Option<ConditionWitness> {
    find_condition(t, Kind::Type1, 1)
}

pub fn condition_type2(t: &GeometricType) -> Option<ConditionWitness> {
    find_condition(t, Kind::Type2, 1)
}

pub fn condition_type3(t: &GeometricType) -> Option<ConditionWitness> {
    find_condition(t, Kind::Type3, 1)
}

pub fn impasse_property(t: &GeometricType) -> Option<ConditionWitness> {
    find_condition(t, Kind::Impasse, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    /// Last power searched for types 1, 2 and 3.
    pub obstruction: usize,
    /// Last power searched for the impasse property.
    pub impasse: usize,
}

impl ScanBounds {
    /// `6n` and `2n + 1`.
    pub fn for_type(t: &GeometricType) -> Self {
        ScanBounds { obstruction: 6 * t.n(), impasse: 2 * t.n() + 1 }
    }

    fn of(&self, k: Kind) -> usize {
        if k == Kind::Impasse {
            self.impasse
        } else {
            self.obstruction
        }
    }
}

/// Least power of each kind within the bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ObstructionReport {
    pub impasse: Option<ConditionWitness>,
    pub type1: Option<ConditionWitness>,
    pub type2: Option<ConditionWitness>,
    pub type3: Option<ConditionWitness>,
    pub max_materialized: usize,
}

impl ObstructionReport {
    pub fn get(&self, k: Kind) -> Option<&ConditionWitness> {
        match k {
            Kind::Impasse => self.impasse.as_ref(),
            Kind::Type1 => self.type1.as_ref(),
            Kind::Type2 => self.type2.as_ref(),
            Kind::Type3 => self.type3.as_ref(),
        }
    }

    fn slot(&mut self, k: Kind) -> &mut Option<ConditionWitness> {
        match k {
            Kind::Impasse => &mut self.impasse,
            Kind::Type1 => &mut self.type1,
            Kind::Type2 => &mut self.type2,
            Kind::Type3 => &mut self.type3,
        }
    }

    pub fn witnesses(&self) -> Vec<&ConditionWitness> {
        KINDS.iter().filter_map(|&k| self.get(k)).collect()
    }
}

pub fn scan_obstructions(t: &GeometricType, bounds: ScanBounds) -> Result<ObstructionReport, ObstructionError> {
    scan_obstructions_with_budget(t, bounds, default_budget())
}

/// Materializes `T, T^2, ...` once and searches every kind still missing at
/// each power, impasse first.
pub fn scan_obstructions_with_budget(
    t: &GeometricType,
    bounds: ScanBounds,
    budget: u64,
) -> Result<ObstructionReport, ObstructionError> {
    if let Some(d) = double_boundaries(t).into_iter().next() {
        return Err(ObstructionError::DoubleBoundary(d));
    }
    let mut report = ObstructionReport::default();
    let mut seq = PowerSeq::new(t, budget);
    let last = bounds.obstruction.max(bounds.impasse);
    for _ in 0..last {
        let pending: Vec<Kind> = KINDS
            .iter()
            .copied()
            .filter(|&k| report.get(k).is_none() && seq.max_materialized() < bounds.of(k))
            .collect();
        if pending.is_empty() {
            break;
        }
        let (m, p) = seq.advance()?;
        for k in pending {
            if let Some(w) = find_condition(p, k, m) {
                *report.slot(k) = Some(w);
            }
        }
        report.max_materialized = m;
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    InClass,
    NotInClass,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::InClass => "in_class",
            Status::NotInClass => "not_in_class",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    NotMixing,
    DoubleBoundary(DoubleBoundary),
    Condition(ConditionWitness),
}

impl Reason {
    pub fn name(&self) -> &'static str {
        match self {
            Reason::NotMixing => "not_mixing",
            Reason::DoubleBoundary(_) => "double_boundary",
            Reason::Condition(w) => match w.kind() {
                Kind::Impasse => "impasse",
                Kind::Type1 => "obstruction1",
                Kind::Type2 => "obstruction2",
                Kind::Type3 => "obstruction3",
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAVerdict {
    pub status: Status,
    pub in_class: bool,
    pub reasons: Vec<Reason>,
    /// Largest power materialized, never above `6n`.
    pub powers_examined: usize,
    pub mixing: MixingReport,
    /// Why the verdict is inconclusive.
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerdictOptions {
    /// Stop the scan earlier than `6n`. A clean truncated scan is inconclusive.
    pub max_power: Option<usize>,
    pub budget: u64,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions { max_power: None, budget: default_budget() }
    }
}

pub fn is_pseudo_anosov_class(t: &GeometricType) -> PAVerdict {
    pa_verdict(t, VerdictOptions::default())
}

/// Scans powers in increasing order up to `6n` (impasse up to `2n+1`) and
/// stops at the first power carrying any witness; all kinds found there are
/// reported. A non-mixing matrix is a reason by itself, the scan still runs
/// to attach witnesses.
pub fn pa_verdict(t: &GeometricType, opts: VerdictOptions) -> PAVerdict {
    let mixing = mixing_report(&t.incidence_matrix());
    let mut reasons = Vec::new();
    if !mixing.mixing {
        reasons.push(Reason::NotMixing);
    }
    let dbs = double_boundaries(t);
    if !dbs.is_empty() {
        reasons.extend(dbs.into_iter().map(Reason::DoubleBoundary));
        return PAVerdict { status: Status::NotInClass, in_class: false, reasons, powers_examined: 0, mixing, note: None };
    }
    let bounds = ScanBounds::for_type(t);
    let cap = opts.max_power.unwrap_or(bounds.obstruction).min(bounds.obstruction);
    let mut seq = PowerSeq::new(t, opts.budget);
    let mut note = None;
    for _ in 0..cap {
        let (m, p) = match seq.advance() {
            Ok(x) => x,
            Err(e) => {
                note = Some(e.to_string());
                break;
            }
        };
        let found: Vec<Reason> = KINDS
            .iter()
            .filter(|&&k| m <= bounds.of(k))
            .filter_map(|&k| find_condition(p, k, m))
            .map(Reason::Condition)
            .collect();
        if !found.is_empty() {
            reasons.extend(found);
            break;
        }
    }
    let powers_examined = seq.max_materialized();
    debug_assert!(powers_examined <= bounds.obstruction);
    let status = if !reasons.is_empty() {
        note = None;
        Status::NotInClass
    } else if note.is_some() {
        Status::Inconclusive
    } else if cap < bounds.obstruction {
        note = Some(format!("scan stopped at power {cap}, below 6n = {}", bounds.obstruction));
        Status::Inconclusive
    } else {
        Status::InClass
    };
    PAVerdict { status, in_class: status == Status::InClass, reasons, powers_examined, mixing, note }
}
