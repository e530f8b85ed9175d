use std::fmt;

use crate::error::CoreError;
use crate::geometric::GeometricType;
use crate::label::{HLabel, VLabel};

/// One `map` directive before validation. The sign is kept wide so that bad
/// inputs such as `0` or `2` can be reported rather than rejected by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub from: HLabel,
    pub to: VLabel,
    pub sign: i64,
}

/// Raw data that may or may not form a geometric type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Candidate {
    pub n: usize,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    pub maps: Vec<MapEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, rule: &'static str, detail: String) {
        self.violations.push(Violation { rule, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("[{}] {}", v.rule, v.detail))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks every invariant of a geometric type and reports each failure.
pub fn validate(c: &Candidate) -> ValidationReport {
    let mut r = ValidationReport::default();
    if c.n == 0 {
        r.push("n-positive", "n must be positive".into());
    }
    if c.h.len() != c.n {
        r.push("h-length", format!("h has {} entries, expected {}", c.h.len(), c.n));
    }
    if c.v.len() != c.n {
        r.push("v-length", format!("v has {} entries, expected {}", c.v.len(), c.n));
    }
    for (idx, &x) in c.h.iter().enumerate() {
        if x == 0 {
            r.push("h-positive", format!("h_{} must be positive", idx + 1));
        }
    }
    for (idx, &x) in c.v.iter().enumerate() {
        if x == 0 {
            r.push("v-positive", format!("v_{} must be positive", idx + 1));
        }
    }
    let sh: usize = c.h.iter().sum();
    let sv: usize = c.v.iter().sum();
    if sh != sv {
        r.push("sum", format!("sum mismatch {}≠{}", sh, sv));
    }

    let hn = c.h.len().min(c.n);
    let vn = c.v.len().min(c.n);
    let mut src: Vec<Vec<Option<usize>>> = (0..hn).map(|i| vec![None; c.h[i]]).collect();
    let mut dst: Vec<Vec<Option<usize>>> = (0..vn).map(|k| vec![None; c.v[k]]).collect();
    for (idx, m) in c.maps.iter().enumerate() {
        let HLabel { i, j } = m.from;
        let VLabel { k, l } = m.to;
        if m.sign != 1 && m.sign != -1 {
            r.push("sign", format!("sign of {} is {}, expected +1 or -1", m.from, m.sign));
        }
        let from_ok = i >= 1 && i <= hn && j >= 1 && j <= c.h[i - 1];
        let to_ok = k >= 1 && k <= vn && l >= 1 && l <= c.v[k - 1];
        if !from_ok {
            r.push("domain", format!("horizontal label {} out of range", m.from));
        }
        if !to_ok {
            r.push("range", format!("vertical label {} out of range", m.to));
        }
        if from_ok {
            let slot = &mut src[i - 1][j - 1];
            if let Some(prev) = *slot {
                r.push(
                    "rho-function",
                    format!("{} mapped twice (to {} and {})", m.from, c.maps[prev].to, m.to),
                );
            } else {
                *slot = Some(idx);
            }
        }
        if to_ok {
            let slot = &mut dst[k - 1][l - 1];
            if let Some(prev) = *slot {
                r.push(
                    "rho-injective",
                    format!("rho not injective: {} hit by {} and {}", m.to, c.maps[prev].from, m.from),
                );
            } else {
                *slot = Some(idx);
            }
        }
    }
    for (i, row) in src.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            if s.is_none() {
                r.push("rho-total", format!("rho not total: ({},{}) unmapped", i + 1, j + 1));
            }
        }
    }
    for (k, row) in dst.iter().enumerate() {
        for (l, s) in row.iter().enumerate() {
            if s.is_none() {
                r.push("rho-surjective", format!("rho not surjective: ({},{}) not hit", k + 1, l + 1));
            }
        }
    }
    r.ok = r.violations.is_empty();
    r
}

impl Candidate {
    pub fn into_type(self) -> Result<GeometricType, CoreError> {
        let report = validate(&self);
        if !report.ok {
            return Err(CoreError::Invalid(report));
        }
        let mut rho: Vec<Vec<VLabel>> = self.h.iter().map(|&h| vec![VLabel::new(0, 0); h]).collect();
        let mut eps: Vec<Vec<i8>> = self.h.iter().map(|&h| vec![0; h]).collect();
        for m in &self.maps {
            rho[m.from.i - 1][m.from.j - 1] = m.to;
            eps[m.from.i - 1][m.from.j - 1] = m.sign as i8;
        }
        Ok(GeometricType::from_validated(self.n, self.h, self.v, rho, eps))
    }
}
