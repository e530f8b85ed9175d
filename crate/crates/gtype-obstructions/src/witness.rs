//! Witnesses and their one-line certificates.
//!
//! ```text
//! WITNESS impasse m=<m> i=<i> j=<j>
//! WITNESS type1 m=<m> comp=(k,s) r=(i,j) r2=(i,j)
//! WITNESS type2 m=<m> A=(k,s) B=(k,s) r=(i,j) r2=(i,j)
//! WITNESS type3 m=<m> S1=(k,s,L|R) S2=(k,s,L|R) S3=(k,s,L|R) r=(i,j) r2=(i,j)
//! ```
//! Sides are written `+1` or `-1`; `r` and `r2` name stripes of `T^m` by the
//! label of the sub-rectangle below them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use gtype_algebra::power;
use gtype_core::{GeometricType, HLabel, Sign};

use crate::conditions::{holds_impasse, holds_type1, holds_type2, holds_type3, Half, Separatrix};
use crate::error::{CertificateError, ObstructionError};
use crate::stripe::Component;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Impasse,
    Type1,
    Type2,
    Type3,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Impasse => "impasse",
            Kind::Type1 => "type1",
            Kind::Type2 => "type2",
            Kind::Type3 => "type3",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indices {
    Impasse { stripe: HLabel },
    Type1 { comp: Component, r: HLabel, r2: HLabel },
    Type2 { a: Component, b: Component, r: HLabel, r2: HLabel },
    Type3 { s1: Separatrix, s2: Separatrix, s3: Separatrix, r: HLabel, r2: HLabel },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionWitness {
    /// The condition holds on `T^power`.
    pub power: usize,
    pub indices: Indices,
}

impl ConditionWitness {
    pub fn kind(&self) -> Kind {
        match self.indices {
            Indices::Impasse { .. } => Kind::Impasse,
            Indices::Type1 { .. } => Kind::Type1,
            Indices::Type2 { .. } => Kind::Type2,
            Indices::Type3 { .. } => Kind::Type3,
        }
    }

    /// Re-evaluates the condition on `p`, taken to be `T^power`.
    pub fn holds_on(&self, p: &GeometricType) -> bool {
        match self.indices {
            Indices::Impasse { stripe } => holds_impasse(p, stripe),
            Indices::Type1 { comp, r, r2 } => holds_type1(p, comp, r, r2),
            Indices::Type2 { a, b, r, r2 } => holds_type2(p, a, b, r, r2),
            Indices::Type3 { s1, s2, s3, r, r2 } => holds_type3(p, s1, s2, s3, r, r2),
        }
    }

    /// Recomputes `T^power` and re-evaluates the condition there.
    pub fn verify(&self, t: &GeometricType) -> Result<bool, ObstructionError> {
        let p = power(t, self.power)?;
        Ok(self.holds_on(&p))
    }
}

fn lab(l: HLabel) -> String {
    format!("({},{})", l.i, l.j)
}

impl fmt::Display for ConditionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WITNESS {} m={}", self.kind(), self.power)?;
        match self.indices {
            Indices::Impasse { stripe } => write!(f, " i={} j={}", stripe.i, stripe.j),
            Indices::Type1 { comp, r, r2 } => write!(f, " comp={comp} r={} r2={}", lab(r), lab(r2)),
            Indices::Type2 { a, b, r, r2 } => write!(f, " A={a} B={b} r={} r2={}", lab(r), lab(r2)),
            Indices::Type3 { s1, s2, s3, r, r2 } => {
                write!(f, " S1={s1} S2={s2} S3={s3} r={} r2={}", lab(r), lab(r2))
            }
        }
    }
}

fn bad(msg: impl Into<String>) -> CertificateError {
    CertificateError(msg.into())
}

fn tuple(s: &str) -> Result<Vec<&str>, CertificateError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| bad(format!("expected a parenthesised tuple, got `{s}`")))?;
    Ok(inner.split(',').map(str::trim).collect())
}

fn num(s: &str) -> Result<usize, CertificateError> {
    s.parse().map_err(|_| bad(format!("expected a positive integer, got `{s}`")))
}

fn sign(s: &str) -> Result<Sign, CertificateError> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(bad(format!("expected a sign, got `{s}`"))),
    }
}

fn parse_label(s: &str) -> Result<HLabel, CertificateError> {
    match tuple(s)?.as_slice() {
        [i, j] => Ok(HLabel::new(num(i)?, num(j)?)),
        _ => Err(bad(format!("expected (i,j), got `{s}`"))),
    }
}

fn parse_comp(s: &str) -> Result<Component, CertificateError> {
    match tuple(s)?.as_slice() {
        [k, e] => Ok(Component { rect: num(k)?, side: sign(e)? }),
        _ => Err(bad(format!("expected (k,s), got `{s}`"))),
    }
}

fn parse_sep(s: &str) -> Result<Separatrix, CertificateError> {
    match tuple(s)?.as_slice() {
        [k, e, h] => {
            let half = match *h {
                "L" => Half::Left,
                "R" => Half::Right,
                _ => return Err(bad(format!("expected L or R, got `{h}`"))),
            };
            Ok(Separatrix { comp: Component { rect: num(k)?, side: sign(e)? }, half })
        }
        _ => Err(bad(format!("expected (k,s,L|R), got `{s}`"))),
    }
}

impl FromStr for ConditionWitness {
    type Err = CertificateError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let mut words = line.split_whitespace();
        if words.next() != Some("WITNESS") {
            return Err(bad("line must start with WITNESS"));
        }
        let kind = words.next().ok_or_else(|| bad("missing kind"))?;
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{w}`")))?;
            if kv.insert(k, v).is_some() {
                return Err(bad(format!("duplicate key `{k}`")));
            }
        }
        let mut take = |k: &str| kv.remove(k).ok_or_else(|| bad(format!("missing `{k}=`")));
        let power = num(take("m")?)?;
        if power == 0 {
            return Err(bad("m must be at least 1"));
        }
        let indices = match kind {
            "impasse" => Indices::Impasse { stripe: HLabel::new(num(take("i")?)?, num(take("j")?)?) },
            "type1" => Indices::Type1 {
                comp: parse_comp(take("comp")?)?,
                r: parse_label(take("r")?)?,
                r2: parse_label(take("r2")?)?,
            },
            "type2" => Indices::Type2 {
                a: parse_comp(take("A")?)?,
                b: parse_comp(take("B")?)?,
                r: parse_label(take("r")?)?,
                r2: parse_label(take("r2")?)?,
            },
            "type3" => Indices::Type3 {
                s1: parse_sep(take("S1")?)?,
                s2: parse_sep(take("S2")?)?,
                s3: parse_sep(take("S3")?)?,
                r: parse_label(take("r")?)?,
                r2: parse_label(take("r2")?)?,
            },
            other => return Err(bad(format!("unknown kind `{other}`"))),
        };
        if let Some(k) = kv.keys().next() {
            return Err(bad(format!("unexpected key `{k}`")));
        }
        Ok(ConditionWitness { power, indices })
    }
}
