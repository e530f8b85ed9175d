//! Eventually periodic bi-infinite codes.
//!
//! Literal syntax:
//!
//! ```text
//! code  := left '|' core '|' right
//! left  := ['[' word ']'] '(' word ')' '^-'
//! right := ['[' word ']'] '(' word ')' '^+'
//! word  := digits | number (',' number)*
//! ```
//!
//! `core` is a nonempty word whose first symbol sits at position 0. Both tails
//! are listed moving away from the core: `[p](c)^+` is `p c c c ...` to the
//! right, and `[p](c)^-` is `p c c c ...` read leftwards from position -1. So
//! `(12)^-|2|(12)^+` is the period-two code with `w_0 = 2`. A word without
//! commas is read one digit per symbol; a lone symbol above 9 takes a trailing
//! comma, as in `10,`.

use std::fmt;
use std::str::FromStr;

use gtype_core::GeometricType;

use crate::error::BoundaryError;

/// `pre` followed by `cycle` repeated forever, in normal form: `cycle` is
/// primitive and `pre` is as short as possible.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tail {
    pre: Vec<usize>,
    cycle: Vec<usize>,
}

fn primitive_root(w: &[usize]) -> &[usize] {
    let n = w.len();
    for p in 1..=n {
        if n % p == 0 && (p..n).all(|i| w[i] == w[i - p]) {
            return &w[..p];
        }
    }
    w
}

impl Tail {
    /// Panics if `cycle` is empty.
    pub fn new(mut pre: Vec<usize>, cycle: Vec<usize>) -> Tail {
        assert!(!cycle.is_empty(), "empty cycle");
        let mut cycle = primitive_root(&cycle).to_vec();
        while let (Some(&p), Some(&c)) = (pre.last(), cycle.last()) {
            if p != c {
                break;
            }
            pre.pop();
            cycle.rotate_right(1);
        }
        Tail { pre, cycle }
    }

    pub fn periodic(cycle: Vec<usize>) -> Tail {
        Tail::new(Vec::new(), cycle)
    }

    pub fn pre(&self) -> &[usize] {
        &self.pre
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn is_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    pub fn at(&self, i: usize) -> usize {
        match self.pre.get(i) {
            Some(&s) => s,
            None => self.cycle[(i - self.pre.len()) % self.cycle.len()],
        }
    }

    /// The tail with its first `k` symbols removed.
    pub fn drop(&self, k: usize) -> Tail {
        if k <= self.pre.len() {
            return Tail { pre: self.pre[k..].to_vec(), cycle: self.cycle.clone() };
        }
        let mut c = self.cycle.clone();
        let r = (k - self.pre.len()) % c.len();
        c.rotate_left(r);
        Tail { pre: Vec::new(), cycle: c }
    }

    /// `word` followed by this tail.
    pub fn prepend(&self, word: &[usize]) -> Tail {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.pre);
        Tail::new(pre, self.cycle.clone())
    }

    /// Number of symbols after which the tail is known: preperiod plus period.
    pub fn window(&self) -> usize {
        self.pre.len() + self.cycle.len()
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[usize]) -> fmt::Result {
    let parts: Vec<String> = w.iter().map(|s| s.to_string()).collect();
    match parts.as_slice() {
        [one] if one.len() > 1 => write!(f, "{one},"),
        _ if w.iter().all(|&s| s < 10) => f.write_str(&parts.concat()),
        _ => f.write_str(&parts.join(",")),
    }
}

impl fmt::Display for Tail {
    /// `[pre](cycle)`, the bracket omitted when `pre` is empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.pre.is_empty() {
            f.write_str("[")?;
            write_word(f, &self.pre)?;
            f.write_str("]")?;
        }
        f.write_str("(")?;
        write_word(f, &self.cycle)?;
        f.write_str(")")
    }
}

/// A bi-infinite eventually periodic code with a marked origin.
///
/// `right` lists `w_0, w_1, ...` and `left` lists `w_{-1}, w_{-2}, ...`; both
/// are in normal form, so structural equality is equality of sequences.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    left: Tail,
    right: Tail,
}

impl Code {
    pub fn new(left: Tail, right: Tail) -> Code {
        Code { left, right }
    }

    /// The periodic code `... word word word ...` with `word[0]` at position 0.
    pub fn periodic(word: &[usize]) -> Code {
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        Code { left: Tail::periodic(rev), right: Tail::periodic(word.to_vec()) }
    }

    /// `(w_k, w_{k+1}, ...)`.
    pub fn positive(&self, k: i64) -> Tail {
        if k >= 0 {
            self.right.drop(k as usize)
        } else {
            let word: Vec<usize> = (k..0).map(|z| self.at(z)).collect();
            self.right.prepend(&word)
        }
    }

    /// `(w_k, w_{k-1}, ...)`.
    pub fn negative(&self, k: i64) -> Tail {
        if k < 0 {
            self.left.drop((-k - 1) as usize)
        } else {
            let word: Vec<usize> = (0..=k).rev().map(|z| self.at(z)).collect();
            self.left.prepend(&word)
        }
    }

    pub fn at(&self, z: i64) -> usize {
        if z >= 0 {
            self.right.at(z as usize)
        } else {
            self.left.at((-z - 1) as usize)
        }
    }

    /// `sigma^k`: the code `z -> w_{z+k}`.
    pub fn shift(&self, k: i64) -> Code {
        Code { left: self.negative(k - 1), right: self.positive(k) }
    }

    /// `z -> w_{-z}`.
    pub fn reversed(&self) -> Code {
        Code { left: self.positive(1), right: self.negative(0) }
    }

    pub fn left(&self) -> &Tail {
        &self.left
    }

    pub fn right(&self) -> &Tail {
        &self.right
    }

    /// Positions outside `lo..hi` only repeat what the two cycles already show.
    pub fn span(&self) -> (i64, i64) {
        (-(self.left.window() as i64), self.right.window() as i64)
    }

    /// Fixed by some power of the shift.
    pub fn is_periodic(&self) -> bool {
        let p = self.right.cycle.len();
        self.left.cycle.len() == p && self.shift(p as i64) == *self
    }

    /// Symbols lie in `1..=n` and every transition `w_z -> w_{z+1}` is allowed
    /// by the incidence matrix.
    pub fn check_admissible(&self, t: &GeometricType) -> Result<(), BoundaryError> {
        let a = t.incidence_matrix().pattern();
        let n = t.n();
        let (lo, hi) = self.span();
        let (lo, hi) = (lo - self.left.cycle.len() as i64 - 1, hi + self.right.cycle.len() as i64 + 1);
        for z in lo..=hi {
            let (x, y) = (self.at(z), self.at(z + 1));
            if !(1..=n).contains(&x) || !(1..=n).contains(&y) || !a[x - 1][y - 1] {
                return Err(BoundaryError::Inadmissible { code: self.to_string(), position: z });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^-|", self.left)?;
        write_word(f, &[self.at(0)])?;
        write!(f, "|{}^+", self.positive(1))
    }
}

fn parse_word(s: &str) -> Result<Vec<usize>, BoundaryError> {
    let s = s.trim();
    let bad = || BoundaryError::Parse(format!("bad word `{s}`"));
    let w: Vec<usize> = if s.contains(',') {
        let body = s.strip_suffix(',').unwrap_or(s);
        body.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
    };
    if w.contains(&0) {
        return Err(BoundaryError::Parse(format!("symbol 0 in `{s}`")));
    }
    Ok(w)
}

fn parse_tail(s: &str, sup: &str) -> Result<Tail, BoundaryError> {
    let s = s.trim();
    let bad = |why: &str| BoundaryError::Parse(format!("bad tail `{s}`: {why}"));
    let body = s.strip_suffix(sup).ok_or_else(|| bad(&format!("expected trailing `{sup}`")))?;
    let (pre, rest) = match body.strip_prefix('[') {
        Some(r) => {
            let (p, rest) = r.split_once(']').ok_or_else(|| bad("unclosed `[`"))?;
            (parse_word(p)?, rest)
        }
        None => (Vec::new(), body),
    };
    let cyc = rest
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| bad("expected `(cycle)`"))?;
    let cycle = parse_word(cyc)?;
    if cycle.is_empty() {
        return Err(bad("empty cycle"));
    }
    Ok(Tail::new(pre, cycle))
}

impl FromStr for Code {
    type Err = BoundaryError;

    fn from_str(s: &str) -> Result<Code, BoundaryError> {
        let parts: Vec<&str> = s.split('|').collect();
        let [l, c, r] = parts.as_slice() else {
            return Err(BoundaryError::Parse(format!("expected `left|core|right`, got `{s}`")));
        };
        let left = parse_tail(l, "^-")?;
        let core = parse_word(c)?;
        if core.is_empty() {
            return Err(BoundaryError::Parse("empty core".into()));
        }
        let right = parse_tail(r, "^+")?.prepend(&core);
        Ok(Code { left, right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Code {
        s.parse().unwrap()
    }

    #[test]
    fn tail_normal_form() {
        let t = Tail::new(vec![1, 2, 1, 2], vec![1, 2, 1, 2]);
        assert_eq!(t, Tail::periodic(vec![1, 2]));
        let t = Tail::new(vec![3, 2], vec![1, 2]);
        assert_eq!((t.pre(), t.cycle()), (&[3][..], &[2, 1][..]));
        assert_eq!(Tail::new(vec![3], vec![1]).drop(1), Tail::periodic(vec![1]));
        assert_eq!(Tail::periodic(vec![1, 2]).drop(3), Tail::periodic(vec![2, 1]));
    }

    #[test]
    fn literal_roundtrip() {
        for s in ["(1)^-|1|(1)^+", "(12)^-|2|(12)^+", "[3](1)^-|2|[1](2)^+", "(1,10)^-|10,|(1,10)^+"] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(c("(1)^-|22|(2)^+"), c("(1)^-|2|(2)^+"));
        assert_eq!(c("(1)^-|1|(1)^+"), Code::periodic(&[1]));
        assert_eq!(c("(12)^-|2|(12)^+"), Code::periodic(&[2, 1]));
    }

    #[test]
    fn literal_positions() {
        let w = c("[34](5)^-|12|[6](7)^+");
        let got: Vec<usize> = (-4..6).map(|z| w.at(z)).collect();
        assert_eq!(got, vec![5, 5, 4, 3, 1, 2, 6, 7, 7, 7]);
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1|1|1", "(1)^+|1|(1)^-", "(1)^-||(1)^+", "(0)^-|1|(1)^+", "()^-|1|(1)^+", "[1(1)^-|1|(1)^+"] {
            assert!(s.parse::<Code>().is_err(), "{s}");
        }
    }

    #[test]
    fn shift_and_reverse() {
        let w = c("[34](5)^-|12|[6](7)^+");
        for k in -6..6 {
            let s = w.shift(k);
            for z in -8..8 {
                assert_eq!(s.at(z), w.at(z + k));
            }
        }
        let r = w.reversed();
        for z in -8..8 {
            assert_eq!(r.at(z), w.at(-z));
        }
        assert_eq!(r.reversed(), w);
    }

    #[test]
    fn periodicity() {
        assert!(Code::periodic(&[1, 2, 2]).is_periodic());
        assert!(!c("(1)^-|2|(2)^+").is_periodic());
        assert!(!c("(12)^-|1|(12)^+").is_periodic());
    }
}
