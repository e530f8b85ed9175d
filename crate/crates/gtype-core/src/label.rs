use std::fmt;

/// Orientation sign, always `+1` or `-1`.
pub type Sign = i8;

/// Horizontal sub-rectangle `H^i_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HLabel {
    pub i: usize,
    pub j: usize,
}

/// Vertical sub-rectangle `V^k_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VLabel {
    pub k: usize,
    pub l: usize,
}

impl HLabel {
    pub fn new(i: usize, j: usize) -> Self {
        HLabel { i, j }
    }
}

impl VLabel {
    pub fn new(k: usize, l: usize) -> Self {
        VLabel { k, l }
    }
}

impl fmt::Display for HLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

pub fn sign_str(s: Sign) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "-1"
    }
}
