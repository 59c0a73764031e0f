use std::fmt;
use std::str::FromStr;

use super::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Dynkin type among those occurring for `E6` and its maximal subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

pub const SUPPORTED: [(Family, usize); 8] = [
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 5),
    (Family::C, 4),
    (Family::D, 5),
    (Family::E, 6),
    (Family::F, 4),
    (Family::G, 2),
];

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        if SUPPORTED.contains(&(family, rank)) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::Unsupported(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn all() -> Vec<SimpleType> {
        SUPPORTED
            .iter()
            .map(|&(family, rank)| SimpleType { family, rank })
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Unsupported(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Unsupported(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// Highest weight in the fundamental-weight basis (Bourbaki numbering).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
