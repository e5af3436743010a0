use std::fmt;
use std::str::FromStr;

/// The six reducibility notions.
///
/// `SW`/`W` are strong and ordinary Weihrauch reducibility, `STW`/`TW` their
/// total variants, `PW`/`PTW` the parallelized ones (`f ≤ g` iff `f ≤W ĝ`,
/// resp. `f ≤W` the parallelization of the completion of `g`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    SW,
    W,
    STW,
    TW,
    PW,
    PTW,
}

/// Direct implications; everything else follows by reflexivity and transitivity.
pub const KIND_EDGES: [(Kind, Kind); 7] = [
    (Kind::SW, Kind::W),
    (Kind::W, Kind::TW),
    (Kind::SW, Kind::STW),
    (Kind::STW, Kind::TW),
    (Kind::W, Kind::PW),
    (Kind::TW, Kind::PTW),
    (Kind::PW, Kind::PTW),
];

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::SW, Kind::W, Kind::STW, Kind::TW, Kind::PW, Kind::PTW];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Does a reduction of kind `self` entail the same reduction of kind `other`?
    pub fn implies(self, other: Kind) -> bool {
        IMPLIES[self.index()][other.index()]
    }

    /// Kinds directly implied by `self` (one edge).
    pub fn successors(self) -> impl Iterator<Item = Kind> {
        KIND_EDGES.iter().filter(move |(a, _)| *a == self).map(|(_, b)| *b)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::SW => "SW",
            Kind::W => "W",
            Kind::STW => "STW",
            Kind::TW => "TW",
            Kind::PW => "PW",
            Kind::PTW => "PTW",
        }
    }
}

const IMPLIES: [[bool; 6]; 6] = closure();

const fn closure() -> [[bool; 6]; 6] {
    let mut m = [[false; 6]; 6];
    let mut i = 0;
    while i < 6 {
        m[i][i] = true;
        i += 1;
    }
    let mut e = 0;
    while e < KIND_EDGES.len() {
        m[KIND_EDGES[e].0 as usize][KIND_EDGES[e].1 as usize] = true;
        e += 1;
    }
    // Warshall
    let mut k = 0;
    while k < 6 {
        let mut i = 0;
        while i < 6 {
            let mut j = 0;
            while j < 6 {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
                j += 1;
            }
            i += 1;
        }
        k += 1;
    }
    m
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown reducibility kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for Kind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "SW" => Ok(Kind::SW),
            "W" => Ok(Kind::W),
            "STW" => Ok(Kind::STW),
            "TW" => Ok(Kind::TW),
            "PW" => Ok(Kind::PW),
            "PTW" => Ok(Kind::PTW),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}
