use std::fmt;
use std::str::FromStr;

/// Attribute predicates that atoms (and derived terms) may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    Pointed,
    Cylinder,
    Complete,
    StronglyComplete,
    Parallelizable,
    Idempotent,
    Computable,
    Continuous,
    LimitComputable,
    Borel,
    NonUniformlyComputable,
    NatOutput,
}

impl Flag {
    pub const ALL: [Flag; 12] = [
        Flag::Pointed,
        Flag::Cylinder,
        Flag::Complete,
        Flag::StronglyComplete,
        Flag::Parallelizable,
        Flag::Idempotent,
        Flag::Computable,
        Flag::Continuous,
        Flag::LimitComputable,
        Flag::Borel,
        Flag::NonUniformlyComputable,
        Flag::NatOutput,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Pointed => "pointed",
            Flag::Cylinder => "cylinder",
            Flag::Complete => "complete",
            Flag::StronglyComplete => "stronglyComplete",
            Flag::Parallelizable => "parallelizable",
            Flag::Idempotent => "idempotent",
            Flag::Computable => "computable",
            Flag::Continuous => "continuous",
            Flag::LimitComputable => "limitComputable",
            Flag::Borel => "borel",
            Flag::NonUniformlyComputable => "nonUniformlyComputable",
            Flag::NatOutput => "natOutput",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown flag `{0}`")]
pub struct UnknownFlag(pub String);

impl FromStr for Flag {
    type Err = UnknownFlag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Flag::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| UnknownFlag(s.to_string()))
    }
}

/// Three-valued knowledge. Absence of information is `Unknown`, never `False`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Tri {
    True,
    False,
    #[default]
    Unknown,
}

impl Tri {
    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn is_false(self) -> bool {
        self == Tri::False
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

/// A declared atom with its attribute flags; every flag starts out unknown.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AtomDecl {
    pub name: String,
    flags: [Tri; 12],
}

impl AtomDecl {
    pub fn new(name: impl Into<String>) -> Self {
        AtomDecl { name: name.into(), flags: [Tri::Unknown; 12] }
    }

    pub fn flag(&self, f: Flag) -> Tri {
        self.flags[f.index()]
    }

    pub fn set_flag(&mut self, f: Flag, v: Tri) {
        self.flags[f.index()] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_unknown() {
        let a = AtomDecl::new("lim");
        assert!(Flag::ALL.iter().all(|f| a.flag(*f) == Tri::Unknown));
    }

    #[test]
    fn names_roundtrip() {
        for f in Flag::ALL {
            assert_eq!(f.as_str().parse::<Flag>().unwrap(), f);
        }
    }
}
