use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::StreamError;

/// The sequence `pre · per^ω`, kept in its shortest form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpName {
    pre: Vec<u64>,
    per: Vec<u64>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl UpName {
    pub fn new(pre: Vec<u64>, per: Vec<u64>) -> Result<Self, StreamError> {
        if per.is_empty() {
            return Err(StreamError::EmptyPeriod);
        }
        let mut n = UpName { pre, per };
        n.normalize();
        Ok(n)
    }

    /// The constant sequence `k k k …`.
    pub fn constant(k: u64) -> Self {
        UpName { pre: Vec::new(), per: vec![k] }
    }

    fn normalize(&mut self) {
        let len = self.per.len();
        if let Some(d) = (1..=len).find(|d| len.is_multiple_of(*d) && (0..len).all(|i| self.per[i] == self.per[i % d])) {
            self.per.truncate(d);
        }
        while self.pre.last().is_some_and(|x| Some(x) == self.per.last()) {
            self.pre.pop();
            self.per.rotate_right(1);
        }
    }

    pub fn preamble(&self) -> &[u64] {
        &self.pre
    }

    pub fn period(&self) -> &[u64] {
        &self.per
    }

    pub fn at(&self, i: usize) -> u64 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<u64> {
        (0..len).map(|i| self.at(i)).collect()
    }

    pub fn map(&self, f: impl Fn(u64) -> u64) -> Self {
        let mut n = UpName { pre: self.pre.iter().map(|&x| f(x)).collect(), per: self.per.iter().map(|&x| f(x)).collect() };
        n.normalize();
        n
    }

    /// The values occurring anywhere in the sequence.
    pub fn range(&self) -> BTreeSet<u64> {
        self.pre.iter().chain(&self.per).copied().collect()
    }

    /// The values occurring infinitely often.
    pub fn recurring(&self) -> BTreeSet<u64> {
        self.per.iter().copied().collect()
    }

    /// How often `v` occurs, `None` if infinitely often.
    pub fn count(&self, v: u64) -> Option<usize> {
        if self.per.contains(&v) {
            None
        } else {
            Some(self.pre.iter().filter(|&&x| x == v).count())
        }
    }

    /// `i ↦ p(start + step·i)`.
    pub fn sample(&self, start: usize, step: usize) -> Self {
        assert!(step > 0);
        let k = self.pre.len();
        let n0 = if start >= k { 0 } else { (k - start).div_ceil(step) };
        let p = self.per.len() / gcd(self.per.len(), step);
        let seq = |i: usize| self.at(start + step * i);
        UpName::new((0..n0).map(seq).collect(), (n0..n0 + p).map(seq).collect()).expect("nonempty period")
    }
}

impl fmt::Display for UpName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};({})", join(&self.pre), join(&self.per))
    }
}

impl FromStr for UpName {
    type Err = StreamError;

    /// `a,b,c;(d,e)`
    fn from_str(s: &str) -> Result<Self, StreamError> {
        let bad = |msg: &str| StreamError::Parse(format!("{msg} in {s:?}"));
        let (pre, per) = s.trim().split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let per = per.trim().strip_prefix('(').and_then(|p| p.strip_suffix(')')).ok_or_else(|| bad("period needs parentheses"))?;
        let nums = |t: &str| -> Result<Vec<u64>, StreamError> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| bad("bad number"))).collect()
        };
        UpName::new(nums(pre)?, nums(per)?)
    }
}

/// `⟨p, q⟩` with `p` on even and `q` on odd positions.
pub fn interleave(p: &UpName, q: &UpName) -> UpName {
    let l = p.pre.len().max(q.pre.len());
    let per = lcm(p.per.len(), q.per.len());
    let seq = |i: usize| if i.is_multiple_of(2) { p.at(i / 2) } else { q.at(i / 2) };
    UpName::new((0..2 * l).map(seq).collect(), (2 * l..2 * (l + per)).map(seq).collect()).expect("nonempty period")
}

pub fn proj_even(p: &UpName) -> UpName {
    p.sample(0, 2)
}

pub fn proj_odd(p: &UpName) -> UpName {
    p.sample(1, 2)
}

/// `⟨n, k⟩ = (n+k+1)(n+k)/2 + k`.
pub fn cantor_pair(n: u64, k: u64) -> u64 {
    (n + k + 1) * (n + k) / 2 + k
}

pub fn cantor_unpair(m: u64) -> (u64, u64) {
    let mut w = ((8 * m + 1).isqrt() - 1) / 2;
    // guard against rounding at the boundary of a diagonal
    while w * (w + 1) / 2 > m {
        w -= 1;
    }
    let k = m - w * (w + 1) / 2;
    (w - k, k)
}

/// Result of subtracting one from every entry and dropping the entries
/// that were 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shifted {
    Infinite(UpName),
    /// only finitely many entries were nonzero
    Finite(Vec<u64>),
}

pub fn shift_plus(p: &UpName) -> UpName {
    p.map(|x| x + 1)
}

pub fn shift_minus(p: &UpName) -> Shifted {
    let dec = |v: &[u64]| -> Vec<u64> { v.iter().filter(|&&x| x > 0).map(|&x| x - 1).collect() };
    let pre = dec(&p.pre);
    let per = dec(&p.per);
    if per.is_empty() {
        Shifted::Finite(pre)
    } else {
        Shifted::Infinite(UpName::new(pre, per).expect("nonempty period"))
    }
}

/// `⟨p_0, p_1, …⟩` where all components past the declared ones equal
/// `default`. Such tuples are in general not ultimately periodic, so the
/// tuple is kept as its components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountableTuple {
    pub components: Vec<UpName>,
    pub default: UpName,
}

impl CountableTuple {
    pub fn new(components: Vec<UpName>, default: UpName) -> Self {
        CountableTuple { components, default }
    }

    pub fn proj(&self, i: usize) -> &UpName {
        self.components.get(i).unwrap_or(&self.default)
    }

    /// Entry at position `⟨n, k⟩`, which is `p_n(k)`.
    pub fn at(&self, m: u64) -> u64 {
        let (n, k) = cantor_unpair(m);
        self.proj(n as usize).at(k as usize)
    }

    pub fn prefix(&self, len: usize) -> Vec<u64> {
        (0..len as u64).map(|m| self.at(m)).collect()
    }

    /// The tuple as a name, when every component is the same constant.
    pub fn as_name(&self) -> Option<UpName> {
        let d = &self.default;
        (d.pre.is_empty() && d.per.len() == 1 && self.components.iter().all(|c| c == d)).then(|| d.clone())
    }
}
