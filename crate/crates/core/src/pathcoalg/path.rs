use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Choice of arrow between `e_l` and `e_{l-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// The upper arrow, `v_t = 1`.
    Plus,
    /// The lower arrow, `v_t = -1`.
    Minus,
}

impl Sign {
    pub fn from_int(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_int(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A vector `v ∈ {1, -1}^n`; the empty vector stands for a vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn from_ints(v: &[i8]) -> Result<Self> {
        v.iter()
            .map(|&x| Sign::from_int(x).ok_or_else(|| Error::Precondition(format!("sign {x} is not ±1"))))
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// 1-based positions carrying a plus sign.
    pub fn plus_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Plus)
            .map(|(k, _)| k + 1)
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Plus).count()
    }

    /// All vectors of length `n` with exactly `i` plus signs, in lexicographic order.
    pub fn with_plus_count(n: usize, i: usize) -> Vec<SignVector> {
        Self::all(n).into_iter().filter(|v| v.plus_count() == i).collect()
    }

    /// All `2^n` vectors of length `n`.
    pub fn all(n: usize) -> Vec<SignVector> {
        (0u64..1 << n)
            .map(|mask| {
                SignVector(
                    (0..n)
                        .map(|k| {
                            if mask >> (n - 1 - k) & 1 == 1 {
                                Sign::Minus
                            } else {
                                Sign::Plus
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

/// The path `P_l^{(v)}`: starts at `e_l`, takes arrow `v_1` first, ends at `e_{l-|v|}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: i64,
    pub v: SignVector,
}

impl Path {
    pub fn new(start: i64, v: SignVector) -> Self {
        Path { start, v }
    }

    pub fn vertex(l: i64) -> Self {
        Path {
            start: l,
            v: SignVector::default(),
        }
    }

    pub fn arrow(l: i64, sign: Sign) -> Self {
        Path {
            start: l,
            v: SignVector(vec![sign]),
        }
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    /// A path of length zero, i.e. a vertex.
    pub fn is_vertex(&self) -> bool {
        self.v.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_vertex()
    }

    pub fn end(&self) -> i64 {
        self.start - self.v.len() as i64
    }

    /// `beta · alpha` where `alpha = self` is traversed first; `None` unless
    /// `beta` starts where `alpha` ends.
    pub fn then(&self, beta: &Path) -> Option<Path> {
        if beta.start != self.end() {
            return None;
        }
        let mut signs = self.v.0.clone();
        signs.extend_from_slice(&beta.v.0);
        Some(Path::new(self.start, SignVector(signs)))
    }

    /// The split `p = beta · alpha` where `alpha` is the first `k` arrows.
    pub fn split_at(&self, k: usize) -> (Path, Path) {
        let alpha = Path::new(self.start, SignVector(self.v.0[..k].to_vec()));
        let beta = Path::new(self.start - k as i64, SignVector(self.v.0[k..].to_vec()));
        (beta, alpha)
    }

    /// All paths of length `n` out of `e_l`.
    pub fn all_from(l: i64, n: usize) -> Vec<Path> {
        SignVector::all(n).into_iter().map(|v| Path::new(l, v)).collect()
    }
}

/// `l:[+,-,+]`; a vertex prints as `l:[]`.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<&str> = self
            .v
            .0
            .iter()
            .map(|s| match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })
            .collect();
        write!(f, "{}:[{}]", self.start, signs.join(","))
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (l, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(0, "path needs the form l:[signs]"))?;
        let start: i64 = l
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad start vertex {l:?}")))?;
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(l.len() + 1, "signs must be bracketed"))?;
        let mut signs = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                signs.push(match tok.trim() {
                    "+" | "1" | "+1" => Sign::Plus,
                    "-" | "-1" => Sign::Minus,
                    other => return Err(Error::parse(l.len() + 1, format!("bad sign {other:?}"))),
                });
            }
        }
        Ok(Path::new(start, SignVector(signs)))
    }
}
