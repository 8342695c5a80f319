//! Quantum-plane constructors and the Schurian family `M_(l, n, λ)`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::QuiverRep;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pathcoalg::Sign;
use crate::qscalar::QScalar;

/// A module over `k<X, Y>/(XY - q^2 YX)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumPlaneModule {
    x: Matrix,
    y: Matrix,
}

impl QuantumPlaneModule {
    pub fn new(x: Matrix, y: Matrix) -> Result<Self> {
        let n = x.rows();
        if x.shape() != (n, n) || y.shape() != (n, n) || n == 0 {
            return Err(Error::ShapeMismatch(
                "X and Y must be square of equal positive size".into(),
            ));
        }
        if &x * &y != (&y * &x).scale(&QScalar::q_pow(2)) {
            return Err(Error::QuantumPlaneRelation);
        }
        Ok(QuantumPlaneModule { x, y })
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }
}

/// `U` placed on every vertex of `[l, l + n]` with `X` on upper and `Y` on lower arrows.
pub fn from_quantum_plane(l: i64, n: usize, u: &QuantumPlaneModule) -> QuiverRep {
    QuiverRep::new(l, vec![u.dim(); n + 1], vec![u.x.clone(); n], vec![u.y.clone(); n])
        .expect("square blocks of equal size")
}

/// The parameter `λ ∈ Q(q) ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda {
    Finite(QScalar),
    Infinity,
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(x) => write!(f, "{x}"),
            Lambda::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Lambda::Infinity),
            other => other.parse().map(Lambda::Finite),
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Lambda {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The triple `(l, n, λ)` naming a Schurian comodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurianData {
    pub l: i64,
    pub n: usize,
    pub lambda: Lambda,
}

/// `M_(l, n, λ)`: one-dimensional spaces on `[l, l + n]`; for finite `λ` the
/// upper maps are 1 and the lower map out of `j` is `λ q^{-2(l + n - j)}`,
/// for `λ = ∞` the upper maps are 0 and the lower maps 1.
pub fn schurian_rep(l: i64, n: usize, lambda: &Lambda) -> QuiverRep {
    let mut upper = Vec::with_capacity(n);
    let mut lower = Vec::with_capacity(n);
    for k in 0..n {
        let j = l + k as i64 + 1;
        let (a, b) = match lambda {
            Lambda::Finite(x) => (QScalar::one(), x.mul_q_pow(-2 * (l + n as i64 - j))),
            Lambda::Infinity => (QScalar::zero(), QScalar::one()),
        };
        upper.push(Matrix::scalar(a));
        lower.push(Matrix::scalar(b));
    }
    QuiverRep::new(l, vec![1; n + 1], upper, lower).expect("1x1 blocks")
}

/// Why a representation is not one of the `M_(l, n, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotSchurian { vertex: i64, dim: usize },
    Invalid(Vec<i64>),
    Empty,
    SupportGap { below: i64, above: i64 },
    DeadVertex(i64),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotSchurian { vertex, dim } => {
                write!(f, "not Schurian: dimension {dim} at vertex {vertex}")
            }
            Rejection::Invalid(v) => write!(f, "not a comodule: compatibility fails at vertices {v:?}"),
            Rejection::Empty => write!(f, "not Schurian: zero representation"),
            Rejection::SupportGap { below, above } => {
                write!(f, "decomposable: support gap between vertices {below} and {above}")
            }
            Rejection::DeadVertex(j) => {
                write!(f, "decomposable: both arrows out of vertex {j} vanish")
            }
        }
    }
}

impl Rejection {
    /// Short reason prefix, e.g. `decomposable: support gap`.
    pub fn reason(&self) -> &'static str {
        match self {
            Rejection::NotSchurian { .. } | Rejection::Empty => "not Schurian",
            Rejection::Invalid(_) => "not a comodule",
            Rejection::SupportGap { .. } => "decomposable: support gap",
            Rejection::DeadVertex(_) => "decomposable: dead vertex",
        }
    }
}

/// Recovers `(l, n, λ)` from a Schurian representation, using
/// `λ = (b_{l+1} / a_{l+1}) q^{2(n-1)}` when neither family of arrows vanishes.
pub fn classify_schurian(rep: &QuiverRep) -> std::result::Result<SchurianData, Rejection> {
    for (k, &d) in rep.dims().iter().enumerate() {
        if d > 1 {
            return Err(Rejection::NotSchurian {
                vertex: rep.start() + k as i64,
                dim: d,
            });
        }
    }
    let report = rep.validate();
    if !report.condition_i_ok {
        return Err(Rejection::Invalid(report.violations));
    }
    let support = rep.support();
    let (Some(&l), Some(&top)) = (support.first(), support.last()) else {
        return Err(Rejection::Empty);
    };
    if let Some(w) = support.windows(2).find(|w| w[1] != w[0] + 1) {
        return Err(Rejection::SupportGap {
            below: w[0],
            above: w[1],
        });
    }
    let n = (top - l) as usize;
    if n == 0 {
        return Ok(SchurianData {
            l,
            n,
            lambda: Lambda::Finite(QScalar::zero()),
        });
    }
    let entry = |j: i64, s: Sign| rep.arrow_map(j, s)[(0, 0)].clone();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for j in l + 1..=top {
        let (aj, bj) = (entry(j, Sign::Plus), entry(j, Sign::Minus));
        if aj.is_zero() && bj.is_zero() {
            return Err(Rejection::DeadVertex(j));
        }
        a.push(aj);
        b.push(bj);
    }
    let lambda = if b.iter().any(QScalar::is_zero) {
        Lambda::Finite(QScalar::zero())
    } else if a.iter().any(QScalar::is_zero) {
        Lambda::Infinity
    } else {
        let ratio = b[0].checked_div(&a[0]).expect("a is nonzero");
        Lambda::Finite(ratio.mul_q_pow(2 * (n as i64 - 1)))
    };
    Ok(SchurianData { l, n, lambda })
}
