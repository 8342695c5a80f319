use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pathcoalg::{Path, Sign};
use crate::qscalar::QScalar;

/// A finite-dimensional representation of the doubled line quiver supported
/// on the vertex window `start ..= start + dims.len() - 1`.
///
/// `upper[k]` and `lower[k]` are the maps `V_{start+k+1} → V_{start+k}` along
/// the upper and lower arrows, acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct QuiverRep {
    start: i64,
    dims: Vec<usize>,
    upper: Vec<Matrix>,
    lower: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(start: i64, dims: Vec<usize>, upper: Vec<Matrix>, lower: Vec<Matrix>) -> Result<Self> {
        let arrows = dims.len().saturating_sub(1);
        if upper.len() != arrows || lower.len() != arrows {
            return Err(Error::ShapeMismatch(format!(
                "{} vertices need {arrows} upper and lower maps, got {} and {}",
                dims.len(),
                upper.len(),
                lower.len()
            )));
        }
        for k in 0..arrows {
            let want = (dims[k], dims[k + 1]);
            for (name, m) in [("upper", &upper[k]), ("lower", &lower[k])] {
                if m.shape() != want {
                    return Err(Error::ShapeMismatch(format!(
                        "{name} map out of vertex {} is {}x{}, expected {}x{}",
                        start + k as i64 + 1,
                        m.rows(),
                        m.cols(),
                        want.0,
                        want.1
                    )));
                }
            }
        }
        Ok(QuiverRep {
            start,
            dims,
            upper,
            lower,
        })
    }

    pub fn zero() -> Self {
        QuiverRep {
            start: 0,
            dims: Vec::new(),
            upper: Vec::new(),
            lower: Vec::new(),
        }
    }

    /// Lowest vertex of the window.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Highest vertex of the window; meaningless for the empty window.
    pub fn top(&self) -> i64 {
        self.start + self.dims.len() as i64 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, l: i64) -> usize {
        self.index(l).map_or(0, |k| self.dims[k])
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Vertices with positive dimension, ascending.
    pub fn support(&self) -> Vec<i64> {
        (0..self.dims.len())
            .filter(|&k| self.dims[k] > 0)
            .map(|k| self.start + k as i64)
            .collect()
    }

    pub fn upper(&self) -> &[Matrix] {
        &self.upper
    }

    pub fn lower(&self) -> &[Matrix] {
        &self.lower
    }

    fn index(&self, l: i64) -> Option<usize> {
        let k = l - self.start;
        (k >= 0 && (k as usize) < self.dims.len()).then_some(k as usize)
    }

    /// `f_l^{(±1)}: V_l → V_{l-1}`, the zero map outside the window.
    pub fn arrow_map(&self, l: i64, sign: Sign) -> Matrix {
        match self.index(l) {
            Some(k) if k >= 1 => match sign {
                Sign::Plus => self.upper[k - 1].clone(),
                Sign::Minus => self.lower[k - 1].clone(),
            },
            _ => Matrix::zeros(self.dim(l - 1), self.dim(l)),
        }
    }

    /// `f_p = f^{(v_n)}_{l-n+1} ∘ ⋯ ∘ f^{(v_1)}_l`, a `dim(l - n) × dim(l)` matrix.
    pub fn path_map(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.dim(p.start));
        let mut at = p.start;
        for &s in p.v.signs() {
            acc = &self.arrow_map(at, s) * &acc;
            at -= 1;
        }
        acc
    }

    /// Checks `f^{(1)}_{l-1} f^{(-1)}_l = q^2 f^{(-1)}_{l-1} f^{(1)}_l` at every
    /// vertex. Local nilpotence is automatic for a finite window.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let q2 = QScalar::q_pow(2);
        for k in 2..self.dims.len() {
            let l = self.start + k as i64;
            let lhs = &self.arrow_map(l - 1, Sign::Plus) * &self.arrow_map(l, Sign::Minus);
            let rhs = (&self.arrow_map(l - 1, Sign::Minus) * &self.arrow_map(l, Sign::Plus)).scale(&q2);
            if lhs != rhs {
                violations.push(l);
            }
        }
        ValidationReport {
            condition_i_ok: violations.is_empty(),
            locally_nilpotent_ok: true,
            violations,
        }
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.condition_i_ok {
            Ok(())
        } else {
            Err(Error::Validation(format!(
                "f(1)f(-1) = q^2 f(-1)f(1) fails at vertices {:?}",
                report.violations
            )))
        }
    }

    /// Standard basis vectors, vertex by vertex.
    pub fn basis(&self) -> Vec<RepElement> {
        let mut out = Vec::new();
        for (k, &d) in self.dims.iter().enumerate() {
            for idx in 0..d {
                out.push(RepElement::basis_vector(self.start + k as i64, d, idx));
            }
        }
        out
    }

    /// Checks that `m` only uses vertices and lengths present in this rep.
    pub fn check_element(&self, m: &RepElement) -> Result<()> {
        for (l, v) in m.components() {
            if v.len() != self.dim(*l) {
                return Err(Error::ShapeMismatch(format!(
                    "component at vertex {l} has length {}, space has dimension {}",
                    v.len(),
                    self.dim(*l)
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuiverRep")
            .field("start", &self.start)
            .field("dims", &self.dims)
            .field("upper", &self.upper)
            .field("lower", &self.lower)
            .finish()
    }
}

/// Outcome of the compatibility check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub condition_i_ok: bool,
    pub locally_nilpotent_ok: bool,
    /// Vertices `l` where the relation between `V_l` and `V_{l-2}` fails.
    pub violations: Vec<i64>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.condition_i_ok && self.locally_nilpotent_ok
    }
}

/// An element of `⊕_l V_l`, stored by homogeneous component.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepElement {
    components: BTreeMap<i64, Vec<QScalar>>,
}

impl RepElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn homogeneous(l: i64, v: Vec<QScalar>) -> Self {
        let mut out = Self::zero();
        out.add_component(l, &v);
        out
    }

    pub fn basis_vector(l: i64, dim: usize, idx: usize) -> Self {
        let mut v = vec![QScalar::zero(); dim];
        v[idx] = QScalar::one();
        Self::homogeneous(l, v)
    }

    pub fn components(&self) -> impl Iterator<Item = (&i64, &Vec<QScalar>)> {
        self.components.iter()
    }

    pub fn component(&self, l: i64) -> Option<&Vec<QScalar>> {
        self.components.get(&l)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Adds `v` into the component at `l`, dropping components that become zero.
    pub fn add_component(&mut self, l: i64, v: &[QScalar]) {
        if v.iter().all(QScalar::is_zero) {
            return;
        }
        match self.components.get_mut(&l) {
            None => {
                self.components.insert(l, v.to_vec());
            }
            Some(cur) => {
                assert_eq!(cur.len(), v.len(), "component length mismatch at vertex {l}");
                for (a, b) in cur.iter_mut().zip(v) {
                    *a += b;
                }
                if cur.iter().all(QScalar::is_zero) {
                    self.components.remove(&l);
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &RepElement, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        for (l, v) in &other.components {
            let scaled: Vec<QScalar> = v.iter().map(|x| x * c).collect();
            self.add_component(*l, &scaled);
        }
    }

    pub fn scale(&self, c: &QScalar) -> RepElement {
        let mut out = RepElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        out.add_scaled(other, &-QScalar::one());
        out
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(l, v)| {
                let entries: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("V_{l}: [{}]", entries.join(", "))
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    l: i64,
    v: Vec<QScalar>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ElementInput {
    Single(ComponentJson),
    Many { components: Vec<ComponentJson> },
}

#[derive(Serialize)]
struct ElementOutput {
    components: Vec<ComponentJson>,
}

/// Always written as `{"components":[{"l":..,"v":[..]}]}`; a bare
/// `{"l":..,"v":[..]}` is also accepted on input.
impl Serialize for RepElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementOutput {
            components: self
                .components
                .iter()
                .map(|(l, v)| ComponentJson { l: *l, v: v.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = match ElementInput::deserialize(d)? {
            ElementInput::Single(c) => vec![c],
            ElementInput::Many { components } => components,
        };
        let mut out = RepElement::zero();
        for c in parts {
            if let Some(cur) = out.components.get(&c.l) {
                if cur.len() != c.v.len() {
                    return Err(D::Error::custom(format!("inconsistent lengths at vertex {}", c.l)));
                }
            }
            out.add_component(c.l, &c.v);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    start: i64,
    dims: Vec<usize>,
    upper: Vec<Vec<Vec<QScalar>>>,
    lower: Vec<Vec<Vec<QScalar>>>,
}

fn shaped(rows: Vec<Vec<QScalar>>, r: usize, c: usize) -> Result<Matrix> {
    if r == 0 && rows.is_empty() {
        return Ok(Matrix::zeros(0, c));
    }
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::ShapeMismatch(format!("expected a {r}x{c} matrix")));
    }
    if c == 0 {
        return Ok(Matrix::zeros(r, 0));
    }
    Matrix::from_rows(rows)
}

impl QuiverRep {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RepJson) -> Result<Self> {
        let arrows = raw.dims.len().saturating_sub(1);
        if raw.upper.len() != arrows || raw.lower.len() != arrows {
            return Err(Error::ShapeMismatch(format!(
                "{} vertices need {arrows} upper and lower maps",
                raw.dims.len()
            )));
        }
        let mut upper = Vec::with_capacity(arrows);
        let mut lower = Vec::with_capacity(arrows);
        for (k, (u, w)) in raw.upper.into_iter().zip(raw.lower).enumerate() {
            let (r, c) = (raw.dims[k], raw.dims[k + 1]);
            upper.push(shaped(u, r, c)?);
            lower.push(shaped(w, r, c)?);
        }
        QuiverRep::new(raw.start, raw.dims, upper, lower)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rep serializes")
    }
}

impl Serialize for QuiverRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepJson {
            start: self.start,
            dims: self.dims.clone(),
            upper: self.upper.iter().map(Matrix::to_rows).collect(),
            lower: self.lower.iter().map(Matrix::to_rows).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuiverRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RepJson::deserialize(d)?;
        QuiverRep::from_raw(raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> QScalar {
        x.parse().unwrap()
    }

    fn one_by_one(x: &str) -> Matrix {
        Matrix::scalar(s(x))
    }

    #[test]
    fn shape_errors() {
        let bad = QuiverRep::new(0, vec![1, 2], vec![Matrix::zeros(1, 1)], vec![Matrix::zeros(1, 2)]);
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
        let bad = QuiverRep::new(0, vec![1, 1], vec![], vec![]);
        assert!(bad.is_err());
    }

    #[test]
    fn identity_arrows_violate_condition_i() {
        let rep = QuiverRep::new(
            0,
            vec![1, 1, 1],
            vec![one_by_one("1"), one_by_one("1")],
            vec![one_by_one("1"), one_by_one("1")],
        )
        .unwrap();
        let report = rep.validate();
        assert!(!report.condition_i_ok);
        assert_eq!(report.violations, vec![2]);
        assert!(QuiverRep::zero().validate().ok());
    }

    #[test]
    fn path_map_composes_in_sign_order() {
        // Random-looking 2-dimensional data on three vertices.
        let m = |rows: [[&str; 2]; 2]| {
            Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect()).unwrap()
        };
        let rep = QuiverRep::new(
            0,
            vec![2, 2, 2],
            vec![m([["1", "q"], ["0", "2"]]), m([["3", "0"], ["q^2", "1"]])],
            vec![m([["0", "1"], ["1", "1"]]), m([["q", "q"], ["5", "0"]])],
        )
        .unwrap();
        let p: Path = "2:[+,-]".parse().unwrap();
        // First the upper arrow out of 2, then the lower arrow out of 1.
        let oracle = &rep.lower()[0] * &rep.upper()[1];
        assert_eq!(rep.path_map(&p), oracle);
        assert_eq!(rep.path_map(&Path::vertex(1)), Matrix::identity(2));
        assert_eq!(rep.path_map(&"0:[+]".parse().unwrap()).shape(), (0, 2));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"start":-1,"dims":[1,0,1],"upper":[[[]],[]],"lower":[[[]],[]]}"#;
        let rep = QuiverRep::from_json(text).unwrap();
        assert_eq!(rep.support(), vec![-1, 1]);
        assert_eq!(QuiverRep::from_json(&rep.to_json()).unwrap(), rep);
        assert!(matches!(QuiverRep::from_json("{"), Err(Error::Json(_))));

        let e: RepElement = serde_json::from_str(r#"{"l":0,"v":[1]}"#).unwrap();
        assert_eq!(e, RepElement::basis_vector(0, 1, 0));
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"components":[{"l":0,"v":["1"]}]}"#
        );
    }
}
