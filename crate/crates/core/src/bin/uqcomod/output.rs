use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use uqcomod::QScalar;

use crate::Failure;

/// Renders scalars symbolically, or as rationals when `--eval q=r` is given.
pub struct Printer {
    at: Option<BigRational>,
}

impl Printer {
    pub fn new(eval: Option<&str>) -> Result<Self, Failure> {
        let Some(spec) = eval else {
            return Ok(Printer { at: None });
        };
        let value = spec
            .trim()
            .strip_prefix("q=")
            .ok_or_else(|| Failure::Usage(format!("--eval expects q=r, got {spec:?}")))?;
        let r: BigRational = value
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("--eval value {value:?} is not a rational number")))?;
        // Validates the point once, before any computation.
        QScalar::one().eval(&r).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(Printer { at: Some(r) })
    }

    pub fn is_symbolic(&self) -> bool {
        self.at.is_none()
    }

    pub fn scalar(&self, x: &QScalar) -> Result<String, Failure> {
        match &self.at {
            None => Ok(x.to_string()),
            Some(r) => x
                .eval(r)
                .map(|v| v.to_string())
                .map_err(|e| Failure::Rejected(e.to_string())),
        }
    }

    /// Serializes `x`, specializing every scalar-valued field.
    pub fn json<T: Serialize>(&self, x: &T) -> Result<String, Failure> {
        let mut v = serde_json::to_value(x).expect("output types serialize");
        if self.at.is_some() {
            self.specialize(&mut v, false)?;
        }
        Ok(serde_json::to_string(&v).expect("values serialize"))
    }

    fn specialize(&self, v: &mut Value, scalar: bool) -> Result<(), Failure> {
        match v {
            Value::String(s) if scalar => {
                if let Ok(x) = s.parse::<QScalar>() {
                    *s = self.scalar(&x)?;
                }
            }
            Value::Array(items) => {
                for item in items {
                    self.specialize(item, scalar)?;
                }
            }
            Value::Object(map) => {
                for (k, child) in map.iter_mut() {
                    let is_scalar = matches!(k.as_str(), "coeff" | "lambda" | "v" | "upper" | "lower");
                    self.specialize(child, is_scalar)?;
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// `c1*x1 - c2*x2 + …` with specialized coefficients; unit coefficients are dropped.
    pub fn sum<'a, I>(&self, terms: I) -> Result<String, Failure>
    where
        I: IntoIterator<Item = (String, &'a QScalar)>,
    {
        let mut out = String::new();
        for (label, c) in terms {
            let c = self.scalar(c)?;
            let (negative, magnitude) = match c.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, c.as_str()),
            };
            out.push_str(match (out.is_empty(), negative) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            });
            if magnitude != "1" {
                out.push_str(magnitude);
                out.push('*');
            }
            out.push_str(&label);
        }
        Ok(if out.is_empty() { "0".into() } else { out })
    }
}
