use std::collections::BTreeMap;

use super::QuiverRep;
use crate::linalg::Matrix;
use crate::pathcoalg::Sign;
use crate::qscalar::QScalar;

/// A morphism: one matrix `φ_l: V_l → W_l` per vertex where both sides are nonzero.
pub type MorphismFamily = BTreeMap<i64, Matrix>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<MorphismFamily>,
}

/// Solves `φ_{l-1} f_a = g_a φ_l` for both arrows out of every vertex.
pub fn hom_space(from: &QuiverRep, to: &QuiverRep) -> HomSpace {
    // Unknown blocks, laid out vertex by vertex in row-major order.
    let mut offsets: BTreeMap<i64, usize> = BTreeMap::new();
    let mut unknowns = 0;
    for l in from.support() {
        let (dv, dw) = (from.dim(l), to.dim(l));
        if dw > 0 {
            offsets.insert(l, unknowns);
            unknowns += dv * dw;
        }
    }
    let var = |l: i64, r: usize, c: usize| offsets.get(&l).map(|o| o + r * from.dim(l) + c);

    let mut equations: Vec<Vec<QScalar>> = Vec::new();
    let lo = from.start().min(to.start());
    let hi = from.top().max(to.top());
    for l in lo + 1..=hi {
        for sign in [Sign::Plus, Sign::Minus] {
            let f = from.arrow_map(l, sign);
            let g = to.arrow_map(l, sign);
            let (dv, dv_below) = (from.dim(l), from.dim(l - 1));
            let (dw, dw_below) = (to.dim(l), to.dim(l - 1));
            // Entry (r, c) of φ_{l-1} f - g φ_l, an equation in W_{l-1} × V_l.
            for r in 0..dw_below {
                for c in 0..dv {
                    let mut row = vec![QScalar::zero(); unknowns];
                    for k in 0..dv_below {
                        if let Some(x) = var(l - 1, r, k) {
                            row[x] += &f[(k, c)];
                        }
                    }
                    for k in 0..dw {
                        if let Some(x) = var(l, k, c) {
                            row[x] -= &g[(r, k)];
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        equations.push(row);
                    }
                }
            }
        }
    }

    let null = if equations.is_empty() {
        (0..unknowns)
            .map(|k| {
                let mut x = vec![QScalar::zero(); unknowns];
                x[k] = QScalar::one();
                x
            })
            .collect()
    } else {
        Matrix::from_rows(equations)
            .expect("rows have equal length")
            .nullspace()
    };

    let basis = null
        .into_iter()
        .map(|x| {
            offsets
                .iter()
                .map(|(&l, &o)| {
                    let (dv, dw) = (from.dim(l), to.dim(l));
                    let mut m = Matrix::zeros(dw, dv);
                    for r in 0..dw {
                        for c in 0..dv {
                            m[(r, c)] = x[o + r * dv + c].clone();
                        }
                    }
                    (l, m)
                })
                .collect()
        })
        .collect::<Vec<MorphismFamily>>();
    HomSpace {
        dim: basis.len(),
        basis,
    }
}
