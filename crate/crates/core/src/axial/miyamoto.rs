use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Vector};
use crate::fusion::{FusionLaw, Grading};

use super::check::{check_axis, eigenspaces};

/// The Miyamoto involution `τ_a`: `+1` on `A_+(a)`, `−1` on `A_−(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiyamotoMap {
    pub matrix: Matrix,
    pub axis: Vector,
    pub grading: Grading,
}

impl MiyamotoMap {
    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.mul_vec(v).expect("vector in the algebra")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.field(), self.matrix.nrows())
    }
}

pub fn miyamoto(
    alg: &Algebra,
    a: &Vector,
    law: &FusionLaw,
    grading: &Grading,
) -> Result<MiyamotoMap> {
    if alg.field().characteristic() == 2 {
        return Err(Error::Unsupported(
            "Miyamoto maps need characteristic other than 2".into(),
        ));
    }
    if !grading.is_valid_for(law) {
        return Err(Error::InvalidGrading(format!("grading does not grade {law}")));
    }
    let report = check_axis(alg, a, law)?;
    if !report.is_axis() {
        return Err(Error::NotAnAxis(format!("{a} fails the axis check for {law}")));
    }
    let field = alg.field();
    let n = alg.dim();
    let spaces = eigenspaces(alg, a, law)?;
    let mut cols = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);
    for (k, s) in spaces.iter().enumerate() {
        for v in s.basis() {
            cols.push(v.clone());
            signs.push(if grading.is_minus(k) { -field.one() } else { field.one() });
        }
    }
    let p = Matrix::from_columns(field, n, &cols);
    let p_inv = p.inverse().expect("eigenvectors of a semisimple map form a basis");
    let mut d = Matrix::zeros(field, n, n);
    for (i, s) in signs.into_iter().enumerate() {
        d.set(i, i, s);
    }
    let matrix = p.matmul(&d)?.matmul(&p_inv)?;
    let tau = MiyamotoMap {
        matrix,
        axis: a.clone(),
        grading: grading.clone(),
    };
    for i in 0..n {
        for j in i..n {
            let lhs = tau.apply(&alg.product(i, j));
            let rhs = alg.mul_unchecked(&tau.matrix.column(i), &tau.matrix.column(j));
            if lhs != rhs {
                return Err(Error::ConsistencyFailure(format!(
                    "Miyamoto map of {a} is not multiplicative on ({}, {})",
                    alg.basis_names()[i],
                    alg.basis_names()[j]
                )));
            }
        }
    }
    Ok(tau)
}
