use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel, Scalar, Subspace, Vector};
use crate::fusion::FusionLaw;

/// `A_λ(a) = ker(ad_a − λ)`.
pub fn eigenspace(alg: &Algebra, a: &Vector, lambda: &Scalar) -> Result<Subspace> {
    Ok(kernel(&alg.adjoint(a)?.shift(lambda)))
}

/// One eigenspace per law element, in law order.
pub fn eigenspaces(alg: &Algebra, a: &Vector, law: &FusionLaw) -> Result<Vec<Subspace>> {
    let ad = alg.adjoint(a)?;
    Ok(law.elements().iter().map(|l| kernel(&ad.shift(l))).collect())
}

/// A product of eigenvectors that falls outside the space the law allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionViolation {
    pub lambda: Scalar,
    pub mu: Scalar,
    /// Indices into the canonical bases of `A_λ(a)` and `A_μ(a)`.
    pub witness: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisReport {
    pub is_idempotent: bool,
    /// `dim A_λ(a)` for each law element, in law order.
    pub dims: Vec<(Scalar, usize)>,
    pub is_semisimple: bool,
    /// At most one witness per ordered pair `(λ, μ)`.
    pub violations: Vec<FusionViolation>,
    pub is_primitive: bool,
}

impl AxisReport {
    pub fn is_axis(&self) -> bool {
        self.is_idempotent && self.is_semisimple && self.violations.is_empty()
    }

    pub fn is_primitive_axis(&self) -> bool {
        self.is_axis() && self.is_primitive
    }
}

/// Checks idempotency, semisimplicity with eigenvalues in the law, the fusion
/// rule on eigenspace basis pairs, and primitivity.
pub fn check_axis(alg: &Algebra, a: &Vector, law: &FusionLaw) -> Result<AxisReport> {
    if law.field() != alg.field() {
        return Err(Error::InvalidField(format!(
            "law over {} for an algebra over {}",
            law.field(),
            alg.field()
        )));
    }
    let is_idempotent = alg.mul(a, a)? == *a;
    let spaces = eigenspaces(alg, a, law)?;
    let dims: Vec<(Scalar, usize)> = law
        .elements()
        .iter()
        .cloned()
        .zip(spaces.iter().map(Subspace::dim))
        .collect();
    let is_semisimple = spaces.iter().map(Subspace::dim).sum::<usize>() == alg.dim();

    let mut violations = Vec::new();
    let n = law.len();
    for i in 0..n {
        for j in 0..n {
            let mut target = Subspace::zero(alg.field(), alg.dim());
            for &k in law.star(i, j) {
                target = target.sum(&spaces[k])?;
            }
            'pair: for (ui, u) in spaces[i].basis().iter().enumerate() {
                for (vi, v) in spaces[j].basis().iter().enumerate() {
                    if !target.reduce(&alg.mul_unchecked(u, v)).is_zero() {
                        violations.push(FusionViolation {
                            lambda: law.elements()[i].clone(),
                            mu: law.elements()[j].clone(),
                            witness: (ui, vi),
                        });
                        break 'pair;
                    }
                }
            }
        }
    }

    let one = alg.field().one();
    let a1 = match law.index_of(&one) {
        Some(k) => spaces[k].clone(),
        None => eigenspace(alg, a, &one)?,
    };
    let is_primitive = a1.dim() == 1 && a1.contains(a)?;

    Ok(AxisReport {
        is_idempotent,
        dims,
        is_semisimple,
        violations,
        is_primitive,
    })
}

/// Splits `A = F a ⊕ im(ad_a − 1)` for a primitive axis `a` and reads off the
/// coefficient of `a`.
#[derive(Clone, Debug)]
pub struct Projector {
    complement: Subspace,
    residue_of_a: Vector,
    lead: usize,
}

impl Projector {
    pub fn new(alg: &Algebra, a: &Vector) -> Result<Projector> {
        let one = alg.field().one();
        let shifted = alg.adjoint(a)?.shift(&one);
        let a1 = kernel(&shifted);
        if a1.dim() != 1 || !a1.contains(a)? {
            return Err(Error::NotPrimitive(format!(
                "A_1 has dimension {} and {} a",
                a1.dim(),
                if a1.contains(a)? { "contains" } else { "does not contain" }
            )));
        }
        let cols: Vec<Vector> = (0..alg.dim()).map(|j| shifted.column(j)).collect();
        let complement = Subspace::from_vectors(alg.field(), alg.dim(), cols)?;
        if !a1.intersect(&complement)?.is_zero() {
            return Err(Error::NotSemisimple(
                "the 1-eigenspace meets the image of ad_a - 1".into(),
            ));
        }
        let residue_of_a = complement.reduce(a);
        let lead = residue_of_a.leading_index().expect("a is not in the complement");
        Ok(Projector {
            complement,
            residue_of_a,
            lead,
        })
    }

    /// `φ_a(v)`
    pub fn project(&self, v: &Vector) -> Scalar {
        let r = self.complement.reduce(v);
        &r[self.lead] / &self.residue_of_a[self.lead]
    }
}

/// `φ_a(v)`: the coefficient of `a` in the `A_1(a)`-component of `v`.
pub fn projection(alg: &Algebra, a: &Vector, v: &Vector) -> Result<Scalar> {
    alg.check_vector(v)?;
    Ok(Projector::new(alg, a)?.project(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    /// Matsuo algebra of S_3 on a = (12), b = (13), c = (23).
    fn matsuo_s3(eta: &str) -> Algebra {
        let h = q(eta) / q("2");
        let mut alg = Algebra::zero(Q, 3, "t");
        for i in 0..3 {
            alg.set_product(i, i, alg.basis_vector(i)).unwrap();
            for j in i + 1..3 {
                let k = 3 - i - j;
                let v = alg.vector([(i, h.clone()), (j, h.clone()), (k, -h.clone())]);
                alg.set_product(i, j, v).unwrap();
            }
        }
        alg
    }

    #[test]
    fn matsuo_eigenspaces() {
        let alg = matsuo_s3("1/4");
        let a = alg.basis_vector(0);
        let b_minus_c = Vector::from_i64(Q, &[0, 1, -1]);
        let e = eigenspace(&alg, &a, &q("1/4")).unwrap();
        assert_eq!(e, Subspace::from_vectors(Q, 3, [b_minus_c.clone()]).unwrap());
        let ad = alg.adjoint(&a).unwrap();
        assert_eq!(ad.mul_vec(&b_minus_c).unwrap(), b_minus_c.scale(&q("1/4")));
        let e1 = eigenspace(&alg, &a, &q("1")).unwrap();
        assert_eq!(e1, Subspace::from_vectors(Q, 3, [a.clone()]).unwrap());
        assert!(eigenspace(&alg, &a, &q("7")).unwrap().is_zero());
    }

    #[test]
    fn matsuo_axis_is_primitive_jordan() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::jordan(q("1/4")).unwrap();
        let r = check_axis(&alg, &alg.basis_vector(0), &law).unwrap();
        assert!(r.is_primitive_axis(), "{r:?}");
        let dims: Vec<usize> = r.dims.iter().map(|d| d.1).collect();
        assert_eq!(dims, vec![1, 1, 1]);
    }

    #[test]
    fn non_idempotent_vector() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::jordan(q("1/4")).unwrap();
        let v = alg.basis_vector(0).scale(&q("2"));
        let r = check_axis(&alg, &v, &law).unwrap();
        assert!(!r.is_idempotent);
        assert!(!r.is_axis());
    }

    #[test]
    fn eigenvalues_outside_the_law() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::associative(Q);
        let r = check_axis(&alg, &alg.basis_vector(0), &law).unwrap();
        assert!(!r.is_semisimple);
    }

    #[test]
    fn projections() {
        let alg = matsuo_s3("1/4");
        let a = alg.basis_vector(0);
        assert_eq!(projection(&alg, &a, &a).unwrap(), q("1"));
        assert_eq!(projection(&alg, &a, &alg.basis_vector(1)).unwrap(), q("1/8"));
        let zero_part = eigenspace(&alg, &a, &q("0")).unwrap();
        for v in zero_part.basis() {
            assert!(projection(&alg, &a, v).unwrap().is_zero());
        }
        let not_axis = Vector::from_i64(Q, &[1, 1, 0]);
        assert!(matches!(
            projection(&alg, &not_axis, &a),
            Err(Error::NotPrimitive(_))
        ));
    }
}
