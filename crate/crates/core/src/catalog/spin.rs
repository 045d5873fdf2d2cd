use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Vector};
use crate::fusion::FusionLaw;

fn check_gram(b: &Matrix) -> Result<()> {
    if b.nrows() != b.ncols() {
        return Err(Error::Dimension("Gram matrix must be square".into()));
    }
    if !b.is_symmetric() {
        return Err(Error::Parse("Gram matrix must be symmetric".into()));
    }
    Ok(())
}

fn bilinear(b: &Matrix, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if u.len() != b.nrows() || v.len() != b.nrows() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a form on a space of dimension {}",
            u.len().max(v.len()),
            b.nrows()
        )));
    }
    Ok(Vector::new(u.to_vec()).dot(&b.mul_vec(v)?))
}

/// The spin factor `F1 ⊕ V` with `1u = u`, `uv = ½ b(u, v) 1`. Basis
/// `1, u1, ..., um`; axes `½(1 ± u_i)` for each `i` with `b(u_i, u_i) = 2`;
/// law `J(½)`.
pub fn spin_factor(b: &Matrix) -> Result<Algebra> {
    check_gram(b)?;
    let field = b.field();
    let m = b.nrows();
    let half = field.ratio(1, 2)?;
    let mut names = vec!["1".to_string()];
    names.extend((1..=m).map(|i| format!("u{i}")));
    let mut alg = Algebra::new(field, names);
    alg.set_product(0, 0, alg.basis_vector(0))?;
    for i in 0..m {
        alg.set_product(0, i + 1, alg.basis_vector(i + 1))?;
        for j in i..m {
            alg.set_product(i + 1, j + 1, alg.vector([(0, &half * b.get(i, j))]))?;
        }
    }
    for i in 0..m {
        if b.get(i, i) == &field.from_i64(2) {
            let u = Vector::unit(field, m, i);
            alg.add_axis(format!("x{}+", i + 1), spin_axis(b, &u)?)?;
            alg.add_axis(format!("x{}-", i + 1), spin_axis(b, &u.neg())?)?;
        }
    }
    alg.set_law(Some(FusionLaw::jordan(half)?));
    Ok(alg)
}

/// `½(1 + u)` for `u ∈ V` with `b(u, u) = 2`, in spin factor coordinates.
pub fn spin_axis(b: &Matrix, u: &[Scalar]) -> Result<Vector> {
    let field = b.field();
    let norm = bilinear(b, u, u)?;
    if norm != field.from_i64(2) {
        return Err(Error::NotAnAxisCandidate(format!("b(u, u) = {norm}, expected 2")));
    }
    let half = field.ratio(1, 2)?;
    let mut coords = vec![half.clone()];
    coords.extend(u.iter().map(|x| x * &half));
    Ok(Vector::new(coords))
}

/// The split spin factor `S(b, α) = F z1 ⊕ F z2 ⊕ E`. Basis
/// `z1, z2, e1, ..., em`; axes `z1` and `famA(e_i)` for each `i` with
/// `b(e_i, e_i) = 1`; law `M(α, ½)`.
pub fn split_spin_factor(b: &Matrix, alpha: &Scalar) -> Result<Algebra> {
    check_gram(b)?;
    let field = b.field();
    if alpha.field() != field {
        return Err(Error::InvalidField("α and the Gram matrix lie in different fields".into()));
    }
    let half = field.ratio(1, 2)?;
    let one = field.one();
    if alpha.is_zero() || alpha.is_one() || alpha == &half {
        return Err(Error::DegenerateParameters(format!(
            "α = {alpha} must avoid 0, 1/2 and 1"
        )));
    }
    let m = b.nrows();
    let mut names = vec!["z1".to_string(), "z2".to_string()];
    names.extend((1..=m).map(|i| format!("e{i}")));
    let mut alg = Algebra::new(field, names);
    alg.set_product(0, 0, alg.basis_vector(0))?;
    alg.set_product(1, 1, alg.basis_vector(1))?;
    let z1_coeff = (alpha - &field.from_i64(2)) * alpha.clone();
    let z2_coeff = (alpha - &one) * (alpha + &one);
    for i in 0..m {
        alg.set_product(0, i + 2, alg.vector([(i + 2, alpha.clone())]))?;
        alg.set_product(1, i + 2, alg.vector([(i + 2, &one - alpha)]))?;
        for j in i..m {
            let c = -b.get(i, j).clone();
            let v = alg.vector([(0, &c * &z1_coeff), (1, &c * &z2_coeff)]);
            alg.set_product(i + 2, j + 2, v)?;
        }
    }
    let z1 = alg.basis_vector(0);
    alg.add_axis("z1", z1)?;
    for i in 0..m {
        if b.get(i, i).is_one() {
            let e = Vector::unit(field, m, i);
            alg.add_axis(format!("A(e{})", i + 1), split_spin_fam_a(b, alpha, &e)?)?;
        }
    }
    alg.set_law(Some(FusionLaw::monster(alpha.clone(), half)?));
    Ok(alg)
}

fn split_spin_family(b: &Matrix, e: &[Scalar], c1: Scalar, c2: Scalar) -> Result<Vector> {
    let field = b.field();
    let norm = bilinear(b, e, e)?;
    if !norm.is_one() {
        return Err(Error::NotAnAxisCandidate(format!("b(e, e) = {norm}, expected 1")));
    }
    let half = field.ratio(1, 2)?;
    let mut coords = vec![&c1 * &half, &c2 * &half];
    coords.extend(e.iter().map(|x| x * &half));
    Ok(Vector::new(coords))
}

/// `½(e + α z1 + (α + 1) z2)` for `b(e, e) = 1`.
pub fn split_spin_fam_a(b: &Matrix, alpha: &Scalar, e: &[Scalar]) -> Result<Vector> {
    let one = alpha.field().one();
    split_spin_family(b, e, alpha.clone(), alpha + &one)
}

/// `½(e + (2 − α) z1 + (1 − α) z2)` for `b(e, e) = 1`.
pub fn split_spin_fam_b(b: &Matrix, alpha: &Scalar, e: &[Scalar]) -> Result<Vector> {
    let field = alpha.field();
    split_spin_family(b, e, &field.from_i64(2) - alpha, &field.one() - alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::check_axis;
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    #[test]
    fn spin_factor_identity_and_axes() {
        let b = Matrix::from_i64(Q, &[&[2]]);
        let alg = spin_factor(&b).unwrap();
        let one = alg.basis_vector(0);
        let u = alg.basis_vector(1);
        assert_eq!(alg.mul(&one, &u).unwrap(), u);
        let law = FusionLaw::jordan(q("1/2")).unwrap();
        assert_eq!(alg.axes().len(), 2);
        for a in alg.axes() {
            assert_eq!(alg.mul(&a.v, &a.v).unwrap(), a.v);
            assert!(check_axis(&alg, &a.v, &law).unwrap().is_primitive_axis());
        }
    }

    #[test]
    fn spin_axis_needs_norm_two() {
        let b = Matrix::from_i64(Q, &[&[1]]);
        assert!(matches!(
            spin_axis(&b, &[Q.one()]),
            Err(Error::NotAnAxisCandidate(_))
        ));
    }

    #[test]
    fn split_spin_families_are_idempotent() {
        let b = Matrix::from_i64(Q, &[&[1, 0], &[0, 1]]);
        let alpha = q("1/3");
        let alg = split_spin_factor(&b, &alpha).unwrap();
        let e = alg.basis_vector(2);
        assert_eq!(alg.mul(&alg.basis_vector(0), &e).unwrap(), e.scale(&alpha));
        for i in 0..2 {
            let ei = Vector::unit(Q, 2, i);
            for v in [
                split_spin_fam_a(&b, &alpha, &ei).unwrap(),
                split_spin_fam_b(&b, &alpha, &ei).unwrap(),
            ] {
                assert_eq!(alg.mul(&v, &v).unwrap(), v);
            }
        }
        assert!(matches!(
            split_spin_factor(&b, &q("1/2")),
            Err(Error::DegenerateParameters(_))
        ));
        let b2 = Matrix::from_i64(Q, &[&[2]]);
        assert!(matches!(
            split_spin_fam_a(&b2, &alpha, &[Q.one()]),
            Err(Error::NotAnAxisCandidate(_))
        ));
    }
}
