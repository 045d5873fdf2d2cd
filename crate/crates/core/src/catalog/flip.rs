use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Vector};
use crate::fusion::FusionLaw;
use crate::perm::Permutation;

use super::matsuo::Matsuo;

/// `a + b` for basis axes `a = D[i]`, `b = D[j]` with `ab = 0`.
pub fn double_axis(m: &Matsuo, i: usize, j: usize) -> Result<Vector> {
    let alg = &m.algebra;
    let n = alg.dim();
    if i >= n || j >= n {
        return Err(Error::Dimension(format!("axis index out of range for {n} axes")));
    }
    if i == j || !alg.product(i, j).is_zero() {
        return Err(Error::NotOrthogonal(format!(
            "{} · {} ≠ 0",
            alg.basis_names()[i],
            alg.basis_names()[j]
        )));
    }
    let one = m.field().one();
    Ok(alg.vector([(i, one.clone()), (j, one)]))
}

/// A flip subalgebra together with the orbit data of `σ` on `D`.
#[derive(Clone, Debug)]
pub struct FlipSubalgebra {
    /// Fixed points of `σ`.
    pub singles: Vec<usize>,
    /// 2-orbits `{c, d}` with `cd = 0`, giving the double axes `c + d`.
    pub doubles: Vec<(usize, usize)>,
    /// 2-orbits of non-commuting elements.
    pub extras: Vec<(usize, usize)>,
    /// The subalgebra generated by the single and double axes, with those as
    /// designated axes and law `M(2η, η)`.
    pub algebra: Algebra,
    /// Columns are the subalgebra basis in ambient coordinates.
    pub embedding: Matrix,
}

/// The permutation of `D` induced by conjugation with a point permutation.
pub fn induced_on_d(m: &Matsuo, g: &Permutation) -> Result<Permutation> {
    let group = &m.group;
    if g.degree() != group.degree() {
        return Err(Error::NotAFlip(format!(
            "{g} does not act on {} points",
            group.degree()
        )));
    }
    let images = group
        .involutions()
        .iter()
        .map(|d| {
            group
                .index_of(&d.conjugate_by(g))
                .ok_or_else(|| Error::NotAFlip(format!("conjugation by {g} does not preserve D")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images)
}

/// The flip subalgebra for an involutory permutation `σ` of the index set
/// of `D`. `σ` must preserve product orders and the map `(c, d) ↦ c^d`.
pub fn flip_subalgebra(m: &Matsuo, sigma: &Permutation) -> Result<FlipSubalgebra> {
    let group = &m.group;
    let n = group.len();
    if sigma.degree() != n {
        return Err(Error::NotAFlip(format!("σ must permute {n} elements of D")));
    }
    if !sigma.then(sigma).is_identity() {
        return Err(Error::NotAFlip("σ is not an involution".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let (si, sj) = (sigma.apply(i), sigma.apply(j));
            if group.product_order(i, j) != group.product_order(si, sj)
                || sigma.apply(group.conjugate(i, j)) != group.conjugate(si, sj)
            {
                return Err(Error::NotAFlip(format!(
                    "σ does not respect the pair ({}, {})",
                    m.algebra.basis_names()[i],
                    m.algebra.basis_names()[j]
                )));
            }
        }
    }
    let alg = &m.algebra;
    let mut singles = Vec::new();
    let mut doubles = Vec::new();
    let mut extras = Vec::new();
    for i in 0..n {
        let j = sigma.apply(i);
        if j == i {
            singles.push(i);
        } else if i < j {
            if alg.product(i, j).is_zero() {
                doubles.push((i, j));
            } else {
                extras.push((i, j));
            }
        }
    }
    let mut axes: Vec<(String, Vector)> = singles
        .iter()
        .map(|&i| (alg.basis_names()[i].clone(), alg.basis_vector(i)))
        .collect();
    for &(i, j) in &doubles {
        let name = format!("{}+{}", alg.basis_names()[i], alg.basis_names()[j]);
        axes.push((name, double_axis(m, i, j)?));
    }
    let vectors: Vec<Vector> = axes.iter().map(|(_, v)| v.clone()).collect();
    let span = alg.subalgebra_gen(&vectors)?;
    let (mut sub, embedding) = alg.restrict(&span, "f")?;
    sub.clear_axes();
    for (name, v) in axes {
        let c = span.coordinates(&v).expect("generator lies in the subalgebra");
        sub.add_axis(name, Vector::new(c))?;
    }
    let two_eta = &m.eta + &m.eta;
    sub.set_law(Some(FusionLaw::monster(two_eta, m.eta.clone())?));
    Ok(FlipSubalgebra {
        singles,
        doubles,
        extras,
        algebra: sub,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::check_axis;
    use crate::exactla::{Field, Scalar};

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    #[test]
    fn s4_flip_orbits() {
        let m = Matsuo::symmetric(4, q("1/4")).unwrap();
        let g = Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap();
        let sigma = induced_on_d(&m, &g).unwrap();
        let f = flip_subalgebra(&m, &sigma).unwrap();
        let name = |i: usize| m.algebra.basis_names()[i].clone();
        let singles: Vec<String> = f.singles.iter().map(|&i| name(i)).collect();
        assert_eq!(singles, vec!["(1 2)", "(3 4)"]);
        let doubles: Vec<(String, String)> =
            f.doubles.iter().map(|&(i, j)| (name(i), name(j))).collect();
        assert_eq!(
            doubles,
            vec![
                ("(1 3)".to_string(), "(2 4)".to_string()),
                ("(1 4)".to_string(), "(2 3)".to_string())
            ]
        );
        assert!(f.extras.is_empty());
        let law = f.algebra.law().unwrap().clone();
        for axis in f.algebra.axes() {
            assert!(check_axis(&f.algebra, &axis.v, &law).unwrap().is_primitive_axis());
        }
    }

    #[test]
    fn double_axis_is_idempotent() {
        let m = Matsuo::symmetric(4, q("1/4")).unwrap();
        let x = double_axis(&m, 0, 5).unwrap();
        assert_eq!(m.algebra.mul(&x, &x).unwrap(), x);
        assert!(matches!(double_axis(&m, 0, 1), Err(Error::NotOrthogonal(_))));
    }

    #[test]
    fn rejects_non_involutions() {
        let m = Matsuo::symmetric(3, q("1/4")).unwrap();
        let sigma = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(matches!(flip_subalgebra(&m, &sigma), Err(Error::NotAFlip(_))));
    }

    #[test]
    fn rejects_non_automorphisms() {
        let m = Matsuo::symmetric(4, q("1/4")).unwrap();
        let sigma = Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(matches!(flip_subalgebra(&m, &sigma), Err(Error::NotAFlip(_))));
    }
}
