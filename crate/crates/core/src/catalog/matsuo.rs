use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::fusion::FusionLaw;
use crate::perm::{group_closure, Permutation};

/// A normal set `D` of involutions generating `G = ⟨D⟩`, with `|cd| ≤ 3`
/// for all `c, d ∈ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTranspositionGroup {
    degree: usize,
    d: Vec<Permutation>,
}

impl ThreeTranspositionGroup {
    /// The transpositions of `S_n` in lexicographic order.
    pub fn symmetric(n: usize) -> Result<ThreeTranspositionGroup> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("S_{n} has no transpositions")));
        }
        let mut d = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut images: Vec<usize> = (0..n).collect();
                images.swap(i, j);
                d.push(Permutation::from_images(images)?);
            }
        }
        ThreeTranspositionGroup::from_involutions(n, d)
    }

    pub fn from_involutions(degree: usize, d: Vec<Permutation>) -> Result<ThreeTranspositionGroup> {
        if d.is_empty() {
            return Err(Error::InvalidGroup("D is empty".into()));
        }
        for (i, x) in d.iter().enumerate() {
            if x.degree() != degree {
                return Err(Error::InvalidGroup(format!("{x} does not act on {degree} points")));
            }
            if x.order() != 2 {
                return Err(Error::InvalidGroup(format!("{x} is not an involution")));
            }
            if d[..i].contains(x) {
                return Err(Error::InvalidGroup(format!("{x} is listed twice")));
            }
        }
        for c in &d {
            for x in &d {
                if !d.contains(&c.conjugate_by(x)) {
                    return Err(Error::InvalidGroup(format!(
                        "D is not closed under conjugation: {c} by {x}"
                    )));
                }
                let o = c.then(x).order();
                if o > 3 {
                    return Err(Error::InvalidGroup(format!("({c})({x}) has order {o}")));
                }
            }
        }
        Ok(ThreeTranspositionGroup { degree, d })
    }

    /// Parses involutions in cycle notation on points `1..=degree`.
    pub fn parse(degree: usize, involutions: &[String]) -> Result<ThreeTranspositionGroup> {
        let d = involutions
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        ThreeTranspositionGroup::from_involutions(degree, d)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn involutions(&self) -> &[Permutation] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.d.iter().position(|x| x == p)
    }

    /// `|cd|` for `c = D[i]`, `d = D[j]`.
    pub fn product_order(&self, i: usize, j: usize) -> usize {
        self.d[i].then(&self.d[j]).order()
    }

    /// Index of `c^d = d c d`.
    pub fn conjugate(&self, i: usize, j: usize) -> usize {
        self.index_of(&self.d[i].conjugate_by(&self.d[j]))
            .expect("D is closed under conjugation")
    }

    /// Elements of `G = ⟨D⟩`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        group_closure(self.degree, &self.d, cap)
    }

    /// `|Z(G)|`, computed from the elements commuting with every `d ∈ D`.
    pub fn centre_order(&self, cap: usize) -> Result<usize> {
        Ok(self
            .elements(cap)?
            .iter()
            .filter(|g| self.d.iter().all(|x| g.then(x) == x.then(g)))
            .count())
    }
}

/// The Matsuo algebra `M_η(G, D)` with its axes and law `J(η)`.
#[derive(Clone, Debug)]
pub struct Matsuo {
    pub group: ThreeTranspositionGroup,
    pub eta: Scalar,
    pub algebra: Algebra,
}

impl Matsuo {
    pub fn new(group: ThreeTranspositionGroup, eta: Scalar) -> Result<Matsuo> {
        let field = eta.field();
        let law = FusionLaw::jordan(eta.clone())?;
        let half_eta = &eta / &field.from_i64(2);
        let names: Vec<String> = group.involutions().iter().map(|p| p.to_string()).collect();
        let mut alg = Algebra::new(field, names.clone());
        for i in 0..group.len() {
            alg.set_product(i, i, alg.basis_vector(i))?;
            for j in i + 1..group.len() {
                if group.product_order(i, j) == 3 {
                    let c = group.conjugate(i, j);
                    let v = alg.vector([
                        (i, half_eta.clone()),
                        (j, half_eta.clone()),
                        (c, -half_eta.clone()),
                    ]);
                    alg.set_product(i, j, v)?;
                }
            }
        }
        for (i, name) in names.into_iter().enumerate() {
            let v = alg.basis_vector(i);
            alg.add_axis(name, v)?;
        }
        alg.set_law(Some(law));
        Ok(Matsuo {
            group,
            eta,
            algebra: alg,
        })
    }

    pub fn symmetric(n: usize, eta: Scalar) -> Result<Matsuo> {
        Matsuo::new(ThreeTranspositionGroup::symmetric(n)?, eta)
    }

    pub fn field(&self) -> Field {
        self.eta.field()
    }

    /// `(a, a) = 1`, `(a, b) = 0` if `|ab| = 2`, `η/2` if `|ab| = 3`.
    pub fn form(&self) -> Matrix {
        let field = self.field();
        let n = self.group.len();
        let half_eta = &self.eta / &field.from_i64(2);
        let mut g = Matrix::identity(field, n);
        for i in 0..n {
            for j in 0..n {
                if i != j && self.group.product_order(i, j) == 3 {
                    g.set(i, j, half_eta.clone());
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    #[test]
    fn s3_product_rule() {
        let m = Matsuo::symmetric(3, q("1/4")).unwrap();
        let alg = &m.algebra;
        assert_eq!(alg.basis_names(), &["(1 2)", "(1 3)", "(2 3)"]);
        let expect = alg.vector([(0, q("1/8")), (1, q("1/8")), (2, q("-1/8"))]);
        assert_eq!(alg.product(0, 1), expect);
    }

    #[test]
    fn s4_commuting_transpositions_annihilate() {
        let m = Matsuo::symmetric(4, q("1/4")).unwrap();
        let i = m.algebra.basis_index("(1 2)").unwrap();
        let j = m.algebra.basis_index("(3 4)").unwrap();
        assert!(m.algebra.product(i, j).is_zero());
    }

    #[test]
    fn group_validation() {
        let bad = ThreeTranspositionGroup::parse(4, &["(1 2)".into(), "(2 3)".into()]);
        assert!(matches!(bad, Err(Error::InvalidGroup(_))));
        let not_inv = ThreeTranspositionGroup::parse(3, &["(1 2 3)".into()]);
        assert!(matches!(not_inv, Err(Error::InvalidGroup(_))));
        assert!(matches!(
            Matsuo::symmetric(3, q("1")),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn centres_of_symmetric_groups() {
        let s3 = ThreeTranspositionGroup::symmetric(3).unwrap();
        assert_eq!(s3.elements(1000).unwrap().len(), 6);
        assert_eq!(s3.centre_order(1000).unwrap(), 1);
        let s4 = ThreeTranspositionGroup::symmetric(4).unwrap();
        assert_eq!(s4.elements(1000).unwrap().len(), 24);
        assert_eq!(s4.centre_order(1000).unwrap(), 1);
    }
}
