use super::matrix::{kernel, Matrix, Vector};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row-echelon
/// basis. The representation is canonical: equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            s.insert(Vector::unit(field, ambient, i));
        }
        s
    }

    pub fn from_vectors<I>(field: Field, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.check(&v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// The canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::InvalidField(format!("{x} is not in {}", self.field)));
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot column; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                w.add_scaled(&-c, row);
            }
        }
        w
    }

    /// Adds `v` to the span, returning whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let w = self.reduce(&v);
        let Some(lead) = w.leading_index() else {
            return false;
        };
        let inv = w[lead].inv().expect("nonzero leading entry");
        let w = w.scale(&inv);
        for row in &mut self.rows {
            let c = row[lead].clone();
            if !c.is_zero() {
                row.add_scaled(&-c, &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check(v)?;
        Ok(self.reduce(&Vector::new(v.to_vec())).is_zero())
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if !self.reduce(v).is_zero() {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(other.rows.iter().all(|r| self.reduce(r).is_zero()))
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::Dimension(format!(
                "subspaces of {}^{} and {}^{}",
                self.field, self.ambient, other.field, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        Ok(s)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // w = sum x_i u_i lies in `other` iff sum x_i reduce_other(u_i) = 0.
        let residues: Vec<Vector> = self.rows.iter().map(|u| other.reduce(u)).collect();
        let m = Matrix::from_columns(self.field, self.ambient, &residues);
        let coeffs = kernel(&m);
        let vectors = coeffs.basis().iter().map(|x| {
            let mut w = Vector::zeros(self.field, self.ambient);
            for (xi, u) in x.iter().zip(&self.rows) {
                w.add_scaled(xi, u);
            }
            w
        });
        Subspace::from_vectors(self.field, self.ambient, vectors)
    }

    /// Image of the subspace under a square matrix acting on column vectors.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let vs = self
            .rows
            .iter()
            .map(|r| m.mul_vec(r))
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.field, m.nrows(), vs)
    }

    /// Basis of a complement: the standard unit vectors at non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn span(vs: &[&[i64]]) -> Subspace {
        let n = vs[0].len();
        Subspace::from_vectors(Q, n, vs.iter().map(|v| Vector::from_i64(Q, v))).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let e1 = span(&[&[1, 0]]);
        let e2 = span(&[&[0, 1]]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(Q, 2));
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        let diag = span(&[&[1, 1]]);
        assert!(!diag.contains(&Vector::from_i64(Q, &[1, 0])).unwrap());
        assert!(diag.contains(&Vector::from_i64(Q, &[-2, -2])).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(Q, 2);
        let b = Subspace::zero(Q, 3);
        assert!(matches!(a.sum(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.intersect(&b), Err(Error::Dimension(_))));
        assert!(matches!(
            a.contains(&Vector::zeros(Q, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = span(&[&[1, 2, 3], &[0, 1, 1]]);
        let b = span(&[&[1, 3, 4], &[2, 5, 7], &[1, 1, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), span(&[&[0, 1, 0]]));
    }

    fn small_span() -> impl proptest::strategy::Strategy<Value = Subspace> {
        use proptest::prelude::*;
        proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 0..4).prop_map(|vs| {
            Subspace::from_vectors(Q, 4, vs.iter().map(|v| Vector::from_i64(Q, v))).unwrap()
        })
    }

    proptest::proptest! {
        #[test]
        fn dimension_formula(u in small_span(), v in small_span()) {
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            proptest::prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
            proptest::prop_assert!(u.contains_subspace(&i).unwrap());
            proptest::prop_assert!(v.contains_subspace(&i).unwrap());
        }
    }
}
