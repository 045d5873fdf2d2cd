//! Commutative nonassociative algebras given by structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::{kernel, Field, Matrix, Scalar, Subspace, Vector};
use crate::fusion::FusionLaw;

/// A designated axis, stored as a coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedAxis {
    pub name: String,
    pub v: Vector,
}

/// A finite-dimensional commutative algebra. Products `e_i e_j` are stored
/// for `i <= j` only; an absent pair is a zero product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    basis: Vec<String>,
    products: BTreeMap<(usize, usize), Vector>,
    axes: Vec<NamedAxis>,
    law: Option<FusionLaw>,
}

/// A quotient algebra together with the projection `A -> A/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub projection: Matrix,
}

impl Algebra {
    /// The algebra with the given basis and all products zero.
    pub fn new(field: Field, basis: Vec<String>) -> Algebra {
        Algebra {
            field,
            basis,
            products: BTreeMap::new(),
            axes: Vec::new(),
            law: None,
        }
    }

    /// Basis `prefix0, prefix1, ...` with all products zero.
    pub fn zero(field: Field, n: usize, prefix: &str) -> Algebra {
        Algebra::new(field, (0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn axes(&self) -> &[NamedAxis] {
        &self.axes
    }

    pub fn axis_vectors(&self) -> Vec<Vector> {
        self.axes.iter().map(|a| a.v.clone()).collect()
    }

    pub fn law(&self) -> Option<&FusionLaw> {
        self.law.as_ref()
    }

    pub fn set_law(&mut self, law: Option<FusionLaw>) {
        self.law = law;
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field, self.dim())
    }

    /// Builds a vector from `(index, coefficient)` pairs; repeated indices add.
    pub fn vector<I>(&self, terms: I) -> Vector
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut v = self.zero_vector();
        for (i, c) in terms {
            let x = &v[i] + &c;
            v.as_mut_slice()[i] = x;
        }
        v
    }

    pub fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "vector of length {} in an algebra of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::InvalidField(format!("{x} is not in {}", self.field)));
        }
        Ok(())
    }

    /// Sets `e_i e_j = e_j e_i = v`.
    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(Error::Dimension(format!("product index ({i}, {j}) out of range")));
        }
        self.check_vector(&v)?;
        let key = (i.min(j), i.max(j));
        if v.is_zero() {
            self.products.remove(&key);
        } else {
            self.products.insert(key, v);
        }
        Ok(())
    }

    pub fn add_axis(&mut self, name: impl Into<String>, v: Vector) -> Result<()> {
        self.check_vector(&v)?;
        self.axes.push(NamedAxis {
            name: name.into(),
            v,
        });
        Ok(())
    }

    pub fn clear_axes(&mut self) {
        self.axes.clear();
    }

    /// `e_i e_j`
    pub fn product(&self, i: usize, j: usize) -> Vector {
        self.products
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(|| self.zero_vector())
    }

    /// Nonzero stored products `(i, j, e_i e_j)` with `i <= j`, in index order.
    pub fn stored_products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.products.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = self.zero_vector();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                if let Some(p) = self.products.get(&(i.min(j), i.max(j))) {
                    out.add_scaled(&(ui * vj), p);
                }
            }
        }
        out
    }

    /// `ad_a`, whose column `j` is `a e_j`.
    pub fn adjoint(&self, a: &Vector) -> Result<Matrix> {
        self.check_vector(a)?;
        let cols: Vec<Vector> = (0..self.dim())
            .map(|j| self.mul_unchecked(a, &self.basis_vector(j)))
            .collect();
        Ok(Matrix::from_columns(self.field, self.dim(), &cols))
    }

    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        let xy_z = self.mul(&self.mul(x, y)?, z)?;
        let x_yz = self.mul(x, &self.mul(y, z)?)?;
        Ok(xy_z.sub(&x_yz))
    }

    fn span(&self, vs: Vec<Vector>) -> Result<(Subspace, Vec<Vector>)> {
        let mut s = Subspace::zero(self.field, self.dim());
        let mut kept = Vec::new();
        for v in vs {
            self.check_vector(&v)?;
            if s.insert(v.clone()) {
                kept.push(v);
            }
        }
        Ok((s, kept))
    }

    /// The subalgebra generated by `gens`.
    pub fn subalgebra_gen(&self, gens: &[Vector]) -> Result<Subspace> {
        let (mut s, mut list) = self.span(gens.to_vec())?;
        let mut i = 0;
        while i < list.len() {
            for j in 0..=i {
                let p = self.mul_unchecked(&list[i], &list[j]);
                if s.insert(p.clone()) {
                    list.push(p);
                }
            }
            i += 1;
        }
        Ok(s)
    }

    /// The ideal generated by `gens`.
    pub fn ideal_gen(&self, gens: &[Vector]) -> Result<Subspace> {
        let (mut s, mut list) = self.span(gens.to_vec())?;
        let mut i = 0;
        while i < list.len() {
            for k in 0..self.dim() {
                let p = self.mul_unchecked(&list[i], &self.basis_vector(k));
                if s.insert(p.clone()) {
                    list.push(p);
                }
            }
            i += 1;
        }
        Ok(s)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| {
            (0..=i).all(|j| s.reduce(&self.mul_unchecked(&b[i], &b[j])).is_zero())
        })
    }

    /// `e_k I ⊆ I` for every basis vector `e_k`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim()
            && s.basis().iter().all(|u| {
                (0..self.dim())
                    .all(|k| s.reduce(&self.mul_unchecked(u, &self.basis_vector(k))).is_zero())
            })
    }

    /// `A / I`, with basis the images of the unit vectors at the non-pivot
    /// columns of `I`. Axes are carried over through the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient() != self.dim() {
            return Err(Error::Dimension(format!(
                "ideal in ambient dimension {}, algebra has dimension {}",
                ideal.ambient(),
                self.dim()
            )));
        }
        if let Some((u, k)) = ideal.basis().iter().find_map(|u| {
            (0..self.dim())
                .find(|&k| !ideal.reduce(&self.mul_unchecked(u, &self.basis_vector(k))).is_zero())
                .map(|k| (u, k))
        }) {
            return Err(Error::NotAnIdeal(format!(
                "{} times basis element {} leaves the subspace",
                u, self.basis[k]
            )));
        }
        let keep = ideal.complement_indices();
        let project = |v: &Vector| -> Vector {
            let r = ideal.reduce(v);
            Vector::new(keep.iter().map(|&c| r[c].clone()).collect())
        };
        let mut q = Algebra::new(
            self.field,
            keep.iter().map(|&c| self.basis[c].clone()).collect(),
        );
        for (a, &c) in keep.iter().enumerate() {
            for (b, &d) in keep.iter().enumerate().skip(a) {
                q.set_product(a, b, project(&self.product(c, d)))?;
            }
        }
        for axis in &self.axes {
            q.add_axis(axis.name.clone(), project(&axis.v))?;
        }
        q.law = self.law.clone();
        let cols: Vec<Vector> = (0..self.dim()).map(|k| project(&self.basis_vector(k))).collect();
        let projection = Matrix::from_columns(self.field, keep.len(), &cols);
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs = project(&self.product(i, j));
                let rhs = q.mul_unchecked(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Err(Error::ConsistencyFailure(format!(
                        "projection is not multiplicative on ({}, {})",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        Ok(Quotient {
            algebra: q,
            projection,
        })
    }

    /// `Ann(A) = { x : xA = 0 }`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        let blocks: Vec<Matrix> = (0..n)
            .map(|j| self.adjoint(&self.basis_vector(j)).expect("basis vector"))
            .collect();
        kernel(&Matrix::vstack(self.field, n, &blocks).expect("square blocks"))
    }

    /// `Z(A) = { a : (a, x, y) = 0 for all x, y }`.
    pub fn centre(&self) -> Subspace {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n)
            .map(|j| self.adjoint(&self.basis_vector(j)).expect("basis vector"))
            .collect();
        let mut blocks = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let ad_ij = self.adjoint(&self.product(i, j)).expect("product vector");
                let m = ads[j].matmul(&ads[i]).expect("square").sub(&ad_ij).expect("square");
                blocks.push(m);
            }
        }
        kernel(&Matrix::vstack(self.field, n, &blocks).expect("square blocks"))
    }

    /// The subalgebra `s` as an algebra in its own right, on the canonical
    /// basis of `s` (named `prefix0, prefix1, ...`). Designated axes lying in
    /// `s` are carried over. Returns the algebra and the embedding matrix,
    /// whose columns are the basis of `s`.
    pub fn restrict(&self, s: &Subspace, prefix: &str) -> Result<(Algebra, Matrix)> {
        if !self.is_subalgebra(s) {
            return Err(Error::ConsistencyFailure(
                "subspace is not closed under multiplication".into(),
            ));
        }
        let b = s.basis();
        let mut sub = Algebra::zero(self.field, b.len(), prefix);
        for i in 0..b.len() {
            for j in i..b.len() {
                let p = self.mul_unchecked(&b[i], &b[j]);
                let coords = s.coordinates(&p).expect("closed subspace");
                sub.set_product(i, j, Vector::new(coords))?;
            }
        }
        for axis in &self.axes {
            if let Some(c) = s.coordinates(&axis.v) {
                sub.add_axis(axis.name.clone(), Vector::new(c))?;
            }
        }
        sub.law = self.law.clone();
        Ok((sub, Matrix::from_columns(self.field, self.dim(), b)))
    }

    /// The direct sum `A ⊕ B` with `AB = 0`. Basis names and axis names of
    /// `other` get `suffix` appended.
    pub fn direct_sum(&self, other: &Algebra, suffix: &str) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::InvalidField("direct sum of algebras over different fields".into()));
        }
        let n = self.dim();
        let m = other.dim();
        let mut names = self.basis.clone();
        names.extend(other.basis.iter().map(|b| format!("{b}{suffix}")));
        let mut out = Algebra::new(self.field, names);
        let embed = |v: &Vector, offset: usize| -> Vector {
            let mut w = Vector::zeros(self.field, n + m);
            for (k, x) in v.iter().enumerate() {
                w.as_mut_slice()[k + offset] = x.clone();
            }
            w
        };
        for (i, j, v) in self.stored_products() {
            out.set_product(i, j, embed(v, 0))?;
        }
        for (i, j, v) in other.stored_products() {
            out.set_product(i + n, j + n, embed(v, n))?;
        }
        for a in &self.axes {
            out.add_axis(a.name.clone(), embed(&a.v, 0))?;
        }
        for a in &other.axes {
            out.add_axis(format!("{}{suffix}", a.name), embed(&a.v, n))?;
        }
        if self.law == other.law {
            out.law = self.law.clone();
        }
        Ok(out)
    }

    /// `(x, y, z) = 0` for all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (x, y, z) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    self.associator(&x, &y, &z).expect("basis vectors").is_zero()
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    /// `F ⊕ F` with idempotent basis.
    fn two_b() -> Algebra {
        let mut a = Algebra::zero(Q, 2, "a");
        a.set_product(0, 0, a.basis_vector(0)).unwrap();
        a.set_product(1, 1, a.basis_vector(1)).unwrap();
        a
    }

    #[test]
    fn commutative_by_construction() {
        let mut a = Algebra::zero(Q, 3, "e");
        a.set_product(2, 0, Vector::from_i64(Q, &[1, 2, 3])).unwrap();
        assert_eq!(a.product(0, 2), a.product(2, 0));
        let u = Vector::from_i64(Q, &[1, 4, -1]);
        let v = Vector::from_i64(Q, &[2, 0, 5]);
        assert_eq!(a.mul(&u, &v).unwrap(), a.mul(&v, &u).unwrap());
        assert!(a.mul(&u, &a.zero_vector()).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        let a = two_b();
        assert!(matches!(
            a.mul(&Vector::zeros(Q, 3), &Vector::zeros(Q, 2)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn adjoint_columns_are_products() {
        let a = two_b();
        let ad = a.adjoint(&a.basis_vector(0)).unwrap();
        assert_eq!(ad, Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]));
        assert!(a.adjoint(&a.zero_vector()).unwrap().is_zero());
    }

    #[test]
    fn subalgebra_of_an_idempotent() {
        let a = two_b();
        let s = a.subalgebra_gen(&[a.basis_vector(0)]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(a.is_subalgebra(&s));
    }

    #[test]
    fn ideals_and_quotients() {
        let a = two_b();
        let zero = a.ideal_gen(&[a.zero_vector()]).unwrap();
        assert!(zero.is_zero());
        let q = a.quotient(&zero).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        let full = a.ideal_gen(&[Vector::from_i64(Q, &[1, 1])]).unwrap();
        assert!(full.is_full());
        assert_eq!(a.quotient(&full).unwrap().algebra.dim(), 0);
        let i0 = a.ideal_gen(&[a.basis_vector(0)]).unwrap();
        assert_eq!(i0.dim(), 1);
        let q = a.quotient(&i0).unwrap();
        assert_eq!(q.algebra.product(0, 0), Vector::from_i64(Q, &[1]));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let mut a = Algebra::zero(Q, 2, "e");
        a.set_product(0, 1, a.basis_vector(1)).unwrap();
        let s = Subspace::from_vectors(Q, 2, [a.basis_vector(0)]).unwrap();
        assert!(matches!(a.quotient(&s), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn annihilator_and_centre() {
        let a = two_b();
        assert!(a.annihilator().is_zero());
        assert!(a.centre().is_full());
        assert!(a.is_associative());
        let z = Algebra::zero(Q, 1, "z");
        let sum = a.direct_sum(&z, "'").unwrap();
        let ann = sum.annihilator();
        assert_eq!(ann, Subspace::from_vectors(Q, 3, [sum.basis_vector(2)]).unwrap());
        assert!(Algebra::zero(Q, 3, "e").annihilator().is_full());
    }

    #[test]
    fn idempotent_associator_vanishes() {
        let mut a = Algebra::zero(Q, 2, "e");
        a.set_product(0, 0, a.basis_vector(0)).unwrap();
        a.set_product(0, 1, a.vector([(1, q("1/2"))])).unwrap();
        let e = a.basis_vector(0);
        assert!(a.associator(&e, &e, &e).unwrap().is_zero());
        assert!(!a.is_associative());
    }

    #[test]
    fn restrict_to_subalgebra() {
        let a = two_b();
        let s = a.subalgebra_gen(&[Vector::from_i64(Q, &[1, 1])]).unwrap();
        let (sub, emb) = a.restrict(&s, "b").unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(sub.product(0, 0), Vector::from_i64(Q, &[1]));
        assert_eq!(emb.ncols(), 1);
    }

    proptest::proptest! {
        #[test]
        fn bilinear_and_commutative(
            c in proptest::collection::vec(-3i64..4, 27),
            u in proptest::collection::vec(-3i64..4, 3),
            v in proptest::collection::vec(-3i64..4, 3),
            w in proptest::collection::vec(-3i64..4, 3),
            s in -4i64..5,
        ) {
            let mut a = Algebra::zero(Q, 3, "e");
            for i in 0..3 {
                for j in i..3 {
                    let k = 9 * i + 3 * j;
                    a.set_product(i, j, Vector::from_i64(Q, &c[k..k + 3])).unwrap();
                }
            }
            let (u, v, w) = (Vector::from_i64(Q, &u), Vector::from_i64(Q, &v), Vector::from_i64(Q, &w));
            let s = Q.from_i64(s);
            proptest::prop_assert_eq!(a.mul(&u, &v).unwrap(), a.mul(&v, &u).unwrap());
            let lhs = a.mul(&u, &v.scale(&s).add(&w)).unwrap();
            let rhs = a.mul(&u, &v).unwrap().scale(&s).add(&a.mul(&u, &w).unwrap());
            proptest::prop_assert_eq!(lhs, rhs);
            let i = a.ideal_gen(std::slice::from_ref(&u)).unwrap();
            proptest::prop_assert!(a.is_ideal(&i));
            if a.is_ideal(&i) {
                let quo = a.quotient(&i).unwrap();
                proptest::prop_assert_eq!(quo.algebra.dim(), 3 - i.dim());
            }
        }
    }
}
