//! Seress checks, non-annihilating graphs, sum decompositions, spines and
//! baric maps.

use crate::algebra::Algebra;
use crate::axial::{check_axis, eigenspace};
use crate::error::{Error, Result};
use crate::exactla::{Scalar, Subspace, Vector};
use crate::fusion::FusionLaw;

/// Outcome of the Seress lemma check; the witness is `(x, y)` with `x` a
/// basis index of `A` and `y` an index into the basis of `A_1(a) ⊕ A_0(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeressCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

/// `a(xy) = (ax)y` for every basis `x` of `A` and `y` of `A_1(a) ⊕ A_0(a)`.
pub fn seress_lemma_check(alg: &Algebra, a: &Vector, law: &FusionLaw) -> Result<SeressCheck> {
    if !law.is_seress() {
        return Err(Error::Unsupported(format!("{law} is not a Seress law")));
    }
    if !check_axis(alg, a, law)?.is_axis() {
        return Err(Error::NotAnAxis(format!("{a} is not an axis for {law}")));
    }
    let field = alg.field();
    let ys = eigenspace(alg, a, &field.one())?.sum(&eigenspace(alg, a, &field.zero())?)?;
    for (yi, y) in ys.basis().iter().enumerate() {
        for xi in 0..alg.dim() {
            let x = alg.basis_vector(xi);
            let lhs = alg.mul_unchecked(a, &alg.mul_unchecked(&x, y));
            let rhs = alg.mul_unchecked(&alg.mul_unchecked(a, &x), y);
            if lhs != rhs {
                return Ok(SeressCheck {
                    holds: false,
                    witness: Some((xi, yi)),
                });
            }
        }
    }
    Ok(SeressCheck {
        holds: true,
        witness: None,
    })
}

/// An undirected graph; edges `(i, j)` with `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.vertices];
        for v in 0..self.vertices {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}

/// `Δ(X)`: an edge between distinct axes with nonzero product.
pub fn non_annihilating_graph(alg: &Algebra, axes: &[Vector]) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..axes.len() {
        for j in i + 1..axes.len() {
            if !alg.mul(&axes[i], &axes[j])?.is_zero() {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph {
        vertices: axes.len(),
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumDecomposition {
    /// Components of `Δ(X)` as lists of axis indices.
    pub components: Vec<Vec<usize>>,
    /// `B_i`, the subalgebra generated by component `i`.
    pub subalgebras: Vec<Subspace>,
    /// `B_i B_j = 0` for all `i ≠ j`.
    pub pairwise_zero: bool,
    /// The sum of the `B_i` is direct as a vector space.
    pub direct: bool,
    /// The `B_i` together span `A`.
    pub spans: bool,
}

pub fn sum_decomposition(alg: &Algebra, axes: &[Vector]) -> Result<SumDecomposition> {
    let components = non_annihilating_graph(alg, axes)?.components();
    let subalgebras = components
        .iter()
        .map(|c| {
            let gens: Vec<Vector> = c.iter().map(|&i| axes[i].clone()).collect();
            alg.subalgebra_gen(&gens)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pairwise_zero = true;
    'outer: for i in 0..subalgebras.len() {
        for j in i + 1..subalgebras.len() {
            for u in subalgebras[i].basis() {
                for v in subalgebras[j].basis() {
                    if !alg.mul_unchecked(u, v).is_zero() {
                        pairwise_zero = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let mut total = Subspace::zero(alg.field(), alg.dim());
    for b in &subalgebras {
        total = total.sum(b)?;
    }
    let direct = total.dim() == subalgebras.iter().map(Subspace::dim).sum::<usize>();
    Ok(SumDecomposition {
        components,
        subalgebras,
        pairwise_zero,
        direct,
        spans: total.is_full(),
    })
}

/// `Q(A, X)`: the smallest subspace containing the axes with `aQ ⊆ Q` for
/// each axis `a`.
pub fn spine(alg: &Algebra, axes: &[Vector]) -> Result<Subspace> {
    let mut s = Subspace::zero(alg.field(), alg.dim());
    let mut list = Vec::new();
    for a in axes {
        alg.check_vector(a)?;
        if s.insert(a.clone()) {
            list.push(a.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        for a in axes {
            let p = alg.mul_unchecked(a, &list[i]);
            if s.insert(p.clone()) {
                list.push(p);
            }
        }
        i += 1;
    }
    Ok(s)
}

pub fn is_slender(alg: &Algebra, axes: &[Vector]) -> Result<bool> {
    Ok(spine(alg, axes)?.is_full())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaricCheck {
    /// `λ(e_i e_j) = λ(e_i) λ(e_j)` on all basis pairs.
    pub homomorphism: bool,
    pub nonzero: bool,
}

impl BaricCheck {
    pub fn passes(&self) -> bool {
        self.homomorphism && self.nonzero
    }
}

/// Tests whether the linear map with `λ(e_i) = weights[i]` is multiplicative.
pub fn baric_map_check(alg: &Algebra, weights: &[Scalar]) -> Result<BaricCheck> {
    alg.check_vector(weights)?;
    let w = Vector::new(weights.to_vec());
    let n = alg.dim();
    let homomorphism = (0..n).all(|i| {
        (i..n).all(|j| {
            let lhs = if n == 0 { alg.field().zero() } else { w.dot(&alg.product(i, j)) };
            lhs == &weights[i] * &weights[j]
        })
    });
    Ok(BaricCheck {
        homomorphism,
        nonzero: weights.iter().any(|x| !x.is_zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn two_b() -> Algebra {
        let mut a = Algebra::zero(Q, 2, "a");
        a.set_product(0, 0, a.basis_vector(0)).unwrap();
        a.set_product(1, 1, a.basis_vector(1)).unwrap();
        a
    }

    fn units(alg: &Algebra) -> Vec<Vector> {
        (0..alg.dim()).map(|i| alg.basis_vector(i)).collect()
    }

    #[test]
    fn two_b_decomposes() {
        let alg = two_b();
        let d = sum_decomposition(&alg, &units(&alg)).unwrap();
        assert_eq!(d.components, vec![vec![0], vec![1]]);
        assert!(d.pairwise_zero && d.direct && d.spans);
    }

    #[test]
    fn block_sum_has_four_components() {
        let alg = two_b().direct_sum(&two_b(), "'").unwrap();
        let g = non_annihilating_graph(&alg, &units(&alg)).unwrap();
        assert!(g.edges.is_empty());
        assert_eq!(g.components().len(), 4);
    }

    #[test]
    fn seress_on_associative_law() {
        let alg = two_b();
        let law = FusionLaw::associative(Q);
        for a in units(&alg) {
            assert!(seress_lemma_check(&alg, &a, &law).unwrap().holds);
        }
    }

    #[test]
    fn spine_and_slenderness() {
        let alg = two_b();
        assert!(is_slender(&alg, &units(&alg)).unwrap());
        let with_null = alg.direct_sum(&Algebra::zero(Q, 1, "z"), "").unwrap();
        let axes = vec![with_null.basis_vector(0), with_null.basis_vector(1)];
        assert!(!is_slender(&with_null, &axes).unwrap());
    }

    #[test]
    fn baric_checks() {
        let alg = two_b();
        let r = baric_map_check(&alg, &[Q.one(), Q.one()]).unwrap();
        assert!(!r.homomorphism);
        let r = baric_map_check(&alg, &[Q.one(), Q.zero()]).unwrap();
        assert!(r.passes());
        let r = baric_map_check(&alg, &[Q.zero(), Q.zero()]).unwrap();
        assert!(r.homomorphism && !r.nonzero && !r.passes());
    }
}
