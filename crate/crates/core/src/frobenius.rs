//! Frobenius forms, radicals and projection graphs.

use crate::algebra::Algebra;
use crate::axial::{eigenspaces, Axet, Projector};
use crate::error::{Error, Result};
use crate::exactla::{kernel, Matrix, Scalar, Subspace, Vector};
use crate::fusion::FusionLaw;

/// The space of bilinear forms satisfying `(u, vw) = (uv, w)`, and a chosen
/// representative.
#[derive(Clone, Debug)]
pub struct FrobeniusSolution {
    /// Solution space inside `F^{n²}`, coordinates `g[p][q]` at `p n + q`.
    pub space: Subspace,
    /// The canonical basis of `space`, as Gram matrices.
    pub basis: Vec<Matrix>,
    pub canonical: Option<Matrix>,
    /// True when `canonical` has norm 1 on every designated axis and is the
    /// only such form.
    pub normalized_on_all_axes: bool,
    /// True when the space has dimension above 1 and the normalization on all
    /// axes did not single out one form.
    pub ambiguous: bool,
}

impl FrobeniusSolution {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn gram_from_coords(alg: &Algebra, v: &[Scalar]) -> Matrix {
    let n = alg.dim();
    let rows = (0..n).map(|p| v[p * n..(p + 1) * n].to_vec()).collect();
    Matrix::from_rows(alg.field(), rows).expect("square block")
}

/// `(u, v)` under the Gram matrix `g`.
pub fn evaluate(g: &Matrix, u: &Vector, v: &Vector) -> Scalar {
    u.dot(&g.mul_vec(v).expect("vector length matches the form"))
}

/// Solves for every bilinear form with `(e_i, e_j e_k) = (e_i e_j, e_k)` on
/// all basis triples. Symmetry is not imposed.
pub fn solve_frobenius(alg: &Algebra) -> FrobeniusSolution {
    let n = alg.dim();
    let field = alg.field();
    let mut constraints = Subspace::zero(field, n * n);
    for i in 0..n {
        for j in 0..n {
            let eij = alg.product(i, j);
            for k in 0..n {
                let ejk = alg.product(j, k);
                let mut row = Vector::zeros(field, n * n);
                let r = row.as_mut_slice();
                for (t, c) in ejk.iter().enumerate() {
                    if !c.is_zero() {
                        r[i * n + t] += c;
                    }
                }
                for (t, c) in eij.iter().enumerate() {
                    if !c.is_zero() {
                        r[t * n + k] -= c;
                    }
                }
                constraints.insert(row);
            }
        }
    }
    let rows: Vec<Vec<Scalar>> = constraints.basis().iter().map(|r| r.to_vec()).collect();
    let space = if rows.is_empty() {
        Subspace::full(field, n * n)
    } else {
        kernel(&Matrix::from_rows(field, rows).expect("constraint rows"))
    };
    let basis: Vec<Matrix> = space.basis().iter().map(|v| gram_from_coords(alg, v)).collect();

    let axes = alg.axis_vectors();
    let mut canonical = None;
    let mut normalized_on_all_axes = false;
    if !basis.is_empty() && !axes.is_empty() {
        let norms: Vec<Vec<Scalar>> = axes
            .iter()
            .map(|a| basis.iter().map(|b| evaluate(b, a, a)).collect())
            .collect();
        let m = Matrix::from_rows(field, norms).expect("rectangular");
        let ones = vec![field.one(); axes.len()];
        let sol = crate::exactla::solve_linear(&m, &ones).expect("shapes agree");
        if let (Some(x), true) = (&sol.particular, sol.kernel.is_zero()) {
            canonical = Some(combine(alg, &basis, x));
            normalized_on_all_axes = true;
        }
    }
    if canonical.is_none() && !basis.is_empty() {
        let first = axes.first();
        let pick = first.and_then(|a| {
            basis.iter().find_map(|b| {
                let nrm = evaluate(b, a, a);
                nrm.inv().map(|s| scale(b, &s))
            })
        });
        canonical = Some(pick.unwrap_or_else(|| basis[0].clone()));
    }
    let ambiguous = basis.len() > 1 && !normalized_on_all_axes;
    FrobeniusSolution {
        space,
        basis,
        canonical,
        normalized_on_all_axes,
        ambiguous,
    }
}

fn combine(alg: &Algebra, basis: &[Matrix], x: &[Scalar]) -> Matrix {
    let n = alg.dim();
    let mut g = Matrix::zeros(alg.field(), n, n);
    for (b, c) in basis.iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        for p in 0..n {
            for q in 0..n {
                let v = g.get(p, q) + &(b.get(p, q) * c);
                g.set(p, q, v);
            }
        }
    }
    g
}

fn scale(m: &Matrix, s: &Scalar) -> Matrix {
    let mut out = m.clone();
    for p in 0..m.nrows() {
        for q in 0..m.ncols() {
            out.set(p, q, m.get(p, q) * s);
        }
    }
    out
}

/// `(e_i, e_j e_k) = (e_i e_j, e_k)` for all basis triples.
pub fn is_frobenius(alg: &Algebra, g: &Matrix) -> bool {
    let n = alg.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let (ei, ek) = (alg.basis_vector(i), alg.basis_vector(k));
                evaluate(g, &ei, &alg.product(j, k)) == evaluate(g, &alg.product(i, j), &ek)
            })
        })
    })
}

/// `A^⊥`, the kernel of the Gram matrix.
pub fn form_radical(g: &Matrix) -> Subspace {
    kernel(g)
}

/// `R(A, X)` computed as `A^⊥` for the canonical Frobenius form.
pub fn radical(alg: &Algebra) -> Result<Subspace> {
    let sol = solve_frobenius(alg);
    let g = sol
        .canonical
        .ok_or_else(|| Error::Unsupported("the algebra admits no nonzero Frobenius form".into()))?;
    for axis in alg.axes() {
        if evaluate(&g, &axis.v, &axis.v).is_zero() {
            return Err(Error::Unsupported(format!(
                "axis {} has norm 0 under the canonical form",
                axis.name
            )));
        }
    }
    let r = form_radical(&g);
    if !alg.is_ideal(&r) {
        return Err(Error::ConsistencyFailure(
            "the form radical is not closed under multiplication by A".into(),
        ));
    }
    Ok(r)
}

/// `(u, v) = 0` for eigenspace basis vectors `u ∈ A_λ(a)`, `v ∈ A_μ(a)`, `λ ≠ μ`.
pub fn eigenspaces_orthogonal(alg: &Algebra, g: &Matrix, a: &Vector, law: &FusionLaw) -> Result<bool> {
    let spaces = eigenspaces(alg, a, law)?;
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            for u in spaces[i].basis() {
                for v in spaces[j].basis() {
                    if !evaluate(g, u, v).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// A directed graph on numbered vertices; `(a, b)` is an edge `a → b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DiGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }
}

/// Edge `a → b` between distinct axes whenever `φ_a(b) ≠ 0`.
pub fn projection_graph(alg: &Algebra, axet: &Axet) -> Result<DiGraph> {
    let projectors = axet
        .axes
        .iter()
        .map(|a| Projector::new(alg, a))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for (i, p) in projectors.iter().enumerate() {
        for (j, b) in axet.axes.iter().enumerate() {
            if i != j && !p.project(b).is_zero() {
                edges.push((i, j));
            }
        }
    }
    Ok(DiGraph {
        vertices: axet.len(),
        edges,
    })
}

/// The projection graph with Miyamoto orbits as vertices; edges between
/// distinct orbits only.
pub fn orbit_projection_graph(alg: &Algebra, axet: &Axet) -> Result<DiGraph> {
    let g = projection_graph(alg, axet)?;
    let mut orbit_of = vec![0; axet.len()];
    for (k, o) in axet.orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x] = k;
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(a, b)| (orbit_of[a], orbit_of[b]))
        .filter(|(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(DiGraph {
        vertices: axet.orbits.len(),
        edges,
    })
}
