use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Vector};
use crate::fusion::FusionLaw;

/// A basis symbol: an axis `a_i` (index mod n) or an extra element, which is
/// fixed by the whole dihedral group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    A(i64),
    X(usize),
}

use Sym::{A, X};

type Term = (Sym, i64, i64);

struct Table {
    n: i64,
    axes: &'static [i64],
    extras: &'static [&'static str],
    products: &'static [(Sym, Sym, &'static [Term])],
    forms: &'static [(Sym, Sym, i64, i64)],
}

const P19: i64 = 1 << 19;

const TABLES: &[(&str, Table)] = &[
    (
        "2A",
        Table {
            n: 2,
            axes: &[0, 1],
            extras: &["a_rho"],
            products: &[
                (A(0), A(1), &[(A(0), 1, 8), (A(1), 1, 8), (X(0), -1, 8)]),
                (A(0), X(0), &[(A(0), 1, 8), (X(0), 1, 8), (A(1), -1, 8)]),
                (X(0), X(0), &[(X(0), 1, 1)]),
            ],
            forms: &[(A(0), A(1), 1, 8), (A(0), X(0), 1, 8), (X(0), X(0), 1, 1)],
        },
    ),
    (
        "2B",
        Table {
            n: 2,
            axes: &[0, 1],
            extras: &[],
            products: &[(A(0), A(1), &[])],
            forms: &[(A(0), A(1), 0, 1)],
        },
    ),
    (
        "3A",
        Table {
            n: 3,
            axes: &[-1, 0, 1],
            extras: &["u_rho"],
            products: &[
                (
                    A(0),
                    A(1),
                    &[(A(0), 2, 32), (A(1), 2, 32), (A(-1), 1, 32), (X(0), -135, 2048)],
                ),
                (
                    A(0),
                    X(0),
                    &[(A(0), 2, 9), (A(1), -1, 9), (A(-1), -1, 9), (X(0), 5, 32)],
                ),
                (X(0), X(0), &[(X(0), 1, 1)]),
            ],
            forms: &[(A(0), A(1), 13, 256), (A(0), X(0), 1, 4), (X(0), X(0), 8, 5)],
        },
    ),
    (
        "3C",
        Table {
            n: 3,
            axes: &[-1, 0, 1],
            extras: &[],
            products: &[(A(0), A(1), &[(A(0), 1, 64), (A(1), 1, 64), (A(-1), -1, 64)])],
            forms: &[(A(0), A(1), 1, 64)],
        },
    ),
    (
        "4A",
        Table {
            n: 4,
            axes: &[-1, 0, 1, 2],
            extras: &["v_rho"],
            products: &[
                (
                    A(0),
                    A(1),
                    &[
                        (A(0), 3, 64),
                        (A(1), 3, 64),
                        (A(-1), 1, 64),
                        (A(2), 1, 64),
                        (X(0), -3, 64),
                    ],
                ),
                (A(0), A(2), &[]),
                (
                    A(0),
                    X(0),
                    &[
                        (A(0), 5, 16),
                        (A(1), -2, 16),
                        (A(2), -1, 16),
                        (A(-1), -2, 16),
                        (X(0), 3, 16),
                    ],
                ),
                (X(0), X(0), &[(X(0), 1, 1)]),
            ],
            forms: &[
                (A(0), A(1), 1, 32),
                (A(0), A(2), 0, 1),
                (A(0), X(0), 3, 8),
                (X(0), X(0), 2, 1),
            ],
        },
    ),
    (
        "4B",
        Table {
            n: 4,
            axes: &[-1, 0, 1, 2],
            extras: &["a_rho2"],
            products: &[
                (
                    A(0),
                    A(1),
                    &[
                        (A(0), 1, 64),
                        (A(1), 1, 64),
                        (A(-1), -1, 64),
                        (A(2), -1, 64),
                        (X(0), 1, 64),
                    ],
                ),
                (A(0), A(2), &[(A(0), 1, 8), (A(2), 1, 8), (X(0), -1, 8)]),
                (A(0), X(0), &[(A(0), 1, 8), (X(0), 1, 8), (A(2), -1, 8)]),
                (X(0), X(0), &[(X(0), 1, 1)]),
            ],
            forms: &[
                (A(0), A(1), 1, 64),
                (A(0), A(2), 1, 8),
                (A(0), X(0), 1, 8),
                (X(0), X(0), 1, 1),
            ],
        },
    ),
    (
        "5A",
        Table {
            n: 5,
            axes: &[-2, -1, 0, 1, 2],
            extras: &["w_rho"],
            products: &[
                (
                    A(0),
                    A(1),
                    &[
                        (A(0), 3, 128),
                        (A(1), 3, 128),
                        (A(2), -1, 128),
                        (A(-1), -1, 128),
                        (A(-2), -1, 128),
                        (X(0), 1, 1),
                    ],
                ),
                (
                    A(0),
                    A(2),
                    &[
                        (A(0), 3, 128),
                        (A(2), 3, 128),
                        (A(1), -1, 128),
                        (A(-1), -1, 128),
                        (A(-2), -1, 128),
                        (X(0), -1, 1),
                    ],
                ),
                (
                    A(0),
                    X(0),
                    &[
                        (A(1), 7, 4096),
                        (A(-1), 7, 4096),
                        (A(2), -7, 4096),
                        (A(-2), -7, 4096),
                        (X(0), 7, 32),
                    ],
                ),
                (
                    X(0),
                    X(0),
                    &[
                        (A(-2), 175, P19),
                        (A(-1), 175, P19),
                        (A(0), 175, P19),
                        (A(1), 175, P19),
                        (A(2), 175, P19),
                    ],
                ),
            ],
            forms: &[
                (A(0), A(1), 3, 128),
                (A(0), A(2), 3, 128),
                (A(0), X(0), 0, 1),
                (X(0), X(0), 875, P19),
            ],
        },
    ),
    (
        "6A",
        Table {
            n: 6,
            axes: &[-2, -1, 0, 1, 2, 3],
            extras: &["a_rho3", "u_rho2"],
            products: &[
                (
                    A(0),
                    A(1),
                    &[
                        (A(0), 1, 64),
                        (A(1), 1, 64),
                        (A(-2), -1, 64),
                        (A(-1), -1, 64),
                        (A(2), -1, 64),
                        (A(3), -1, 64),
                        (X(0), 1, 64),
                        (X(1), 45, 2048),
                    ],
                ),
                (
                    A(0),
                    A(2),
                    &[(A(0), 2, 32), (A(2), 2, 32), (A(-2), 1, 32), (X(1), -135, 2048)],
                ),
                (A(0), A(3), &[(A(0), 1, 8), (A(3), 1, 8), (X(0), -1, 8)]),
                (
                    A(0),
                    X(1),
                    &[(A(0), 2, 9), (A(2), -1, 9), (A(-2), -1, 9), (X(1), 5, 32)],
                ),
                (A(0), X(0), &[(A(0), 1, 8), (X(0), 1, 8), (A(3), -1, 8)]),
                (X(0), X(0), &[(X(0), 1, 1)]),
                (X(1), X(1), &[(X(1), 1, 1)]),
                (X(0), X(1), &[]),
            ],
            forms: &[
                (A(0), A(1), 5, 256),
                (A(0), A(2), 13, 256),
                (A(0), A(3), 1, 8),
                (X(0), X(1), 0, 1),
                (A(0), X(0), 1, 8),
                (A(0), X(1), 1, 4),
                (X(0), X(0), 1, 1),
                (X(1), X(1), 8, 5),
            ],
        },
    ),
];

/// Names of the eight Norton-Sakuma algebras.
pub const NORTON_SAKUMA_NAMES: [&str; 8] = ["2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"];

fn table(name: &str) -> Result<&'static Table> {
    TABLES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| t)
        .ok_or_else(|| Error::UnknownCatalogEntry(format!("ns:{name}")))
}

impl Table {
    fn normalize(&self, s: Sym) -> Sym {
        match s {
            A(i) => A(i.rem_euclid(self.n)),
            x => x,
        }
    }

    fn basis(&self) -> Vec<Sym> {
        let mut b: Vec<Sym> = self.axes.iter().map(|&i| self.normalize(A(i))).collect();
        b.extend((0..self.extras.len()).map(X));
        b
    }

    fn names(&self) -> Vec<String> {
        let mut b: Vec<String> = self.axes.iter().map(|i| format!("a{i}")).collect();
        b.extend(self.extras.iter().map(|s| s.to_string()));
        b
    }

    /// The dihedral group `i ↦ s i + c` on axis indices.
    fn group(&self) -> Vec<(i64, i64)> {
        let mut g = Vec::new();
        for c in 0..self.n {
            for s in [1, -1] {
                if !g.contains(&(s, c)) {
                    g.push((s, c));
                }
            }
        }
        g
    }

    fn act(&self, g: (i64, i64), s: Sym) -> Sym {
        match s {
            A(i) => self.normalize(A(g.0 * i + g.1)),
            x => x,
        }
    }

    fn index(&self, basis: &[Sym], s: Sym) -> usize {
        let s = self.normalize(s);
        basis.iter().position(|&b| b == s).expect("symbol in basis")
    }

    /// Every value reachable for the pair `{p, q}` by moving a listed
    /// representative with a group element.
    fn images<'a, T: Clone>(
        &'a self,
        reps: impl Iterator<Item = (Sym, Sym, T)> + 'a,
        p: Sym,
        q: Sym,
    ) -> Vec<((i64, i64), T)> {
        let group = self.group();
        let mut out = Vec::new();
        for (r1, r2, value) in reps {
            for &g in &group {
                let (s1, s2) = (self.act(g, r1), self.act(g, r2));
                if (s1 == p && s2 == q) || (s1 == q && s2 == p) {
                    out.push((g, value.clone()));
                }
            }
        }
        out
    }
}

fn ratio(field: Field, n: i64, d: i64) -> Scalar {
    field.ratio(n, d).expect("nonzero denominator")
}

/// A Norton-Sakuma algebra over `Q` with axes `a0`, `a1` and law `M(1/4, 1/32)`.
/// The multiplication table is completed from the listed products by the
/// dihedral action on axis indices, and every product reachable along two
/// different routes is checked to agree.
pub fn norton_sakuma(name: &str) -> Result<Algebra> {
    let t = table(name)?;
    let field = Field::Rational;
    let basis = t.basis();
    let mut alg = Algebra::new(field, t.names());
    let mut reps: Vec<(Sym, Sym, Vec<Term>)> =
        t.products.iter().map(|(a, b, v)| (*a, *b, v.to_vec())).collect();
    reps.push((A(0), A(0), vec![(A(0), 1, 1)]));
    for (i, &p) in basis.iter().enumerate() {
        for (j, &q) in basis.iter().enumerate().skip(i) {
            let candidates = t.images(reps.iter().cloned(), p, q);
            let mut value: Option<Vector> = None;
            for (g, terms) in candidates {
                let v = alg.vector(
                    terms
                        .iter()
                        .map(|&(s, n, d)| (t.index(&basis, t.act(g, s)), ratio(field, n, d))),
                );
                match &value {
                    None => value = Some(v),
                    Some(w) if *w == v => {}
                    Some(_) => {
                        return Err(Error::ConsistencyFailure(format!(
                            "{name}: product {} · {} is not well defined",
                            alg.basis_names()[i],
                            alg.basis_names()[j]
                        )))
                    }
                }
            }
            let v = value.ok_or_else(|| {
                Error::ConsistencyFailure(format!(
                    "{name}: no product listed for {} · {}",
                    alg.basis_names()[i],
                    alg.basis_names()[j]
                ))
            })?;
            alg.set_product(i, j, v)?;
        }
    }
    for k in [0, 1] {
        let v = alg.basis_vector(t.index(&basis, A(k)));
        alg.add_axis(format!("a{k}"), v)?;
    }
    alg.set_law(Some(FusionLaw::monster(
        ratio(field, 1, 4),
        ratio(field, 1, 32),
    )?));
    Ok(alg)
}

/// The Frobenius form of a Norton-Sakuma algebra, completed from the listed
/// values by the same dihedral action; axes have norm 1.
pub fn norton_sakuma_form(name: &str) -> Result<Matrix> {
    let t = table(name)?;
    let field = Field::Rational;
    let basis = t.basis();
    let n = basis.len();
    let mut reps: Vec<(Sym, Sym, (i64, i64))> =
        t.forms.iter().map(|&(a, b, x, y)| (a, b, (x, y))).collect();
    reps.push((A(0), A(0), (1, 1)));
    let mut g = Matrix::zeros(field, n, n);
    for (i, &p) in basis.iter().enumerate() {
        for (j, &q) in basis.iter().enumerate().skip(i) {
            let values: Vec<Scalar> = t
                .images(reps.iter().cloned(), p, q)
                .into_iter()
                .map(|(_, (x, y))| ratio(field, x, y))
                .collect();
            let Some(first) = values.first() else {
                return Err(Error::ConsistencyFailure(format!(
                    "{name}: no form value for ({}, {})",
                    t.names()[i],
                    t.names()[j]
                )));
            };
            if values.iter().any(|v| v != first) {
                return Err(Error::ConsistencyFailure(format!(
                    "{name}: form value ({}, {}) is not well defined",
                    t.names()[i],
                    t.names()[j]
                )));
            }
            g.set(i, j, first.clone());
            g.set(j, i, first.clone());
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = NORTON_SAKUMA_NAMES
            .iter()
            .map(|n| norton_sakuma(n).unwrap().dim())
            .collect();
        assert_eq!(dims, vec![3, 2, 4, 3, 5, 5, 6, 8]);
    }

    #[test]
    fn printed_products() {
        let q = |s: &str| Field::Rational.parse(s).unwrap();
        let alg = norton_sakuma("2A").unwrap();
        let expect = alg.vector([(0, q("1/8")), (1, q("1/8")), (2, q("-1/8"))]);
        assert_eq!(alg.product(0, 1), expect);
        let alg = norton_sakuma("2B").unwrap();
        assert!(alg.product(0, 1).is_zero());
        let alg = norton_sakuma("3A").unwrap();
        let u = alg.basis_index("u_rho").unwrap();
        assert_eq!(alg.product(u, u), alg.basis_vector(u));
        let alg = norton_sakuma("6A").unwrap();
        let a = alg.basis_index("a_rho3").unwrap();
        let u = alg.basis_index("u_rho2").unwrap();
        assert!(alg.product(a, u).is_zero());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(norton_sakuma("7A"), Err(Error::UnknownCatalogEntry(_))));
    }

    #[test]
    fn forms_are_symmetric() {
        for name in NORTON_SAKUMA_NAMES {
            let g = norton_sakuma_form(name).unwrap();
            assert!(g.is_symmetric());
        }
    }
}
