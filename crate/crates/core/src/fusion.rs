//! Fusion laws, their predicates, and `C2`-gradings.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};

/// Which family a law was built from; used for serialization and display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawKind {
    Associative,
    Jordan { eta: Scalar },
    Monster { alpha: Scalar, beta: Scalar },
    Custom,
}

/// A finite fusion law: distinct field elements together with a table
/// `star(i, j) ⊆ elements` (stored as sorted index lists).
///
/// Elements are ordered with 1 first, then 0 (when present), then the rest
/// in the order given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLaw {
    kind: LawKind,
    elements: Vec<Scalar>,
    table: Vec<Vec<Vec<usize>>>,
}

impl FusionLaw {
    /// The associative law `{1, 0}`.
    pub fn associative(field: Field) -> FusionLaw {
        FusionLaw {
            kind: LawKind::Associative,
            elements: vec![field.one(), field.zero()],
            table: vec![vec![vec![0], vec![]], vec![vec![], vec![1]]],
        }
    }

    /// The Jordan type law `J(eta)` on `{1, 0, eta}`.
    pub fn jordan(eta: Scalar) -> Result<FusionLaw> {
        let field = eta.field();
        if eta.is_zero() || eta.is_one() {
            return Err(Error::DegenerateParameters(format!(
                "Jordan parameter {eta} must differ from 0 and 1"
            )));
        }
        let table = vec![
            vec![vec![0], vec![], vec![2]],
            vec![vec![], vec![1], vec![2]],
            vec![vec![2], vec![2], vec![0, 1]],
        ];
        Ok(FusionLaw {
            kind: LawKind::Jordan { eta: eta.clone() },
            elements: vec![field.one(), field.zero(), eta],
            table,
        })
    }

    /// The Monster type law `M(alpha, beta)` on `{1, 0, alpha, beta}`.
    pub fn monster(alpha: Scalar, beta: Scalar) -> Result<FusionLaw> {
        let field = alpha.field();
        if beta.field() != field {
            return Err(Error::InvalidField("alpha and beta lie in different fields".into()));
        }
        let elements = vec![field.one(), field.zero(), alpha.clone(), beta.clone()];
        if !all_distinct(&elements) {
            return Err(Error::DegenerateParameters(format!(
                "1, 0, {alpha}, {beta} are not pairwise distinct"
            )));
        }
        let table = vec![
            vec![vec![0], vec![], vec![2], vec![3]],
            vec![vec![], vec![1], vec![2], vec![3]],
            vec![vec![2], vec![2], vec![0, 1], vec![3]],
            vec![vec![3], vec![3], vec![3], vec![0, 1, 2]],
        ];
        Ok(FusionLaw {
            kind: LawKind::Monster { alpha, beta },
            elements,
            table,
        })
    }

    /// A law given by an explicit table over `elements`. `table[i][j]` lists
    /// indices into `elements`. Must contain 1; elements are reordered to the
    /// canonical order (1, 0, rest) and the table remapped.
    pub fn custom(elements: Vec<Scalar>, table: Vec<Vec<Vec<usize>>>) -> Result<FusionLaw> {
        let n = elements.len();
        let field = elements
            .first()
            .map(Scalar::field)
            .ok_or_else(|| Error::Parse("empty fusion law".into()))?;
        if elements.iter().any(|e| e.field() != field) {
            return Err(Error::InvalidField("fusion law elements in mixed fields".into()));
        }
        if !all_distinct(&elements) {
            return Err(Error::DegenerateParameters("fusion law elements repeat".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("fusion table must be |F| x |F|".into()));
        }
        if table.iter().flatten().flatten().any(|&k| k >= n) {
            return Err(Error::Parse("fusion table index out of range".into()));
        }
        let one = elements
            .iter()
            .position(Scalar::is_one)
            .ok_or_else(|| Error::Parse("fusion law must contain 1".into()))?;
        let mut order = vec![one];
        if let Some(z) = elements.iter().position(Scalar::is_zero) {
            order.push(z);
        }
        let rest: Vec<usize> = (0..n).filter(|i| !order.contains(i)).collect();
        order.extend(rest);
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let new_elements = order.iter().map(|&i| elements[i].clone()).collect();
        let new_table = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| {
                        let mut cell: Vec<usize> =
                            table[i][j].iter().map(|&k| new_index[k]).collect();
                        cell.sort_unstable();
                        cell.dedup();
                        cell
                    })
                    .collect()
            })
            .collect();
        Ok(FusionLaw {
            kind: LawKind::Custom,
            elements: new_elements,
            table: new_table,
        })
    }

    /// Parses the command-line law syntax: `A`, `J:<eta>`, `M:<alpha>,<beta>`.
    pub fn parse_spec(field: Field, spec: &str) -> Result<FusionLaw> {
        let spec = spec.trim();
        match spec.split_once(':') {
            None if spec == "A" => Ok(FusionLaw::associative(field)),
            Some(("J", eta)) => FusionLaw::jordan(field.parse(eta)?),
            Some(("M", params)) => {
                let (a, b) = params
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected M:<alpha>,<beta>, got {spec:?}")))?;
                FusionLaw::monster(field.parse(a)?, field.parse(b)?)
            }
            _ => Err(Error::Parse(format!("unknown fusion law {spec:?}"))),
        }
    }

    pub fn kind(&self) -> &LawKind {
        &self.kind
    }

    pub fn field(&self) -> Field {
        self.elements[0].field()
    }

    pub fn elements(&self) -> &[Scalar] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &Scalar) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    pub fn star(&self, i: usize, j: usize) -> &[usize] {
        &self.table[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// `0 ∈ F` and `0 ⋆ λ ⊆ {λ}` for every λ.
    pub fn is_seress(&self) -> bool {
        let Some(z) = self.elements.iter().position(Scalar::is_zero) else {
            return false;
        };
        (0..self.len()).all(|l| self.table[z][l].iter().all(|&k| k == l))
    }

    /// The primitivity convention: `1 ⋆ λ = {λ}` for λ ≠ 0 and `1 ⋆ 0 = ∅`.
    pub fn follows_primitivity_convention(&self) -> bool {
        (0..self.len()).all(|l| {
            if self.elements[l].is_zero() {
                self.table[0][l].is_empty()
            } else {
                self.table[0][l] == [l]
            }
        })
    }

    /// Every `C2`-grading of the law, by exhaustive search over sign maps.
    /// Maps sending 1 to `-` are skipped: they are the swaps of the maps kept,
    /// and never close since `1 ⋆ 1 = {1}` for any law an idempotent obeys.
    /// The all-plus grading is always first.
    pub fn find_c2_gradings(&self) -> Vec<Grading> {
        let n = self.len();
        assert!(n < 20, "grading search is exhaustive over 2^|F| sign maps");
        (0u32..1 << n)
            .filter(|mask| mask & 1 == 0)
            .map(|mask| Grading {
                minus: (0..n).map(|i| mask >> i & 1 == 1).collect(),
            })
            .filter(|g| g.is_valid_for(self))
            .collect()
    }

    /// The grading whose minus part is exactly `minus`.
    pub fn grading_with_minus(&self, minus: &[Scalar]) -> Result<Grading> {
        let mut flags = vec![false; self.len()];
        for x in minus {
            let i = self
                .index_of(x)
                .ok_or_else(|| Error::InvalidGrading(format!("{x} is not in the law")))?;
            flags[i] = true;
        }
        let g = Grading { minus: flags };
        if g.is_valid_for(self) {
            Ok(g)
        } else {
            Err(Error::InvalidGrading(format!(
                "minus part {{{}}} does not grade the law",
                minus.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
            )))
        }
    }

    /// The finest `C2`-grading found by search: the one with the most minus
    /// elements (ties broken by search order). For `J(eta)` and `M(alpha,
    /// beta)` this is the standard grading with `F_- = {eta}` resp. `{beta}`.
    pub fn standard_grading(&self) -> Grading {
        self.find_c2_gradings()
            .into_iter()
            .max_by_key(|g| g.minus.iter().filter(|&&m| m).count())
            .expect("the all-plus grading always exists")
    }
}

fn all_distinct(xs: &[Scalar]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[..i].iter().all(|y| y != x))
}

impl fmt::Display for FusionLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LawKind::Associative => write!(f, "A"),
            LawKind::Jordan { eta } => write!(f, "J({})", eta.to_literal()),
            LawKind::Monster { alpha, beta } => {
                write!(f, "M({}, {})", alpha.to_literal(), beta.to_literal())
            }
            LawKind::Custom => {
                let els: Vec<String> = self.elements.iter().map(Scalar::to_literal).collect();
                write!(f, "custom{{{}}}", els.join(", "))
            }
        }
    }
}

/// A `C2`-grading: each law element is sent to `+` or `-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    minus: Vec<bool>,
}

impl Grading {
    pub fn all_plus(law: &FusionLaw) -> Grading {
        Grading {
            minus: vec![false; law.len()],
        }
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.minus[i]
    }

    pub fn minus_indices(&self) -> Vec<usize> {
        (0..self.minus.len()).filter(|&i| self.minus[i]).collect()
    }

    pub fn plus_indices(&self) -> Vec<usize> {
        (0..self.minus.len()).filter(|&i| !self.minus[i]).collect()
    }

    /// Adequate iff the image generates `C2`, i.e. something maps to `-`.
    pub fn is_adequate(&self) -> bool {
        self.minus.iter().any(|&m| m)
    }

    /// `F_s ⋆ F_t ⊆ F_{st}` for all signs.
    pub fn is_valid_for(&self, law: &FusionLaw) -> bool {
        let n = law.len();
        self.minus.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let expect = self.minus[i] ^ self.minus[j];
                    law.star(i, j).iter().all(|&k| self.minus[k] == expect)
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

    #[test]
    fn catalog_tables() {
        let j = FusionLaw::jordan(q("1/4")).unwrap();
        assert_eq!(j.star(2, 2), &[0, 1]);
        assert!(j.star(0, 1).is_empty());
        let m = FusionLaw::monster(q("1/4"), q("1/32")).unwrap();
        assert_eq!(m.star(3, 3), &[0, 1, 2]);
        assert_eq!(m.star(2, 3), &[3]);
        assert_eq!(m.star(2, 2), &[0, 1]);
        assert!(m.star(0, 1).is_empty());
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            FusionLaw::monster(q("1/4"), q("1/4")),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(FusionLaw::monster(q("1"), q("1/2")).is_err());
        assert!(FusionLaw::monster(q("0"), q("1/2")).is_err());
        assert!(FusionLaw::jordan(q("1")).is_err());
        assert!(FusionLaw::jordan(q("0")).is_err());
    }

    #[test]
    fn catalog_laws_are_seress_symmetric_and_primitive() {
        for law in [
            FusionLaw::associative(Q),
            FusionLaw::jordan(q("1/4")).unwrap(),
            FusionLaw::monster(q("1/4"), q("1/32")).unwrap(),
        ] {
            assert!(law.is_seress(), "{law}");
            assert!(law.is_symmetric(), "{law}");
            assert!(law.follows_primitivity_convention(), "{law}");
        }
    }

    #[test]
    fn non_seress_custom_law() {
        // 0 ⋆ eta = {1}
        let law = FusionLaw::custom(
            vec![q("1"), q("0"), q("3")],
            vec![
                vec![vec![0], vec![], vec![2]],
                vec![vec![], vec![1], vec![0]],
                vec![vec![2], vec![0], vec![0, 1]],
            ],
        )
        .unwrap();
        assert!(!law.is_seress());
        assert!(law.is_symmetric());
    }

    #[test]
    fn custom_reorders_elements() {
        let law = FusionLaw::custom(
            vec![q("0"), q("1")],
            vec![vec![vec![0], vec![]], vec![vec![], vec![1]]],
        )
        .unwrap();
        assert_eq!(law.elements(), &[q("1"), q("0")]);
        assert_eq!(law.star(0, 0), &[0]);
        assert_eq!(law.star(1, 1), &[1]);
    }

    #[test]
    fn gradings_of_catalog_laws() {
        let m = FusionLaw::monster(q("1/4"), q("1/32")).unwrap();
        let gs = m.find_c2_gradings();
        assert_eq!(gs.len(), 2);
        assert!(!gs[0].is_adequate());
        assert_eq!(gs[1].minus_indices(), vec![3]);
        assert!(gs[1].is_adequate());

        let j = FusionLaw::jordan(q("1/4")).unwrap();
        let gs = j.find_c2_gradings();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].minus_indices(), vec![2]);

        let a = FusionLaw::associative(Q);
        let gs = a.find_c2_gradings();
        assert_eq!(gs.len(), 1);
        assert!(!gs[0].is_adequate());
    }

    #[test]
    fn associative_gradings_brute_force() {
        // All four sign maps on {1, 0}; only all-plus closes.
        let a = FusionLaw::associative(Q);
        let closing: Vec<(bool, bool)> = [(false, false), (false, true), (true, false), (true, true)]
            .into_iter()
            .filter(|&(s1, s0)| {
                // 1⋆1 = {1} needs s1 ^ s1 == s1, 0⋆0 = {0} needs s0 ^ s0 == s0.
                !s1 && !s0
            })
            .collect();
        assert_eq!(closing.len(), 1);
        assert_eq!(a.find_c2_gradings().len(), closing.len());
    }

    #[test]
    fn returned_gradings_pass_independent_recheck() {
        for law in [
            FusionLaw::associative(Q),
            FusionLaw::jordan(q("-1")).unwrap(),
            FusionLaw::monster(q("2"), q("1/2")).unwrap(),
        ] {
            for g in law.find_c2_gradings() {
                for i in 0..law.len() {
                    for j in 0..law.len() {
                        let sign = |k: usize| if g.is_minus(k) { -1 } else { 1 };
                        for &k in law.star(i, j) {
                            assert_eq!(sign(i) * sign(j), sign(k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_spec_syntax() {
        assert_eq!(
            FusionLaw::parse_spec(Q, "M:1/4,1/32").unwrap(),
            FusionLaw::monster(q("1/4"), q("1/32")).unwrap()
        );
        assert_eq!(FusionLaw::parse_spec(Q, "A").unwrap(), FusionLaw::associative(Q));
        assert!(FusionLaw::parse_spec(Q, "J:1").is_err());
        assert!(FusionLaw::parse_spec(Q, "X:3").is_err());
    }
}
