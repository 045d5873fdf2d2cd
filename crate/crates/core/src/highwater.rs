//! The Highwater algebra `H` on `a_i (i ∈ Z)` and `s_j (j ≥ 1)`, its
//! reflections and baric map, ideal-type tuples and periodic quotients.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar, Subspace, Vector};
use crate::fusion::FusionLaw;

/// A basis symbol of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HwSymbol {
    A(i64),
    S(u64),
}

/// A finitely supported element of `H`. Zero coefficients and `s_0` are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwElement {
    field: Field,
    terms: BTreeMap<HwSymbol, Scalar>,
}

impl HwElement {
    pub fn zero(field: Field) -> HwElement {
        HwElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn a(field: Field, i: i64) -> HwElement {
        HwElement::zero(field).with(HwSymbol::A(i), field.one())
    }

    /// `s_j`; `s_0 = 0`.
    pub fn s(field: Field, j: u64) -> HwElement {
        HwElement::zero(field).with(HwSymbol::S(j), field.one())
    }

    /// Adds `c · sym`.
    pub fn with(mut self, sym: HwSymbol, c: Scalar) -> HwElement {
        self.add_term(sym, &c);
        self
    }

    pub fn from_terms<I: IntoIterator<Item = (HwSymbol, Scalar)>>(field: Field, terms: I) -> HwElement {
        let mut x = HwElement::zero(field);
        for (sym, c) in terms {
            x.add_term(sym, &c);
        }
        x
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, sym: HwSymbol, c: &Scalar) {
        if sym == HwSymbol::S(0) || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_insert_with(|| self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn coefficient(&self, sym: HwSymbol) -> Scalar {
        self.terms.get(&sym).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (HwSymbol, &Scalar)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &HwElement) -> HwElement {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> HwElement {
        HwElement::from_terms(self.field, self.terms().map(|(s, x)| (s, x * c)))
    }

    pub fn sub(&self, other: &HwElement) -> HwElement {
        self.add(&other.scale(&-self.field.one()))
    }
}

impl fmt::Display for HwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match s {
                HwSymbol::A(i) => write!(f, "({c})a{i}")?,
                HwSymbol::S(j) => write!(f, "({c})s{j}")?,
            }
        }
        Ok(())
    }
}

fn basis_product(field: Field, x: HwSymbol, y: HwSymbol) -> Vec<(HwSymbol, Scalar)> {
    use HwSymbol::{A, S};
    let r = |n, d| field.ratio(n, d).expect("nonzero denominator");
    match (x, y) {
        (A(i), A(j)) => vec![(A(i), r(1, 2)), (A(j), r(1, 2)), (S(i.abs_diff(j)), r(1, 1))],
        (A(i), S(j)) | (S(j), A(i)) => {
            let j = j as i64;
            vec![
                (A(i), r(-3, 4)),
                (A(i - j), r(3, 8)),
                (A(i + j), r(3, 8)),
                (S(j as u64), r(3, 2)),
            ]
        }
        (S(j), S(k)) => vec![
            (S(j), r(3, 4)),
            (S(k), r(3, 4)),
            (S(j.abs_diff(k)), r(-3, 8)),
            (S(j + k), r(-3, 8)),
        ],
    }
}

/// The product of `H`, extended bilinearly.
pub fn hw_mul(x: &HwElement, y: &HwElement) -> HwElement {
    let field = x.field;
    let mut out = HwElement::zero(field);
    for (sx, cx) in x.terms() {
        for (sy, cy) in y.terms() {
            let c = cx * cy;
            for (s, k) in basis_product(field, sx, sy) {
                out.add_term(s, &(&c * &k));
            }
        }
    }
    out
}

/// The reflection `a_j ↦ a_{2c − j}` about `c = twice_center / 2`, fixing
/// every `s_j`.
pub fn hw_reflect(x: &HwElement, twice_center: i64) -> HwElement {
    HwElement::from_terms(
        x.field,
        x.terms().map(|(s, c)| match s {
            HwSymbol::A(j) => (HwSymbol::A(twice_center - j), c.clone()),
            s => (s, c.clone()),
        }),
    )
}

/// The baric map: `1` on every `a_i`, `0` on every `s_j`.
pub fn hw_baric(x: &HwElement) -> Scalar {
    let mut total = x.field.zero();
    for (s, c) in x.terms() {
        if let HwSymbol::A(_) = s {
            total += c;
        }
    }
    total
}

/// The conditions of an ideal-type tuple `(α_0, ..., α_D)` under both
/// readings of the symmetry condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTypeReport {
    /// `α_0 ≠ 0 ≠ α_D` and `Σ α_i = 0`.
    pub ends_and_sum: bool,
    /// The `ε ∈ {1, -1}` with `α_i = ε α_{D−i}` for all `i`, preferring `1`.
    pub epsilon: Option<i8>,
    /// `α_i = α_{D−i}` for all `i`.
    pub literal_symmetry: bool,
}

impl IdealTypeReport {
    pub fn is_ideal_type(&self) -> bool {
        self.ends_and_sum && self.epsilon.is_some()
    }

    /// True when the verdict depends on the reading of the symmetry condition.
    pub fn readings_disagree(&self) -> bool {
        self.is_ideal_type() != (self.ends_and_sum && self.literal_symmetry)
    }
}

pub fn ideal_type_report(t: &[Scalar]) -> IdealTypeReport {
    let Some((first, last)) = t.first().zip(t.last()) else {
        return IdealTypeReport {
            ends_and_sum: false,
            epsilon: None,
            literal_symmetry: false,
        };
    };
    let field = first.field();
    let mut sum = field.zero();
    for x in t {
        sum += x;
    }
    let ends_and_sum = !first.is_zero() && !last.is_zero() && sum.is_zero();
    let mirrored = |sign: i64| {
        let e = field.from_i64(sign);
        t.iter().zip(t.iter().rev()).all(|(x, y)| *x == &e * y)
    };
    let literal_symmetry = mirrored(1);
    let epsilon = if literal_symmetry {
        Some(1)
    } else if mirrored(-1) {
        Some(-1)
    } else {
        None
    };
    IdealTypeReport {
        ends_and_sum,
        epsilon,
        literal_symmetry,
    }
}

/// `α_0 ≠ 0 ≠ α_D`, `Σ α_i = 0` and `α_i = ε α_{D−i}` for some `ε = ±1`.
pub fn is_ideal_type(t: &[Scalar]) -> bool {
    ideal_type_report(t).is_ideal_type()
}

/// `Σ α_i a_i`.
pub fn ideal_generator(t: &[Scalar]) -> Result<HwElement> {
    let field = t
        .first()
        .map(Scalar::field)
        .ok_or_else(|| Error::Dimension("empty tuple".into()))?;
    Ok(HwElement::from_terms(
        field,
        t.iter().enumerate().map(|(i, c)| (HwSymbol::A(i as i64), c.clone())),
    ))
}

fn quotient_index(d: u64, sym: HwSymbol) -> Option<usize> {
    match sym {
        HwSymbol::A(i) => Some(i.rem_euclid(d as i64) as usize),
        HwSymbol::S(j) => {
            let r = j % d;
            let k = r.min(d - r);
            (k > 0).then(|| (d + k - 1) as usize)
        }
    }
}

/// The image of an element of `H` in the periodic quotient `H / (a_0 − a_D)`.
pub fn periodic_image(d: u64, x: &HwElement) -> Vector {
    let n = (d + d / 2) as usize;
    let mut v = Vector::zeros(x.field, n);
    for (s, c) in x.terms() {
        if let Some(k) = quotient_index(d, s) {
            v.as_mut_slice()[k] += c;
        }
    }
    v
}

/// `H / (a_0 − a_D)` on `ā_0, ..., ā_{D−1}, s̄_1, ..., s̄_{⌊D/2⌋}`, with
/// designated axes `ā_0`, `ā_1` and law `M(2, ½)`. Each structure constant
/// is recomputed from several preimages and all must agree.
pub fn hw_periodic_quotient(field: Field, d: u64) -> Result<Algebra> {
    if d < 2 {
        return Err(Error::DegenerateParameters(format!("period {d} is below 2")));
    }
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("H needs characteristic other than 2".into()));
    }
    let di = d as i64;
    let mut names: Vec<String> = (0..d).map(|i| format!("a{i}")).collect();
    names.extend((1..=d / 2).map(|j| format!("s{j}")));
    let mut preimages: Vec<Vec<HwSymbol>> = (0..di)
        .map(|i| vec![HwSymbol::A(i), HwSymbol::A(i + di), HwSymbol::A(i - di)])
        .collect();
    preimages.extend((1..=d / 2).map(|j| vec![HwSymbol::S(j), HwSymbol::S(d - j), HwSymbol::S(j + d)]));
    let mut alg = Algebra::new(field, names);
    for p in 0..preimages.len() {
        for q in p..preimages.len() {
            let mut value: Option<Vector> = None;
            for &x in &preimages[p] {
                for &y in &preimages[q] {
                    let prod = HwElement::from_terms(field, basis_product(field, x, y));
                    let v = periodic_image(d, &prod);
                    match &value {
                        None => value = Some(v),
                        Some(w) if *w == v => {}
                        Some(_) => {
                            return Err(Error::ConsistencyFailure(format!(
                                "product {} · {} depends on the representative",
                                alg.basis_names()[p],
                                alg.basis_names()[q]
                            )))
                        }
                    }
                }
            }
            alg.set_product(p, q, value.expect("at least one representative"))?;
        }
    }
    for i in 0..2 {
        let v = alg.basis_vector(i);
        alg.add_axis(format!("a{i}"), v)?;
    }
    alg.set_law(Some(FusionLaw::monster(field.from_i64(2), field.ratio(1, 2)?)?));
    Ok(alg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    Unknown,
}

/// Lower-bound membership test for the ideal `(Σ α_i a_i)`. The ideal is
/// grown inside the span of `a_i (|i| ≤ window)` and `s_j (j ≤ 2 window)` by
/// multiplying with every `a_k` and `s_j` in that range and by the
/// reflection about `D/2`, which maps the generator to `ε` times itself.
/// Products leaving the window are discarded.
pub fn hw_ideal_window_contains(
    t: &[Scalar],
    v: &HwElement,
    window: u64,
    rounds: usize,
) -> Result<Membership> {
    let report = ideal_type_report(t);
    if !report.is_ideal_type() {
        return Err(Error::Parse("tuple is not of ideal type".into()));
    }
    if v.is_zero() {
        return Ok(Membership::Yes);
    }
    let field = v.field();
    let w = window as i64;
    let ambient = (4 * window + 1) as usize;
    let coord = |s: HwSymbol| -> Option<usize> {
        match s {
            HwSymbol::A(i) if i.abs() <= w => Some((i + w) as usize),
            HwSymbol::S(j) if (1..=2 * window).contains(&j) => Some((2 * window + j) as usize),
            _ => None,
        }
    };
    let to_vector = |x: &HwElement| -> Option<Vector> {
        let mut out = Vector::zeros(field, ambient);
        for (s, c) in x.terms() {
            out.as_mut_slice()[coord(s)?] += c;
        }
        Some(out)
    };
    let from_vector = |x: &Vector| -> HwElement {
        HwElement::from_terms(
            field,
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let k = k as i64;
                let sym = if k <= 2 * w {
                    HwSymbol::A(k - w)
                } else {
                    HwSymbol::S((k - 2 * w) as u64)
                };
                (sym, c.clone())
            }),
        )
    };
    let Some(target) = to_vector(v) else {
        return Ok(Membership::Unknown);
    };
    let twice_center = (t.len() - 1) as i64;
    let mut multipliers: Vec<HwElement> = (-w..=w).map(|i| HwElement::a(field, i)).collect();
    multipliers.extend((1..=2 * window).map(|j| HwElement::s(field, j)));
    let mut span = Subspace::zero(field, ambient);
    let mut frontier = Vec::new();
    if let Some(g) = to_vector(&ideal_generator(t)?) {
        if span.insert(g.clone()) {
            frontier.push(g);
        }
    }
    for _ in 0..rounds {
        if span.contains(&target)? || frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for x in frontier.iter().map(from_vector) {
            let images = multipliers
                .iter()
                .map(|m| hw_mul(m, &x))
                .chain(std::iter::once(hw_reflect(&x, twice_center)));
            for y in images {
                if let Some(y) = to_vector(&y) {
                    if span.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(if span.contains(&target)? {
        Membership::Yes
    } else {
        Membership::Unknown
    })
}
