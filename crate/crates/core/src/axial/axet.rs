use std::collections::HashMap;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Vector;
use crate::fusion::{FusionLaw, Grading};
use crate::perm::{group_closure, orbits, Permutation};

use super::check::check_axis;
use super::miyamoto::{miyamoto, MiyamotoMap};

/// Limits on axis-closure and group-closure sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub axes: usize,
    pub group: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            axes: 10_000,
            group: 1_000_000,
        }
    }
}

impl Caps {
    /// Defaults, overridden by `AXIAL_CAP=<axes>[,<group>]` when set.
    pub fn from_env() -> Caps {
        let mut caps = Caps::default();
        if let Ok(text) = std::env::var("AXIAL_CAP") {
            let mut parts = text.split(',').map(|s| s.trim().parse::<usize>());
            if let Some(Ok(a)) = parts.next() {
                caps.axes = a;
            }
            if let Some(Ok(g)) = parts.next() {
                caps.group = g;
            }
        }
        caps
    }
}

/// A closed set of axes with the permutation action of each Miyamoto map.
#[derive(Clone, Debug)]
pub struct Axet {
    pub axes: Vec<Vector>,
    pub names: Vec<String>,
    /// `taus[x]` is `τ_x` restricted to the axis set.
    pub taus: Vec<Permutation>,
    /// Indices of the axes the closure started from.
    pub generators: Vec<usize>,
    /// Orbits of the Miyamoto group, ordered by least element.
    pub orbits: Vec<Vec<usize>>,
    pub maps: Vec<MiyamotoMap>,
}

impl Axet {
    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.axes.iter().position(|a| a == v)
    }

    /// `τ_{x^g} = g⁻¹ τ_x g` for every axis `x` and every `τ` generator `g`.
    pub fn is_tau_equivariant(&self) -> bool {
        (0..self.len()).all(|x| {
            self.taus.iter().all(|g| {
                let xg = g.apply(x);
                self.taus[xg] == self.taus[x].conjugate_by(g)
            })
        })
    }
}

/// Closes `axes` under the Miyamoto maps of every axis found, re-verifying
/// each new image as an axis.
pub fn close_axes(
    alg: &Algebra,
    axes: &[(String, Vector)],
    law: &FusionLaw,
    grading: &Grading,
    caps: Caps,
) -> Result<Axet> {
    let mut list: Vec<Vector> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<Vector, usize> = HashMap::new();
    let mut generators = Vec::new();
    for (name, v) in axes {
        let i = *index.entry(v.clone()).or_insert_with(|| {
            list.push(v.clone());
            names.push(name.clone());
            list.len() - 1
        });
        if !generators.contains(&i) {
            generators.push(i);
        }
    }
    if list.len() > caps.axes {
        return Err(Error::ClosureCapExceeded(caps.axes));
    }
    let mut maps: Vec<MiyamotoMap> = Vec::new();
    let mut done = 0;
    while done < list.len() {
        while maps.len() < list.len() {
            maps.push(miyamoto(alg, &list[maps.len()], law, grading)?);
        }
        let len = list.len();
        for x in 0..len {
            let start = if x < done { done } else { 0 };
            for y in start..len {
                let image = maps[x].apply(&list[y]);
                if index.contains_key(&image) {
                    continue;
                }
                if !check_axis(alg, &image, law)?.is_axis() {
                    return Err(Error::ConsistencyFailure(format!(
                        "image of {} under tau of {} is not an axis",
                        names[y], names[x]
                    )));
                }
                if list.len() >= caps.axes {
                    return Err(Error::ClosureCapExceeded(caps.axes));
                }
                index.insert(image.clone(), list.len());
                names.push(format!("{}^{}", names[y], names[x]));
                list.push(image);
            }
        }
        done = len;
    }
    let taus: Vec<Permutation> = maps
        .iter()
        .map(|m| {
            let images = list.iter().map(|v| index[&m.apply(v)]).collect();
            Permutation::from_images(images).expect("tau permutes a closed set")
        })
        .collect();
    let orbits = orbits(list.len(), &taus);
    Ok(Axet {
        axes: list,
        names,
        taus,
        generators,
        orbits,
        maps,
    })
}

#[derive(Clone, Debug)]
pub struct MiyamotoGroup {
    pub order: usize,
    pub generators: Vec<Permutation>,
    pub elements: Vec<Permutation>,
}

/// The group generated by `τ_x` for the generating axes `x`, as permutations
/// of the closed axis set.
pub fn miyamoto_group(axet: &Axet, caps: Caps) -> Result<MiyamotoGroup> {
    let mut generators: Vec<Permutation> = Vec::new();
    for &x in &axet.generators {
        let t = &axet.taus[x];
        if !t.is_identity() && !generators.contains(t) {
            generators.push(t.clone());
        }
    }
    let elements = group_closure(axet.len(), &generators, caps.group)?;
    Ok(MiyamotoGroup {
        order: elements.len(),
        generators,
        elements,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxetShape {
    /// `X(n)`: orbits of equal size summing to `n`.
    Xn(usize),
    /// `X'(3k)`: orbits of sizes `k` and `2k`.
    Xprime3k(usize),
}

impl AxetShape {
    pub fn is_skew(self) -> bool {
        matches!(self, AxetShape::Xprime3k(_))
    }
}

impl fmt::Display for AxetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxetShape::Xn(n) => write!(f, "X({n})"),
            AxetShape::Xprime3k(k) => write!(f, "X'({}+{})", k, 2 * k),
        }
    }
}

/// Classifies the axet generated by axes `i` and `j` from the orbit sizes
/// of `⟨τ_i, τ_j⟩` on the axis set.
pub fn classify_2gen_axet(axet: &Axet, gens: (usize, usize)) -> Result<(AxetShape, Vec<Vec<usize>>)> {
    let (i, j) = gens;
    if i >= axet.len() || j >= axet.len() {
        return Err(Error::Dimension(format!(
            "generator index out of range for {} axes",
            axet.len()
        )));
    }
    let orbs = orbits(axet.len(), &[axet.taus[i].clone(), axet.taus[j].clone()]);
    let shape = match orbs.as_slice() {
        [o] => AxetShape::Xn(o.len()),
        [o, p] if o.len() == p.len() => AxetShape::Xn(2 * o.len()),
        [o, p] if 2 * o.len() == p.len() => AxetShape::Xprime3k(o.len()),
        [o, p] if o.len() == 2 * p.len() => AxetShape::Xprime3k(p.len()),
        [o, p] => {
            return Err(Error::NotTwoGenerated(format!(
                "orbit sizes {} and {} fit neither X(n) nor X'(3k)",
                o.len(),
                p.len()
            )))
        }
        _ => {
            return Err(Error::NotTwoGenerated(format!(
                "{} orbits under the two Miyamoto maps",
                orbs.len()
            )))
        }
    };
    Ok((shape, orbs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Field, Scalar};

    const Q: Field = Field::Rational;

    fn q(s: &str) -> Scalar {
        Q.parse(s).unwrap()
    }

    fn matsuo_s3(eta: &str) -> Algebra {
        let h = q(eta) / q("2");
        let mut alg = Algebra::zero(Q, 3, "t");
        for i in 0..3 {
            alg.set_product(i, i, alg.basis_vector(i)).unwrap();
            for j in i + 1..3 {
                let k = 3 - i - j;
                let v = alg.vector([(i, h.clone()), (j, h.clone()), (k, -h.clone())]);
                alg.set_product(i, j, v).unwrap();
            }
        }
        alg
    }

    fn gens(alg: &Algebra, idx: &[usize]) -> Vec<(String, Vector)> {
        idx.iter()
            .map(|&i| (alg.basis_names()[i].clone(), alg.basis_vector(i)))
            .collect()
    }

    #[test]
    fn matsuo_s3_closure_and_group() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::jordan(q("1/4")).unwrap();
        let g = law.standard_grading();
        let axet = close_axes(&alg, &gens(&alg, &[0, 1]), &law, &g, Caps::default()).unwrap();
        assert_eq!(axet.len(), 3);
        assert!(axet.is_tau_equivariant());
        let grp = miyamoto_group(&axet, Caps::default()).unwrap();
        assert_eq!(grp.order, 6);
        let (shape, _) = classify_2gen_axet(&axet, (0, 1)).unwrap();
        assert_eq!(shape, AxetShape::Xn(3));
    }

    #[test]
    fn caps_are_enforced() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::jordan(q("1/4")).unwrap();
        let g = law.standard_grading();
        let caps = Caps { axes: 2, group: 10 };
        assert!(matches!(
            close_axes(&alg, &gens(&alg, &[0, 1]), &law, &g, caps),
            Err(Error::ClosureCapExceeded(2))
        ));
        let axet = close_axes(&alg, &gens(&alg, &[0, 1]), &law, &g, Caps::default()).unwrap();
        assert!(matches!(
            miyamoto_group(&axet, Caps { axes: 10, group: 5 }),
            Err(Error::GroupCapExceeded(5))
        ));
    }

    #[test]
    fn closure_is_idempotent() {
        let alg = matsuo_s3("1/4");
        let law = FusionLaw::jordan(q("1/4")).unwrap();
        let g = law.standard_grading();
        let once = close_axes(&alg, &gens(&alg, &[0, 1]), &law, &g, Caps::default()).unwrap();
        let named: Vec<(String, Vector)> =
            once.names.iter().cloned().zip(once.axes.iter().cloned()).collect();
        let twice = close_axes(&alg, &named, &law, &g, Caps::default()).unwrap();
        assert_eq!(twice.axes, once.axes);
        let g1 = miyamoto_group(&once, Caps::default()).unwrap();
        let g2 = miyamoto_group(&twice, Caps::default()).unwrap();
        assert_eq!(g1.order, g2.order);
    }
}
