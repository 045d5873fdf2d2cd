use axial_core::axial::{check_axis, close_axes, Caps};
use axial_core::highwater::{hw_baric, hw_mul, hw_periodic_quotient, HwElement, HwSymbol};
use axial_core::structure::baric_map_check;
use axial_core::{Field, Scalar, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

fn random_element(rng: &mut ChaCha8Rng) -> HwElement {
    let mut x = HwElement::zero(Q);
    for _ in 0..rng.gen_range(1..6) {
        let c = Q.ratio(rng.gen_range(-9..10), rng.gen_range(1..5)).unwrap();
        let sym = if rng.gen_bool(0.5) {
            HwSymbol::A(rng.gen_range(-6..7))
        } else {
            HwSymbol::S(rng.gen_range(1..7))
        };
        x.add_term(sym, &c);
    }
    x
}

#[test]
fn commutative_bilinear_and_baric() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let (x, y, z) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        let c: Scalar = Q.ratio(rng.gen_range(-5..6), rng.gen_range(1..4)).unwrap();
        assert_eq!(hw_mul(&x, &y), hw_mul(&y, &x));
        assert_eq!(
            hw_mul(&x.scale(&c).add(&z), &y),
            hw_mul(&x, &y).scale(&c).add(&hw_mul(&z, &y))
        );
        assert_eq!(hw_baric(&hw_mul(&x, &y)), &hw_baric(&x) * &hw_baric(&y));
    }
}

#[test]
fn periodic_quotients() {
    for d in 2..=8u64 {
        let alg = hw_periodic_quotient(Q, d).unwrap();
        assert_eq!(alg.dim() as u64, d + d / 2);
        let law = alg.law().unwrap().clone();
        for axis in alg.axes() {
            let r = check_axis(&alg, &axis.v, &law).unwrap();
            assert!(r.is_axis(), "D = {d}: {r:?}");
        }
        let gens: Vec<(String, Vector)> =
            alg.axes().iter().map(|a| (a.name.clone(), a.v.clone())).collect();
        let axet = close_axes(&alg, &gens, &law, &law.standard_grading(), Caps::default()).unwrap();
        assert_eq!(axet.len() as u64, d);
        let weights: Vec<Scalar> = (0..alg.dim())
            .map(|i| if (i as u64) < d { Q.one() } else { Q.zero() })
            .collect();
        assert!(baric_map_check(&alg, &weights).unwrap().passes());
        assert!(alg.subalgebra_gen(&alg.axis_vectors()).unwrap().is_full());
    }
}
