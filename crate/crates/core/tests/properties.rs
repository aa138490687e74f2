mod common;

use common::*;
use gradmod::complexes::CochainComplex;
use gradmod::homalg::{self, Depth, SyzygyOrder};
use gradmod::resolution::Measured;
use gradmod::{
    graded_betti, hilbert_series, minimal_free_resolution, GradedRing, ModulePresentation, Monomial,
    Polynomial, PresentationFile, Vector,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn setup(p_idx: usize, r: usize, seed: u64) -> (GradedRing, ChaCha8Rng) {
    let p = [2, 3, 5][p_idx];
    (GradedRing::standard(p, r).unwrap(), ChaCha8Rng::seed_from_u64(seed))
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn ring_axioms(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let a = random_poly(&ring, &mut rng, 2, 3);
        let b = random_poly(&ring, &mut rng, 4, 3);
        let c = random_poly(&ring, &mut rng, 4, 3);
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(b.try_add(&c).unwrap().try_sub(&c).unwrap(), b.clone());
        let prod = a.try_mul(&b).unwrap();
        prop_assert!(prod.is_zero() || prod.homogeneous_degree() == Some(6));
        let reparsed = Polynomial::parse(&ring, &prod.to_string()).unwrap();
        prop_assert_eq!(reparsed, prod);
    }

    #[test]
    fn monomial_order_is_a_term_order(e in proptest::collection::vec(0u16..4, 9)) {
        let w = [2, 2, 2];
        let a = Monomial::from_exponents(&e[0..3], &w);
        let b = Monomial::from_exponents(&e[3..6], &w);
        let c = Monomial::from_exponents(&e[6..9], &w);
        if a < b {
            prop_assert!(a.mul(&c) < b.mul(&c));
        }
        if a.degree() < b.degree() {
            prop_assert!(a < b);
        }
        prop_assert!(a == b || (a < b) != (b < a));
        prop_assert!(c.is_one() || Monomial::one(3) < c);
    }

    #[test]
    fn normal_forms(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_module(&ring, &mut rng, 3, 3);
        let gb = m.relations_gb();
        for rel in m.relations() {
            prop_assert!(gb.reduce_raw(rel).is_zero());
        }
        let d = m.cover_shifts().iter().max().unwrap() + 4;
        let coords: Vec<Polynomial> = m.cover_shifts().iter().map(|s| random_poly(&ring, &mut rng, d - s, 3)).collect();
        let v = Vector::from_coordinates(&coords);
        let nf = gb.reduce_raw(&v);
        prop_assert_eq!(gb.reduce_raw(&nf), nf.clone());
        prop_assert!(gb.reduce_raw(&v.sub(ring.field(), &nf)).is_zero());
    }

    #[test]
    fn kernels_match_linear_algebra(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let src: Vec<i32> = (0..rand::Rng::gen_range(&mut rng, 1..=3)).map(|_| 2 * rand::Rng::gen_range(&mut rng, 0..=1)).collect();
        let tgt: Vec<i32> = (0..rand::Rng::gen_range(&mut rng, 1..=2)).map(|_| 2 * rand::Rng::gen_range(&mut rng, -1..=0)).collect();
        let columns: Vec<Vector> = src
            .iter()
            .map(|s| Vector::from_coordinates(&tgt.iter().map(|t| random_poly(&ring, &mut rng, s - t, 2)).collect::<Vec<_>>()))
            .collect();
        let source = gradmod::FreeModuleSpec::new(&ring, src.clone());
        let target = gradmod::FreeModuleSpec::new(&ring, tgt.clone());
        let elems: Vec<gradmod::FreeElement> = columns
            .iter()
            .map(|c| gradmod::FreeElement::from_coordinates(&target, c.coordinates(&ring, tgt.len())).unwrap())
            .collect();
        let ker = gradmod::kernel(&source, &target, &elems).unwrap();
        let gens: Vec<Vector> = ker.generators().into_iter().map(|g| g.into_vector()).collect();
        for g in &gens {
            prop_assert!(g.apply(ring.field(), &columns).is_zero());
        }
        for d in -2..=8 {
            prop_assert_eq!(span_dim(&ring, &src, &gens, d), kernel_dim(&ring, &src, &tgt, &columns, d), "degree {}", d);
        }
    }

    #[test]
    fn hilbert_series_matches_linear_algebra(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_module(&ring, &mut rng, 3, 3);
        let hs = hilbert_series(&m);
        let values = hs.expand(0, 8);
        for (k, v) in values.iter().enumerate() {
            prop_assert_eq!(*v, module_dim(&m, k as i32) as i64, "degree {}", k);
        }
        prop_assert_eq!(hs.reduced(), hs.clone());
        prop_assert_eq!(hs.reduced().expand(0, 8), values);
        prop_assert_eq!(hilbert_series(&m.minimal_presentation()), hs);
    }

    #[test]
    fn resolutions_are_minimal_exact_and_short(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_module(&ring, &mut rng, 3, 3);
        let res = minimal_free_resolution(&m);
        prop_assert!(res.composites_vanish());
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_exact());
        prop_assert!(res.is_empty() || res.length() <= r);
        prop_assert_eq!(res.hilbert_series(), hilbert_series(&m));
        prop_assert_eq!(graded_betti(&m.minimal_presentation()), res.betti());
        prop_assert_eq!(res.module_shifts(0).len().max(0), if res.is_empty() { 0 } else { m.number_of_minimal_generators() });
    }

    #[test]
    fn homological_bounds(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_nonzero_module(&ring, &mut rng, 2, 3);
        let s = homalg::summarize(&m);
        let Measured::Value(pd) = s.projective_dimension else { panic!("nonzero module") };
        let Depth::Finite(depth) = s.depth else { panic!("nonzero module") };
        let Measured::Value(dim) = s.krull_dimension else { panic!("nonzero module") };
        prop_assert_eq!(pd + depth, r);
        prop_assert!(depth <= dim && dim <= r);
        if let SyzygyOrder::Finite(j) = s.syzygy_order {
            prop_assert!(j < r);
        } else {
            prop_assert_eq!(pd, 0);
        }
        prop_assert_eq!(s.cm_index().is_some(), depth == dim);
    }

    #[test]
    fn direct_sums(p in 0usize..3, r in 1usize..3, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let a = random_nonzero_module(&ring, &mut rng, 2, 2);
        let b = random_nonzero_module(&ring, &mut rng, 2, 2);
        let s = a.direct_sum(&b).unwrap();
        prop_assert_eq!(homalg::depth(&s), homalg::depth(&a).min(homalg::depth(&b)));
        prop_assert_eq!(homalg::syzygy_order(&s), homalg::syzygy_order(&a).min(homalg::syzygy_order(&b)));
        prop_assert_eq!(hilbert_series(&s), hilbert_series(&a).add(&hilbert_series(&b)));
    }

    #[test]
    fn files_round_trip(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let mut file = PresentationFile::new(&ring);
        file.add_module("A", random_module(&ring, &mut rng, 3, 3)).unwrap();
        file.add_module("B", random_module(&ring, &mut rng, 2, 2)).unwrap();
        let text = file.print();
        let parsed = PresentationFile::parse(&text).unwrap();
        prop_assert_eq!(parsed.print(), text);
        prop_assert_eq!(parsed.module("A").unwrap().relations(), file.module("A").unwrap().relations());
    }

    #[test]
    fn euler_characteristic(p in 0usize..3, r in 1usize..3, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let target = random_module(&ring, &mut rng, 2, 2);
        let shifts: Vec<i32> = (0..2).map(|_| 4).collect();
        let cols: Vec<Vector> = shifts
            .iter()
            .map(|s| Vector::from_coordinates(&target.cover_shifts().iter().map(|t| random_poly(&ring, &mut rng, s - t, 2)).collect::<Vec<_>>()))
            .collect();
        let c = CochainComplex::new(&ring, vec![ModulePresentation::free(&ring, shifts), target], vec![cols], None).unwrap();
        prop_assert!(c.validate().is_empty());
        let (terms, coh) = c.euler_characteristics().unwrap();
        prop_assert_eq!(terms, coh);
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn syzygy_order_matches_double_dual(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_module(&ring, &mut rng, 2, 3);
        let order = homalg::syzygy_order(&m);
        let dd = homalg::double_dual(&m);
        prop_assert_eq!(order.at_least(1), dd.injective);
        prop_assert_eq!(order.at_least(2), dd.bijective);
    }

    #[test]
    fn lambda_and_tensor(p in 0usize..3, seed: u64) {
        let (ring, mut rng) = setup(p, 2, seed);
        let m = random_module(&ring, &mut rng, 2, 2);
        let l = homalg::lambda_induce(&m);
        prop_assert_eq!(homalg::syzygy_order(&l), homalg::syzygy_order(&m));
        prop_assert_eq!(homalg::ext_support(&l), homalg::ext_support(&m));
        let ring1 = GradedRing::standard(ring.characteristic(), 1).unwrap();
        let n = random_module(&ring1, &mut rng, 2, 1);
        let t = homalg::tensor_external(&m, &n).unwrap();
        prop_assert_eq!(homalg::syzygy_order(&t), homalg::syzygy_order(&m).min(homalg::syzygy_order(&n)));
        prop_assert_eq!(graded_betti(&t), graded_betti(&m).convolve(&graded_betti(&n)));
    }

    #[test]
    fn cm_duality_round_trip(p in 0usize..3, r in 1usize..4, seed: u64) {
        let (ring, mut rng) = setup(p, r, seed);
        let m = random_nonzero_module(&ring, &mut rng, 2, 3);
        if let [i] = homalg::ext_support(&m)[..] {
            let n = homalg::cm_dual(&m, i).unwrap();
            prop_assert!(homalg::is_cm_of_projdim(&n, i));
            let back = homalg::cm_dual(&n, i).unwrap();
            prop_assert_eq!(hilbert_series(&back), hilbert_series(&m));
            prop_assert_eq!(graded_betti(&back), graded_betti(&m));
        }
    }
}
