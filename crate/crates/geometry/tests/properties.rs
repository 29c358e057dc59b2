use num_rational::BigRational;
use proptest::prelude::*;
use valharm_geometry::*;

const PREC: u32 = 160;

fn poly(seed: u64, k: usize) -> Polytope {
    random_polytope(seed, k, &rat(1, 1)).unwrap()
}

fn shift(a: i64, b: i64, c: i64) -> RationalVector {
    RationalVector::from_bigints(&[a.into(), b.into(), c.into()], &8.into())
}

fn box3(x0: i64, x1: i64) -> Polytope {
    let mut pts = Vec::new();
    for y in 0..2 {
        for z in 0..2 {
            for x in [x0, x1] {
                pts.push(RationalVector::from_ints(&[x, y, z]));
            }
        }
    }
    Polytope::new(pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn mixed_volume_is_symmetric(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (k, l, m) = (poly(a, 5), poly(b, 5), poly(c, 5));
        let v = mixed_volume_of(&[&k, &l, &m]).unwrap();
        prop_assert_eq!(&v, &mixed_volume_of(&[&l, &m, &k]).unwrap());
        prop_assert_eq!(&v, &mixed_volume_of(&[&m, &k, &l]).unwrap());
        prop_assert_eq!(&v, &mixed_volume_of(&[&l, &k, &m]).unwrap());
    }

    #[test]
    fn mixed_volume_is_additive(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (k, k2, l) = (poly(a, 5), poly(b, 5), poly(c, 5));
        let sum = k.minkowski_sum(&k2).unwrap();
        let lhs = mixed_volume_of(&[&sum, &l, &l]).unwrap();
        let rhs = mixed_volume_of(&[&k, &l, &l]).unwrap() + mixed_volume_of(&[&k2, &l, &l]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn three_routes_agree(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (k, l, m) = (poly(a, 6), poly(b, 5), poly(c, 5));
        let polar = mixed_volume_of(&[&k, &k, &l]).unwrap();
        prop_assert_eq!(&polar, &mixed_volume_facets(&k, Body::Polytope(&l)).unwrap());
        let mixed = mixed_volume_of(&[&k, &l, &m]).unwrap();
        prop_assert_eq!(mixed, mixed_volume_area_route(&k, &l, Body::Polytope(&m)).unwrap());
    }

    #[test]
    fn valuation_property_on_overlapping_boxes(a in 1i64..4, b in 0i64..3, c in any::<u64>()) {
        // K = [0, a+1] x [0,1]^2 and L = [b, a+b+2] x [0,1]^2 overlap in [b, a+1].
        let (k0, k1, l0, l1) = (0, a + 1, b.min(a), a + b + 2);
        let k = box3(k0, k1);
        let l = box3(l0, l1);
        let union = box3(k0, l1);
        let inter = box3(l0, k1);
        let m = poly(c, 6);
        let phi = |x: &Polytope| mixed_volume_facets(x, Body::Polytope(&m)).unwrap();
        prop_assert_eq!(phi(&union) + phi(&inter), phi(&k) + phi(&l));
    }

    #[test]
    fn translation_invariance(a in any::<u64>(), b in any::<u64>(), x in -8i64..8, y in -8i64..8, z in -8i64..8) {
        let (k, l) = (poly(a, 7), poly(b, 6));
        let t = shift(x, y, z);
        let kt = k.translate(&t);
        prop_assert_eq!(k.volume(), kt.volume());
        prop_assert_eq!(mixed_volume_of(&[&k, &l, &l]).unwrap(), mixed_volume_of(&[&kt, &l, &l]).unwrap());
        prop_assert_eq!(projection_body(&k).unwrap(), projection_body(&kt).unwrap());
        prop_assert_eq!(
            quermassintegral(&k, 1, PREC).unwrap().to_real(PREC).lo(),
            quermassintegral(&kt, 1, PREC).unwrap().to_real(PREC).lo()
        );
        let s = steiner_point(&k, PREC).unwrap();
        let st = steiner_point(&kt, PREC).unwrap();
        for i in 0..3 {
            prop_assert!(s[i].add_rational(&t.coords()[i]).intersects(&st[i]));
        }
    }

    #[test]
    fn homogeneity(a in any::<u64>(), p in 1i64..5, q in 1i64..5) {
        let k = poly(a, 7);
        let t = rat(p, q);
        let kt = k.scale(&t);
        let t2 = &t * &t;
        prop_assert_eq!(kt.volume(), k.volume() * &t2 * &t);
        prop_assert_eq!(projection_body(&kt).unwrap().support(&shift(1, 2, 3)), projection_body(&k).unwrap().support(&shift(1, 2, 3)) * &t2);
        prop_assert_eq!(pi1(&kt, 2, PREC).unwrap().base, pi1(&k, 2, PREC).unwrap().base.scale(&t));
    }

    #[test]
    fn unimodular_shear_invariance(a in any::<u64>(), b in any::<u64>(), s in -3i64..4) {
        let rows = [
            RationalVector::from_ints(&[1, s, 0]),
            RationalVector::from_ints(&[0, 1, 0]),
            RationalVector::from_ints(&[0, -s, 1]),
        ];
        let (k, l) = (poly(a, 6), poly(b, 6));
        let (ks, ls) = (k.linear_image(&rows), l.linear_image(&rows));
        prop_assert_eq!(k.volume(), ks.volume());
        prop_assert_eq!(mixed_volume_of(&[&k, &k, &l]).unwrap(), mixed_volume_of(&[&ks, &ks, &ls]).unwrap());
        prop_assert_eq!(projection_body(&k).unwrap().volume(), projection_body(&ks).unwrap().volume());
    }

    #[test]
    fn projection_body_duality(a in any::<u64>(), b in any::<u64>()) {
        let (k, l) = (poly(a, 8), poly(b, 8));
        let (pk, pl) = (projection_body(&k).unwrap(), projection_body(&l).unwrap());
        prop_assert_eq!(
            mixed_volume_facets(&k, Body::Zonotope(&pl)).unwrap(),
            mixed_volume_facets(&l, Body::Zonotope(&pk)).unwrap()
        );
    }

    #[test]
    fn ball_enclosures_are_nested(a in any::<u64>()) {
        let k = poly(a, 7);
        let mut prev: Option<(BigRational, BigRational)> = None;
        for level in 1..=3 {
            let ball = BallApprox::shared(level).unwrap();
            let (lo, hi) = mixed_volume_with_ball(&k, &k, &ball).unwrap();
            prop_assert!(lo <= hi);
            let exact = mixed_volume_with_exact_ball(&k, &k, PREC).unwrap();
            prop_assert!(Real::between(&lo, &hi, PREC).intersects(&exact));
            if let Some((plo, phi)) = &prev {
                prop_assert!(plo <= &lo);
                prop_assert!(&hi - &lo < phi - plo);
            }
            prev = Some((lo, hi));
        }
    }
}
