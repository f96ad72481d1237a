use proptest::prelude::*;

use toric_codes::cyclic::{bch_build, CyclicCode, RootsOfUnity};
use toric_codes::delpezzo::{build_family, FamilyId};
use toric_codes::elliptic::{Point, WeierstrassCurve};
use toric_codes::finite_field::{field_of_order, multiplicative_order, prime_power, Embedding, Field};
use toric_codes::polynomial::{cyclotomic_coset, cyclotomic_cosets, Polynomial};

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| prime_power(q).is_some()).collect()
}

/// Schoolbook multiplication mod the field's modulus, independent of the log tables.
fn slow_mul(f: &Field, a: u32, b: u32) -> u32 {
    let p = f.characteristic() as u64;
    let m = f.degree() as usize;
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in ca.iter().enumerate() {
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    let modulus = f.modulus();
    for top in (m..2 * m).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (i, &mi) in modulus[..m].iter().enumerate() {
            let pos = top - m + i;
            prod[pos] = (prod[pos] + (p - c) * mi as u64 % p) % p;
        }
    }
    let coeffs: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
    f.from_coeffs(&coeffs)
}

#[test]
fn field_axioms_exhaustive() {
    for q in prime_powers_up_to(81) {
        let f = field_of_order(q).unwrap();
        let els: Vec<u32> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
            }
            assert_eq!(f.pow(a, q), a, "GF({q}) Fermat for {a}");
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b), slow_mul(&f, a, b), "GF({q}) {a}*{b}");
                // Frobenius is additive.
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            }
        }
        for &a in els.iter().step_by(1 + els.len() / 12) {
            for &b in els.iter().step_by(1 + els.len() / 12) {
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert_eq!(f.element_order(f.gamma()).unwrap(), q - 1);
    }
}

#[test]
fn encoding_round_trip() {
    for q in prime_powers_up_to(81) {
        let f = field_of_order(q).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)), a);
        }
    }
}

#[test]
fn embeddings_are_ring_maps() {
    for (small, big) in [(2, 16), (4, 16), (3, 27), (3, 81), (9, 81), (2, 64), (8, 64), (4, 64)] {
        let (fs, fb) = (field_of_order(small).unwrap(), field_of_order(big).unwrap());
        let emb = Embedding::new(&fs, &fb).unwrap();
        for a in fs.elements() {
            for b in fs.elements() {
                assert_eq!(emb.embed(fs.add(a, b)), fb.add(emb.embed(a), emb.embed(b)));
                assert_eq!(emb.embed(fs.mul(a, b)), fb.mul(emb.embed(a), emb.embed(b)));
            }
            assert_eq!(emb.restrict(emb.embed(a)), Some(a));
        }
    }
}

#[test]
fn coset_minimal_polynomials_multiply_to_x_n_minus_one() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 2..=40usize {
            let Some(e) = multiplicative_order(q, n as u64) else { continue };
            if q.checked_pow(e as u32).is_none_or(|size| size > 1 << 20) {
                continue;
            }
            let base = field_of_order(q).unwrap();
            let roots = RootsOfUnity::new(&base, n).unwrap();
            let mut product = Polynomial::one(&base);
            for coset in cyclotomic_cosets(n as u64, q).unwrap() {
                let m = roots.minimal_polynomial(coset[0] as i64).unwrap();
                assert_eq!(m.degree(), Some(coset.len()), "q={q} n={n} coset {coset:?}");
                assert_eq!(cyclotomic_coset(coset[0], n as u64, q).unwrap(), coset);
                product = product.mul(&m);
            }
            assert_eq!(product, Polynomial::x_pow_minus_one(&base, n), "q={q} n={n}");
        }
    }
}

fn shift(word: &[u32]) -> Vec<u32> {
    let n = word.len();
    (0..n).map(|i| word[(i + n - 1) % n]).collect()
}

fn assert_cyclic(code: &CyclicCode) {
    let base = code.field();
    let gh = code.generator().mul(code.parity_check());
    assert_eq!(gh, Polynomial::x_pow_minus_one(base, code.n()));
    for row in code.generator_matrix() {
        assert!(code.contains(&shift(&row)));
    }
}

#[test]
fn family_codes_are_cyclic_and_lcd_criteria_agree() {
    for family in FamilyId::ALL {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let Ok(code) = build_family(family, q) else { continue };
            if (q as f64).powi(code.k() as i32) <= 1e6 {
                assert_cyclic(&code);
            }
            assert_eq!(code.lcd_by_reciprocal(), code.lcd_by_rank().unwrap(), "{family} q={q}");
            let dual = code.dual().unwrap();
            assert_eq!(dual.zero_set(), code.dual_zero_set().as_slice());
            assert_eq!(dual.dual().unwrap(), code);
        }
    }
}

fn admissible_bch() -> impl Strategy<Value = (u64, usize, usize, i64)> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 7]), 3usize..30)
        .prop_filter("coprime and small extension", |&(q, n)| {
            multiplicative_order(q, n as u64)
                .is_some_and(|e| q.checked_pow(e as u32).is_some_and(|size| size <= 1 << 16))
        })
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 2..=n, 0..n as i64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bch_codes_are_cyclic_with_bounded_dimension((q, n, d_star, b) in admissible_bch()) {
        let code = bch_build(q, n, d_star, b).unwrap();
        assert_cyclic(&code);
        let e = code.e() as usize;
        prop_assert!(code.k() + e * (d_star - 1) >= n);
        prop_assert!(code.designed_params().d_star >= d_star);
        prop_assert_eq!(code.lcd_by_reciprocal(), code.lcd_by_rank().unwrap());
    }

    #[test]
    fn reciprocal_is_an_involution(coeffs in prop::collection::vec(0u32..9, 1..12)) {
        let f = field_of_order(9).unwrap();
        let mut c = coeffs;
        if c[0] == 0 { c[0] = 1; }
        let p = Polynomial::new(&f, c);
        prop_assert_eq!(p.reciprocal().unwrap().reciprocal().unwrap(), p);
    }

    #[test]
    fn divmod_reconstructs(a in prop::collection::vec(0u32..8, 0..15), b in prop::collection::vec(0u32..8, 1..8)) {
        let f = field_of_order(8).unwrap();
        let (pa, pb) = (Polynomial::new(&f, a), Polynomial::new(&f, b));
        prop_assume!(!pb.is_zero());
        let (quo, rem) = pa.divmod(&pb).unwrap();
        prop_assert_eq!(quo.mul(&pb).add(&rem), pa);
        prop_assert!(rem.is_zero() || rem.degree() < pb.degree());
    }
}

#[test]
fn hasse_bound_and_supersingularity_exhaustive() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = field_of_order(q).unwrap();
        let p = f.characteristic();
        let mut seen = 0;
        for idx in 0..q.pow(5) {
            let mut a = [0u32; 5];
            let mut rest = idx;
            for slot in a.iter_mut() {
                *slot = (rest % q) as u32;
                rest /= q;
            }
            let Ok(curve) = WeierstrassCurve::new(&f, a) else { continue };
            seen += 1;
            let t = curve.trace();
            assert!((t * t) as u64 <= 4 * q, "q={q} a={a:?} trace {t}");
            if p <= 3 {
                assert_eq!(curve.supersingular_by_j(), Some(curve.is_supersingular()), "q={q} a={a:?}");
            }
        }
        assert!(seen > 0);
    }
}

#[test]
fn group_law_on_small_curves() {
    for (q, a) in [(5u64, [0i64, 0, 0, 3, 0]), (7, [0, 0, 0, 0, 3]), (8, [1, 0, 1, 0, 1]), (9, [0, 0, 0, 1, 0])] {
        let curve = WeierstrassCurve::from_ints(q, a).unwrap();
        let pts = curve.points();
        let order = pts.len() as u64;
        for &p1 in &pts {
            assert_eq!(curve.add(p1, Point::Infinity), p1);
            assert_eq!(curve.add(p1, curve.neg(p1)), Point::Infinity);
            assert_eq!(curve.scalar_mul(p1, order), Point::Infinity);
            assert_eq!(order % curve.point_order(p1).unwrap(), 0);
            for &p2 in pts.iter().step_by(3) {
                let s = curve.add(p1, p2);
                assert!(curve.contains(s));
                assert_eq!(s, curve.add(p2, p1));
                for &p3 in pts.iter().step_by(5) {
                    assert_eq!(curve.add(curve.add(p1, p2), p3), curve.add(p1, curve.add(p2, p3)));
                }
            }
        }
    }
}
