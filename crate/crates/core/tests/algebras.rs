use d2lie::calculus::{centralizer, generated_d2_subalgebra, generated_ideal, normalizer, saturate};
use d2lie::construct::{catalog, catalog_names, dualize};
use d2lie::io::{parse_algebra, serialize_algebra};
use d2lie::lie::{verify_morphism, LieAlgebra, MorphismCheck};
use d2lie::linalg::{add_vectors, is_zero_vector, rat, Matrix, Subspace, Vector};
use d2lie::structure::fingerprint;
use proptest::prelude::*;

fn names() -> Vec<String> {
    catalog_names()
}

fn entry() -> impl Strategy<Value = LieAlgebra> {
    (0..names().len()).prop_map(|i| catalog(&names()[i]).unwrap())
}

fn entry_with_vectors(k: usize) -> impl Strategy<Value = (LieAlgebra, Vec<Vector>)> {
    entry().prop_flat_map(move |l| {
        let n = l.dim();
        let vs = prop::collection::vec(prop::collection::vec((-3i64..=3).prop_map(rat), n), k);
        (Just(l), vs)
    })
}

fn eps_closure(l: &LieAlgebra, vs: &[Vector]) -> Vec<Vector> {
    let mut out = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for _ in 0..l.nilpotency_index() {
            out.push(w.clone());
            w = l.apply_eps(&w);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_and_antisymmetry((l, v) in entry_with_vectors(3)) {
        let b = |x: &Vector, y: &Vector| l.bracket(x, y).unwrap();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let sum = add_vectors(&add_vectors(&b(x, &b(y, z)), &b(y, &b(z, x))), &b(z, &b(x, y)));
        prop_assert!(is_zero_vector(&sum));
        prop_assert!(is_zero_vector(&add_vectors(&b(x, y), &b(y, x))));
    }

    #[test]
    fn eps_identities((l, v) in entry_with_vectors(2)) {
        let (x, y) = (&v[0], &v[1]);
        let ex = l.apply_eps(x);
        let ey = l.apply_eps(y);
        let exy = l.apply_eps(&l.bracket(x, y).unwrap());
        prop_assert_eq!(&l.bracket(&ex, y).unwrap(), &exy);
        prop_assert_eq!(&l.bracket(x, &ey).unwrap(), &exy);
        let mut w = x.clone();
        for _ in 0..l.nilpotency_index() {
            w = l.apply_eps(&w);
        }
        prop_assert!(is_zero_vector(&w));
    }

    #[test]
    fn saturation_is_idempotent((l, v) in entry_with_vectors(2)) {
        let u = Subspace::span(l.dim(), &v).unwrap();
        let s = saturate(&l, &u).unwrap();
        prop_assert!(s.contains_subspace(&u));
        prop_assert_eq!(&saturate(&l, &s).unwrap(), &s);
        prop_assert!(s.basis_vectors().iter().all(|b| s.contains(&l.apply_eps(b))));
    }

    #[test]
    fn quotients_validate((l, v) in entry_with_vectors(1)) {
        let ideal = generated_ideal(&l, &eps_closure(&l, &v)).unwrap();
        let q = l.quotient(&ideal).unwrap();
        prop_assert_eq!(q.dim(), l.dim() - ideal.dim());
        prop_assert!(q.validate().is_valid());
    }

    #[test]
    fn centralizer_and_normalizer_are_d2_subalgebras((l, v) in entry_with_vectors(2)) {
        let s = generated_d2_subalgebra(&l, &v).unwrap();
        for space in [centralizer(&l, &s).unwrap(), normalizer(&l, &s).unwrap()] {
            let r = l.restrict(&space).unwrap();
            prop_assert!(r.validate().is_valid());
            prop_assert!(space.basis_vectors().iter().all(|b| space.contains(&l.apply_eps(b))));
        }
    }
}

#[test]
fn text_round_trip_for_every_entry() {
    for name in names() {
        let l = catalog(&name).unwrap();
        let text = serialize_algebra(&l);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, l, "{name}");
        assert_eq!(serialize_algebra(&back), text, "{name}");
    }
}

#[test]
fn dualization_contains_the_original() {
    for name in ["sl2R", "su2", "e2", "heis3", "aff1"] {
        let l = catalog(name).unwrap();
        let d = dualize(&l, 2).unwrap();
        let n = l.dim();
        let map = Matrix::from_fn(2 * n, n, |i, j| if i == j { rat(1) } else { rat(0) });
        let r = verify_morphism(&MorphismCheck { source: &l, target: &d, map }).unwrap();
        assert!(r.is_morphism && r.is_injective, "{name}: {r:?}");
        assert!(d.validate().is_valid());
    }
}

#[test]
fn dualization_respects_direct_sums() {
    let pairs = [("sl2R", "aff1"), ("heis3", "abelian(1)"), ("e2", "su2")];
    for (a, b) in pairs {
        let (la, lb) = (catalog(a).unwrap(), catalog(b).unwrap());
        let whole = dualize(&la.direct_sum(&lb), 2).unwrap();
        let parts = dualize(&la, 2).unwrap().direct_sum(&dualize(&lb, 2).unwrap());
        assert!(whole.validate().is_valid() && parts.validate().is_valid());
        assert_eq!(fingerprint(&whole).unwrap(), fingerprint(&parts).unwrap(), "{a} + {b}");
    }
}

#[test]
fn plural_numbers_of_order_three() {
    let d3 = dualize(&catalog("sl2R").unwrap(), 3).unwrap();
    assert_eq!(d3.dim(), 9);
    assert!(d3.validate().is_valid());
    assert_eq!(d3.eps().rank(), 6);
    assert!(!d3.eps().pow(2).is_zero());
    assert!(d3.eps().pow(3).is_zero());
}

/// Multiplication by `i` on a realified basis `z_1..z_n, i z_1..i z_n`.
fn complex_structure(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r == c + n {
            rat(1)
        } else if c == r + n {
            rat(-1)
        } else {
            rat(0)
        }
    })
}

#[test]
fn realification_is_complex_bilinear() {
    let l = catalog("borel_cx_realified").unwrap();
    let j = complex_structure(l.dim() / 2);
    assert!((&j * &j) == Matrix::identity(l.dim()).scale(&rat(-1)));
    for a in l.ad_matrices() {
        assert_eq!(a * &j, &j * a);
    }
}
