use super::*;
use crate::poly::parse_polynomial;

fn ring(vars: &[&str]) -> Ring {
    Ring::new(vars.iter().copied()).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(
        r,
        gens.iter()
            .map(|g| parse_polynomial(g, r).unwrap())
            .collect(),
    )
    .unwrap()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn membership() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2", "y"]);
    assert!(i.contains(&poly(&r, "x^3 + x*y")).unwrap());
    assert!(!i.contains(&poly(&r, "x")).unwrap());
    assert!(ideal_membership(&poly(&r, "0"), &i).unwrap());
}

#[test]
fn intersection_of_coordinate_axes() {
    let r = ring(&["x", "y"]);
    let meet = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
    assert!(meet.same_as(&ideal(&r, &["x*y"])).unwrap());
    let meet = ideal(&r, &["x^2", "y"])
        .intersect(&ideal(&r, &["x", "y^2"]))
        .unwrap();
    assert!(meet.same_as(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
}

#[test]
fn quotients_and_saturation() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2*y", "x*y^2"]);
    let q1 = ideal_quotient(&i, &poly(&r, "x")).unwrap();
    assert!(q1.same_as(&ideal(&r, &["x*y", "y^2"])).unwrap());
    let s = saturation(&i, &poly(&r, "x")).unwrap();
    assert!(s.same_as(&ideal(&r, &["y"])).unwrap());
    let m = Ideal::maximal_at_origin(&r);
    let s = ideal(&r, &["x^2", "x*y"]).saturation_ideal(&m).unwrap();
    assert!(s.same_as(&ideal(&r, &["x"])).unwrap());
}

#[test]
fn jacobian_colon_f_for_a_non_eulerian_curve() {
    let r = ring(&["x", "y"]);
    let f = poly(&r, "x^4 - x^2*y^2 + y^5");
    let j = Ideal::new(&r, f.gradient()).unwrap();
    let colon = j.quotient(&f).unwrap();
    let expected = ideal(&r, &["5*y^2 - y", "5*x*y - x", "10*x^2 - y"]);
    assert!(colon.same_as(&expected).unwrap());
    assert!(!colon.contains(&poly(&r, "10*x^2 + y")).unwrap());

    // flipping the sign of the mixed term flips the sign in the last generator
    let g = poly(&r, "x^4 + x^2*y^2 + y^5");
    let colon = Ideal::new(&r, g.gradient()).unwrap().quotient(&g).unwrap();
    let expected = ideal(&r, &["5*y^2 - y", "5*x*y - x", "10*x^2 + y"]);
    assert!(colon.same_as(&expected).unwrap());
}

#[test]
fn elimination() {
    let r = ring(&["t", "x", "y"]);
    let i = ideal(&r, &["x - t^2", "y - t^3"]);
    let e = eliminate(&i, &[0]).unwrap();
    assert!(e.same_as(&ideal(&r, &["x^3 - y^2"])).unwrap());
    assert!(matches!(i.eliminate(&[0, 1, 2]), Err(Error::EliminateAll)));
}

#[test]
fn dimensions() {
    let r = ring(&["x", "y", "z"]);
    assert_eq!(krull_dimension(&ideal(&r, &["x*y", "x*z"])).unwrap(), 2);
    assert_eq!(krull_dimension(&ideal(&r, &["x", "y"])).unwrap(), 1);
    assert_eq!(krull_dimension(&ideal(&r, &["1"])).unwrap(), -1);
    assert_eq!(krull_dimension(&ideal(&r, &["0"])).unwrap(), 3);
    let r = ring(&["x", "y"]);
    assert_eq!(
        vector_space_dimension(&ideal(&r, &["x^2", "y^3"])).unwrap(),
        6
    );
    assert_eq!(
        vector_space_dimension(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap(),
        3
    );
    assert!(matches!(
        vector_space_dimension(&ideal(&r, &["x"])),
        Err(Error::NotZeroDimensional)
    ));
}

#[test]
fn local_components_add_up() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2*(x-1)", "y^2 - y*x"]);
    let total = i.vector_space_dimension().unwrap();
    let points = i.rational_points().unwrap();
    assert_eq!(points.len(), 3);
    let sum: u64 = points
        .iter()
        .map(|p| local_vector_space_dimension(&i, p).unwrap())
        .sum();
    assert_eq!(sum, total);
    let at_one = RationalPoint::from_integers(&[1, 1]);
    assert!(points.contains(&at_one));
    assert_eq!(i.local_vector_space_dimension(&at_one).unwrap(), 1);
    assert!(matches!(
        i.local_primary_component(&RationalPoint::from_integers(&[2, 0])),
        Err(Error::PointNotInVariety)
    ));
}

#[test]
fn isolated_component_ignores_positive_dimensional_parts() {
    let r = ring(&["x", "y"]);
    // a line x = 1 together with an embedded fat point at the origin
    let i = ideal(&r, &["(x-1)*x^2", "(x-1)*y"]);
    let c = i.isolated_component(&RationalPoint::origin(2)).unwrap();
    assert!(c.same_as(&ideal(&r, &["x^2", "y"])).unwrap());
    assert!(matches!(
        i.isolated_component(&RationalPoint::from_integers(&[1, 0])),
        Err(Error::NotIsolated)
    ));
}

#[test]
fn rational_points_skip_irrational_ones() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 - 2", "y"]);
    assert!(i.rational_points().unwrap().is_empty());
    let i = ideal(&r, &["(3*x - 1)*(x + 2)", "y - x"]);
    let mut pts = i.rational_points().unwrap();
    pts.sort_by(|a, b| a.coords().cmp(b.coords()));
    assert_eq!(
        pts,
        vec![
            RationalPoint::affine(vec![q(-2, 1), q(-2, 1)]),
            RationalPoint::affine(vec![q(1, 3), q(1, 3)]),
        ]
    );
}

#[test]
fn basis_cache_reused() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 - y", "y^2"]);
    let a = i.gb().unwrap();
    let b = i.clone().gb().unwrap();
    assert!(Arc::ptr_eq(&a, &b));
}

#[test]
fn local_colength_matches_explicit_component() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2*(x-1)", "y^2 - y*x", "x*y^3"]);
    for p in i.rational_points().unwrap() {
        assert_eq!(
            i.local_colength(&p).unwrap(),
            i.isolated_colength(&p).unwrap()
        );
    }
    // gradient of y^2 - x^5: colength 4 at the origin
    let j = ideal(&r, &["5*x^4", "2*y"]);
    assert_eq!(j.local_colength(&RationalPoint::origin(2)).unwrap(), 4);
    // positive-dimensional elsewhere, isolated at the origin
    let k = ideal(&r, &["(x-1)*x^3", "(x-1)*y"]);
    assert_eq!(k.local_colength(&RationalPoint::origin(2)).unwrap(), 3);
}
