use super::*;
use num_traits::Zero;

use crate::poly::{parse_polynomial, Rational};

fn ring(vars: &str) -> Ring {
    Ring::from_list(vars).unwrap()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn origin() -> RationalPoint {
    RationalPoint::origin(2)
}

const NOT_EULERIAN: &str = "x^4 - x^2*y^2 + y^5";

#[test]
fn gradient_and_jacobian_ideals() {
    let r = ring("x,y");
    let j = gradient_ideal(&poly(&r, NOT_EULERIAN)).unwrap();
    assert_eq!(
        j.generators(),
        &[poly(&r, "4*x^3 - 2*x*y^2"), poly(&r, "-2*x^2*y + 5*y^4")]
    );
    let i = jacobian_ideal(&poly(&r, "x^2")).unwrap();
    assert_eq!(i.generators()[0], poly(&r, "x^2"));
    assert!(i
        .same_as(&Ideal::new(&r, vec![poly(&r, "x")]).unwrap())
        .unwrap());
    assert!(matches!(
        gradient_ideal(&poly(&r, "3")),
        Err(Error::ConstantPolynomial)
    ));

    let r4 = ring("x,y,z,w");
    let cayley = poly(&r4, "x*y*z + x*y*w + x*z*w + y*z*w");
    let j = gradient_ideal(&cayley).unwrap();
    assert_eq!(j.generators().len(), 4);
    assert!(j
        .generators()
        .iter()
        .all(|g| g.len() == 3 && g.is_homogeneous()));
    assert!(jacobian_ideal(&cayley).unwrap().same_as(&j).unwrap());
}

#[test]
fn reducedness_and_isolation() {
    let r = ring("x,y");
    assert!(!check_reduced(&poly(&r, "x^2*y")).unwrap());
    assert!(check_reduced(&poly(&r, "x*y")).unwrap());
    assert!(check_reduced(&poly(&r, NOT_EULERIAN)).unwrap());
    assert!(has_isolated_singularities(&poly(&r, NOT_EULERIAN)).unwrap());
    assert!(has_isolated_singularities(&poly(&r, "x^2 + y^2 + 1")).unwrap());
    assert!(matches!(
        has_isolated_singularities(&poly(&r, "x^2*y")),
        Err(Error::NotReduced)
    ));
    let r3 = ring("x,y,z");
    assert!(!has_isolated_singularities(&poly(&r3, "x^2 + y^2")).unwrap());
    let s = jacobian_ideal(&poly(&r, NOT_EULERIAN)).unwrap();
    assert_eq!(s.krull_dimension().unwrap(), 0);
}

#[test]
fn singular_points() {
    let r = ring("x,y");
    let sp = rational_singular_points(&poly(&r, NOT_EULERIAN)).unwrap();
    assert_eq!(sp.points, vec![origin()]);
    assert!(sp.complete);
    let sp = rational_singular_points(&poly(&r, "x^2 + y^2 - 1")).unwrap();
    assert!(sp.points.is_empty() && sp.complete);
    // nodes at (±√2, 0) are missed and flagged
    let sp = rational_singular_points(&poly(&r, "y^2 - (x^2 - 2)^2")).unwrap();
    assert!(sp.points.is_empty());
    assert!(!sp.complete);
}

#[test]
fn milnor_and_tjurina_numbers() {
    let r = ring("x,y");
    assert_eq!(
        milnor_tjurina(&poly(&r, "y^2 - x^3"), &origin()).unwrap(),
        (2, 2)
    );
    assert_eq!(
        milnor_tjurina(&poly(&r, "x*y + x^3 + y^3"), &origin()).unwrap(),
        (1, 1)
    );
    let (mu, tau) = milnor_tjurina(&poly(&r, NOT_EULERIAN), &origin()).unwrap();
    assert!(mu > tau, "{mu} {tau}");
    assert!(matches!(
        milnor_tjurina(&poly(&r, "y - x^2"), &origin()),
        Err(Error::NotSingular)
    ));
}

#[test]
fn locally_eulerian_examples() {
    let r = ring("x,y");
    for s in ["x*y + x^3 + y^3", "y^2 - x^3"] {
        let f = poly(&r, s);
        assert!(is_locally_eulerian(&f, None).unwrap());
        assert!(is_locally_eulerian(&f, Some(&origin())).unwrap());
    }
    let f = poly(&r, NOT_EULERIAN);
    assert!(!is_locally_eulerian(&f, None).unwrap());
    assert!(!is_locally_eulerian(&f, Some(&origin())).unwrap());
    let h = AffineHypersurface::new(f).unwrap();
    for g in h.eulerian_colon().unwrap().gb().unwrap().elements() {
        assert!(g.eval(origin().coords()).unwrap().is_zero());
    }
}

#[test]
fn plane_classification() {
    let r = ring("x,y");
    let node = classify_plane_singularity(&poly(&r, "y^2 - x^2 - x^3"), &origin()).unwrap();
    assert_eq!(node.multiplicity, 2);
    assert_eq!(node.label, SingularityLabel::A(1));
    assert_eq!((node.milnor, node.tjurina), (1, 1));
    assert_ne!(node.evidence.discriminant.as_deref(), Some("0"));

    let cusp = classify_plane_singularity(&poly(&r, "y^2 - x^3"), &origin()).unwrap();
    assert_eq!(cusp.label, SingularityLabel::A(2));
    assert_eq!((cusp.milnor, cusp.tjurina), (2, 2));
    assert_eq!(cusp.evidence.discriminant.as_deref(), Some("0"));
    assert_eq!(cusp.evidence.tangent_intersection, Some(3));

    // three concurrent lines (y-z)(z-x)(x-y) in the chart z = 1
    let lines = poly(&r, "(y-1)*(1-x)*(x-y)");
    let p = RationalPoint::from_integers(&[1, 1]);
    let rep = classify_plane_singularity(&lines, &p).unwrap();
    assert_eq!(rep.multiplicity, 3);
    assert_eq!(rep.label, SingularityLabel::NonDoublePoint);
    assert!(rep.locally_eulerian);

    assert!(matches!(
        classify_plane_singularity(&poly(&r, "y - x^2"), &origin()),
        Err(Error::NotSingular)
    ));
    assert!(classify_plane_singularity(
        &poly(&ring("x,y,z"), "x*y + z^2"),
        &RationalPoint::origin(3)
    )
    .is_err());
}

#[test]
fn corank_two_double_point_in_three_variables() {
    let r = ring("x,y,z");
    let rep =
        classify_singularity(&poly(&r, "x^2 + y^3 + z^3"), &RationalPoint::origin(3)).unwrap();
    assert_eq!(rep.label, SingularityLabel::DoublePoint);
    assert_eq!(rep.evidence.hessian_rank, Some(1));
    let rep =
        classify_singularity(&poly(&r, "x^2 + y^2 + z^4"), &RationalPoint::origin(3)).unwrap();
    assert_eq!(rep.label, SingularityLabel::A(3));
}

#[test]
fn line_intersections() {
    let r = ring("x,y");
    let o = origin();
    let cusp = poly(&r, "y^2 - x^3");
    assert_eq!(
        intersection_multiplicity_with_line(&cusp, &o, &poly(&r, "y")).unwrap(),
        3
    );
    let node = poly(&r, "y^2 - x^2 - x^3");
    assert!(intersection_multiplicity_with_line(&node, &o, &poly(&r, "y - x")).unwrap() >= 3);
    assert_eq!(
        intersection_multiplicity_with_line(&node, &o, &poly(&r, "y")).unwrap(),
        2
    );
    assert_eq!(
        intersection_multiplicity_with_line(&poly(&r, "y - x^2"), &o, &poly(&r, "x")).unwrap(),
        1
    );
    assert!(matches!(
        intersection_multiplicity_with_line(&poly(&r, "x*y"), &o, &poly(&r, "x")),
        Err(Error::BadLine(_))
    ));
    assert!(matches!(
        intersection_multiplicity_with_line(&cusp, &o, &poly(&r, "x - 1")),
        Err(Error::BadLine(_))
    ));
}

#[test]
fn projective_examples() {
    let r4 = ring("x,y,z,w");
    let cayley = ProjectiveHypersurface::new(poly(&r4, "x*y*z + x*y*w + x*z*w + y*z*w")).unwrap();
    let sp = cayley.rational_singular_points().unwrap();
    assert!(sp.complete);
    assert_eq!(sp.points.len(), 4);
    for p in &sp.points {
        assert_eq!(p.coords().iter().filter(|c| !c.is_zero()).count(), 1);
        let rep = cayley.classify(p).unwrap();
        assert_eq!(
            (rep.milnor, rep.tjurina, rep.label),
            (1, 1, SingularityLabel::A(1))
        );
    }
    assert!(cayley.gradient_linear_type().unwrap().value);

    let r3 = ring("x,y,z");
    let bad = gradient_linear_type(&poly(&r3, "x^4*z - x^2*y^2*z + y^5")).unwrap();
    assert!(!bad.value);
    assert!(bad
        .charts
        .iter()
        .any(|c| c.variable == "z" && !c.locally_eulerian));
    assert!(
        gradient_linear_type(&poly(&r3, "x^2 + y^2 + z^2"))
            .unwrap()
            .value
    );
    assert!(matches!(
        ProjectiveHypersurface::new(poly(&r3, "x^2 + y")),
        Err(Error::NotHomogeneous)
    ));
}

#[test]
fn family_examples() {
    let v = family_member_verdict(3, 3, 1, 1).unwrap();
    assert_eq!(v.prediction, FamilyPrediction::Case { case: 3 });
    assert_eq!((v.locally_eulerian, v.agrees), (Some(true), Some(true)));

    let v = family_member_verdict(5, 5, 2, 2).unwrap();
    assert_eq!(
        v.prediction,
        FamilyPrediction::ConditionalOnQh { region: 1 }
    );
    assert!(!v.quasi_homogeneous);
    assert_eq!((v.locally_eulerian, v.agrees), (Some(false), Some(true)));

    let v = family_member_verdict(2, 2, 2, 2).unwrap();
    assert_eq!(v.prediction, FamilyPrediction::Case { case: 1 });
    assert_eq!(v.locally_eulerian, Some(true));

    let v = family_member_verdict(2, 2, 0, 0).unwrap();
    assert_eq!(v.status, FamilyStatus::Ok);
    assert_eq!(v.locally_eulerian, Some(true));
}

#[test]
fn dehomogenized_euler_relation() {
    let r = ring("x,y,z");
    let f = poly(&r, "x^4*z - x^2*y^2*z + y^5");
    let d = Rational::from_integer(f.total_degree().unwrap().into());
    let chart = f.dehomogenize(2).unwrap();
    let cr = chart.ring().clone();
    let mut rhs = f.partial_derivative(2).unwrap().dehomogenize(2).unwrap();
    for i in 0..2 {
        let t = Polynomial::var(&cr, i).unwrap();
        rhs = &rhs + &(&t * &chart.partial_derivative(i).unwrap());
    }
    assert_eq!(chart.scale(&d), rhs);
}
