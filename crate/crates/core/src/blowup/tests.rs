use super::*;
use crate::hypersurface::jacobian_ideal;
use crate::poly::parse_polynomial;

fn ring(vars: &str) -> Ring {
    Ring::from_list(vars).unwrap()
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

fn in_ring(p: &PresentationIdeal, gens: &[&str]) -> PresentationIdeal {
    let polys = gens
        .iter()
        .map(|g| parse_polynomial(g, p.ring()).unwrap())
        .collect();
    PresentationIdeal::new(p.kind(), p.base_ring(), p.ring(), polys).unwrap()
}

#[test]
fn koszul_presentations_of_the_maximal_ideal() {
    let r = ring("x,y");
    let i = ideal(&r, &["x", "y"]);
    let sym = sym_ideal(&i).unwrap();
    assert_eq!(sym.ring().vars(), &["x", "y", "T0", "T1"]);
    assert!(sym.same_as(&in_ring(&sym, &["y*T0 - x*T1"])).unwrap());
    assert!(sym.t_degrees().iter().all(|d| *d == Some(1)));
    let rees = rees_ideal(&i).unwrap();
    assert!(rees.same_as(&sym).unwrap());
    assert!(is_linear_type(&i).unwrap().is_linear_type);
}

#[test]
fn principal_ideal_has_zero_sym_ideal() {
    let r = ring("x,y");
    let sym = sym_ideal(&ideal(&r, &["x"])).unwrap();
    assert!(sym.ideal().is_zero().unwrap());
    assert!(is_linear_type(&ideal(&r, &["x"])).unwrap().is_linear_type);
}

#[test]
fn regular_sequences_are_of_linear_type() {
    let r = ring("x,y,z");
    let i = ideal(&r, &["x", "y", "z"]);
    let v = is_linear_type(&i).unwrap();
    assert!(v.is_linear_type && v.witness.is_none());
    let rees = rees_ideal(&i).unwrap();
    let koszul = in_ring(&rees, &["y*T0 - x*T1", "z*T0 - x*T2", "z*T1 - y*T2"]);
    assert!(rees.same_as(&koszul).unwrap());

    let r = ring("x,y");
    let rees = rees_ideal(&ideal(&r, &["-3*x^2", "2*y"])).unwrap();
    assert!(rees
        .same_as(&in_ring(&rees, &["2*y*T0 + 3*x^2*T1"]))
        .unwrap());
}

#[test]
fn non_eulerian_curve_has_quadratic_rees_relation() {
    let r = ring("x,y");
    let f = parse_polynomial("x^4 - x^2*y^2 + y^5", &r).unwrap();
    let jac = jacobian_ideal(&f).unwrap();
    let analysis = linear_type_analysis(&jac).unwrap();
    assert!(!analysis.verdict.is_linear_type);
    let w = analysis.verdict.witness.clone().unwrap();
    assert_eq!(analysis.verdict.witness_t_degree(2), Some(2));
    assert!(!analysis
        .sym
        .reduced_basis()
        .unwrap()
        .reduces_to_zero(&w)
        .unwrap());
    assert!(analysis.rees.contains(&analysis.sym).unwrap());
    assert!(analysis
        .rees
        .reduced_basis()
        .unwrap()
        .elements()
        .iter()
        .any(|g| analysis.rees.t_degree(g) == Some(2)));

    let al = aluffi_presentation(&f).unwrap();
    assert!(al.quasi_homogeneous.is_none() && al.eulerian.is_none());
    // the degree-two relation survives modulo f and T0
    let sym_based = {
        let mut gens = analysis.sym.generators().to_vec();
        gens.push(f.embed(al.general.ring()).unwrap());
        gens.push(Polynomial::var(al.general.ring(), 2).unwrap());
        PresentationIdeal::new(PresentationKind::Aluffi, &r, al.general.ring(), gens).unwrap()
    };
    assert!(al.general.contains(&sym_based).unwrap());
    assert!(!sym_based.contains(&al.general).unwrap());
}

#[test]
fn eulerian_curves() {
    let r = ring("x,y");
    let f = parse_polynomial("x*y + x^3 + y^3", &r).unwrap();
    assert!(
        is_linear_type(&jacobian_ideal(&f).unwrap())
            .unwrap()
            .is_linear_type
    );
    let al = aluffi_presentation(&f).unwrap();
    assert!(al.quasi_homogeneous.is_none());
    assert!(al.eulerian.is_some());

    let cusp = parse_polynomial("y^2 - x^3", &r).unwrap();
    let al = aluffi_presentation(&cusp).unwrap();
    let qh = al.quasi_homogeneous.as_ref().unwrap();
    // Euler form (1/3) x T1 + (1/2) y T2 appears among the shape generators
    let euler = parse_polynomial("1/3*x*T1 + 1/2*y*T2", qh.ring()).unwrap();
    assert!(qh.generators().contains(&euler));
    assert!(al.eulerian.is_some());
}

#[test]
fn rees_generators_are_bigraded() {
    let r = ring("x,y,z");
    let f = parse_polynomial("x^4*z - x^2*y^2*z + y^5", &r).unwrap();
    let j = Ideal::new(&r, f.gradient()).unwrap();
    let rees = rees_ideal(&j).unwrap();
    for g in rees.generators() {
        assert!(rees.t_degree(g).is_some());
        let xdeg: std::collections::BTreeSet<u32> = g
            .terms()
            .iter()
            .map(|(m, _)| m.exps()[..3].iter().sum())
            .collect();
        assert_eq!(xdeg.len(), 1, "{g}");
    }
    assert!(!is_linear_type(&j).unwrap().is_linear_type);
}
