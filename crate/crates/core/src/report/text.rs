use std::fmt::Write;

use super::AnalysisReport;

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub(super) fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let space = if r.input.projective {
        "projective"
    } else {
        "affine"
    };
    let _ = writeln!(
        out,
        "f = {}  ({space}, variables {})",
        r.input.polynomial,
        r.input.vars.join(",")
    );
    let v = &r.verdicts;
    let _ = writeln!(out, "reduced: {}", yes_no(v.reduced));
    let _ = writeln!(out, "isolated singularities: {}", yes_no(v.isolated));
    match &v.quasi_homogeneous {
        Some(qh) => {
            let w: Vec<String> = qh.weights.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                out,
                "quasi-homogeneous: degree {} weights ({})",
                qh.degree,
                w.join(", ")
            );
        }
        None => {
            let _ = writeln!(out, "quasi-homogeneous: no");
        }
    }
    let _ = writeln!(out, "locally Eulerian: {}", yes_no(v.locally_eulerian));
    let _ = writeln!(
        out,
        "Jacobian linear type: {}",
        yes_no(v.jacobian_linear_type)
    );
    if let Some(g) = v.gradient_linear_type {
        let _ = writeln!(out, "gradient linear type: {}", yes_no(g));
        for c in &v.charts {
            let _ = writeln!(
                out,
                "  chart {}=1: {}  locally Eulerian: {}",
                c.variable,
                c.polynomial,
                yes_no(c.locally_eulerian)
            );
        }
    }
    if let Some(w) = &v.witness {
        let deg = v
            .witness_t_degree
            .map(|d| d.to_string())
            .unwrap_or_else(|| "?".into());
        let _ = writeln!(out, "witness (degree {deg} in T): {w}");
    }
    let _ = writeln!(
        out,
        "singular points: {}{}",
        r.singular_points.len(),
        if v.all_points_rational {
            ""
        } else {
            " rational (some singular points are not rational)"
        }
    );
    for p in &r.singular_points {
        let _ = write!(
            out,
            "  {}  mult {}  mu {}  tau {}  {}  locally Eulerian: {}",
            p.point,
            p.multiplicity,
            p.milnor,
            p.tjurina,
            p.label,
            yes_no(p.locally_eulerian)
        );
        if let (Some(t), Some(m)) = (&p.evidence.tangent, p.evidence.tangent_intersection) {
            let _ = write!(out, "  tangent {t} meets with multiplicity {m}");
        }
        out.push('\n');
    }
    if let Some(pr) = &r.presentations {
        let _ = writeln!(out, "presentations over Q[{}]:", pr.ring.join(","));
        for (name, gens) in [
            ("sym", &pr.sym_basis),
            ("rees", &pr.rees_basis),
            ("aluffi", &pr.aluffi_basis),
        ] {
            let _ = writeln!(out, "  {name}:");
            for g in gens {
                let _ = writeln!(out, "    {g}");
            }
        }
        if pr.aluffi_quasi_homogeneous.is_some() {
            let _ = writeln!(
                out,
                "  aluffi matches the quasi-homogeneous shape (f, T0, Euler form, Koszul minors)"
            );
        }
        if pr.aluffi_eulerian.is_some() {
            let _ = writeln!(
                out,
                "  aluffi matches the symmetric-algebra shape (f, T0, syzygy forms)"
            );
        }
    }
    let total: u64 = r.timings.values().sum();
    let _ = writeln!(out, "time: {:.3} s", total as f64 / 1e6);
    out
}
