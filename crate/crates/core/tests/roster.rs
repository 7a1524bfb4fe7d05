use betatab_core::catalog::{all_entries, sample_params};
use betatab_core::quad::{oracle_integrate, Quadrature, DEFAULT_TOL};

#[test]
fn every_entry_matches_its_closed_form() {
    let q = Quadrature::new();
    let mut failures = Vec::new();
    for rec in all_entries() {
        for i in 0..100 {
            let v = sample_params(rec, 7, i).unwrap();
            let closed = rec.closed_form(&v).unwrap();
            let f = rec.integrand(&v);
            match q.integrate(&f, &rec.spec(&v), DEFAULT_TOL) {
                Ok(r) => {
                    let err = (r.value - closed).abs();
                    let allowed = rec.abs_tol.max(1e-12) + rec.tolerance.rtol() * closed.abs();
                    if err > allowed || !r.converged() {
                        failures.push(format!(
                            "{} {:?}: {} vs {} ({:?}, {} evals)",
                            rec.id, v, r.value, closed, r.status, r.evaluations
                        ));
                    }
                }
                Err(e) => failures.push(format!("{} {:?}: {e}", rec.id, v)),
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn engines_agree_with_the_oracle() {
    let q = Quadrature::new();
    let mut failures = Vec::new();
    for rec in all_entries().filter(|r| !r.is_pv()) {
        for i in 0..20 {
            let v = sample_params(rec, 11, i).unwrap();
            let f = rec.integrand(&v);
            let spec = rec.spec(&v);
            let de = q.integrate(&f, &spec, DEFAULT_TOL).unwrap().value;
            let gk = oracle_integrate(&f, &spec).unwrap().value;
            if (de - gk).abs() > 1e-8 * gk.abs().max(1.0) {
                failures.push(format!("{} {:?}: {de} vs {gk}", rec.id, v));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
