//! Integrals, cointegrals, modulus and comodulus of the Taft algebras.
//!
//! Run with `cargo run --example integrals -- 3`.

use hopftrace::hopfcore::{
    build_taft, check_hopf_axioms, comodulus, left_cointegral, left_integrals, modulus, right_cointegral,
    right_integrals, symmetrised_integral,
};
use hopftrace::exactnum::Cyclo;

fn show(labels: &[String], name: &str, v: &[Cyclo]) {
    let terms: Vec<String> =
        labels.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(l, c)| format!("{l} ↦ {c}")).collect();
    println!("{name:>22}: {}", terms.join(", "));
}

fn main() -> hopftrace::Result<()> {
    let r: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let h = build_taft(r);
    assert!(check_hopf_axioms(&h).passed());
    let labels = h.alg.labels();
    println!("Taft algebra, r = {r}, dim = {}", h.dim());
    show(labels, "right integral", &right_integrals(&h)?[0].coeffs);
    show(labels, "left integral", &left_integrals(&h)?[0].coeffs);
    show(labels, "symmetrised integral", &symmetrised_integral(&h)?.coeffs);
    show(labels, "left cointegral", &left_cointegral(&h)?);
    show(labels, "right cointegral", &right_cointegral(&h)?);
    show(labels, "modulus", &modulus(&h)?.coeffs);
    show(labels, "comodulus", &comodulus(&h)?);
    Ok(())
}
