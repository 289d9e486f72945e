// Parameter matrices of the trace-type eigenfunctions and the checks that
// guard them.
//
//     cargo run --example parameter_matrices

use eigenlab::catalog::{
    isotropic_orientation, make_param_matrix, real_grassmannian_psi, so_u_psi, standard_isotropic_basis, ParamTag,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn run() -> eigenlab::Result<()> {
    let a = vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)];
    let iso = make_param_matrix(ParamTag::Rank1Isotropic, std::slice::from_ref(&a))?;
    println!("rank-one isotropic a = (1, i, 0): A^2 = 0, tr A = {}", iso.matrix.trace());

    let not_iso = make_param_matrix(ParamTag::Rank1Isotropic, &[vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]]);
    println!("a = (1, 1, 0) as isotropic: {}", not_iso.unwrap_err());

    let f = real_grassmannian_psi(2, 1, &iso)?;
    println!("{} on {}: (lambda, mu) = ({}, {})", f.label, f.space, f.lambda, f.mu);

    let crossing = make_param_matrix(ParamTag::Rank1Isotropic, &[vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]])?;
    match real_grassmannian_psi(1, 2, &crossing) {
        Ok(_) => println!("support crossing the blocks accepted"),
        Err(e) => println!("support crossing the blocks rejected: {e}"),
    }

    let skew = make_param_matrix(ParamTag::SkewAb, &[a.clone(), vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]])?;
    println!("skew (a b^t - b a^t)/sqrt 2: rank {}", skew.matrix.rank(1e-10));

    let basis = standard_isotropic_basis(2);
    let orientation = isotropic_orientation(&basis[0], &basis[1])?;
    println!("standard isotropic plane in C^4: orientation {orientation:+.3}");
    let g = so_u_psi(2, &basis[0], &basis[1])?;
    println!("{} on {}: (lambda, mu) = ({}, {})", g.label, g.space, g.lambda, g.mu);
    let flipped: Vec<Complex64> = basis[1].iter().map(|z| z.conj()).collect();
    let other = so_u_psi(2, &basis[0], &flipped);
    println!("plane from the other SO(4) orbit: {}", match other {
        Ok(_) => "accepted".to_string(),
        Err(e) => format!("rejected ({e})"),
    });
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
