// Spheres and complex projective spaces through ambient coordinates, with
// no Lie group machinery involved.
//
//     cargo run --example sphere_and_projective

use eigenlab::ambient::{
    cpn_ops, euclidean_laplacian, projective_family, random_sphere_point, sphere_family, sphere_ops, to_sphere,
    AmbientField, ProjectiveCoordinate,
};
use eigenlab::sampling::SampleConfig;
use num_complex::Complex64;

pub fn run() -> eigenlab::Result<()> {
    let cfg = SampleConfig::new(9, 1);
    for n in [2, 3] {
        let x = random_sphere_point(n, &cfg, 0);
        for f in sphere_family(n) {
            let v = f.eval(&x);
            let (tau, kappa) = sphere_ops(&f, &x)?;
            println!("S^{}  z_{}/|z|: tau/phi = {:.10}, kappa/phi^2 = {:.10}", 2 * n - 1, f.j, (tau / v).re, (kappa / (v * v)).re);
        }
    }
    for n in [1, 2] {
        let x = random_sphere_point(n + 1, &cfg, 1);
        for alpha in 1..=n {
            for f in projective_family(n, alpha)? {
                let v = f.eval(&x);
                let (tau, kappa) = cpn_ops(&f, &x)?;
                println!(
                    "CP^{n}  z_{} conj(z_{})/|z|^2: tau/phi = {:.10}, kappa/phi^2 = {:.10}",
                    f.j,
                    f.k,
                    (tau / v).re,
                    (kappa / (v * v)).re
                );
            }
        }
    }
    let x = random_sphere_point(3, &cfg, 2);
    let f = ProjectiveCoordinate { j: 1, k: 3 };
    let ratio = euclidean_laplacian(&f, &x) / f.eval(&x);
    println!("flat Laplacian of z_1 conj(z_3)/|z|^2 on R^6 at |z| = 1: {:.10} phi", ratio.re);

    let far = vec![Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0)];
    println!("off-sphere input: {}", to_sphere(&far).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
