// The family psi[j, alpha] on Sp(m+n)/Sp(m)xSp(n), including the indices
// m+n < j <= 2(m+n), with the closed form of the Cartan map and the
// operators of the linear functions on its image.
//
//     cargo run --example quaternionic_grassmannian

use eigenlab::catalog::grassmannian_family_members;
use eigenlab::lie::{cartan_split, Space};
use eigenlab::ops::{image_ops, quotient_ops};
use eigenlab::sampling::{random_point, SampleConfig};
use eigenlab::cartan::{cartan_map, quaternionic_closed_form};

pub fn run() -> eigenlab::Result<()> {
    let (m, n, alpha) = (1, 1, 1);
    let space = Space::QuaternionicGrassmannian { m, n };
    let pair = cartan_split(space)?;
    let p = random_point(pair.group(), &SampleConfig::new(5, 1), 0)?;
    let closed = quaternionic_closed_form(m, n, &p)?.distance(&cartan_map(&pair, &p)?);
    println!("{space}: |q Ihat q* Ihat - Phi(q)| = {closed:.1e}");

    let (lambda, mu) = space.claimed_eigenvalues();
    let half = -((m + n) as f64) / 2.0;
    println!("{:<14} {:>22} {:>12} {:>12} {:>12}", "psi", "value", "tau/psi", "kappa/psi^2", "tau_N/psi");
    for f in grassmannian_family_members(space, alpha)? {
        let v = f.eval_generic(&p);
        if v.norm() < 1e-12 {
            println!("{:<14} {:>22}", f.label, "identically zero");
            continue;
        }
        let q = quotient_ops(&pair, &f, &p)?;
        let (tau_n, kappa_n) = image_ops(&pair, &f.eta, &p)?;
        println!(
            "{:<14} {:>22.6} {:>12.8} {:>12.8} {:>12.8}",
            f.label,
            v,
            (q.tau_horizontal / v).re,
            (q.kappa_horizontal / (v * v)).re,
            (tau_n / v).re
        );
        assert!((q.tau_horizontal - v * lambda).norm() < 1e-10);
        assert!((q.kappa_horizontal - v * v * mu).norm() < 1e-10);
        assert!((tau_n - v * half).norm() < 1e-10 && (kappa_n + v * v * 0.25).norm() < 1e-10);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
