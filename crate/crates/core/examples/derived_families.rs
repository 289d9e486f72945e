// New eigenfamilies from old ones: homogeneous polynomials of degree d and
// products of families on product manifolds.
//
//     cargo run --example derived_families

use eigenlab::catalog::grassmannian_family_members;
use eigenlab::constructions::{polynomial_family, product_family, EigenFamily};
use eigenlab::lie::{cartan_split, Space};
use eigenlab::sampling::SampleConfig;

fn family(space: Space, alpha: usize) -> eigenlab::Result<EigenFamily> {
    let pair = cartan_split(space)?;
    EigenFamily::from_eigenfunctions(&pair, grassmannian_family_members(space, alpha)?)
}

fn report(f: &EigenFamily, cfg: &SampleConfig) -> eigenlab::Result<()> {
    let check = f.check(cfg)?;
    println!(
        "{:<48} {:>3} members  claimed ({:>6}, {:>5})  fitted ({:>12.8}, {:>12.8})  max residual {:.1e}",
        f.name,
        f.len(),
        f.lambda,
        f.mu,
        check.lambda_fit.unwrap_or(f64::NAN),
        check.mu_fit.unwrap_or(f64::NAN),
        check.tau.max.max(check.kappa.max)
    );
    assert!(check.tau.passes(1e-7) && check.kappa.passes(1e-7));
    Ok(())
}

pub fn run() -> eigenlab::Result<()> {
    let cfg = SampleConfig::new(4, 20);
    let quat = family(Space::QuaternionicGrassmannian { m: 1, n: 1 }, 2)?;
    let complex = family(Space::ComplexGrassmannian { m: 1, n: 2 }, 1)?;
    report(&quat, &cfg)?;
    for d in [2, 3] {
        report(&polynomial_family(&quat, d, None)?, &cfg)?;
        report(&polynomial_family(&complex, d, None)?, &cfg)?;
    }
    report(&product_family(&quat, &family(Space::QuaternionicGrassmannian { m: 1, n: 1 }, 1)?), &cfg)?;
    report(&product_family(&quat, &complex), &cfg)?;
    report(&product_family(&complex, &quat), &cfg)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
