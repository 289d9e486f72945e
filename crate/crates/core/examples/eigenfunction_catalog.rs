// Linear eigenfunctions on every classical space: tau(phi)/phi and
// kappa(phi, phi)/phi^2 at a random point against the claimed (lambda, mu).
//
//     cargo run --example eigenfunction_catalog

use eigenlab::catalog::default_functions;
use eigenlab::lie::{cartan_split, Space};
use eigenlab::ops::quotient_ops;
use eigenlab::sampling::{random_point, SampleConfig};

pub fn run() -> eigenlab::Result<()> {
    let cfg = SampleConfig::new(2, 1);
    let spaces = [
        Space::SuSo { n: 3 },
        Space::SpU { n: 2 },
        Space::SoU { n: 2 },
        Space::SuSp { n: 2 },
        Space::RealGrassmannian { m: 2, n: 2 },
        Space::ComplexGrassmannian { m: 1, n: 2 },
        Space::QuaternionicGrassmannian { m: 1, n: 2 },
    ];
    println!("{:<22} {:<14} {:>9} {:>9} {:>16} {:>16}", "space", "function", "lambda", "mu", "tau/phi", "kappa/phi^2");
    for space in spaces {
        let pair = cartan_split(space)?;
        let p = random_point(pair.group(), &cfg, 0)?;
        let functions = default_functions(space, &cfg)?;
        for f in functions.iter().take(2) {
            let v = f.eval_generic(&p);
            let q = quotient_ops(&pair, f, &p)?;
            let (l, m) = (q.tau_horizontal / v, q.kappa_horizontal / (v * v));
            println!(
                "{:<22} {:<14} {:>9.4} {:>9.4} {:>16.10} {:>16.10}",
                space.to_string(),
                f.label,
                f.lambda,
                f.mu,
                l.re,
                m.re
            );
            assert!((l.re - f.lambda).abs() < 1e-8 && (m.re - f.mu).abs() < 1e-8);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
