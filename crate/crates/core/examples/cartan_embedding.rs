// The Cartan map of a symmetric pair: membership, harmonicity, the factor-4
// pullback, invariance under the isotropy group and geodesic doubling.
//
//     cargo run --example cartan_embedding

use eigenlab::cartan::{
    cartan_map, harmonic_residual, k_invariance_residual, map_tension, pullback_factor, differential, Square,
};
use eigenlab::lie::{cartan_split, Space};
use eigenlab::matrix::mat_exp;
use eigenlab::sampling::{membership_residual, random_k_point, random_point, SampleConfig};
use num_complex::Complex64;

pub fn run() -> eigenlab::Result<()> {
    let cfg = SampleConfig::new(11, 1);
    for space in [
        Space::QuaternionicGrassmannian { m: 1, n: 1 },
        Space::RealGrassmannian { m: 2, n: 1 },
        Space::SuSp { n: 2 },
    ] {
        let pair = cartan_split(space)?;
        let p = random_point(pair.group(), &cfg, 0)?;
        let image = cartan_map(&pair, &p)?;
        println!("{space}  (sigma: {})", pair.involution.description());
        println!("  dim G/K = {}, dim k = {}", pair.p_basis.len(), pair.k_basis.len());
        println!("  image in G:         {:.1e}", membership_residual(pair.group(), &image));

        let tension = harmonic_residual(&pair, &p)?;
        let control = map_tension(&Square, &p, &pair.algebra.elements)?.max_abs();
        println!("  tension of Phi:     {tension:.1e}   (p -> p^2: {control:.3})");
        assert!(tension < 1e-9 && control > 1e-3);

        let x = &pair.p_basis[0];
        let factor = pullback_factor(&pair, &p, x, x)?.factor()?;
        let kill = differential(&pair, &p, &pair.k_basis[0])?.max_abs();
        println!("  pullback factor:    {factor:.12}   (|dPhi| on k: {kill:.1e})");
        assert!((factor - 4.0).abs() < 1e-10 && kill < 1e-12);

        let k = random_k_point(&pair, &cfg, 0)?;
        println!("  |Phi(pk) - Phi(p)|: {:.1e}", k_invariance_residual(&pair, &p, &k)?);

        let t = 0.3;
        let s = pair.involution.apply(&p);
        let ad = &(&s * x) * &s.adjoint();
        let along = cartan_map(&pair, &(&p * &mat_exp(&x.scale(Complex64::new(t, 0.0)))?))?;
        let doubled = &image * &mat_exp(&ad.scale(Complex64::new(2.0 * t, 0.0)))?;
        println!("  geodesic doubling:  {:.1e}", along.distance(&doubled));
        assert!(along.distance(&doubled) < 1e-12);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
