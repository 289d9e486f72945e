// Square sums of the canonical generators and of orthonormal algebra bases.
//
//     cargo run --example generator_identities

use eigenlab::lie::{algebra_basis, canonical, square_sum, Group};
use eigenlab::matrix::CMatrix;
use num_complex::Complex64;

fn scalar_part(m: &CMatrix) -> (f64, f64) {
    let n = m.rows();
    let c = m.trace() / n as f64;
    let gap = m.try_sub(&CMatrix::identity(n).scale(c)).map(|d| d.max_abs()).unwrap_or(f64::NAN);
    (c.re, gap)
}

pub fn run() -> eigenlab::Result<()> {
    println!("{:>3} {:>10} {:>10} {:>10} {:>10}", "n", "sum Y^2", "sum X^2", "sum D^2", "gap");
    for n in 2..=6 {
        let c = canonical(n);
        let ys: Vec<CMatrix> = c.pairs().map(|(r, s)| c.y(r, s)).collect();
        let xs: Vec<CMatrix> = c.pairs().map(|(r, s)| c.x(r, s)).collect();
        let ds: Vec<CMatrix> = (1..=n).map(|t| c.d(t)).collect();
        let (y, gy) = scalar_part(&square_sum(&ys)?);
        let (x, gx) = scalar_part(&square_sum(&xs)?);
        let (d, gd) = scalar_part(&square_sum(&ds)?);
        println!("{n:>3} {y:>10.4} {x:>10.4} {d:>10.4} {:>10.1e}", gy.max(gx).max(gd));
        let half = (n as f64 - 1.0) / 2.0;
        assert!((y + half).abs() < 1e-15 && (x - half).abs() < 1e-15 && (d - 1.0).abs() < 1e-15);
    }

    println!();
    for group in [Group::so(4), Group::su(3), Group::u(3), Group::sp(2)] {
        let basis = algebra_basis(group)?;
        let (c, gap) = scalar_part(&square_sum(&basis.elements)?);
        let expected = -(group.dimension() as f64) / group.matrix_size() as f64;
        println!(
            "{group}: dim {:>2}, Gram residual {:.1e}, sum Z^2 = {c:.4} I (expected {expected:.4}, gap {gap:.1e})",
            basis.len(),
            basis.orthonormality_residual()
        );
        assert!((Complex64::new(c, 0.0) - expected).norm() < 1e-14);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
