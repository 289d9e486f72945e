//! Parameter matrices `A` for the trace-type eigenfunctions `q -> tr(Phi(q) W A)`.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::Group;
use crate::matrix::{CMatrix, Scalar};
use crate::sampling::{random_point, SampleConfig};

/// Rank threshold on singular values.
pub const RANK_THRESHOLD: f64 = 1e-10;

/// Relative tolerance of the algebraic checks (`A^2 = 0`, `tr A = 0`, symmetry).
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamTag {
    /// `A = a a^t` with `a^t a = 0`: symmetric, rank one, `A^2 = 0`, `tr A = 0`.
    Rank1Isotropic,
    /// `A = sum_{r,s} a_r b_s Y_rs = (a b^t - b a^t) / sqrt(2)`.
    SkewAb,
    /// `A = a a^t`.
    SymmetricAa,
}

impl fmt::Display for ParamTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamTag::Rank1Isotropic => "rank1-isotropic",
            ParamTag::SkewAb => "skew-ab",
            ParamTag::SymmetricAa => "symmetric-aa",
        })
    }
}

/// A validated parameter matrix together with the vectors it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamMatrix {
    pub matrix: CMatrix,
    pub tag: ParamTag,
    pub vectors: Vec<Vec<Complex64>>,
}

/// `a a^t`.
pub fn outer_aa(a: &[Complex64]) -> CMatrix {
    CMatrix::from_fn(a.len(), a.len(), |r, s| a[r] * a[s])
}

/// `(a b^t - b a^t) / sqrt(2)`; the zero matrix when `b = a`.
pub fn skew_ab(a: &[Complex64], b: &[Complex64]) -> CMatrix {
    let k = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_fn(a.len(), a.len(), |r, s| (a[r] * b[s] - b[r] * a[s]) * k)
}

/// Bilinear (not Hermitian) product `v^t w`.
pub fn bilinear(v: &[Complex64], w: &[Complex64]) -> Complex64 {
    v.iter().zip(w).map(|(x, y)| x * y).sum()
}

fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Build `A` from `inputs` and check every invariant of `tag`.
pub fn make_param_matrix(tag: ParamTag, inputs: &[Vec<Complex64>]) -> Result<ParamMatrix> {
    let expected = match tag {
        ParamTag::SkewAb => 2,
        _ => 1,
    };
    if inputs.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "{tag} needs {expected} vector(s), got {}",
            inputs.len()
        )));
    }
    let len = inputs[0].len();
    if len == 0 || inputs.iter().any(|v| v.len() != len) {
        return Err(Error::InvalidParameter(format!("{tag}: vectors must be non-empty and of equal length")));
    }
    if inputs.iter().any(|v| vector_norm(v) == 0.0) {
        return Err(Error::InvalidParameter(format!("{tag}: zero vector")));
    }
    let matrix = match tag {
        ParamTag::SkewAb => skew_ab(&inputs[0], &inputs[1]),
        _ => outer_aa(&inputs[0]),
    };
    let param = ParamMatrix {
        matrix,
        tag,
        vectors: inputs.to_vec(),
    };
    param.check()?;
    Ok(param)
}

impl ParamMatrix {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// Re-verify the invariants of the tag.
    pub fn check(&self) -> Result<()> {
        let a = &self.matrix;
        let scale = a.norm().max(f64::MIN_POSITIVE);
        let fail = |what: &str| Err(Error::InvalidParameter(format!("{}: {what}", self.tag)));
        let rank = a.rank(RANK_THRESHOLD * scale);
        match self.tag {
            ParamTag::SkewAb => {
                if a.distance(&(-&a.transpose())) > IDENTITY_TOLERANCE * scale {
                    return fail("not skew-symmetric");
                }
                if rank != 2 {
                    return fail(&format!("a and b are linearly dependent (rank {rank})"));
                }
            }
            ParamTag::SymmetricAa | ParamTag::Rank1Isotropic => {
                if a.distance(&a.transpose()) > IDENTITY_TOLERANCE * scale {
                    return fail("not symmetric");
                }
                if rank != 1 {
                    return fail(&format!("rank {rank}, expected 1"));
                }
                if self.tag == ParamTag::Rank1Isotropic {
                    if (a * a).norm() > IDENTITY_TOLERANCE * scale * scale {
                        return fail("A^2 != 0");
                    }
                    if a.trace().norm() > IDENTITY_TOLERANCE * scale {
                        return fail("trace A != 0");
                    }
                }
            }
        }
        Ok(())
    }
}

fn uniform_complex(rng: &mut impl Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
        .collect()
}

/// Random `a a^t` with `a` in `C^len`.
pub fn random_symmetric_aa(len: usize, cfg: &SampleConfig, index: u64) -> Result<ParamMatrix> {
    let mut rng = cfg.rng(index);
    make_param_matrix(ParamTag::SymmetricAa, &[uniform_complex(&mut rng, len)])
}

/// Random skew `A` from independent `a, b` in `C^len`.
pub fn random_skew_ab(len: usize, cfg: &SampleConfig, index: u64) -> Result<ParamMatrix> {
    let mut rng = cfg.rng(index);
    let a = uniform_complex(&mut rng, len);
    let b = uniform_complex(&mut rng, len);
    make_param_matrix(ParamTag::SkewAb, &[a, b])
}

/// Random isotropic vector `u + i v` supported on coordinates `range`
/// (0-based, at least two of them), with `u, v` real, orthogonal and of equal
/// length.
pub fn random_isotropic_vector(
    len: usize,
    range: std::ops::Range<usize>,
    cfg: &SampleConfig,
    index: u64,
) -> Result<Vec<Complex64>> {
    if range.end > len || range.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "isotropic support {range:?} needs at least two coordinates inside 0..{len}"
        )));
    }
    let mut rng = cfg.rng(index);
    let mut u: Vec<f64> = range.clone().map(|_| rng.random_range(-1.0..=1.0)).collect();
    let mut v: Vec<f64> = range.clone().map(|_| rng.random_range(-1.0..=1.0)).collect();
    let nu = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    u.iter_mut().for_each(|x| *x /= nu);
    let dot: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    v.iter_mut().zip(&u).for_each(|(y, x)| *y -= dot * x);
    let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|y| *y /= nv);
    let mut a = vec![Complex64::new(0.0, 0.0); len];
    for (k, i) in range.enumerate() {
        a[i] = Complex64::new(u[k], v[k]);
    }
    Ok(a)
}

/// Random rank-one isotropic `A` supported on `range`.
pub fn random_rank1_isotropic(
    len: usize,
    range: std::ops::Range<usize>,
    cfg: &SampleConfig,
    index: u64,
) -> Result<ParamMatrix> {
    let a = random_isotropic_vector(len, range, cfg, index)?;
    make_param_matrix(ParamTag::Rank1Isotropic, &[a])
}

/// Basis `e_k - i e_{n+k}` (`k = 1..n`) of the standard isotropic subspace of `C^{2n}`.
pub fn standard_isotropic_basis(n: usize) -> Vec<Vec<Complex64>> {
    (0..n)
        .map(|k| {
            let mut v = vec![Complex64::new(0.0, 0.0); 2 * n];
            v[k] = Complex64::new(1.0, 0.0);
            v[n + k] = Complex64::new(0.0, -1.0);
            v
        })
        .collect()
}

/// Two random vectors of `O V_0`, with `V_0` the standard isotropic subspace
/// and `O` a random element of `SO(2n)`, combined into a skew `A`.
pub fn random_isotropic_skew(n: usize, cfg: &SampleConfig, index: u64) -> Result<ParamMatrix> {
    let o = random_point(Group::so(2 * n), cfg, index)?;
    let basis: Vec<Vec<Complex64>> = standard_isotropic_basis(n)
        .iter()
        .map(|v| (0..2 * n).map(|i| (0..2 * n).map(|j| o[(i, j)] * v[j]).sum()).collect())
        .collect();
    let mut rng = cfg.derive("isotropic-coefficients").rng(index);
    let mut combine = || -> Vec<Complex64> {
        let c = uniform_complex(&mut rng, n);
        (0..2 * n)
            .map(|i| basis.iter().zip(&c).map(|(v, ck)| v[i] * ck).sum())
            .collect()
    };
    let a = combine();
    let b = combine();
    make_param_matrix(ParamTag::SkewAb, &[a, b])
}

/// `det[a, b, conj a, conj b]` for `a, b` in `C^4`. Real and nonzero for a
/// two-dimensional isotropic subspace; its sign tells the two `SO(4)` orbits
/// of such subspaces apart.
pub fn isotropic_orientation(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != 4 || b.len() != 4 {
        return Err(Error::InvalidParameter("orientation is defined on C^4".into()));
    }
    let m = CMatrix::from_fn(4, 4, |i, j| match j {
        0 => a[i],
        1 => b[i],
        2 => Scalar::conj(a[i]),
        _ => Scalar::conj(b[i]),
    });
    Ok(m.determinant().re)
}
