//! Wedderburn block sizes of a semisimple algebra given by structure
//! constants: numeric spectral splitting of the regular representation at a
//! random central element, with exact integer post-checks.

use super::algebra::HopfAlgebra;
use crate::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-8;

/// Real 2n x 2m embedding [[Re, -Im], [Im, Re]] of a complex matrix.
fn real_embed(m: &[Vec<Complex64>]) -> DMatrix<f64> {
    let r = m.len();
    let c = m[0].len();
    DMatrix::from_fn(2 * r, 2 * c, |i, j| {
        let (bi, ii) = (i / r, i % r);
        let (bj, jj) = (j / c, j % c);
        match (bi, bj) {
            (0, 0) | (1, 1) => m[ii][jj].re,
            (0, 1) => -m[ii][jj].im,
            _ => m[ii][jj].im,
        }
    })
}

fn complex_rank(m: &[Vec<Complex64>]) -> usize {
    let e = real_embed(m);
    let scale = e.amax().max(1.0);
    e.rank(TOL * scale) / 2
}

/// Wedderburn block dimensions (sorted ascending) of the algebra underlying
/// `h`, which must be semisimple.
pub fn algebra_type(h: &HopfAlgebra) -> Result<Vec<usize>> {
    let d = h.dim;
    if d == 0 {
        return Err(Error::NotSemisimple);
    }
    // numeric structure constants: c[i][j][k] with e_i e_j = sum_k c e_k
    let mut dense = vec![vec![vec![Complex64::new(0.0, 0.0); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in &h.mult[i][j] {
                dense[i][j][*k] = c.to_complex();
            }
        }
    }
    // trace form non-degeneracy: T[i][j] = tr(L_{e_i e_j})
    let tr = |i: usize, j: usize| -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (k, c) in &h.mult[i][j] {
            // tr(L_{e_k}) = sum_s coeff of e_s in e_k e_s
            let mut t = Complex64::new(0.0, 0.0);
            for s2 in 0..d {
                t += dense[*k][s2][s2];
            }
            s += c.to_complex() * t;
        }
        s
    };
    let trace_form: Vec<Vec<Complex64>> = (0..d).map(|i| (0..d).map(|j| tr(i, j)).collect()).collect();
    if complex_rank(&trace_form) != d {
        return Err(Error::NotSemisimple);
    }
    // center: nullspace of z |-> [z, e_j] for all j
    let mut comm: Vec<Vec<Complex64>> = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            comm.push((0..d).map(|i| dense[i][j][k] - dense[j][i][k]).collect());
        }
    }
    let comm_re = real_embed(&comm);
    let svd = comm_re.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().unwrap();
    let smax = svd.singular_values.max().max(1.0);
    let null_rows: Vec<usize> = (0..v_t.nrows())
        .filter(|&r| {
            svd.singular_values
                .get(r)
                .map_or(true, |&s| s < TOL * smax)
        })
        .collect();
    let center_dim = null_rows.len() / 2;
    if center_dim == 0 {
        return Err(Error::SpectralSplit);
    }
    for attempt in 0..6u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 + attempt);
        // random real combination of nullspace rows -> complex central z
        let mut zr = vec![0.0f64; 2 * d];
        for &r in &null_rows {
            let w: f64 = rng.gen_range(-1.0..1.0);
            for c in 0..2 * d {
                zr[c] += w * v_t[(r, c)];
            }
        }
        let z: Vec<Complex64> = (0..d).map(|i| Complex64::new(zr[i], zr[d + i])).collect();
        // left multiplication by z
        let lz: Vec<Vec<Complex64>> = (0..d)
            .map(|k| {
                (0..d)
                    .map(|j| (0..d).map(|i| z[i] * dense[i][j][k]).sum())
                    .collect()
            })
            .collect();
        let eigs = real_embed(&lz).complex_eigenvalues();
        let escale = eigs.iter().map(|e| e.norm()).fold(1.0f64, f64::max);
        // cluster candidate eigenvalues
        let mut cands: Vec<Complex64> = Vec::new();
        'outer: for e in eigs.iter() {
            let e = Complex64::new(e.re, e.im);
            for c in &cands {
                if (e - c).norm() < 1e-6 * escale {
                    continue 'outer;
                }
            }
            cands.push(e);
        }
        let mut blocks = Vec::new();
        let mut total = 0usize;
        let mut good = true;
        for lam in cands {
            let shifted: Vec<Vec<Complex64>> = (0..d)
                .map(|k| {
                    (0..d)
                        .map(|j| lz[k][j] - if j == k { lam } else { Complex64::new(0.0, 0.0) })
                        .collect()
                })
                .collect();
            let mult = d - complex_rank(&shifted);
            if mult == 0 {
                continue;
            }
            let b = (mult as f64).sqrt().round() as usize;
            if b * b != mult {
                good = false;
                break;
            }
            blocks.push(b);
            total += mult;
        }
        if good && total == d && blocks.len() == center_dim {
            blocks.sort_unstable();
            return Ok(blocks);
        }
    }
    Err(Error::SpectralSplit)
}

/// Block sizes of the dual algebra (= coalgebra type of h).
pub fn coalgebra_type(h: &HopfAlgebra) -> Result<Vec<usize>> {
    algebra_type(&h.dual())
}
