//! Dense linear-algebra routines shared by the physics modules.

use alloc::{format, string::String, vec, vec::Vec};

use nalgebra::linalg::SymmetricEigen;
use num_complex::Complex;

use crate::{C64, CMatrix, CVector, Error, RMatrix, RVector, Result};

const HERMITIAN_EIG_EPS: f64 = 1e-14;
const HERMITIAN_EIG_MAX_ITER: usize = 10_000;

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(m: &CMatrix) -> Result<(RVector, CMatrix)> {
    let se = SymmetricEigen::try_new(m.clone(), HERMITIAN_EIG_EPS, HERMITIAN_EIG_MAX_ITER)
        .ok_or(Error::EigenConvergence)?;
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let vals = RVector::from_iterator(order.len(), order.iter().map(|&i| se.eigenvalues[i]));
    let mut vecs = CMatrix::zeros(m.nrows(), m.ncols());
    for (k, &i) in order.iter().enumerate() {
        vecs.set_column(k, &se.eigenvectors.column(i));
    }
    Ok((vals, vecs))
}

/// `exp(-i h dt)` for Hermitian `h`, via spectral decomposition. Unitary up
/// to the accuracy of the eigensolver.
pub fn spectral_unitary(h: &CMatrix, dt: f64) -> Result<CMatrix> {
    let (vals, vecs) = hermitian_eigen(h)?;
    let phases = CVector::from_iterator(
        vals.len(),
        vals.iter().map(|&e| Complex::from_polar(1.0, -e * dt)),
    );
    let mut scaled = vecs.clone();
    for (k, phase) in phases.iter().enumerate() {
        let mut col = scaled.column_mut(k);
        col *= *phase;
    }
    Ok(scaled * vecs.adjoint())
}

/// Largest entry of `U^H U - I`.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let mut g = u.adjoint() * u;
    for i in 0..g.nrows() {
        g[(i, i)] -= Complex::new(1.0, 0.0);
    }
    g.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigendecomposition of a unitary matrix.
///
/// Splits `U` into the commuting Hermitian pair `A = (U + U^H)/2` and
/// `B = (U - U^H)/(2i)` (cosine and sine of the eigenphases), diagonalizes
/// `A`, and resolves clusters of equal cosine by diagonalizing `B` on each
/// cluster. Eigenvalues are recovered per vector from the Rayleigh quotient,
/// which is second-order accurate for normal matrices. Returns eigenvalues on
/// the unit circle and the eigenvector matrix; no ordering is imposed.
pub fn unitary_eigen(u: &CMatrix) -> Result<(Vec<C64>, CMatrix)> {
    let dim = u.nrows();
    let a = (u + u.adjoint()).scale(0.5);
    let b = (u - u.adjoint()) * Complex::new(0.0, -0.5);

    let (cos_vals, mut vecs) = hermitian_eigen(&a)?;

    // Cluster equal cosines; `hermitian_eigen` sorts ascending.
    const COS_TOL: f64 = 1e-7;
    let mut start = 0;
    while start < dim {
        let mut end = start + 1;
        while end < dim && cos_vals[end] - cos_vals[end - 1] <= COS_TOL {
            end += 1;
        }
        if end - start > 1 {
            let sub = vecs.columns(start, end - start).into_owned();
            let mut b_sub = sub.adjoint() * &b * &sub;
            hermitize(&mut b_sub);
            let se = SymmetricEigen::try_new(b_sub, HERMITIAN_EIG_EPS, HERMITIAN_EIG_MAX_ITER)
                .ok_or(Error::EigenConvergence)?;
            let rotated = sub * se.eigenvectors;
            for (k, col) in rotated.column_iter().enumerate() {
                vecs.set_column(start + k, &col);
            }
        }
        start = end;
    }

    let mut vals = Vec::with_capacity(dim);
    let mut worst = 0.0f64;
    for k in 0..dim {
        let v = vecs.column(k);
        let lambda = (v.adjoint() * u * v)[(0, 0)];
        let lambda = lambda / lambda.norm().max(1e-300);
        let residual = (u * v - v.into_owned() * lambda).norm();
        worst = worst.max(residual);
        vals.push(lambda);
    }
    if worst > 1e-8 {
        return Err(Error::EigenConvergence);
    }
    Ok((vals, vecs))
}

/// Make each column's largest-magnitude component real and positive
/// (deterministic representatives of the phase gauge).
pub fn phase_fix_columns(m: &mut CMatrix) {
    for mut col in m.column_iter_mut() {
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for (i, z) in col.iter().enumerate() {
            let mag = z.norm_sqr();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        let z = col[best];
        if z.norm() > 0.0 {
            let phase = z.conj() / z.norm();
            col *= phase;
        }
    }
}

fn hermitize(m: &mut CMatrix) {
    let n = m.nrows();
    for i in 0..n {
        m[(i, i)] = Complex::new(m[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (m[(i, j)] + m[(j, i)].conj()).scale(0.5);
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }
}

/// Fold `x` into the half-open window `[-w/2, w/2)`; returns the folded value
/// and the integer `nu` with `x = folded + nu * w`.
pub fn fold_to_zone(x: f64, w: f64) -> (f64, i64) {
    let nu = libm::floor(x / w + 0.5);
    let mut folded = x - nu * w;
    let mut nu = nu as i64;
    // Guard the upper edge against rounding: the zone is half-open.
    if folded >= w / 2.0 {
        folded -= w;
        nu += 1;
    } else if folded < -w / 2.0 {
        folded += w;
        nu -= 1;
    }
    (folded, nu)
}

/// Matrix exponential of a real matrix by Pade approximation with scaling
/// and squaring (Higham's degree-13 scheme).
pub fn expm_real(m: &RMatrix) -> RMatrix {
    let n = m.nrows();
    debug_assert_eq!(n, m.ncols());
    let norm = one_norm(m);
    const THETA_13: f64 = 5.371920351148152;
    let s = if norm > THETA_13 {
        libm::ceil(libm::log2(norm / THETA_13)) as i32
    } else {
        0
    };
    let a = m.scale(libm::exp2(-f64::from(s)));

    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];

    let ident = RMatrix::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &a6 * (&a6.scale(B[13]) + &a4.scale(B[11]) + &a2.scale(B[9]))
        + &a6.scale(B[7])
        + &a4.scale(B[5])
        + &a2.scale(B[3])
        + ident.scale(B[1]);
    let u = &a * u_inner;
    let v = &a6 * (&a6.scale(B[12]) + &a4.scale(B[10]) + &a2.scale(B[8]))
        + &a6.scale(B[6])
        + &a4.scale(B[4])
        + &a2.scale(B[2])
        + ident.scale(B[0]);

    let num = &v + &u;
    let den = &v - &u;
    let mut r = den
        .lu()
        .solve(&num)
        .expect("Pade denominator is nonsingular for scaled input");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

fn one_norm(m: &RMatrix) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = m.column(j).iter().map(|x| x.abs()).sum();
        worst = worst.max(s);
    }
    worst
}

/// Adaptive Simpson quadrature.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64> {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::Quadrature(format!(
                "max recursion depth reached on [{a}, {b}]"
            )));
        }
        Ok(recurse(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1)?
            + recurse(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1)?)
    }

    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 48)
}

/// Null-space dimension of a real matrix from its singular values.
pub fn kernel_dimension(m: &RMatrix, rel_tol: f64) -> Result<usize> {
    let svals = m
        .clone()
        .try_svd(false, false, 1e-14, 100_000)
        .ok_or(Error::EigenConvergence)?
        .singular_values;
    let smax = svals.iter().cloned().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return Ok(m.nrows());
    }
    Ok(svals.iter().filter(|&&s| s < smax * rel_tol).count())
}

/// Human-readable summary used by diagnostics.
pub fn format_complex(z: C64) -> String {
    format!("{:+.6e}{:+.6e}i", z.re, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(re: f64, im: f64) -> C64 {
        Complex::new(re, im)
    }

    #[test]
    fn hermitian_eigen_sorted_and_accurate() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[
                ci(2.0, 0.0),
                ci(0.0, 1.0),
                ci(0.5, 0.0),
                ci(0.0, -1.0),
                ci(1.0, 0.0),
                ci(0.0, 0.0),
                ci(0.5, 0.0),
                ci(0.0, 0.0),
                ci(-1.0, 0.0),
            ],
        );
        let (vals, vecs) = hermitian_eigen(&m).unwrap();
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
        for k in 0..3 {
            let v = vecs.column(k).into_owned();
            let r = &m * &v - &v * ci(vals[k], 0.0);
            assert!(r.norm() < 1e-12);
        }
    }

    #[test]
    fn spectral_unitary_is_unitary_and_correct() {
        // Pauli-x type Hermitian: exp(-i s x) rotates
        let h = CMatrix::from_row_slice(2, 2, &[ci(0.0, 0.0), ci(1.0, 0.0), ci(1.0, 0.0), ci(0.0, 0.0)]);
        let u = spectral_unitary(&h, 0.7).unwrap();
        assert!(unitarity_defect(&u) < 1e-14);
        // exp(-i 0.7 x) = cos(0.7) I - i sin(0.7) x
        assert!((u[(0, 0)] - ci(libm::cos(0.7), 0.0)).norm() < 1e-12);
        assert!((u[(0, 1)] - ci(0.0, -libm::sin(0.7))).norm() < 1e-12);
    }

    #[test]
    fn unitary_eigen_recovers_phases() {
        // Diagonal-in-a-rotated-basis unitary with a degenerate cosine pair
        // (phases +p and -p share cos p).
        let p = 0.9f64;
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![
            Complex::from_polar(1.0, p),
            Complex::from_polar(1.0, -p),
            Complex::from_polar(1.0, 0.3),
        ]));
        // rotate by a random-ish unitary built from a Hermitian generator
        let h = CMatrix::from_row_slice(
            3,
            3,
            &[
                ci(0.4, 0.0),
                ci(0.1, 0.2),
                ci(0.0, -0.3),
                ci(0.1, -0.2),
                ci(-0.2, 0.0),
                ci(0.5, 0.1),
                ci(0.0, 0.3),
                ci(0.5, -0.1),
                ci(0.1, 0.0),
            ],
        );
        let w = spectral_unitary(&h, 1.0).unwrap();
        let u = &w * d * w.adjoint();
        let (vals, vecs) = unitary_eigen(&u).unwrap();
        let mut phases: Vec<f64> = vals.iter().map(|z| z.arg()).collect();
        phases.sort_by(f64::total_cmp);
        let mut expected = vec![-p, 0.3, p];
        expected.sort_by(f64::total_cmp);
        for (got, want) in phases.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
        for k in 0..3 {
            let v = vecs.column(k).into_owned();
            let lambda = vals[k];
            assert!((&u * &v - &v * lambda).norm() < 1e-10);
        }
    }

    #[test]
    fn fold_half_open_interval() {
        let w = 1.0;
        let (e, nu) = fold_to_zone(0.5, w);
        assert_eq!((e, nu), (-0.5, 1));
        let (e, nu) = fold_to_zone(-0.5, w);
        assert_eq!((e, nu), (-0.5, 0));
        let (e, nu) = fold_to_zone(2.3, w);
        assert!((e - 0.3).abs() < 1e-12 && nu == 2);
        let (e, nu) = fold_to_zone(-1.7, w);
        assert!((e - 0.3).abs() < 1e-12 && nu == -2);
    }

    #[test]
    fn expm_matches_closed_forms() {
        // nilpotent: exp([[0,1],[0,0]]) = [[1,1],[0,1]]
        let n = RMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        let e = expm_real(&n);
        assert!((e[(0, 0)] - 1.0).abs() < 1e-14 && (e[(0, 1)] - 1.0).abs() < 1e-14);

        // rotation generator with large norm exercises scaling/squaring
        let t = 20.0f64;
        let g = RMatrix::from_row_slice(2, 2, &[0.0, -t, t, 0.0]);
        let e = expm_real(&g);
        assert!((e[(0, 0)] - libm::cos(t)).abs() < 1e-11);
        assert!((e[(1, 0)] - libm::sin(t)).abs() < 1e-11);
    }

    #[test]
    fn simpson_integrates_smooth_functions() {
        let v = adaptive_simpson(&libm::sin, 0.0, core::f64::consts::PI, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-10);
        let w = adaptive_simpson(&|x: f64| 1.0 / (1.0 + x * x), 0.0, 1.0, 1e-12).unwrap();
        assert!((w - core::f64::consts::FRAC_PI_4).abs() < 1e-10);
    }

    #[test]
    fn kernel_dimension_detects_rank_deficiency() {
        let m = RMatrix::from_row_slice(3, 3, &[1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(kernel_dimension(&m, 1e-11).unwrap(), 1);
        let z = RMatrix::zeros(2, 2);
        assert_eq!(kernel_dimension(&z, 1e-11).unwrap(), 2);
    }
}
