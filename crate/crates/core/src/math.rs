//! Small fixed-size numerics: cubic roots, eigenvalues of 2x2/3x3 drift
//! matrices and Gaussian elimination for the continuation solver.

use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Float;

/// sqrt(x) continued into the complex plane for negative x.
pub(crate) fn sqrt_signed(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

fn eval_cubic(z: Complex64, c2: f64, c1: f64, c0: f64) -> (Complex64, Complex64) {
    let p = ((z + c2) * z + c1) * z + c0;
    let dp = (3.0 * z + 2.0 * c2) * z + c1;
    (p, dp)
}

fn polish(mut z: Complex64, c2: f64, c1: f64, c0: f64) -> Complex64 {
    for _ in 0..4 {
        let (p, dp) = eval_cubic(z, c2, c1, c0);
        if dp.norm_sqr() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm_sqr() < 1e-60 {
            break;
        }
    }
    z
}

/// All three roots of the monic cubic `z^3 + c2 z^2 + c1 z + c0`.
///
/// The closed form (trigonometric for three real roots, Cardano otherwise)
/// is fragile near degenerate roots, so every root is polished by a few
/// Newton steps on the original polynomial.
pub fn cubic_roots(c2: f64, c1: f64, c0: f64) -> [Complex64; 3] {
    // depressed form t^3 + p t + q with z = t - c2/3
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    let disc = 0.25 * q * q + p * p * p / 27.0;

    let roots = if disc > 0.0 {
        // one real root; pick the cube root that avoids cancellation
        let s = disc.sqrt();
        let a = if q >= 0.0 { -q / 2.0 - s } else { -q / 2.0 + s };
        let u = a.cbrt();
        let v = if u != 0.0 { -p / (3.0 * u) } else { 0.0 };
        let t1 = u + v;
        let re = -t1 / 2.0;
        let im = 0.75f64.sqrt() * (u - v);
        [
            Complex64::new(t1, 0.0),
            Complex64::new(re, im),
            Complex64::new(re, -im),
        ]
    } else if p == 0.0 {
        // triple root (q must be ~0 here since disc <= 0)
        [Complex64::new(-(q / 2.0).cbrt(), 0.0); 3]
    } else {
        // three real roots
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let phi = arg.acos();
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for (k, o) in out.iter_mut().enumerate() {
            let t = m * ((phi - 2.0 * core::f64::consts::PI * k as f64) / 3.0).cos();
            *o = Complex64::new(t, 0.0);
        }
        out
    };

    let mut zs = [Complex64::new(0.0, 0.0); 3];
    for (i, r) in roots.iter().enumerate() {
        zs[i] = polish(r - shift, c2, c1, c0);
    }
    zs
}

/// Real roots of the monic cubic inside `[lo, hi]`, sorted ascending.
///
/// A root is considered real when its imaginary part is below `im_tol`
/// (complex-pair roots produced by rounding near a fold collapse onto the
/// real axis under the Newton polish, so the tolerance can be tight).
pub fn real_roots_in(c2: f64, c1: f64, c0: f64, lo: f64, hi: f64, im_tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for r in cubic_roots(c2, c1, c0) {
        if r.im.abs() <= im_tol && r.re >= lo && r.re <= hi {
            out.push(r.re);
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// Eigenvalues of a real 2x2 matrix.
pub(crate) fn eig2(m: &[[f64; 2]; 2]) -> [Complex64; 2] {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let s = sqrt_signed(tr * tr / 4.0 - det);
    [Complex64::new(tr / 2.0, 0.0) + s, Complex64::new(tr / 2.0, 0.0) - s]
}

/// Eigenvalues of a real 3x3 matrix via its characteristic cubic.
pub(crate) fn eig3(m: &[[f64; 3]; 3]) -> [Complex64; 3] {
    let tr = m[0][0] + m[1][1] + m[2][2];
    // sum of principal 2x2 minors
    let m01 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let m02 = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    let m12 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    // det(lambda I - M) = lambda^3 - tr lambda^2 + (sum minors) lambda - det
    cubic_roots(-tr, m01 + m02 + m12, -det)
}

/// Solve `a x = b` in place by Gaussian elimination with partial pivoting.
/// Returns false when the matrix is numerically singular.
pub(crate) fn solve_linear<const N: usize>(a: &mut [[f64; N]; N], b: &mut [f64; N]) -> bool {
    for col in 0..N {
        let mut piv = col;
        for row in col + 1..N {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col] == 0.0 || !a[piv][col].is_finite() {
            return false;
        }
        if piv != col {
            a.swap(piv, col);
            b.swap(piv, col);
        }
        let d = a[col][col];
        for row in col + 1..N {
            let f = a[row][col] / d;
            if f == 0.0 {
                continue;
            }
            a[row][col] = 0.0;
            for k in col + 1..N {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    for col in (0..N).rev() {
        let mut s = b[col];
        for k in col + 1..N {
            s -= a[col][k] * b[k];
        }
        b[col] = s / a[col][col];
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cubic_three_real_roots() {
        // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
        let mut r: Vec<f64> = cubic_roots(-6.0, 11.0, -6.0).iter().map(|c| c.re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(r[0], 1.0, max_relative = 1e-12);
        assert_relative_eq!(r[1], 2.0, max_relative = 1e-12);
        assert_relative_eq!(r[2], 3.0, max_relative = 1e-12);
    }

    #[test]
    fn cubic_complex_pair() {
        // (z+2)(z^2+1) = z^3 + 2z^2 + z + 2
        let roots = cubic_roots(2.0, 1.0, 2.0);
        let mut real_count = 0;
        for r in roots {
            if r.im.abs() < 1e-12 {
                real_count += 1;
                assert_relative_eq!(r.re, -2.0, max_relative = 1e-12);
            } else {
                assert_relative_eq!(r.im.abs(), 1.0, max_relative = 1e-10);
                assert!(r.re.abs() < 1e-10);
            }
        }
        assert_eq!(real_count, 1);
    }

    #[test]
    fn cubic_near_double_root() {
        // (z-1)^2 (z-2) with a tiny split
        let e = 1e-5;
        let (r1, r2, r3) = (1.0 - e, 1.0 + e, 2.0);
        let c2 = -(r1 + r2 + r3);
        let c1 = r1 * r2 + r1 * r3 + r2 * r3;
        let c0 = -r1 * r2 * r3;
        let mut got = real_roots_in(c2, c1, c0, 0.0, 3.0, 1e-7);
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got.len(), 3);
        assert_relative_eq!(got[0], r1, epsilon = 1e-9);
        assert_relative_eq!(got[1], r2, epsilon = 1e-9);
        assert_relative_eq!(got[2], r3, epsilon = 1e-12);
    }

    #[test]
    fn eig3_known_matrix() {
        // triangular: eigenvalues on the diagonal
        let m = [[1.0, 5.0, -3.0], [0.0, -2.0, 7.0], [0.0, 0.0, 4.0]];
        let mut ev: Vec<f64> = eig3(&m).iter().map(|c| c.re).collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(ev[0], -2.0, max_relative = 1e-11);
        assert_relative_eq!(ev[1], 1.0, max_relative = 1e-11);
        assert_relative_eq!(ev[2], 4.0, max_relative = 1e-11);
    }

    #[test]
    fn linear_solve_roundtrip() {
        let a = [[2.0, 1.0, -1.0], [-3.0, -1.0, 2.0], [-2.0, 1.0, 2.0]];
        let x_true = [1.0, -2.0, 0.5];
        let mut b = [0.0; 3];
        for i in 0..3 {
            for j in 0..3 {
                b[i] += a[i][j] * x_true[j];
            }
        }
        let mut aa = a;
        assert!(solve_linear(&mut aa, &mut b));
        for i in 0..3 {
            assert_relative_eq!(b[i], x_true[i], max_relative = 1e-12);
        }
    }
}
