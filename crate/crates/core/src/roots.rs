//! Bracketed scalar root finding.

use crate::error::{Error, Result};

/// Brent's method on a sign-changing bracket `[a, b]`.
///
/// Stops when the bracket is narrower than `xtol` (plus a few ulps of the
/// iterate) or `f` hits zero exactly.
pub fn brent<F>(mut f: F, a: f64, b: f64, xtol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (a, b);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    brent_with_values(&mut f, &mut a, &mut b, &mut fa, &mut fb, xtol, max_iter)
}

/// Same as [`brent`] when `f(a)` and `f(b)` are already known.
pub fn brent_known<F>(mut f: F, a: f64, fa: f64, b: f64, fb: f64, xtol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    brent_with_values(&mut f, &mut a, &mut b, &mut fa, &mut fb, xtol, max_iter)
}

fn brent_with_values<F>(
    f: &mut F,
    a: &mut f64,
    b: &mut f64,
    fa: &mut f64,
    fb: &mut f64,
    xtol: f64,
    max_iter: usize,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if *fa == 0.0 {
        return Ok(*a);
    }
    if *fb == 0.0 {
        return Ok(*b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Domain(format!(
            "root not bracketed: f({a}) = {fa}, f({b}) = {fb}"
        )));
    }
    let (mut c, mut fc) = (*a, *fa);
    let mut d = *b - *a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = *a;
            fc = *fa;
            d = *b - *a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            *a = *b;
            *b = c;
            c = *a;
            *fa = *fb;
            *fb = fc;
            fc = *fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - *b);
        if m.abs() <= tol || *fb == 0.0 {
            return Ok(*b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = *fb / *fa;
            let (mut p, mut q);
            if *a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = *fa / fc;
                let r = *fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (*b - *a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        *a = *b;
        *fa = *fb;
        *b += if d.abs() > tol { d } else { tol.copysign(m) };
        *fb = f(*b)?;
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        context: format!("Brent iteration stalled near {b}"),
    })
}

/// Plain bisection on a sign change; used where the function is only known
/// to change sign (reciprocal gamma, node counts).
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!("root not bracketed in [{lo}, {hi}]")));
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= xtol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_cube_root() {
        let r = brent(|x| Ok(x * x * x - 2.0), 0.0, 2.0, 1e-14, 100).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-13);
    }

    #[test]
    fn brent_rejects_unbracketed() {
        assert!(brent(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-12, 50).is_err());
    }

    #[test]
    fn bisect_finds_pi() {
        let r = bisect(f64::sin, 3.0, 3.5, 1e-15, 200).unwrap();
        assert!((r - std::f64::consts::PI).abs() < 1e-14);
    }
}
