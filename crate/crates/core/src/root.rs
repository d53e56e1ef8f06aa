//! Bracketing root finders.

use crate::error::{Error, Result};

/// Root of `f` on `[lo, hi]` by bisection, stopping when the bracket is no
/// wider than `width` or after `max_iter` halvings. Returns the midpoint of
/// the final bracket.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, width: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::NotBracketed { lo, hi });
    }
    for _ in 0..max_iter {
        if hi - lo <= width {
            break;
        }
        let mid = 0.5 * (lo + hi);
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

/// Largest `x` in `[lo, hi]` (to within `width`) at which the monotone
/// predicate `holds` is still true, given `holds(lo)` and `!holds(hi)`.
pub fn last_true<F>(mut holds: F, mut lo: f64, mut hi: f64, width: f64, max_iter: usize) -> f64
where
    F: FnMut(f64) -> bool,
{
    for _ in 0..max_iter {
        if hi - lo <= width {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14, 200).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn rejects_unbracketed() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-9, 80),
            Err(Error::NotBracketed { .. })
        ));
    }

    #[test]
    fn last_true_threshold() {
        let x = last_true(|x| x < 0.3, 0.0, 1.0, 1e-12, 100);
        assert!((x - 0.3).abs() < 1e-11);
    }
}
