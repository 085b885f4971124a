//! Plain bisection. Every equation solved in this crate is monotone on the
//! bracket, so nothing fancier is warranted.

/// Finds the root of `f` on `[lo, hi]`, assuming `f(lo) <= 0 <= f(hi)`.
///
/// Runs until the bracket is narrower than `tol` (or 200 halvings, which for
/// any bracket of width <= 2pi is far below f64 resolution).
pub fn bisect(mut lo: f64, mut hi: f64, tol: f64, f: impl Fn(f64) -> f64) -> f64 {
    debug_assert!(lo <= hi);
    debug_assert!(f(lo) <= 0.0 && f(hi) >= 0.0, "bisect bracket does not straddle the root");
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket exhausted at f64 resolution
        }
        if f(mid) < 0.0 {
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
    fn finds_square_root() {
        let r = bisect(0.0, 2.0, 1e-14, |x| x * x - 2.0);
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn endpoint_root() {
        let r = bisect(0.0, 1.0, 1e-14, |x| x);
        assert!(r.abs() < 1e-13);
    }
}
