/// Shortest round-trip decimal for `x`, with negative zero printed as `0`.
/// Magnitudes outside `[1e-5, 1e16)` use exponent notation.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else if x.is_finite() && (x.abs() < 1e-5 || x.abs() >= 1e16) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}
