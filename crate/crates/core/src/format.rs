//! Shared text rendering of linear combinations.

use crate::scalar::Scalar;

/// Renders `Σ c·x` as `2*x - y + 1/2*z`, or `0` when empty.
pub(crate) fn linear_combination<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        let (neg, mag) = (c.is_negative(), c.abs());
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
