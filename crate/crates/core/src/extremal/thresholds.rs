use crate::error::{Error, Result};
use crate::util::binomial;

fn check_range(n: usize, r: usize) -> Result<()> {
    if n < 2 || r < 1 || r > n - 1 {
        return Err(Error::Domain(format!(
            "need n >= 2 and 1 <= r <= n - 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Fewest edges forcing md <= r on connected graphs of order n.
pub fn f(n: usize, r: usize) -> Result<usize> {
    check_range(n, r)?;
    Ok(if r == n - 1 {
        n - 1
    } else {
        binomial(n - r + 1, 2) + 2 * r + 1 - n
    })
}

/// Most edges guaranteeing md >= r on connected graphs of order n.
pub fn g(n: usize, r: usize) -> Result<usize> {
    check_range(n, r)?;
    let three_halves = |x: usize| (3 * x).div_ceil(2);
    Ok(match r {
        1 => binomial(n, 2),
        2 => three_halves(n - 1) - 1,
        _ if r > n / 2 => n - 1,
        _ if n % 2 == 1 && n >= 7 => (3 * n).div_ceil(2) - r,
        _ if n.is_multiple_of(2) && n >= 6 => 3 * n / 2 - r,
        _ => return Err(Error::Domain(format!("no closed form for g({n}, {r})"))),
    })
}

/// Edge count of `H_{n,r}` (for n >= 6 and 3 <= r <= n/2).
pub fn h_nr_edge_count(n: usize, r: usize) -> Result<usize> {
    if n < 6 || r < 3 || r > n / 2 {
        return Err(Error::Domain(format!(
            "need n >= 6 and 3 <= r <= n/2, got n = {n}, r = {r}"
        )));
    }
    let three_halves = |x: usize| (3 * x).div_ceil(2);
    Ok(if n.is_multiple_of(2) {
        three_halves(n - 2 * r) + 2 * r
    } else {
        three_halves(n - 2 * r + 1) + 2 * r - 1
    })
}
