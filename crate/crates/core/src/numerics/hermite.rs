use super::{Complex, Jet2};
use crate::error::{Error, Result};

/// Largest Hermite index accepted before the recurrence is considered
/// unreliable in double precision.
pub const MAX_HERMITE_INDEX: usize = 64;

fn check_index(n: usize) -> Result<()> {
    if n > MAX_HERMITE_INDEX {
        Err(Error::IndexTooLarge(n))
    } else {
        Ok(())
    }
}

/// Returns `[H_{n-2}, H_{n-1}, H_n](z)`, with indices below zero reported as 0.
fn hermite_tail(n: usize, z: Complex) -> [Complex; 3] {
    let zero = Complex::new(0.0, 0.0);
    let mut prev2 = zero;
    let mut prev = zero;
    let mut cur = Complex::new(1.0, 0.0);
    for k in 0..n {
        let next = z * cur * 2.0 - prev * (2.0 * k as f64);
        prev2 = prev;
        prev = cur;
        cur = next;
    }
    [prev2, prev, cur]
}

/// Physicists' Hermite polynomial `H_n(z)` by the three-term recurrence
/// `H_{k+1} = 2z H_k - 2k H_{k-1}`.
pub fn hermite(n: usize, z: Complex) -> Result<Complex> {
    check_index(n)?;
    Ok(hermite_tail(n, z)[2])
}

/// Jet of `H_n(u(x))`, using `H_n' = 2n H_{n-1}` and `H_n'' = 4n(n-1) H_{n-2}`.
pub fn hermite_jet(n: usize, u: Jet2) -> Result<Jet2> {
    check_index(n)?;
    let [h2, h1, h0] = hermite_tail(n, u.v);
    let nf = n as f64;
    let dh = h1 * (2.0 * nf);
    let ddh = h2 * (4.0 * nf * (nf - 1.0));
    Ok(Jet2::new(
        h0,
        dh * u.d1,
        ddh * u.d1 * u.d1 + dh * u.d2,
    ))
}
