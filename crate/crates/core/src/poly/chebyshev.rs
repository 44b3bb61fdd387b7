use super::laurent::IntLaurent;
use crate::error::{Error, Result};

/// `S_k(x)`: `S_{-1} = 0`, `S_0 = 1`, `S_k = x S_{k-1} - S_{k-2}`.
pub fn chebyshev_s(k: i64) -> Result<IntLaurent> {
    if k < -1 {
        return Err(Error::InvalidArgument(format!("S_k needs k >= -1, got {k}")));
    }
    let x = IntLaurent::var();
    let (mut prev, mut cur) = (IntLaurent::zero(), IntLaurent::one());
    if k == -1 {
        return Ok(prev);
    }
    for _ in 0..k {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `σ_n = (αⁿ − βⁿ)/(α − β)` with `α + β = x`, `αβ = 1`, extended oddly to
/// negative `n`; equals `sign(n)·S_{|n|−1}(x)`.
pub fn sigma(n: i64) -> IntLaurent {
    if n == 0 {
        return IntLaurent::zero();
    }
    let s = chebyshev_s(n.abs() - 1).expect("|n| - 1 >= 0");
    if n < 0 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn chebyshev_examples() {
        assert!(chebyshev_s(-1).unwrap().is_zero());
        assert_eq!(chebyshev_s(0).unwrap(), IntLaurent::one());
        assert_eq!(chebyshev_s(2).unwrap(), p("x^2-1"));
        assert_eq!(chebyshev_s(3).unwrap(), p("x^3-2x"));
        assert!(chebyshev_s(-2).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert!(sigma(0).is_zero());
        assert_eq!(sigma(1), IntLaurent::one());
        assert_eq!(sigma(-2), p("-x"));
    }

    #[test]
    fn sigma_recurrence() {
        let x = IntLaurent::var();
        for n in -20..=20 {
            assert_eq!(&x * &sigma(n), &sigma(n + 1) + &sigma(n - 1), "n = {n}");
            assert_eq!(sigma(-n), -sigma(n));
        }
    }

    /// σ_n from the defining quotient, computed in Z[x][α]/(α² − xα + 1):
    /// (αⁿ − βⁿ)/(α − β) = Σ_{j=0}^{n-1} α^{n-1-j} β^j, with β = x − α.
    #[test]
    fn sigma_matches_root_quotient() {
        // Represent a + bα as (a, b); α² = xα − 1.
        fn mul(u: &(IntLaurent, IntLaurent), v: &(IntLaurent, IntLaurent)) -> (IntLaurent, IntLaurent) {
            let x = IntLaurent::var();
            let (a, b) = u;
            let (c, d) = v;
            let bd = b * d;
            let c0 = &(a * c) - &bd;
            let c1 = &(&(a * d) + &(b * c)) + &(&bd * &x);
            (c0, c1)
        }
        let alpha = (IntLaurent::zero(), IntLaurent::one());
        let beta = (IntLaurent::var(), -IntLaurent::one());
        for n in 1..=8i64 {
            let mut total = (IntLaurent::zero(), IntLaurent::zero());
            for j in 0..n {
                let mut term = (IntLaurent::one(), IntLaurent::zero());
                for _ in 0..(n - 1 - j) {
                    term = mul(&term, &alpha);
                }
                for _ in 0..j {
                    term = mul(&term, &beta);
                }
                total = (&total.0 + &term.0, &total.1 + &term.1);
            }
            assert!(total.1.is_zero());
            assert_eq!(total.0, sigma(n));
        }
    }
}
