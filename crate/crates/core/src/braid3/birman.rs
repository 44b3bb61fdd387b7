use super::burau::burau;
use super::{B3NormalForm, BraidWord};
use crate::error::{Error, Result};
use crate::poly::{HalfLaurent, TLaurent};

/// `V = (−√t)^e (t + t⁻¹ + tr ψ(w))` for a closed 3-braid, `e` the
/// exponent sum.
pub fn birman_jones(w: &BraidWord) -> Result<HalfLaurent> {
    let tr = burau(w)?.trace();
    Ok(with_prefactor(w.exponent_sum(), &tr))
}

fn with_prefactor(e: i64, inner_trace: &TLaurent) -> HalfLaurent {
    let inner = &TLaurent::from_terms([(1, 1), (-1, 1)]) + inner_trace;
    &HalfLaurent::neg_sqrt_t_pow(e) * &HalfLaurent::from_t(&inner)
}

/// The closed forms for families 2 and 3, as displayed in the source
/// formulas. The `m = −3` form carries a sign on its `t^{3n}` term that
/// the Burau trace does not reproduce; see the tests.
pub fn closed_form_jones(nf: &B3NormalForm) -> Result<HalfLaurent> {
    nf.validate()?;
    let t = |c: i64, e: i64| TLaurent::monomial(c, e);
    match *nf {
        B3NormalForm::Family1 { .. } => Err(Error::Unsupported("no closed-form Jones polynomial for family 1".into())),
        B3NormalForm::Family2 { n, m } => {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            Ok(with_prefactor(m + 6 * n, &(&t(1, 3 * n) + &t(sign, 3 * n + m))))
        }
        B3NormalForm::Family3 { n, m } => {
            // t^{3n}(−t)^{k} with k = −1, none, −2 for m = −1, −2, −3.
            let (e, extra) = match m {
                -1 => (6 * n - 2, t(-1, 3 * n - 1)),
                -2 => (6 * n - 3, TLaurent::zero()),
                _ => (6 * n - 4, t(1, 3 * n - 2)),
            };
            Ok(with_prefactor(e, &extra))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PdDiagram;
    use crate::jones::jones_of;

    fn t(s: &str) -> HalfLaurent {
        HalfLaurent::from_t(&s.parse().unwrap())
    }

    #[test]
    fn unlink() {
        let w = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(birman_jones(&w).unwrap(), t("t+2+t^-1"));
    }

    #[test]
    fn agrees_with_bracket_exactly() {
        for l in [vec![1, 1, 1], vec![1, -2, 1, -2], vec![1, 2, 1, 2, 1, 2, 1, -2], vec![-1, -1, 2, -1]] {
            let w = BraidWord::new(3, l).unwrap();
            let d = PdDiagram::close_braid(&w).unwrap();
            assert_eq!(birman_jones(&w).unwrap(), jones_of(&d).unwrap(), "{w}");
        }
    }

    #[test]
    fn closed_forms_match_trace_except_m_minus_three() {
        for n in -2..=2 {
            for m in -3..=3 {
                let nf = B3NormalForm::Family2 { n, m };
                let w = nf.to_word().unwrap();
                assert_eq!(closed_form_jones(&nf).unwrap(), birman_jones(&w).unwrap(), "{nf:?}");
            }
            for m in [-1, -2] {
                let nf = B3NormalForm::Family3 { n, m };
                let w = nf.to_word().unwrap();
                assert_eq!(closed_form_jones(&nf).unwrap(), birman_jones(&w).unwrap(), "{nf:?}");
            }
            // The trace gives −t^{3n}(−t)^{−2}: the printed form has the
            // opposite sign on that term.
            let nf = B3NormalForm::Family3 { n, m: -3 };
            let diff = &closed_form_jones(&nf).unwrap() - &birman_jones(&nf.to_word().unwrap()).unwrap();
            let expect = &HalfLaurent::neg_sqrt_t_pow(6 * n - 4) * &t(&format!("2t^{}", 3 * n - 2));
            assert_eq!(diff, expect);
        }
    }

    #[test]
    fn family3_m_minus_three_is_trefoil_at_n_zero() {
        let w = B3NormalForm::Family3 { n: 0, m: -3 }.to_word().unwrap();
        assert_eq!(birman_jones(&w).unwrap(), t("t^-1+t^-3-t^-4"));
    }
}
