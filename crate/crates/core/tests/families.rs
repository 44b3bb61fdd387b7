mod common;

use proptest::prelude::*;

use common::*;
use qalt::diagram::PdDiagram;
use qalt::jones::{determinant_bounded, obstruction_check_with, Verdict};
use qalt::kanenobu::{kanenobu_q, qa_candidate_scan, KANENOBU_DET};
use qalt::montesinos::{
    corollary26_obstruction, l_family, montesinos_det, pretzel3_det, pretzel_family_report, MontesinosPresentation,
    PretzelFamily,
};
use qalt::poly::Integer;
use qalt::qpoly::{q_polynomial, QEngine};

#[test]
fn kanenobu_origin_is_figure_eight_square() {
    let f = pd(FIGURE8);
    let sum = f.connected_sum(1, &f, 2).unwrap();
    assert_eq!(q_polynomial(&sum).unwrap(), kanenobu_q(0, 0));
    assert_eq!(determinant_bounded(&sum, 16).unwrap(), Integer::from(KANENOBU_DET));
}

#[test]
fn kanenobu_three_zero_is_11n50() {
    let d = fixture("11n_50");
    assert_eq!(q_polynomial(&d).unwrap(), kanenobu_q(3, 0));
    assert_eq!(determinant_bounded(&d, 16).unwrap(), Integer::from(KANENOBU_DET));
    // The same knot is L(2, 3).
    let m = l_family(2, 3).unwrap();
    assert_eq!(montesinos_det(&m).unwrap(), KANENOBU_DET);
}

#[test]
fn kanenobu_scan_is_finite_and_symmetric() {
    let scan = qa_candidate_scan();
    assert!(!scan.is_empty());
    for k in &scan {
        assert!(kanenobu_q(k.p, k.q).degree() < KANENOBU_DET as i64);
    }
    // The degree grows past 25 in every direction just outside the scan.
    for p in -30..=30i64 {
        for q in [-30, 30] {
            assert!(kanenobu_q(p, q).degree() >= 25);
            assert!(kanenobu_q(q, p).degree() >= 25);
        }
    }
}

fn pipeline(entries: &[i64]) -> (i64, u64) {
    let d = PdDiagram::pretzel(entries).unwrap();
    let engine = QEngine::new().with_max_crossings(20);
    let (_, ev) = obstruction_check_with(&d, &engine, 24).unwrap();
    (ev.deg_q, ev.det)
}

#[test]
fn pretzel_closed_forms_against_pipeline() {
    assert_eq!(pipeline(&[3, 3, -3]), (7, 9));
    assert_eq!(pipeline(&[4, 4, -4]), (10, 16));
    assert_eq!(pipeline(&[5, 4, -3]), (10, 7));
    for n in 3..=4 {
        let r = pretzel_family_report(PretzelFamily::C, n).unwrap();
        assert_eq!(pipeline(&r.entries), (r.deg_q, r.det as u64));
    }
    // Outside the odd r > 3 range the family A formula still predicts the
    // pipeline at r = 3, where deg Q ≥ det.
    let (deg, det) = PretzelFamily::A.closed_form(3);
    assert_eq!(pipeline(&PretzelFamily::A.entries(3)), (deg, det as u64));
}

#[test]
fn l_family_obstruction() {
    for n in 2..10 {
        let m = l_family(2, n).unwrap();
        let o = corollary26_obstruction(&m.tangles, 1, 0, n).unwrap();
        assert_eq!(o.det, 25);
        let expect = if n >= o.threshold_k { Verdict::NotQuasiAlternating } else { Verdict::Inconclusive };
        assert_eq!(o.verdict, expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// `P(p₁, …, p_r, −q)` is `M(1; (p₁,1), …, (p_r,1), (q, q−1))`.
    #[test]
    fn montesinos_det_matches_pretzels(ps in prop::collection::vec(2i64..=5, 2..=3), q in 2i64..=5) {
        let tangles: Vec<(i64, i64)> = ps.iter().map(|&p| (p, 1)).collect();
        let m = MontesinosPresentation::new(1, tangles, (q, q - 1)).unwrap();
        let det = montesinos_det(&m).unwrap();
        let mut entries = ps.clone();
        entries.push(-q);
        let d = PdDiagram::pretzel(&entries).unwrap();
        prop_assert_eq!(Integer::from(det), determinant_bounded(&d, 24).unwrap());
        if ps.len() == 2 {
            prop_assert_eq!(det, pretzel3_det(ps[0], ps[1], -q));
        }
    }
}
