use std::time::{Duration, Instant};

use hpcad::corpus;
use hpcad::psd::{psd_hp_two, Verdict};

#[test]
fn f5_is_psd() {
    let t = Instant::now();
    let v = psd_hp_two(&corpus::f_family(5).unwrap()).unwrap();
    assert_eq!(v.verdict, Verdict::Psd);
    assert!(v.witness.is_none());
    assert!(t.elapsed() < Duration::from_secs(300));
}

#[test]
fn g5_is_not_psd_with_exact_witness() {
    let t = Instant::now();
    let g = corpus::g_family(5).unwrap();
    let v = psd_hp_two(&g).unwrap();
    assert_eq!(v.verdict, Verdict::NotPsd);
    assert!(g.sign_at(&v.witness.unwrap()) < 0);
    assert!(t.elapsed() < Duration::from_secs(300));
}

#[test]
fn b1_verdict_matches_f5() {
    let b = corpus::b_family(1).unwrap();
    let f = corpus::f_family(5).unwrap();
    assert_eq!(
        psd_hp_two(&b).unwrap().verdict,
        psd_hp_two(&f).unwrap().verdict
    );
}

#[test]
fn small_family_members() {
    // the cyclic form is indefinite below four variables
    for (n, psd) in [(2, false), (3, false), (4, true)] {
        let f = corpus::f_family(n).unwrap();
        let v = psd_hp_two(&f).unwrap();
        assert_eq!(v.is_psd(), psd, "F({n})");
        if let Some(w) = v.witness {
            assert!(f.sign_at(&w) < 0);
        }
        let g = corpus::g_family(n).unwrap();
        let v = psd_hp_two(&g).unwrap();
        assert!(!v.is_psd(), "G({n})");
        assert!(g.sign_at(&v.witness.unwrap()) < 0);
    }
}
