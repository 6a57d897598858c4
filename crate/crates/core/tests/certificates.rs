//! Certificates issued by the search replay cleanly, survive a text round
//! trip and are rejected once tampered with.

use ramsey_stepup::hyperverify::structural_verify;
use ramsey_stepup::probsearch::{families_for, SearchOutcome, MAX_C};
use ramsey_stepup::{
    search_good_base_graph, verify_certificate, verify_no_mono_clique, BaseGraph, Certificate,
    SearchParams,
};

fn search(params: &SearchParams, n: usize) -> SearchOutcome {
    search_good_base_graph(params, &families_for(params.l, n).unwrap()).unwrap()
}

#[test]
fn desk_certificate_for_k2() {
    let params = SearchParams::new(3, MAX_C, 123, 3).with_n(2).with_p(1.0);
    let SearchOutcome::Certificate(cert) = search(&params, 2) else {
        panic!()
    };
    let text = cert.to_text();
    assert_eq!(
        text,
        "RAMSEY-STEPUP-CERT v1\nl=3\nn=2\nc=0.0125\nseed=123\nattempt=0\nclaim=r3(4,4,4)>4\n\
         checks=clique_free,jpp_free_d2..d3,brute_force\nn 2\ne 1 2\n"
    );
    let SearchOutcome::Certificate(again) = search(&params, 2) else {
        panic!()
    };
    assert_eq!(again.to_text(), text);
    let parsed = Certificate::parse(&text).unwrap();
    assert_eq!(parsed, cert);
    assert!(verify_certificate(&parsed, true).unwrap().passed());
}

#[test]
fn random_certificates_replay() {
    let mut issued = 0;
    for (l, n, p) in [(3, 4, 0.6), (4, 5, 0.8), (4, 6, 0.85), (5, 6, 0.9)] {
        for seed in 0..5 {
            let params = SearchParams::new(l, MAX_C, seed, 200).with_n(n).with_p(p);
            let SearchOutcome::Certificate(cert) = search(&params, n) else {
                continue;
            };
            issued += 1;
            let fams = families_for(l, n).unwrap();
            let patterns: Vec<BaseGraph> =
                fams.values().flat_map(|f| f.patterns().to_vec()).collect();
            assert!(structural_verify(cert.graph(), l, &patterns).unwrap());
            assert!(verify_no_mono_clique(cert.graph(), n, l).unwrap().passed());
            let parsed = Certificate::parse(&cert.to_text()).unwrap();
            assert!(verify_certificate(&parsed, true).unwrap().passed());
            assert_eq!(search(&params, n), SearchOutcome::Certificate(cert));
        }
    }
    assert!(issued > 0);
}

#[test]
fn tampering_is_detected() {
    let params = SearchParams::new(3, MAX_C, 5, 3).with_n(2).with_p(1.0);
    let SearchOutcome::Certificate(cert) = search(&params, 2) else {
        panic!()
    };
    let tampered = cert.to_text().replace("e 1 2\n", "");
    let report = verify_certificate(&Certificate::parse(&tampered).unwrap(), false).unwrap();
    assert!(!report.passed());
    assert!(report.failures().contains(&"jpp_free_d2"));
}
