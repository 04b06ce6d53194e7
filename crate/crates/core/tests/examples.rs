mod common;

use common::*;
use rothlab::graph::emit_graph6;
use rothlab::linalg::exact::{is_exact_eigenvector, rational};
use rothlab::report::analyze;
use rothlab::roth::{build_q_mu, classify_q_mu, harmcond_check, s_roth_oracle, HarmcondWitness, VerdictReason};
use rothlab::spectra::signless_laplacian_int;

#[test]
fn example_one() {
    let inst = instance(&EXAMPLE_1);
    assert_eq!(inst.d2(), &[4, 4, 4, 4, 1, 1, 1]);
    let v = s_roth_oracle(&inst).unwrap();
    assert!(v.is_s_roth);
    assert!((v.mu - EXAMPLE_1.mu).abs() < 5e-5);
    let sm = build_q_mu(&inst, v.mu).unwrap();
    assert!(max_abs_diff(&sm.q_mu, &EXAMPLE_1_Q_MU) < 5e-4);
    assert!(scaled_diff(&v.eigenvector, &EXAMPLE_1_X) < 1e-3);
    assert!(harmcond_check(&inst).holds);
}

#[test]
fn example_two_is_m_matrix_without_harmcond() {
    let inst = instance(&EXAMPLE_2);
    assert_eq!(inst.d2(), &[4, 4, 3, 3, 2, 3, 1]);
    let v = s_roth_oracle(&inst).unwrap();
    assert!((v.mu - EXAMPLE_2.mu).abs() < 5e-5);
    let sm = build_q_mu(&inst, v.mu).unwrap();
    assert!(max_abs_diff(&sm.q_mu, &EXAMPLE_2_Q_MU) < 5e-4);
    let cls = classify_q_mu(&sm).unwrap();
    assert!(cls.m_matrix && cls.irreducible);
    let h = harmcond_check(&inst);
    assert_eq!(h.witness, Some(HarmcondWitness::LowSum { i: 0, j: 1, sum: rational(5, 6) }));
}

#[test]
fn example_three_inverse_positive() {
    let inst = instance(&EXAMPLE_3);
    let v = s_roth_oracle(&inst).unwrap();
    assert!(v.is_s_roth);
    assert!((v.mu - EXAMPLE_3.mu).abs() < 5e-5);
    let sm = build_q_mu(&inst, v.mu).unwrap();
    assert!(max_abs_diff(&sm.q_mu, &EXAMPLE_3_Q_MU) < 5e-4);
    let inv = sm.q_mu.inverse().unwrap();
    assert!(max_abs_diff(&inv, &EXAMPLE_3_Q_MU_INV) < 5e-4);
    let cls = classify_q_mu(&sm).unwrap();
    assert!(cls.inverse_positive && cls.minpositive && !cls.z_matrix);
}

#[test]
fn example_four_positive_w() {
    let inst = instance(&EXAMPLE_4);
    let v = s_roth_oracle(&inst).unwrap();
    assert!(v.is_s_roth);
    assert!((v.mu - EXAMPLE_4.mu).abs() < 5e-5);
    let sm = build_q_mu(&inst, v.mu).unwrap();
    assert!(max_abs_diff(&sm.q_mu, &EXAMPLE_4_Q_MU) < 5e-4);
    assert!(!classify_q_mu(&sm).unwrap().inverse_positive);
    // printed with T positive; the oracle normalizes S positive
    let w: Vec<f64> = v.w(4).iter().map(|x| -x).collect();
    assert!(w.iter().all(|&x| x > 0.0));
    for (a, b) in w.iter().zip(EXAMPLE_4_W) {
        assert!((a - b).abs() < 1e-3, "{a} vs {b}");
    }
    // N_12 is empty on a G-edge: the harmonic sum is 0
    assert_eq!(harmcond_check(&inst).witness, Some(HarmcondWitness::LowSum { i: 0, j: 1, sum: rational(0, 1) }));
}

#[test]
fn join_example_exact() {
    let inst = join_example();
    let x: Vec<_> = [1, 1, 1, 1, 0, 0, -1, -1, -1, -1].iter().map(|&v| rational(v, 1)).collect();
    assert!(is_exact_eigenvector(&signless_laplacian_int(inst.h()), &x, 2));
    let v = s_roth_oracle(&inst).unwrap();
    assert!((v.mu - 2.0).abs() < 1e-9);
    assert_eq!(v.reason, VerdictReason::ZeroEntry);
    let sm = build_q_mu(&inst, 2.0).unwrap();
    let printed = [
        [5.0, -1.0, -1.0, -1.0, 0.0, 0.0],
        [-1.0, 5.0, -1.0, -1.0, 0.0, 0.0],
        [-1.0, -1.0, 5.0, -1.0, 0.0, 0.0],
        [-1.0, -1.0, -1.0, 5.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 7.0, -1.0],
        [0.0, 0.0, 0.0, 0.0, -1.0, 7.0],
    ];
    assert!(max_abs_diff(&sm.q_mu, &printed) < 1e-12);
}

#[test]
fn reports_are_consistent_on_examples() {
    for ex in [&EXAMPLE_1, &EXAMPLE_2, &EXAMPLE_3, &EXAMPLE_4] {
        let r = analyze(&instance(ex)).unwrap();
        assert!(r.is_consistent());
        assert!(r.s_roth);
    }
    let r = analyze(&join_example()).unwrap();
    assert!(r.is_consistent() && !r.s_roth);
}

#[test]
fn instance_json_round_trip() {
    let inst = instance(&EXAMPLE_2);
    let text = serde_json::to_string(&inst.to_json()).unwrap();
    let back = rothlab::CompositeInstance::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(emit_graph6(back.h()), emit_graph6(inst.h()));
    assert_eq!(back.k(), inst.k());
}
