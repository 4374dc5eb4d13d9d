mod common;

use common::{chain, kron, q, Dense, Dn};
use weakhopf::hopf::{
    canonical_map, check_left_hopf, chi_witness, idempotent_e_t, idempotent_f, opposite,
    solve_antipode, verify_whm, whm_report,
};
use weakhopf::zoo::{corpus, corpus_entry, super_exterior, Source};
use weakhopf::LinMap;

const SAMPLES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

/// `s`, `t`, `r`, `r^op` for the symmetric swap.
fn structure_oracle(dn: &Dn) -> [Dense; 4] {
    let (mu, eta, delta, eps, one) = (&dn.mu, &dn.eta, &dn.delta, &dn.eps, &dn.one);
    let c = dn.sw();
    let t = chain(&[
        &kron(&[one, eta]),
        &kron(&[one, delta]),
        &kron(&[&c, one]),
        &kron(&[one, mu]),
        &kron(&[one, eps]),
    ]);
    let r = chain(&[
        &kron(&[eta, one]),
        &kron(&[delta, one]),
        &kron(&[one, &c]),
        &kron(&[mu, one]),
        &kron(&[eps, one]),
    ]);
    let s = chain(&[
        &kron(&[eta, one]),
        &kron(&[delta, one]),
        &kron(&[one, mu]),
        &kron(&[one, eps]),
    ]);
    let rop = chain(&[
        &kron(&[one, eta]),
        &kron(&[one, delta]),
        &kron(&[mu, one]),
        &kron(&[eps, one]),
    ]);
    [s, t, r, rop]
}

#[test]
fn antipode_is_inversion_exactly_when_the_table_is_a_group() {
    for e in corpus() {
        let res = solve_antipode(&e.bimonoid).unwrap();
        match &e.source {
            Source::Groupoid(g) => {
                let nu = res
                    .nu
                    .as_ref()
                    .unwrap_or_else(|| panic!("{}: no antipode", e.name));
                assert_eq!(
                    Dense::of(nu),
                    common::groupoid_inverse_oracle(g),
                    "{}",
                    e.name
                );
                assert!(res.unique && res.invertible, "{}", e.name);
            }
            Source::Monoid(m) => {
                assert_eq!(res.nu.is_some(), common::is_group_oracle(m), "{}", e.name);
            }
        }
    }
    for name in ["idempotent", "nilpotent"] {
        let res = solve_antipode(&corpus_entry(name).unwrap().bimonoid).unwrap();
        assert!(res.nu.is_none() && res.nu_op.is_none(), "{name}");
    }
}

#[test]
fn matrix_algebra_antipode_transposes_matrix_units() {
    let res = solve_antipode(&corpus_entry("pair2").unwrap().bimonoid).unwrap();
    // f_ij at index 2i + j goes to f_ji
    let expected =
        LinMap::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    assert_eq!(res.nu.unwrap(), expected);
}

#[test]
fn antipode_identities_hold_whenever_it_exists() {
    for e in corpus() {
        let res = solve_antipode(&e.bimonoid).unwrap();
        let Some(nu) = &res.nu else { continue };
        assert!(
            res.equations_report.all_hold(),
            "{}: {:?}",
            e.name,
            res.equations_report.failed_names()
        );

        let dn = Dn::of(&e.bimonoid);
        let [s, t, r, rop] = structure_oracle(&dn);
        let nu = Dense::of(nu);
        assert_eq!(dn.conv(&nu, &dn.one), t, "{}", e.name);
        assert_eq!(dn.conv(&dn.one, &nu), r, "{}", e.name);
        assert_eq!(dn.conv(&nu, &r), nu, "{}", e.name);
        assert_eq!(dn.conv(&t, &nu), nu, "{}", e.name);
        assert_eq!(nu.after(&s), r, "{}", e.name);
        assert_eq!(nu.after(&rop), t, "{}", e.name);
        assert_eq!(s.after(&nu), t, "{}", e.name);
        assert_eq!(rop.after(&nu), r, "{}", e.name);
    }
}

#[test]
fn weak_hopf_identities_hold_for_chi_built_from_the_antipode() {
    for e in corpus() {
        let b = &e.bimonoid;
        let Some(nu) = solve_antipode(b).unwrap().nu else {
            continue;
        };
        for (x, y) in SAMPLES {
            let rep = verify_whm(b, &nu, x, y).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(rep.len(), 5);
            let chi = Dense::of(&chi_witness(b, &nu, x, y));
            let can = Dense::of(&canonical_map(b, x, y).unwrap());
            let ee = Dense::of(&idempotent_e_t(b, x, y).unwrap());
            let ff = Dense::of(&idempotent_f(b, x, y).unwrap());
            assert_eq!(can.after(&chi), ee, "{} at ({x},{y})", e.name);
            assert_eq!(chi.after(&can), ff, "{} at ({x},{y})", e.name);
            assert_eq!(chi.after(&ee), chi);
            assert_eq!(ff.after(&chi), chi);
            assert_eq!(ee.after(&can).after(&ff), can);
        }
    }
}

#[test]
fn on_group_algebras_can_is_invertible_with_inverse_chi() {
    for name in ["trivial", "z2", "z3", "z4"] {
        let b = corpus_entry(name).unwrap().bimonoid;
        let nu = solve_antipode(&b).unwrap().nu.unwrap();
        for (x, y) in SAMPLES {
            assert!(idempotent_e_t(&b, x, y).unwrap().is_identity(), "{name}");
            assert!(idempotent_f(&b, x, y).unwrap().is_identity(), "{name}");
            let can = Dense::of(&canonical_map(&b, x, y).unwrap());
            let chi = Dense::of(&chi_witness(&b, &nu, x, y));
            assert!(
                can.after(&chi).is_identity() && chi.after(&can).is_identity(),
                "{name}"
            );
        }
    }
}

#[test]
fn a_wrong_antipode_is_caught() {
    let b = corpus_entry("z3").unwrap().bimonoid;
    let rep = whm_report(&b, &b.id(), 1, 1).unwrap();
    assert!(!rep.all_hold());
    assert!(verify_whm(&b, &b.id(), 1, 1).is_err());
}

#[test]
fn hopf_verdicts_coincide_on_the_corpus() {
    for e in corpus() {
        let b = &e.bimonoid;
        let (rep, v) = check_left_hopf(b).unwrap();
        assert!(v.coincide(), "{}: {v:?}", e.name);
        assert_eq!(
            v.antipode_invertible,
            e.expected_antipode().is_some(),
            "{}",
            e.name
        );
        let res = solve_antipode(b).unwrap();
        if let Some(inv) = &res.nu_inverse {
            assert!(rep.all_hold(), "{}: {:?}", e.name, rep.failed_names());
            assert!(
                res.equations_report.holds_with_prefix("op_antipode"),
                "{}",
                e.name
            );
            assert_eq!(res.nu_op.as_ref(), Some(inv), "{}", e.name);
        } else {
            assert_eq!(
                rep.failed_names(),
                vec!["left_hopf.nu_op_exists"],
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn opposite_of_matrix_units_reverses_composition() {
    let b = corpus_entry("pair2").unwrap().bimonoid;
    let op = opposite(&b);
    // f_ij · f_kl = δ_jk f_il, so in B^op f_ij ·op f_kl = δ_li f_kj
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let col = (2 * i + j) * 4 + (2 * k + l);
                    for row in 0..4 {
                        let want = if l == i && row == 2 * k + j {
                            q(1)
                        } else {
                            q(0)
                        };
                        assert_eq!(Dense::of(op.mu()).a[row][col], want);
                    }
                }
            }
        }
    }
    let (_, v) = check_left_hopf(&b).unwrap();
    assert!(v.left_weak_hopf);
}

#[test]
fn exterior_superalgebra_has_the_sign_antipode() {
    let b = super_exterior();
    let res = solve_antipode(&b).unwrap();
    assert_eq!(res.nu.unwrap(), LinMap::from_int_rows(&[&[1, 0], &[0, -1]]));
    assert!(
        res.equations_report.all_hold(),
        "{:?}",
        res.equations_report.failed_names()
    );
    let (rep, v) = check_left_hopf(&b).unwrap();
    assert!(v.coincide() && v.antipode_invertible, "{v:?}");
    assert!(rep.all_hold(), "{:?}", rep.failed_names());
}
