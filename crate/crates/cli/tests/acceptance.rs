//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;

use common::{chain, dense_rank, hcat, int_map, kron, random_idempotent, Dense, Dn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weakhopf::emcat::{base_monoid, coherence_check, frobenius_failures, RightModule};
use weakhopf::hopf::{
    canonical_map, check_left_hopf, chi_witness, idempotent_e_t, idempotent_f, solve_antipode,
    verify_whm,
};
use weakhopf::lincore::{solve_linear, split_idempotent, Solution};
use weakhopf::wbm::{check_all, check_tau_axioms, check_weak_bimonoid, sqcap, t_map};
use weakhopf::zoo::{corpus, corpus_entry, mutate, MutationTarget, Source};
use weakhopf::{AxiomReport, WeakBimonoid};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const DIMS: [usize; 2] = [1, 2];
const SAMPLES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn witnesses_match_oracle(b: &WeakBimonoid, rep: &AxiomReport) -> Outcome {
    let laws = Dn::of(b).laws();
    for e in rep.failures() {
        let w = e
            .witness
            .as_ref()
            .ok_or(format!("{} has no witness", e.name))?;
        let (_, l, r) = laws
            .iter()
            .find(|(n, _, _)| *n == e.name)
            .ok_or(format!("unknown law {}", e.name))?;
        ensure!(
            l != r && Dense::of(&w.lhs) == *l && Dense::of(&w.rhs) == *r,
            "{}: witness disagrees with the oracle",
            e.name
        );
    }
    Ok(())
}

fn axiom_suite() -> Outcome {
    for e in corpus() {
        let rep = check_all(&e.bimonoid);
        ensure!(rep.all_hold(), "{} fails {:?}", e.name, rep.failed_names());
        for (name, l, r) in Dn::of(&e.bimonoid).laws() {
            ensure!(l == r, "{}: oracle rejects {name}", e.name);
        }
    }
    let mut mutants = 0;
    for name in ["discrete2", "z2", "pair2", "z3", "idempotent"] {
        let b = corpus_entry(name).unwrap().bimonoid;
        for t in MutationTarget::ALL {
            let m = mutate(&b, t).map_err(|e| e.to_string())?;
            let rep = check_all(&m);
            ensure!(t.fails_in(&rep), "{name}/{t} does not fail its target");
            witnesses_match_oracle(&m, &rep)?;
            mutants += 1;
        }
    }
    ensure!(mutants >= 6, "only {mutants} mutants");
    Ok(())
}

fn tau_agrees(label: &str, b: &WeakBimonoid) -> Outcome {
    let ax = check_weak_bimonoid(b);
    let tau = check_tau_axioms(b, &DIMS).map_err(|e| e.to_string())?;
    let pairs: [(&str, &[&str]); 3] = [
        ("comult_multiplicative", &["tau.multiplicative"]),
        ("unit_comult", &["tau.left_assoc", "tau.right_assoc"]),
        ("counit_target", &["tau.right_unit", "tau.left_unit"]),
    ];
    for (axiom, taus) in pairs {
        let a = ax.failures().any(|e| e.name.starts_with(axiom));
        let t = tau
            .failures()
            .any(|e| taus.iter().any(|p| e.name.starts_with(p)));
        ensure!(a == t, "{label}: {axiom} {a} but {taus:?} {t}");
    }
    ensure!(
        ax.all_hold() == tau.all_hold(),
        "{label}: overall verdicts differ"
    );
    Ok(())
}

fn tau_mapping() -> Outcome {
    for e in corpus() {
        tau_agrees(e.name, &e.bimonoid)?;
        if e.bimonoid.dim() <= 4 {
            for t in MutationTarget::ALL
                .into_iter()
                .filter(|t| !t.is_structural())
            {
                let m = mutate(&e.bimonoid, t).map_err(|e| e.to_string())?;
                tau_agrees(&format!("{}/{t}", e.name), &m)?;
            }
        }
    }
    Ok(())
}

fn sqcap_idempotent() -> Outcome {
    for e in corpus() {
        let b = &e.bimonoid;
        let p = sqcap(b).map_err(|e| e.to_string())?;
        let expected = match &e.source {
            Source::Groupoid(g) => common::groupoid_sqcap_oracle(g),
            Source::Monoid(m) => common::monoid_sqcap_oracle(m),
        };
        let (dn, pd) = (Dn::of(b), Dense::of(&p));
        ensure!(pd == expected, "{}: differs from the table oracle", e.name);
        ensure!(pd.after(&pd) == pd, "{}: not idempotent", e.name);
        ensure!(
            chain(&[&kron(&[&pd, &dn.one]), &dn.mu, &pd]) == chain(&[&dn.mu, &pd]),
            "{}: not a module map",
            e.name
        );
        ensure!(p == t_map(b), "{}: differs from t", e.name);
    }
    Ok(())
}

fn base_frobenius() -> Outcome {
    for e in corpus() {
        let r = base_monoid(&e.bimonoid).map_err(|err| format!("{}: {err}", e.name))?;
        let failed = frobenius_failures(&r);
        ensure!(failed.is_empty(), "{}: {failed:?}", e.name);
        let id = Dense::id(r.r_dim);
        let (mu, delta) = (Dense::of(&r.mu_r), Dense::of(&r.delta_r));
        ensure!(
            chain(&[&delta, &mu]) == id,
            "{}: not separable (oracle)",
            e.name
        );
        ensure!(
            chain(&[&kron(&[&id, &delta]), &kron(&[&mu, &id])]) == chain(&[&mu, &delta]),
            "{}: Frobenius law (oracle)",
            e.name
        );
        ensure!(
            r.r_dim == e.objects(),
            "{}: R_dim {} for {} objects",
            e.name,
            r.r_dim,
            e.objects()
        );
    }
    for (name, dim) in [("z2", 1), ("discrete2", 2), ("pair2", 2)] {
        let r = base_monoid(&corpus_entry(name).unwrap().bimonoid).map_err(|e| e.to_string())?;
        ensure!(r.r_dim == dim, "{name}: R_dim {}", r.r_dim);
    }
    Ok(())
}

fn monoidal_structure() -> Outcome {
    for e in corpus() {
        let mods: Vec<RightModule> = e
            .modules()
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(_, m)| m)
            .collect();
        ensure!(mods.len() == 3, "{}: {} modules", e.name, mods.len());
        let rep =
            coherence_check(&mods, &e.bimonoid).map_err(|err| format!("{}: {err}", e.name))?;
        ensure!(rep.all_hold(), "{}: {:?}", e.name, rep.failed_names());
        let n = mods.len();
        ensure!(
            rep.len() == 2 * n * n + n + 4 * n * n * n + n * n + n.pow(4),
            "{}: {} checks",
            e.name,
            rep.len()
        );
    }
    Ok(())
}

fn antipode() -> Outcome {
    for e in corpus() {
        let res = solve_antipode(&e.bimonoid).map_err(|e| e.to_string())?;
        if let Source::Groupoid(g) = &e.source {
            let nu = res.nu.as_ref().ok_or(format!("{}: no antipode", e.name))?;
            ensure!(
                Dense::of(nu) == common::groupoid_inverse_oracle(g),
                "{}: not inversion",
                e.name
            );
        }
        if let Some(nu) = &res.nu {
            let dn = Dn::of(&e.bimonoid);
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
            let nu = Dense::of(nu);
            ensure!(dn.conv(&nu, one) == t, "{}: ν∗id ≠ t", e.name);
            ensure!(dn.conv(one, &nu) == r, "{}: id∗ν ≠ r", e.name);
            ensure!(dn.conv(&nu, &r) == nu, "{}: ν∗r ≠ ν", e.name);
            ensure!(dn.conv(&t, &nu) == nu, "{}: t∗ν ≠ ν", e.name);
        }
    }
    for name in ["idempotent", "nilpotent"] {
        let res =
            solve_antipode(&corpus_entry(name).unwrap().bimonoid).map_err(|e| e.to_string())?;
        ensure!(res.nu.is_none(), "{name}: unexpected antipode");
    }
    Ok(())
}

fn weak_hopf_witness() -> Outcome {
    for e in corpus() {
        let b = &e.bimonoid;
        let Some(nu) = solve_antipode(b).map_err(|e| e.to_string())?.nu else {
            continue;
        };
        for (x, y) in SAMPLES {
            verify_whm(b, &nu, x, y).map_err(|err| format!("{} at ({x},{y}): {err}", e.name))?;
            let chi = Dense::of(&chi_witness(b, &nu, x, y));
            let can = Dense::of(&canonical_map(b, x, y).map_err(|e| e.to_string())?);
            let ee = Dense::of(&idempotent_e_t(b, x, y).map_err(|e| e.to_string())?);
            let ff = Dense::of(&idempotent_f(b, x, y).map_err(|e| e.to_string())?);
            ensure!(
                can.after(&chi) == ee && chi.after(&can) == ff,
                "{} at ({x},{y}): oracle",
                e.name
            );
            if e.name == "z2" {
                ensure!(
                    ee.is_identity() && ff.is_identity(),
                    "z2: E or F is not the identity"
                );
                ensure!(
                    can.after(&chi).is_identity() && chi.after(&can).is_identity(),
                    "z2: χ is not can⁻¹"
                );
            }
        }
    }
    Ok(())
}

fn final_theorem() -> Outcome {
    for e in corpus() {
        let b = &e.bimonoid;
        let (rep, v) = check_left_hopf(b).map_err(|e| e.to_string())?;
        ensure!(v.coincide(), "{}: {v:?}", e.name);
        ensure!(
            v.antipode_invertible == e.expected_antipode().is_some(),
            "{}: {v:?}",
            e.name
        );
        let res = solve_antipode(b).map_err(|e| e.to_string())?;
        if let Some(inv) = &res.nu_inverse {
            ensure!(rep.all_hold(), "{}: {:?}", e.name, rep.failed_names());
            ensure!(
                res.equations_report.holds_with_prefix("op_antipode"),
                "{}: ν⁻¹ fails on B^op",
                e.name
            );
            ensure!(res.nu_op.as_ref() == Some(inv), "{}: ν^op ≠ ν⁻¹", e.name);
        }
    }
    Ok(())
}

fn infrastructure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let n = rng.gen_range(1..=16);
        let k = rng.gen_range(0..=n);
        let e = int_map(&random_idempotent(&mut rng, n, k));
        let split = split_idempotent(&e).map_err(|e| e.to_string())?;
        let (p, i, ed) = (
            Dense::of(&split.retraction),
            Dense::of(&split.section),
            Dense::of(&e),
        );
        ensure!(
            split.rank() == k && dense_rank(&ed) == k,
            "idempotent {case}: rank"
        );
        ensure!(
            i.after(&p) == ed && p.after(&i).is_identity(),
            "idempotent {case}: round trip"
        );
    }
    for case in 0..100 {
        let n = rng.gen_range(1..=16);
        let m = rng.gen_range(1..=16);
        let solvable = rng.gen_bool(0.5);
        let x0: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            rng.gen_range(-3..=3)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<i64> = if solvable {
            rows.iter()
                .map(|r| r.iter().zip(&x0).map(|(a, x)| a * x).sum())
                .collect()
        } else {
            (0..m).map(|_| rng.gen_range(-3..=3)).collect()
        };
        let rhs_map = int_map(&rhs.iter().map(|v| vec![*v]).collect::<Vec<_>>());
        let (a, bv) = (Dense::of(&int_map(&rows)), Dense::of(&rhs_map));
        let ra = dense_rank(&a);
        let consistent = ra == dense_rank(&hcat(&a, &bv));
        match solve_linear(&[(int_map(&rows), rhs_map)]).map_err(|e| e.to_string())? {
            Solution::Solved { x, nullity } => {
                ensure!(consistent, "system {case}: solved an inconsistent system");
                ensure!(
                    nullity == n - ra && a.after(&Dense::of(&x)) == bv,
                    "system {case}: wrong solution"
                );
            }
            Solution::NoSolution => ensure!(!consistent, "system {case}: missed a solution"),
        }
    }
    Ok(())
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_weakhopf");
    let tests = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests");
    let code = |args: &[&str]| -> Result<(i32, Vec<u8>), String> {
        let o = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        Ok((o.status.code().unwrap_or(-1), o.stdout))
    };
    let names = [
        "trivial",
        "discrete2",
        "z2",
        "pair2",
        "z3",
        "z4",
        "pair2_z2",
        "idempotent",
        "nilpotent",
        "exterior",
    ];
    for name in names {
        let file = tests.join("corpus").join(format!("{name}.json"));
        for (ext, fmt) in [("txt", "text"), ("json", "json")] {
            let (c, out) = code(&["report", file.to_str().unwrap(), "--format", fmt])?;
            let golden = fs::read(tests.join("golden").join(format!("{name}.report.{ext}")))
                .map_err(|e| e.to_string())?;
            ensure!(c == 0, "{name}: exit {c}");
            ensure!(
                out == golden,
                "{name}.report.{ext}: differs from the golden file"
            );
        }
    }
    let mutant = tests
        .join("mutants")
        .join("discrete2.comult_multiplicative.json");
    ensure!(
        code(&["check", mutant.to_str().unwrap()])?.0 == 1,
        "mutant does not exit 1"
    );
    let bad = tests.join("bad").join("bad_rational.json");
    ensure!(
        code(&["check", bad.to_str().unwrap()])?.0 == 2,
        "parse error does not exit 2"
    );
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom suite", axiom_suite),
        ("opmonoidal conditions match the axioms", tau_mapping),
        (
            "sqcap is an idempotent module map equal to t",
            sqcap_idempotent,
        ),
        ("base monoid is separable Frobenius", base_frobenius),
        (
            "truncated monoidal structure is coherent",
            monoidal_structure,
        ),
        ("antipode", antipode),
        ("weak Hopf witness", weak_hopf_witness),
        ("Hopf verdicts coincide", final_theorem),
        ("exact linear algebra infrastructure", infrastructure),
        ("CLI goldens and exit codes", cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("criterion {:2} PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
