use cmdefect::corpus::{
    corpus, example_excm, example_matsumura, verify_modules, verify_paper_statements, Bounds, CorpusSpec, Statement,
};
use cmdefect::invariants::{
    cm_defect, ext_module, localize_at_monomial_prime, module_depth_graded, module_dimension, ring_module, MonomialPrime,
};
use cmdefect::poly::PolyRing;
use cmdefect::resolution::projective_dimension;
use cmdefect::serre::{check_condition, decide_from_profiles, exhaustive_monomial_report, Answer, PropertyQuery};
use cmdefect::ExtendedInt;

fn small_corpus() -> Vec<cmdefect::resolution::PresentedModule> {
    let mut all = corpus(&CorpusSpec::new(11, 3, 25));
    all.extend(corpus(&CorpusSpec::new(12, 4, 25)));
    all
}

#[test]
fn auslander_buchsbaum_and_defect_identity() {
    for m in small_corpus() {
        let n = m.ring().nvars() as i64;
        let pd = projective_dimension(&m).expect_finite("pd");
        let depth = module_depth_graded(&m).expect_finite("depth");
        assert_eq!(pd + depth, n, "{:?}", m.label());
        let profiles = exhaustive_monomial_report(&m).unwrap();
        let cmd = cm_defect(&m);
        assert_eq!(profiles.iter().filter_map(|p| p.cmd_local.finite()).max(), Some(cmd));
        for p in &profiles {
            assert!(p.cmd_local.expect_finite("cmd") <= cmd);
            if p.in_support {
                assert_eq!(p.cmd_local, p.dim_local - p.depth_local.expect_finite("depth"));
                assert!(p.cmd_local >= ExtendedInt::Finite(0));
            } else {
                assert_eq!((p.depth_local, p.cmd_local), (ExtendedInt::PosInfinity, ExtendedInt::Finite(0)));
            }
        }
    }
}

#[test]
fn ext_vanishes_outside_codim_and_pd() {
    for m in small_corpus().into_iter().step_by(3) {
        let n = m.ring().nvars() as i64;
        let dim = module_dimension(&m).expect_finite("dim");
        let pd = projective_dimension(&m).expect_finite("pd");
        let r = ring_module(m.ring());
        for i in 0..=n {
            let e = ext_module(&m, i as usize, &r).unwrap();
            if i < n - dim || i > pd {
                assert!(e.is_zero(), "{:?} Ext^{i}", m.label());
            }
            if i == n - dim || i == pd {
                assert!(!e.is_zero(), "{:?} Ext^{i}", m.label());
            }
        }
    }
}

#[test]
fn conditions_localize_well() {
    for m in small_corpus().into_iter().take(20) {
        let profiles = exhaustive_monomial_report(&m).unwrap();
        let dim = module_dimension(&m).expect_finite("dim");
        for n in 0..=(dim + 2) as u32 {
            for l in 0..=(dim + 1) as u32 {
                let q = PropertyQuery::cnl(n, l);
                if decide_from_profiles(&profiles, &q).answer != Answer::Yes {
                    continue;
                }
                for p in MonomialPrime::all(m.ring().nvars()) {
                    let local = localize_at_monomial_prime(&m, &p).unwrap();
                    if local.ring().nvars() == 0 {
                        continue;
                    }
                    assert_eq!(check_condition(&local, &q).unwrap().answer, Answer::Yes, "{:?} at {:?}", m.label(), p);
                }
            }
        }
    }
}

#[test]
fn large_l_is_always_satisfied() {
    for m in small_corpus() {
        let dim = module_dimension(&m).expect_finite("dim") as u32;
        let profiles = exhaustive_monomial_report(&m).unwrap();
        for n in 0..=dim + 2 {
            assert_eq!(decide_from_profiles(&profiles, &PropertyQuery::cnl(n, dim + 1)).answer, Answer::Yes);
        }
    }
}

#[test]
fn excm_grid_through_cmd_report() {
    let mut modules = Vec::new();
    for d in 0..=2 {
        for r in 1..=3 {
            let m = example_excm(d, r).unwrap();
            assert_eq!(cm_defect(&m), r as i64);
            modules.push(m);
        }
    }
    let reports = verify_modules(&modules, Bounds { n_max: 8, l_max: 4 }, &[Statement::CmdIffAllCnl]);
    assert!(reports[0].passed(), "{:?}", reports[0].counterexamples);
    assert_eq!(reports[0].instances_checked, 9);
}

#[test]
fn matsumura_sn_family() {
    let m = example_matsumura();
    let report = verify_modules(std::slice::from_ref(&m), Bounds { n_max: 4, l_max: 3 }, &[Statement::SnFamily]);
    assert!(report[0].passed());
    let v = check_condition(&m, &PropertyQuery::sn(1)).unwrap();
    assert_eq!(v.answer, Answer::No);
    assert_eq!(v.certificate_prime.as_deref(), Some("(X,Y,Z)"));
    let rows = exhaustive_monomial_report(&m).unwrap();
    assert_eq!(rows.len(), 8);
    let top = rows.last().unwrap();
    assert_eq!((top.depth_local, top.cmd_local), (0.into(), 2.into()));
}

#[test]
fn report_rows_for_small_modules() {
    let r = PolyRing::rational(&["x"]);
    let rows = exhaustive_monomial_report(&ring_module(&r)).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|p| p.cmd_local == 0.into()));
    assert!(example_excm(5, 3).is_err());
}

#[test]
fn default_run_has_no_counterexamples() {
    let reports = verify_paper_statements(&CorpusSpec::new(42, 4, 100), Bounds { n_max: 6, l_max: 4 }).unwrap();
    assert_eq!(reports.len(), 9);
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.statement_id, r.counterexamples.first());
        assert_eq!(r.instances_checked, 100);
    }
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let spec = CorpusSpec::new(5, 3, 12);
    let bounds = Bounds { n_max: 5, l_max: 3 };
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| serde_json::to_string(&verify_paper_statements(&spec, bounds).unwrap()).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(1));
}
