use bimatroid::theorems::{
    check_matroid, scan, search_counterexamples, Arguments, CheckOptions, EnumerationSpec, Filter,
    Statement,
};
use bimatroid::{parse_matroid, CheckReport, Error, Verdict};

fn up_to(st: Statement, max_n: usize, filters: &[Filter], opts: &CheckOptions) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let spec = EnumerationSpec {
            ground_size: n,
            rank_range: None,
            filters: filters.to_vec(),
        };
        out.extend(search_counterexamples(st, &spec, opts).unwrap());
    }
    out
}

#[test]
fn proved_statements_survive_small_search() {
    let opts = CheckOptions::default();
    for st in [
        Statement::PairSplitBasics,
        Statement::CocircuitTransfer,
        Statement::SplitCircuits,
        Statement::SplitRank,
        Statement::ConnectivityGirth,
        Statement::DisconnectedSplit,
        Statement::ComponentRank,
        Statement::DeletionSplit,
        Statement::VerticalSplit,
    ] {
        assert!(up_to(st, 5, &[], &opts).is_empty(), "{st}");
    }
    let gated = CheckOptions {
        require_noncocycle_x: true,
        ..opts
    };
    assert!(up_to(Statement::SetSplitConnectivity, 5, &[], &gated).is_empty());
}

#[test]
fn coloops_break_two_lemmas_without_the_global_assumption() {
    let opts = CheckOptions {
        assume_loopless_coloopless: false,
        ..CheckOptions::default()
    };
    for st in [Statement::PairSplitBasics, Statement::DisconnectedSplit] {
        let fails = up_to(st, 4, &[], &opts);
        assert!(!fails.is_empty());
        for r in &fails {
            let m = parse_matroid(r.find_witness("matroid").unwrap()).unwrap();
            let pair = m
                .set_of(&[r.find_witness("x").unwrap(), r.find_witness("y").unwrap()])
                .unwrap();
            assert!(!(m.coloops() & pair).is_empty(), "{r}");
        }
    }
    for st in [
        Statement::CocircuitTransfer,
        Statement::SplitCircuits,
        Statement::SplitRank,
        Statement::DeletionSplit,
    ] {
        assert!(up_to(st, 5, &[], &opts).is_empty(), "{st}");
    }
}

#[test]
fn failures_reproduce_from_their_witnesses() {
    let opts = CheckOptions::default();
    let fails = up_to(Statement::DeletionSplitConverse, 5, &[], &opts);
    assert!(!fails.is_empty());
    for r in fails {
        let line = r.to_json_line();
        let back = CheckReport::from_json_line(&line).unwrap();
        let m = parse_matroid(back.find_witness("matroid").unwrap()).unwrap();
        let args = Arguments {
            x: back.find_witness("x").map(str::to_string),
            y: back.find_witness("y").map(str::to_string),
            ..Arguments::default()
        };
        let again = check_matroid(Statement::DeletionSplitConverse, &m, &args, &opts).unwrap();
        assert_eq!(again, r);
    }
}

#[test]
fn strict_gating_never_judges_outside_hypotheses() {
    let spec = EnumerationSpec::all(5);
    let strict = CheckOptions::default();
    let lenient = CheckOptions {
        lenient: true,
        ..CheckOptions::default()
    };
    let mut unmet = Vec::new();
    scan(Statement::DeletionSplit, &spec, &strict, |r| {
        assert!(!r.outside_hypothesis);
        if r.verdict == Verdict::PreconditionUnmet {
            unmet.push(r.instance.clone());
        }
    })
    .unwrap();
    let mut outside = Vec::new();
    scan(Statement::DeletionSplit, &spec, &lenient, |r| {
        assert_ne!(r.verdict, Verdict::PreconditionUnmet);
        if r.outside_hypothesis {
            outside.push(r.instance.clone());
        }
    })
    .unwrap();
    assert_eq!(unmet, outside);
}

#[test]
fn scan_order_is_deterministic() {
    let spec = EnumerationSpec::all(5).with_filter(Filter::Connected);
    let run = || {
        let mut lines = Vec::new();
        scan(
            Statement::PairSplitBasics,
            &spec,
            &CheckOptions::default(),
            |r| lines.push(r.to_json_line()),
        )
        .unwrap();
        lines
    };
    assert_eq!(run(), run());
}

#[test]
fn graph_statements_scan_graphs() {
    let spec = EnumerationSpec::all(5).with_filter(Filter::Loopless);
    let s = scan(
        Statement::Commutation,
        &spec,
        &CheckOptions::default(),
        |_| {},
    )
    .unwrap();
    assert!(s.pass > 0 && s.fail == 0);
    assert!(
        search_counterexamples(Statement::Figure2, &spec, &CheckOptions::default())
            .unwrap()
            .is_empty()
    );
}

#[test]
fn unknown_statement_is_an_error() {
    assert!(matches!(
        "lemma-7".parse::<Statement>(),
        Err(Error::UnknownStatement(_))
    ));
}
