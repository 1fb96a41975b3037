use sboxkit::{
    bandit_optimize, corpus_get, evaluate, AnalysisReport, BanditConfig, ComparisonRow,
    ComparisonTable, FitnessConfig, FitnessReport, MetricsSummary, Rational, RunTrace, SBox,
};

#[test]
fn sbox_json_round_trip_and_validation() {
    let s = corpus_get("aes").unwrap().sbox;
    let json = serde_json::to_string(&s).unwrap();
    let back: SBox = serde_json::from_str(&json).unwrap();
    assert_eq!(back, s);
    // a non-bijective payload is rejected at deserialization time
    let bad = r#"{"n": 3, "dlut": [0, 1, 2, 3, 4, 5, 6, 6]}"#;
    assert!(serde_json::from_str::<SBox>(bad).is_err());
    let mismatched = r#"{"n": 4, "dlut": [0, 1, 2, 3, 4, 5, 6, 7]}"#;
    assert!(serde_json::from_str::<SBox>(mismatched).is_err());
}

#[test]
fn rational_json_form_is_exact() {
    let r = Rational::new(229, 2);
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(json, r#"{"numerator":229,"denominator":2}"#);
    assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    assert!(serde_json::from_str::<Rational>(r#"{"numerator":1,"denominator":0}"#).is_err());
}

#[test]
fn fitness_value_serializes_as_a_decimal_string() {
    let e = evaluate(&SBox::identity(8), FitnessConfig { magnitude: 10 }).unwrap();
    let json = serde_json::to_string(&e).unwrap();
    assert_eq!(json, format!("\"{}\"", 1u128 << 73));
    assert_eq!(
        serde_json::from_str::<sboxkit::FitnessValue>(&json).unwrap(),
        e
    );
}

#[test]
fn metrics_summary_round_trips() {
    let m = MetricsSummary::compute(&corpus_get("paper_sc_best").unwrap().sbox);
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<MetricsSummary>(&json).unwrap(), m);
}

#[test]
fn run_trace_round_trips() {
    let start = sboxkit::random_sbox(8, 2).unwrap();
    let cfg = BanditConfig {
        max_stall: Some(80),
        ..BanditConfig::default()
    };
    let trace = bandit_optimize(&start, &cfg).unwrap();
    let json = serde_json::to_string(&trace).unwrap();
    assert_eq!(serde_json::from_str::<RunTrace>(&json).unwrap(), trace);
}

#[test]
fn analysis_report_round_trips_with_and_without_options() {
    let entry = corpus_get("paper_sc").unwrap();
    let mut report = AnalysisReport::new(entry.id, &entry.sbox);
    let json = serde_json::to_string(&report).unwrap();
    assert!(!json.contains("sac_matrix"), "absent options stay out of the json");
    assert_eq!(
        serde_json::from_str::<AnalysisReport>(&json).unwrap(),
        report
    );
    report.sac_matrix = Some(sboxkit::sac(&entry.sbox).matrix);
    report.fitness = Some(FitnessReport {
        magnitude: 10,
        value: evaluate(&entry.sbox, FitnessConfig { magnitude: 10 }).unwrap(),
    });
    let json = serde_json::to_string(&report).unwrap();
    assert_eq!(
        serde_json::from_str::<AnalysisReport>(&json).unwrap(),
        report
    );
}

#[test]
fn comparison_table_round_trips_and_sorts() {
    let rows = vec![
        ComparisonTable::row("paper_sc_best", &corpus_get("paper_sc_best").unwrap().sbox),
        ComparisonTable::row("aes", &corpus_get("aes").unwrap().sbox),
        ComparisonTable::row("paper_sc", &corpus_get("paper_sc").unwrap().sbox),
    ];
    let table = ComparisonTable::build(rows);
    let labels: Vec<&str> = table.rows.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels, vec!["aes", "paper_sc", "paper_sc_best"]);
    let json = serde_json::to_string(&table).unwrap();
    assert_eq!(
        serde_json::from_str::<ComparisonTable>(&json).unwrap(),
        table
    );
}

#[test]
fn comparison_table_breaks_acnv_ties_by_label() {
    let a = ComparisonRow {
        label: "zeta".into(),
        min_nl: 100,
        max_nl: 104,
        acnv: Rational::new(102, 1),
    };
    let b = ComparisonRow {
        label: "alpha".into(),
        min_nl: 98,
        max_nl: 106,
        acnv: Rational::new(102, 1),
    };
    let table = ComparisonTable::build(vec![a, b]);
    assert_eq!(table.rows[0].label, "alpha");
    assert_eq!(table.rows[1].label, "zeta");
}

#[test]
fn report_rendering_conventions() {
    let entry = corpus_get("paper_sc").unwrap();
    let report = AnalysisReport::new(entry.id, &entry.sbox);
    let text = report.render_text();
    assert!(text.contains("ACNV: 114.00"), "{text}");
    assert!(text.contains("SAC average: 0.5000000"), "{text}");
    assert!(text.contains("NL: 96"), "{text}");
    let csv = report.render_csv();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "source,n,coordinate_nls,min_coordinate_nl,max_coordinate_nl,acnv,nl,sac_average,fitness_magnitude,fitness"
    );
    assert!(lines.next().unwrap().starts_with("paper_sc,8,"));

    let best = corpus_get("paper_sc_best").unwrap();
    let table = ComparisonTable::build(vec![
        ComparisonTable::row("paper_sc_best", &best.sbox),
        ComparisonTable::row("aes", &corpus_get("aes").unwrap().sbox),
    ]);
    let text = table.render_text();
    assert!(text.contains("112.0"), "{text}");
    assert!(text.contains("114.5"), "{text}");
    let csv = table.render_csv();
    assert!(csv.starts_with("label,min_nl,max_nl,acnv\n"));
    assert!(csv.contains("aes,112,112,112.0\n"), "{csv}");
    assert!(csv.contains("paper_sc_best,114,116,114.5\n"), "{csv}");
}
