use double_eta::verify::{jobs, Report, Suite, SuiteConfig};

fn run(suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut report = Report::new();
    for job in jobs(suite, cfg) {
        report.extend(job.run());
    }
    report
}

#[test]
fn suite_names_parse() {
    for name in Suite::NAMES {
        let suite: Suite = name.parse().unwrap();
        assert_eq!(suite.to_string(), *name);
    }
    assert_eq!("hat-sum".parse::<Suite>().unwrap(), Suite::Hat);
    assert!("covers2".parse::<Suite>().is_err());
}

#[test]
fn small_configurations_pass() {
    let cfg = SuiteConfig {
        k: Some(1),
        n: Some(3),
        seed: Some(3),
        max_weight: Some(4),
    };
    for suite in [
        Suite::Tables,
        Suite::Covers,
        Suite::Hat,
        Suite::Basis,
        Suite::Splitting,
    ] {
        let report = run(suite, &cfg);
        assert!(!report.is_empty());
        assert!(report.all_passed(), "{suite}: {report}");
    }
}

#[test]
fn covers_flag_the_ideal_only_where_expected() {
    let cfg = SuiteConfig {
        k: Some(2),
        n: Some(4),
        ..SuiteConfig::default()
    };
    let report = run(Suite::Covers, &cfg);
    assert!(report.all_passed(), "{report}");
    for c in report
        .checks()
        .iter()
        .filter(|c| c.note.as_deref() == Some("ideal-required"))
    {
        assert!(c.name.ends_with("(d1)") || c.name.ends_with("(g)"), "{c}");
    }
}
