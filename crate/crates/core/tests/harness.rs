use num_bigint::BigInt;
use orderpoly::exactpoly::{factorial, Rational};
use orderpoly::harness::{cross_validate, resume, scan, Family, Member, RecordStatus, ScanOptions};

fn opts(family: Family, size_cap: usize) -> ScanOptions {
    ScanOptions { family, size_cap, workers: 0, store: None }
}

#[test]
fn complement_zigzag_leading_terms_are_fibonacci() {
    let (summary, records) = scan(&opts(Family::ComplementZigzag, 50)).unwrap();
    assert!(summary.counterexamples.is_empty());
    let mut leads = Vec::new();
    for (i, r) in records.iter().enumerate() {
        let n = i + 1;
        assert_eq!(r.key, format!("complement-zigzag:{n}"));
        let p = r.polynomial.as_ref().unwrap();
        leads.push(p.coeff(n) * Rational::from_integer(factorial(n).into()));
    }
    assert_eq!(leads[0], Rational::from_integer(BigInt::from(1)));
    for n in 3..=leads.len() {
        assert_eq!(leads[n - 1], &leads[n - 2] + &leads[n - 3], "n = {n}");
    }
    assert_eq!(records.len(), 50);
}

#[test]
fn width_two_sweep_is_clean() {
    let (summary, records) = scan(&opts(Family::WidthTwo, 4)).unwrap();
    assert_eq!(summary.skipped, 0);
    assert!(summary.counterexamples.is_empty());
    assert_eq!(records.len(), summary.members);
    for r in &records {
        assert_eq!(r.status, RecordStatus::Verified);
        let m = Member::from_key(Family::WidthTwo, &r.key).unwrap();
        assert_eq!(m.key(), r.key);
    }
}

#[test]
fn cross_validation_covers_every_engine_pair() {
    let r = cross_validate(6).unwrap();
    for pair in [
        "kreweras=bruteforce",
        "kreweras=recursion",
        "kreweras=c1_closed_form",
        "bruteforce=map_count",
        "kreweras=macdonald",
        "kreweras=esym",
        "kreweras=hook",
        "kreweras=zigzag_determinant",
        "gk=bruteforce",
        "circular_fence=gk",
    ] {
        assert!(r.pairs.get(pair).copied().unwrap_or(0) > 0, "{pair} never ran");
    }
}

#[test]
fn store_survives_a_torn_write() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fences.jsonl");
    let mut o = opts(Family::CircularFence, 6);
    o.store = Some(path.clone());
    let (first, _) = scan(&o).unwrap();
    assert_eq!(first.new_records, first.members);

    let text = std::fs::read_to_string(&path).unwrap();
    let cut = text.trim_end().rfind('\n').unwrap() + 10;
    std::fs::write(&path, &text[..cut]).unwrap();
    let again = resume(&path, 0).unwrap();
    assert_eq!(again.new_records, 1);
    assert_eq!(again.without_timing().members, first.members);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), text.lines().count());
}
