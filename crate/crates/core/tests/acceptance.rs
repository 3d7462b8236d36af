//! Acceptance criteria, one line per criterion.
//!
//! Run with `cargo test -p overpoly --test acceptance -- --nocapture` to see
//! the report.

use std::time::Instant;

use overpoly::verify;

/// (criterion, suite, time limit in seconds)
const CRITERIA: [(u32, &str, Option<f64>); 9] = [
    (1, "table", Some(1.0)),
    (2, "oracle", Some(120.0)),
    (3, "specializations", None),
    (4, "identities", Some(60.0)),
    (5, "counting", None),
    (6, "diagonal", None),
    (7, "stats", None),
    (8, "zeros", Some(30.0)),
    (9, "curves", Some(30.0)),
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, name, limit) in CRITERIA {
        let suite = verify::find(name).expect("known suite");
        let start = Instant::now();
        let res = suite.run(None);
        let secs = start.elapsed().as_secs_f64();
        let slow = limit.is_some_and(|l| secs >= l);
        let ok = res.is_ok() && !slow;
        let mut line = format!(
            "criterion {id} [{name}]: {} ({secs:.2}s",
            if ok { "PASS" } else { "FAIL" }
        );
        if let Some(l) = limit {
            line.push_str(&format!(", limit {l}s"));
        }
        line.push(')');
        if let Err(e) = &res {
            line.push_str(&format!(" {e}"));
        } else if slow {
            line.push_str(" over time limit");
        }
        println!("{line}");
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
