//! One line per acceptance criterion, each checked against its time limit.
//! Runs without the libtest harness so the lines always print:
//! `cargo test -p mckay-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use mckay_cli::acceptance::{self, Outcome};

fn timed(limit_secs: u64, f: impl FnOnce() -> Outcome) -> (Outcome, Duration, Duration) {
    let start = Instant::now();
    let o = f();
    (o, start.elapsed(), Duration::from_secs(limit_secs))
}

fn selftest_bytes() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_mckay")).args(["selftest", "--seed", "0"]).output().expect("binary runs");
    assert!(out.status.success(), "selftest exited with {:?}", out.status);
    out.stdout
}

fn main() {
    let seed = 0;
    let runs = vec![
        timed(1, acceptance::criterion_1),
        timed(5, acceptance::criterion_2),
        timed(1, acceptance::criterion_3),
        timed(60, acceptance::criterion_4),
        timed(10, acceptance::criterion_5),
        timed(30, || acceptance::criterion_6(seed)),
        timed(60, acceptance::criterion_7),
        timed(300, || acceptance::criterion_8(seed)),
        timed(1, acceptance::criterion_9),
        timed(60, acceptance::criterion_10),
        timed(30, acceptance::criterion_11),
        timed(120, acceptance::criterion_12),
        timed(600, || {
            let (a, b) = (selftest_bytes(), selftest_bytes());
            let same = a == b;
            Outcome {
                id: 13,
                title: "selftest determinism",
                passed: same,
                detail: if same { format!("two runs, {} identical bytes", a.len()) } else { "reports differ".into() },
            }
        }),
    ];
    let mut failed = Vec::new();
    for (o, took, limit) in &runs {
        let in_time = took <= limit;
        let ok = o.passed && in_time;
        println!(
            "criterion {:>2} [{}] {}: {} ({:.2}s, limit {}s)",
            o.id,
            if ok { "PASS" } else { "FAIL" },
            o.title,
            o.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed.push(o.id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
