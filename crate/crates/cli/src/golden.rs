//! Stored outputs for the published examples.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use jackpow::verify::{Params, Report};

use crate::app::run_args;

/// File stem and argument vector of each golden case.
pub const CASES: &[(&str, &[&str])] = &[
    ("rect_theta_2", &["rect", "theta", "--mu", "2"]),
    ("rect_theta_3", &["rect", "theta", "--mu", "3"]),
    ("rect_theta_22", &["rect", "theta", "--mu", "2,2"]),
    ("rect_theta_32", &["rect", "theta", "--mu", "3,2"]),
    (
        "theta_rect_m1_2",
        &["theta", "rect", "--m", "1", "--mu", "2", "--mode", "closed"],
    ),
    (
        "theta_rect_m1_3",
        &["theta", "rect", "--m", "1", "--mu", "3", "--mode", "closed"],
    ),
    (
        "theta_rect_m1_4",
        &["theta", "rect", "--m", "1", "--mu", "4", "--mode", "closed"],
    ),
    (
        "theta_rect_m1_22",
        &[
            "theta", "rect", "--m", "1", "--mu", "2,2", "--mode", "closed",
        ],
    ),
    (
        "theta_rect_m2_2",
        &["theta", "rect", "--m", "2", "--mu", "2"],
    ),
    (
        "theta_rect_m2_3",
        &["theta", "rect", "--m", "2", "--mu", "3"],
    ),
    ("theta_thm2_32", &["theta", "thm2", "--mu", "3,2"]),
    (
        "rect_divisibility_2_1x1",
        &["rect", "divisibility", "--mu", "2", "--p", "1", "--q", "1"],
    ),
    (
        "rect_divisibility_3_1x1",
        &["rect", "divisibility", "--mu", "3", "--p", "1", "--q", "1"],
    ),
    (
        "rect_divisibility_32_3x1",
        &[
            "rect",
            "divisibility",
            "--mu",
            "3,2",
            "--p",
            "3",
            "--q",
            "1",
        ],
    ),
    ("verify_table6", &["verify", "table6"]),
    ("verify_thm2_32", &["verify", "thm2", "--mu", "3,2"]),
];

/// Compares each case with its file, or rewrites the files when `bless` is set.
pub fn run(dir: &Path, bless: bool) -> Result<Vec<Report>> {
    if bless {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut reports = Vec::new();
    for (name, args) in CASES {
        let path = dir.join(format!("{name}.json"));
        let got = format!("{}\n", run_args(args.iter().copied())?.json);
        let params = Params::new().with("case", name);
        if bless {
            fs::write(&path, &got).with_context(|| format!("writing {}", path.display()))?;
            reports.push(Report::pass("golden", params));
            continue;
        }
        let rep = match fs::read_to_string(&path) {
            Ok(want) if want == got => Report::pass("golden", params),
            Ok(_) => Report::failure("golden", params, format!("{} differs", path.display())),
            Err(e) => Report::failure("golden", params, format!("{}: {e}", path.display())),
        };
        reports.push(rep);
    }
    Ok(reports)
}
