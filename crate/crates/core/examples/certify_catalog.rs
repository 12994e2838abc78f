//! Certifies every catalog row and prints one line per row.

use pairwise_designs::data::DataSource;
use pairwise_designs::harness::{certify_all, DEFAULT_MAX_POINTS};

fn main() {
    let max_points = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_POINTS);
    let bundle = certify_all(max_points, &DataSource::from_env());
    for row in &bundle.rows {
        let params = row.parameters.as_ref().map_or("-".to_string(), ToString::to_string);
        let verdict = row.certificate.get("verdict").unwrap_or("-");
        println!("{:<28} {:<16} verdict {:<5} {:>6.1} ms  {}", row.tag, params, verdict, row.elapsed.as_secs_f64() * 1e3, row.status);
    }
    println!("{}", bundle.summary());
    if !bundle.passed() {
        std::process::exit(1);
    }
}
