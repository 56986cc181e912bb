//! A seeded campaign per representation, positive and negative, in parallel.
//!
//! cargo run --release --example verify_campaign [trials] [max_n]

use blockinv::instance::{run_campaign, CampaignConfig};
use blockinv::Theorem;

fn main() -> blockinv::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let trials = args.next().flatten().unwrap_or(40);
    let max_n = args.next().flatten().unwrap_or(4);
    for theorem in Theorem::ALL {
        let cfg = CampaignConfig::new(theorem, trials, max_n, 2024);
        let (_, pos) = run_campaign(&cfg)?;
        let neg = if theorem.has_equivalence() {
            let cfg = CampaignConfig { negative: true, ..cfg };
            let (_, s) = run_campaign(&cfg)?;
            format!("{}/{} not invertible", s.agree_not_exists, s.trials)
        } else {
            "-".to_string()
        };
        println!(
            "{theorem:7} positive {}/{} agree, mismatches {}, route failures {} | negative {neg}",
            pos.agree_exists, pos.trials, pos.mismatch, pos.route_failures
        );
    }
    Ok(())
}
