//! A sampled theorem sweep and the lemma suites.

use grothendieck::crosscheck::lemmas::all_suites;
use grothendieck::crosscheck::sweep::{sweep_theorems, SweepReport, TheoremSweep};

fn main() {
    let mut report = SweepReport::default();
    let cfg = TheoremSweep { trunc: 4, sample: Some((7, 300)), ..TheoremSweep::default() };
    sweep_theorems(&cfg, &mut report);
    report.tallies.extend(all_suites(7, 50, 3));
    print!("{}", report.render());
}
