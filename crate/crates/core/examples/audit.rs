//! Grid audits of the numerical facts behind the parameter choices.

use gm2_height::bounds::{audit_inequalities, sieve_lemma_iii2, AuditSelection, Verdict};

fn main() -> gm2_height::Result<()> {
    let sieve = sieve_lemma_iii2(41, 100_000);
    println!("{sieve:?}");

    let reports = audit_inequalities(&AuditSelection::default())?;
    let failing: Vec<_> = reports.iter().filter(|r| r.verdict != Verdict::Pass).collect();
    println!("{} checks, {} not passing", reports.len(), failing.len());
    for r in failing {
        println!("  {} {:?}: {} vs {} ({})", r.kind, r.inputs, r.compared_against.as_ref().unwrap(), r.bound_value, r.verdict);
    }
    Ok(())
}
