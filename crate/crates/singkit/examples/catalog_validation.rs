//! Validates every catalog row: Tjurina-basis count against tau, the
//! mu = tau + 1 law, the Hesse cross-check, and the stratum prechecks
//! (dimension, embedding dimension, Hilbert function) against the Milnor
//! algebra.

use singkit::algebra::milnor_algebra;
use singkit::Catalog;

fn main() -> singkit::Result<()> {
    let catalog = Catalog::builtin()?;
    for entry in catalog.entries() {
        let v = entry.validate()?;
        println!(
            "{:5} tau={:<9} mu={:<9} basis_count_ok={:5} mu_tau_ok={:5} hesse_ok={:?} stratum_ok={}",
            entry.name,
            v.tau.to_string(),
            v.mu.to_string(),
            v.basis_count_ok,
            v.mu_tau_ok,
            v.hesse_ok,
            v.stratum_ok,
        );
        if let Some(note) = &v.stratum_note {
            println!("      note: {note}");
        }
        for note in &entry.notes {
            println!("      note: {note}");
        }
        if !v.normal_form_ok() || !v.stratum_ok {
            println!("      -> flagged unverified");
            continue;
        }
        // prechecks: stratum algebra against the Milnor algebra
        let stratum = entry.stratum_algebra()?;
        let q = milnor_algebra(&entry.equation)?;
        let dim_ok = stratum.dim() == q.dim();
        let embdim_ok = stratum.embdim() == q.embdim();
        let h_stratum = stratum.hilbert_series(32);
        let h_q = q.hilbert_series(32);
        println!(
            "      stratum dim={} embdim={} | Q(f) dim={} embdim={} | dim_ok={} embdim_ok={} hilbert_ok={}",
            stratum.dim(),
            stratum.embdim(),
            q.dim(),
            q.embdim(),
            dim_ok,
            embdim_ok,
            h_stratum == h_q,
        );
        if h_stratum != h_q {
            println!("      hilbert stratum: {h_stratum:?}");
            println!("      hilbert Q(f):    {h_q:?}");
        }
    }
    Ok(())
}
