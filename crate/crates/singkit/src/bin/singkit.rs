//! Thin command-line front end over the singkit library.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use singkit::algebra::{milnor_number, tjurina_number, LocalAlgebra};
use singkit::cases::{default_case_names, run_case};
use singkit::modular::{modular_ideal, reduced_modular_ideal, subseries_profile};
use singkit::parse::{format_ideal_file, parse_ideal_file, parse_map_file, parse_polynomial};
use singkit::poly::{field_ctx, FieldCtx};
use singkit::{
    check_ambient_isomorphism, find_surjection, minimal_embedding, standard_basis, verify,
    Catalog, CoefficientField, IsoSearchOptions, Rational, TermOrder,
};

#[derive(Parser)]
#[command(
    name = "singkit",
    about = "Exact invariants and isomorphy of hypersurface singularities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor number of a germ
    Milnor {
        poly: String,
        /// comma-separated variables; inferred alphabetically when absent
        #[arg(long)]
        vars: Option<String>,
    },
    /// Tjurina number of a germ
    Tjurina {
        poly: String,
        #[arg(long)]
        vars: Option<String>,
    },
    /// Staircase basis of the quotient by an ideal file
    Kbase { ideal: String },
    /// Standard basis of an ideal file
    Stdbasis { ideal: String },
    /// Weak normal form of a polynomial against an ideal
    Nf {
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Minimal embedding of an ideal file
    Embed { ideal: String },
    /// T-series germ with classification and invariants
    Tseries {
        p: u32,
        q: u32,
        r: u32,
        #[arg(long, default_value = "1")]
        lambda: String,
    },
    /// The closed-form modular ideal of a hyperbolic T-series germ
    ModularIdeal {
        p: u32,
        q: u32,
        r: u32,
        /// print only the three mixed generators in t1, u1, v1
        #[arg(long)]
        reduced: bool,
    },
    /// Catalog of exceptional normal forms
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Search for an isomorphism (or surjection) between two quotients
    FindIso {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// shape file: `var -> monomial, monomial` lines restricting the ansatz
        #[arg(long)]
        shape: Option<String>,
        /// accept any surjection instead of requiring an isomorphism
        #[arg(long)]
        surjection: bool,
    },
    /// Verify an explicit map file between two ideal files
    VerifyIso {
        #[arg(long)]
        map: String,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// two-sided ambient check instead of the Artinian verifier
        #[arg(long)]
        ambient: bool,
    },
    /// Run a named verification case, or `all`
    VerifyPaper {
        #[arg(default_value = "all")]
        case: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    Validate,
}

fn infer_ctx(poly: &str, vars: &Option<String>) -> FieldCtx {
    let names: Vec<String> = match vars {
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
        None => {
            let mut found: Vec<String> = Vec::new();
            let mut cur = String::new();
            for c in poly.chars() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    cur.push(c);
                } else {
                    if !cur.is_empty() && cur.chars().next().unwrap().is_ascii_alphabetic() {
                        found.push(cur.clone());
                    }
                    cur.clear();
                }
            }
            if !cur.is_empty() && cur.chars().next().unwrap().is_ascii_alphabetic() {
                found.push(cur);
            }
            found.retain(|s| s != "theta");
            found.sort();
            found.dedup();
            found
        }
    };
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    field_ctx(
        &CoefficientField::rationals(),
        &refs,
        TermOrder::LocalDegrevlex,
    )
}

fn parse_rational(text: &str) -> singkit::Result<Rational> {
    let ctx = field_ctx(&CoefficientField::rationals(), &[], TermOrder::Degrevlex);
    let p = parse_polynomial(text, &ctx)?;
    Ok(p.constant_term().as_rational().cloned().unwrap_or_default())
}

fn load_ideal(path: &str) -> singkit::Result<singkit::Ideal> {
    let text = std::fs::read_to_string(path).map_err(|e| singkit::Error::Io(e.to_string()))?;
    parse_ideal_file(&text)
}

fn parse_shape_file(
    path: &str,
    source_vars: &[String],
    ctx: &FieldCtx,
) -> singkit::Result<Vec<Vec<singkit::Monomial>>> {
    let text = std::fs::read_to_string(path).map_err(|e| singkit::Error::Io(e.to_string()))?;
    let mut shape = vec![Vec::new(); source_vars.len()];
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| singkit::Error::Io(format!("cannot parse shape line `{line}`")))?;
        let idx = source_vars
            .iter()
            .position(|v| v == lhs.trim())
            .ok_or_else(|| singkit::Error::UnknownVariable(lhs.trim().to_string()))?;
        for mono in rhs.split(',') {
            shape[idx].push(singkit::parse::parse_monomial(mono.trim(), ctx)?);
        }
    }
    Ok(shape)
}

fn real_main() -> singkit::Result<bool> {
    let cli = Cli::parse();
    let mut ok = true;
    match cli.command {
        Command::Milnor { poly, vars } => {
            let ctx = infer_ctx(&poly, &vars);
            let f = parse_polynomial(&poly, &ctx)?;
            println!("mu = {}", milnor_number(&f)?);
        }
        Command::Tjurina { poly, vars } => {
            let ctx = infer_ctx(&poly, &vars);
            let f = parse_polynomial(&poly, &ctx)?;
            println!("tau = {}", tjurina_number(&f)?);
        }
        Command::Kbase { ideal } => {
            let i = load_ideal(&ideal)?;
            let a = LocalAlgebra::new(&i)?;
            println!("dimension = {}", a.dim());
            if a.is_artinian() {
                for m in a.kbase()? {
                    println!("{}", m.format(&i.ctx().vars));
                }
            }
        }
        Command::Stdbasis { ideal } => {
            let i = load_ideal(&ideal)?;
            let sb = standard_basis(&i)?;
            let out = singkit::Ideal::new(sb.ctx(), sb.gens().to_vec());
            print!("{}", format_ideal_file(&out));
        }
        Command::Nf { poly, ideal } => {
            let i = load_ideal(&ideal)?;
            let f = parse_polynomial(&poly, i.ctx())?;
            let sb = standard_basis(&i)?;
            println!("{}", sb.nf(&f)?);
        }
        Command::Embed { ideal } => {
            let i = load_ideal(&ideal)?;
            let emb = minimal_embedding(&i)?;
            print!("{}", format_ideal_file(&emb.ideal));
            for (var, expr) in &emb.substitutions {
                println!("# eliminated {} = {}", i.ctx().vars[*var], expr);
            }
        }
        Command::Tseries { p, q, r, lambda } => {
            let l = parse_rational(&lambda)?;
            let f = singkit::t_series(p, q, r, &l)?;
            println!("germ = {f}");
            println!("mu = {}", milnor_number(&f)?);
            println!("tau = {}", tjurina_number(&f)?);
            match singkit::catalog::classify_tseries(p, q, r)? {
                singkit::catalog::TSeriesClass::Parabolic => println!("class = parabolic"),
                singkit::catalog::TSeriesClass::Hyperbolic(profile) => {
                    println!("class = hyperbolic");
                    println!("line_components = {}", profile.line_components);
                }
            }
        }
        Command::ModularIdeal { p, q, r, reduced } => {
            let ideal = if reduced {
                reduced_modular_ideal(p, q, r)?
            } else {
                modular_ideal(p, q, r)?.ideal
            };
            print!("{}", format_ideal_file(&ideal));
            let profile = subseries_profile(p, q, r)?;
            println!("# vanishing coefficients = {}", profile.line_components);
        }
        Command::Catalog { action } => {
            let catalog = Catalog::builtin()?;
            match action {
                CatalogAction::List => {
                    for e in catalog.entries() {
                        println!("{} : {}", e.name, e.equation);
                    }
                }
                CatalogAction::Show { name } => {
                    let e = catalog.get(&name)?;
                    println!("name = {}", e.name);
                    println!("equation = {}", e.equation);
                    let basis: Vec<String> = e.basis.iter().map(|m| m.format(&e.vars)).collect();
                    println!("tjurina_basis = {}", basis.join(", "));
                    println!(
                        "bold = {}",
                        e.bold
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    println!("modular_vars = {}", e.stratum_vars.join(","));
                    for g in &e.stratum_equations {
                        println!("modular_equation = {g}");
                    }
                    for n in &e.notes {
                        println!("note = {n}");
                    }
                }
                CatalogAction::Validate => {
                    for e in catalog.entries() {
                        let v = e.validate()?;
                        let status = if v.verified() {
                            "verified"
                        } else if v.normal_form_ok() {
                            "stratum flagged"
                        } else {
                            "unverified"
                        };
                        println!(
                            "{:4} tau={:<9} mu={:<9} basis_ok={:<5} mu_tau_ok={:<5} hesse_ok={:<11} stratum_ok={:<5} -> {}",
                            e.name,
                            v.tau.to_string(),
                            v.mu.to_string(),
                            v.basis_count_ok,
                            v.mu_tau_ok,
                            format!("{:?}", v.hesse_ok),
                            v.stratum_ok,
                            status
                        );
                        if !v.verified() {
                            ok = false;
                            if let Some(note) = &v.stratum_note {
                                println!("     note: {note}");
                            }
                        }
                    }
                }
            }
        }
        Command::FindIso {
            source,
            target,
            shape,
            surjection,
        } => {
            let i_a = load_ideal(&source)?;
            let i_b = load_ideal(&target)?;
            // the shape refers to the minimally embedded presentations
            let shape = match shape {
                Some(path) => {
                    let emb_a = minimal_embedding(&i_a)?;
                    let emb_b = minimal_embedding(&i_b)?;
                    Some(parse_shape_file(
                        &path,
                        &emb_a.ideal.ctx().vars,
                        emb_b.ideal.ctx(),
                    )?)
                }
                None => None,
            };
            let opts = IsoSearchOptions {
                shape,
                require_isomorphism: !surjection,
                ..Default::default()
            };
            let report = find_surjection(&i_a, &i_b, &opts)?;
            match &report.map {
                Some(m) => {
                    print!("{}", m.format_map_file());
                    let v = report.verification.as_ref().unwrap();
                    println!("# verdict: {:?}", v.verdict);
                }
                None => {
                    println!("# no map found: {:?}", report.failure);
                    ok = false;
                }
            }
        }
        Command::VerifyIso {
            map,
            source,
            target,
            ambient,
        } => {
            let text =
                std::fs::read_to_string(&map).map_err(|e| singkit::Error::Io(e.to_string()))?;
            let m = parse_map_file(&text)?;
            let i_a = load_ideal(&source)?;
            let i_b = load_ideal(&target)?;
            let rep = if ambient {
                check_ambient_isomorphism(&m, &i_a, &i_b)?
            } else {
                verify(&m, &i_a, &i_b)?
            };
            for (gen, contained, nf) in &rep.containment {
                println!(
                    "{gen}: {}",
                    if *contained {
                        "contained".to_string()
                    } else {
                        format!("NF = {nf}")
                    }
                );
            }
            println!("linear rank = {} of {}", rep.linear_rank, rep.required_rank);
            println!(
                "dim source = {}, dim target = {}",
                rep.dim_source, rep.dim_target
            );
            println!("verdict: {:?}", rep.verdict);
            ok = rep.passed();
        }
        Command::VerifyPaper { case, json } => {
            let names = if case == "all" {
                default_case_names()
            } else {
                vec![case]
            };
            for name in names {
                let rep = run_case(&name)?;
                if json {
                    println!("{}", rep.render_json());
                } else {
                    print!("{}", rep.render_text());
                    println!();
                }
                let _ = writeln!(
                    std::io::stderr(),
                    "[{} finished in {:?}]",
                    rep.name,
                    rep.elapsed
                );
                ok &= rep.passed();
            }
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
