//! `knotepi` — epimorphism structure of torus-knot and 2-bridge knot groups
//! from the command line.
//!
//! Exit codes: `0` for success (including honest "undetermined" answers),
//! `1` when the mathematical answer is negative (no surjection, not
//! minimal), `2` for usage and input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use knotepi::knots::KnotId;
use knotepi::order::{
    atlas_to_dot, build_atlas, is_p_minimal, tb_candidates, tb_pair_report, CandidateReport,
    EdgeStatus, FilterOutcomes, KnownRelations, MinimalityVerdict, Verdict, VerdictReason,
};
use knotepi::riley::{parabolic_class_count, riley_polynomial};
use knotepi::torus_epi::{build_epimorphism, torus_ge, EpiCertificate, EpiError};

#[derive(Parser)]
#[command(
    name = "knotepi",
    version,
    about = "Epimorphism order, certificates, candidate filters, minimality, and atlas export for torus and 2-bridge knot groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a knot's invariants (knot literals: tb:p,q or torus:p,q).
    Invariants {
        /// The knot, e.g. `tb:9,4` or `torus:3,5`.
        knot: KnotId,
        /// Also compute the parabolic-representation polynomial (2-bridge).
        #[arg(long)]
        riley: bool,
    },
    /// Decide or assess whether the source knot group surjects onto the
    /// target's. Torus pairs are decided exactly; 2-bridge pairs report the
    /// exact filters and curated literature.
    Order {
        /// Surjection source.
        source: KnotId,
        /// Surjection target.
        target: KnotId,
        /// Replace the bundled literature relations with this file.
        #[arg(long, value_name = "FILE")]
        known: Option<PathBuf>,
        /// Also run the advisory parabolic-polynomial comparison.
        #[arg(long)]
        riley: bool,
    },
    /// Build and verify the explicit surjection certificate for a torus
    /// pair.
    Certificate {
        /// Surjection source (torus knot or its 2-bridge alias).
        source: KnotId,
        /// Surjection target (torus knot or its 2-bridge alias).
        target: KnotId,
    },
    /// Enumerate all filtered surjection targets below a 2-bridge knot.
    Candidates {
        /// The source knot (2-bridge, or a torus knot with a 2-bridge form).
        knot: KnotId,
        /// Also run the advisory parabolic-polynomial comparison.
        #[arg(long)]
        riley: bool,
    },
    /// Classify whether a knot admits any surjection onto a smaller knot
    /// group.
    Minimal {
        /// The knot to classify.
        knot: KnotId,
        /// Replace the bundled literature relations with this file.
        #[arg(long, value_name = "FILE")]
        known: Option<PathBuf>,
    },
    /// Build the partial-order atlas over both knot families.
    Atlas {
        /// Include 2-bridge knots with determinant up to this bound.
        #[arg(long = "max-det", value_name = "N")]
        max_det: u64,
        /// Include torus knots with parameter product up to this bound.
        #[arg(long = "max-torus", value_name = "N")]
        max_torus: u64,
        /// Replace the bundled literature relations with this file.
        #[arg(long, value_name = "FILE")]
        known: Option<PathBuf>,
        /// Also run the advisory parabolic-polynomial comparison.
        #[arg(long)]
        riley: bool,
        /// Write the DOT rendering to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// An input or usage problem: reported on stderr, exit code 2.
struct UsageError(String);

/// Prints a line to stdout, exiting quietly if the consumer closed the pipe.
fn print_out(s: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{s}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Invariants { knot, riley } => invariants(knot, riley, cli.format),
        Command::Order {
            source,
            target,
            known,
            riley,
        } => order(source, target, &load_known(known)?, riley, cli.format),
        Command::Certificate { source, target } => certificate(source, target, cli.format),
        Command::Candidates { knot, riley } => candidates(knot, riley, cli.format),
        Command::Minimal { knot, known } => minimal(knot, &load_known(known)?, cli.format),
        Command::Atlas {
            max_det,
            max_torus,
            known,
            riley,
            out,
        } => atlas(max_det, max_torus, &load_known(known)?, riley, out, cli.format),
    }
}

/// Loads `--known FILE` when given, otherwise the bundled relations.
fn load_known(path: Option<PathBuf>) -> Result<KnownRelations, UsageError> {
    match path {
        Some(p) => KnownRelations::load(&p).map_err(|e| UsageError(e.to_string())),
        None => Ok(KnownRelations::shipped()),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => {
            print_out(&serde_json::to_string_pretty(value).expect("output serializes"));
        }
        Format::Text => print_out(&text()),
    }
}

#[derive(Serialize)]
struct InvariantsOut {
    knot: String,
    kind: &'static str,
    p: u64,
    q: i64,
    determinant: u64,
    genus: u64,
    alexander: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossing_number: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    riley_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    riley_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    torus_alias: Option<String>,
}

fn invariants(knot: KnotId, riley: bool, format: Format) -> Result<ExitCode, UsageError> {
    let out = match knot {
        KnotId::TwoBridge(k) => {
            let alias = k.as_torus();
            InvariantsOut {
                knot: knot.to_string(),
                kind: if alias.is_some() { "both" } else { "two_bridge" },
                p: k.p(),
                q: k.q(),
                determinant: k.determinant(),
                genus: k.genus(),
                alexander: k.alexander().render("t"),
                crossing_number: alias.map(|t| t.crossing_number()),
                riley_degree: Some(parabolic_class_count(&k)),
                riley_polynomial: riley.then(|| riley_polynomial(&k).render("w")),
                torus_alias: alias.map(|t| t.to_string()),
            }
        }
        KnotId::Torus(t) => {
            let two_bridge = t.as_two_bridge();
            InvariantsOut {
                knot: knot.to_string(),
                kind: if two_bridge.is_some() { "both" } else { "torus" },
                p: t.p1(),
                q: t.p2() as i64,
                determinant: t.determinant(),
                genus: t.genus(),
                alexander: t.alexander().render("t"),
                crossing_number: Some(t.crossing_number()),
                riley_degree: two_bridge.map(|k| parabolic_class_count(&k)),
                riley_polynomial: riley
                    .then(|| two_bridge.map(|k| riley_polynomial(&k).render("w")))
                    .flatten(),
                torus_alias: two_bridge.map(|k| k.to_string()),
            }
        }
    };
    emit(format, &out, || {
        let mut lines = vec![
            format!("knot: {}", out.knot),
            format!("kind: {}", out.kind),
            format!("p: {}", out.p),
            format!("q: {}", out.q),
            format!("determinant: {}", out.determinant),
            format!("genus: {}", out.genus),
            format!("alexander: {}", out.alexander),
        ];
        if let Some(c) = out.crossing_number {
            lines.push(format!("crossing_number: {c}"));
        }
        if let Some(d) = out.riley_degree {
            lines.push(format!("riley_degree: {d}"));
        }
        if let Some(p) = &out.riley_polynomial {
            lines.push(format!("riley_polynomial: {p}"));
        }
        if let Some(a) = &out.torus_alias {
            lines.push(format!("torus_alias: {a}"));
        }
        lines.join("\n")
    });
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OrderOut {
    source: String,
    target: String,
    result: &'static str,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    filters: Option<FilterOutcomes>,
}

fn order(
    source: KnotId,
    target: KnotId,
    known: &KnownRelations,
    riley: bool,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let (result, method, filters) = if source.same_knot(&target) {
        ("true", "identical", None)
    } else if let (Some(s), Some(t)) = (source.as_torus(), target.as_torus()) {
        if torus_ge(&s, &t) {
            ("true", "torus_divisor_criterion", None)
        } else {
            ("false", "torus_divisor_criterion", None)
        }
    } else if let (Some(s), Some(t)) = (source.as_two_bridge(), target.as_two_bridge()) {
        let report = tb_pair_report(&s, &t, riley);
        match report.status {
            EdgeStatus::Refuted => ("false", "filters", Some(report.filters)),
            EdgeStatus::Proven => ("true", "torus_divisor_criterion", Some(report.filters)),
            _ if known.find(&source, &target).is_some() => {
                ("true", "literature", Some(report.filters))
            }
            _ => ("undetermined", "filters", Some(report.filters)),
        }
    } else {
        ("undetermined", "out_of_scope", None)
    };
    let out = OrderOut {
        source: source.to_string(),
        target: target.to_string(),
        result,
        method,
        filters,
    };
    emit(format, &out, || result.to_string());
    Ok(if result == "false" {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn certificate_text(cert: &EpiCertificate) -> String {
    let mut lines = vec![
        format!("source: {}", cert.source),
        format!("target: {}", cert.target),
        format!("matching: {}", match cert.matching {
            knotepi::torus_epi::Matching::Straight => "straight",
            knotepi::torus_epi::Matching::Crossed => "crossed",
        }),
        format!("n1: {}", cert.n1),
        format!("n2: {}", cert.n2),
        format!("img_u: {}", cert.img_u),
        format!("img_v: {}", cert.img_v),
        format!("c_params: ({}, {})", cert.c_params.0, cert.c_params.1),
        format!("bezout: ({}, {})", cert.bezout.0, cert.bezout.1),
        "transcript:".to_string(),
    ];
    for check in &cert.transcript {
        lines.push(format!(
            "  {}: {}",
            check.check.as_str(),
            if check.pass { "pass" } else { "fail" }
        ));
    }
    lines.join("\n")
}

fn certificate(source: KnotId, target: KnotId, format: Format) -> Result<ExitCode, UsageError> {
    let src = source.as_torus().ok_or_else(|| {
        UsageError(format!(
            "certificates exist for torus pairs only; {source} is not a torus knot"
        ))
    })?;
    let dst = target.as_torus().ok_or_else(|| {
        UsageError(format!(
            "certificates exist for torus pairs only; {target} is not a torus knot"
        ))
    })?;
    match build_epimorphism(&src, &dst) {
        Ok(cert) => {
            emit(format, &cert, || certificate_text(&cert));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ EpiError::NoEpimorphism { .. }) => {
            print_out(&e.to_string());
            Ok(ExitCode::from(1))
        }
        Err(other) => Err(UsageError(other.to_string())),
    }
}

fn candidate_line(r: &CandidateReport) -> String {
    format!(
        "{} -> {}: determinant {}, alexander {}, riley {} => {}",
        r.source,
        r.target,
        match r.filters.determinant {
            knotepi::order::FilterState::Pass => "pass",
            knotepi::order::FilterState::Fail => "fail",
        },
        match r.filters.alexander {
            knotepi::order::FilterState::Pass => "pass",
            knotepi::order::FilterState::Fail => "fail",
        },
        match r.filters.riley_advisory {
            knotepi::order::RileyFilterState::Consistent => "consistent",
            knotepi::order::RileyFilterState::Inconsistent => "inconsistent",
            knotepi::order::RileyFilterState::Skipped => "skipped",
        },
        r.status.as_str()
    )
}

fn candidates(knot: KnotId, riley: bool, format: Format) -> Result<ExitCode, UsageError> {
    let k = knot.as_two_bridge().ok_or_else(|| {
        UsageError(format!(
            "candidate enumeration covers 2-bridge knots; {knot} has no 2-bridge form"
        ))
    })?;
    let reports = tb_candidates(&k, riley);
    emit(format, &reports, || {
        if reports.is_empty() {
            format!("no proper-divisor targets below {knot}")
        } else {
            reports
                .iter()
                .map(candidate_line)
                .collect::<Vec<_>>()
                .join("\n")
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn reason_text(v: &MinimalityVerdict) -> String {
    match v.reason {
        VerdictReason::PrimeDeterminant => "prime determinant".to_string(),
        VerdictReason::IrreducibleDeltaFastpath => "irreducible alexander polynomial".to_string(),
        VerdictReason::GenusOne => "genus one".to_string(),
        VerdictReason::TwistKnot => "twist knot".to_string(),
        VerdictReason::ExhaustiveElimination => "exhaustive elimination".to_string(),
        VerdictReason::TorusPrimeParams => "prime torus parameters".to_string(),
        VerdictReason::WitnessTarget => match &v.witness {
            Some(w) => format!("witness {w}"),
            None => "witness target".to_string(),
        },
        VerdictReason::SurvivingCandidates => "surviving candidates".to_string(),
    }
}

fn minimal(knot: KnotId, known: &KnownRelations, format: Format) -> Result<ExitCode, UsageError> {
    let verdict = is_p_minimal(&knot, known);
    emit(format, &verdict, || {
        let word = match verdict.verdict {
            Verdict::PMinimal => "p-minimal",
            Verdict::NotPMinimal => "not p-minimal",
            Verdict::Undetermined => "undetermined",
        };
        format!("{word} ({})", reason_text(&verdict))
    });
    Ok(if verdict.verdict == Verdict::NotPMinimal {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn atlas(
    max_det: u64,
    max_torus: u64,
    known: &KnownRelations,
    riley: bool,
    out: Option<PathBuf>,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let atlas =
        build_atlas(max_det, max_torus, known, riley).map_err(|e| UsageError(e.to_string()))?;
    if let Some(path) = &out {
        std::fs::write(path, atlas_to_dot(&atlas))
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    emit(format, &atlas, || {
        let count = |status: EdgeStatus| atlas.edges.iter().filter(|e| e.status == status).count();
        let mut text = format!(
            "atlas: {} nodes, {} edges ({} proven, {} known, {} candidate, {} refuted)",
            atlas.nodes.len(),
            atlas.edges.len(),
            count(EdgeStatus::Proven),
            count(EdgeStatus::KnownLiterature),
            count(EdgeStatus::Candidate),
            count(EdgeStatus::Refuted),
        );
        if let Some(path) = &out {
            text.push_str(&format!("\ndot: {}", path.display()));
        }
        text
    });
    Ok(ExitCode::SUCCESS)
}
