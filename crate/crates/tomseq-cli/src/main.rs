//! Command-line front end: reports over the published sequence families,
//! Euler transforms of sequence files, table-of-marks interchange, and
//! connected-partition counting.
//!
//! Exit codes: 0 success, 1 golden mismatch, 2 input or format error,
//! 3 enumeration-budget refusal.

mod engine;
mod golden;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tomseq::cache::Family;
use tomseq::connectivity;
use tomseq::enumerate::DEFAULT_BUDGET;
use tomseq::marks::MarksTable;
use tomseq::properties::Property;
use tomseq::seqio;
use tomseq::tomtext;
use tomseq::transforms;
use tomseq::Error;

use engine::Engine;
use report::{build_report, golden_mismatches, render_bfiles, render_csv, render_json, Cell};

#[derive(Parser)]
#[command(
    name = "tomseq",
    about = "Subgroup lattices of small symmetric and alternating groups and the integer sequences they realize",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sequence tables for a family of groups and check them
    /// against the published values.
    Report(ReportArgs),
    /// Euler transform or inverse Euler transform of a sequence file
    /// (b-file or one-line CSV; the output keeps the input format).
    Transform(TransformArgs),
    /// Export, import, or verify tables of marks in the tom-text format.
    #[command(subcommand)]
    Tom(TomCommand),
    /// Count or list connected partitions.
    Partitions(PartitionArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// Group family: S (symmetric) or A (alternating).
    #[arg(long, default_value = "S")]
    family: String,
    /// Largest degree to report.
    #[arg(long = "max-n", default_value_t = 7)]
    max_n: usize,
    /// Comma-separated table ids, or "all".
    #[arg(long, default_value = "classcounts")]
    tables: String,
    /// Output format.
    #[arg(long, default_value = "csv", value_parser = ["csv", "json", "bfile"])]
    format: String,
    /// Write one file per table into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// tom-text files supplying marks tables for degrees beyond the budget
    /// (tables inside must be named S8, A9, ...).
    #[arg(long)]
    import: Vec<PathBuf>,
    /// Enumeration budget: refuse to materialize groups larger than this.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Skip the golden comparison.
    #[arg(long)]
    no_golden: bool,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory for computed class tables (default: TOMSEQ_CACHE_DIR,
    /// then the platform cache directory).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the class-table cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_parser = ["euler", "inverse"])]
    direction: String,
    /// Input sequence file.
    #[arg(long)]
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Number of output terms (defaults to the input length).
    #[arg(long)]
    upto: Option<usize>,
}

#[derive(Subcommand)]
enum TomCommand {
    /// Enumerate a group and write its table of marks.
    Export(TomExportArgs),
    /// Parse and validate a tom-text file.
    Import(TomPathArgs),
    /// Parse, validate, and report every derived quantity; compares
    /// against the published values when the table is named S<n> or A<n>.
    Verify(TomVerifyArgs),
}

#[derive(Args)]
struct TomExportArgs {
    #[arg(long, default_value = "S")]
    family: String,
    #[arg(long)]
    n: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct TomPathArgs {
    #[arg(long)]
    path: PathBuf,
}

#[derive(Args)]
struct TomVerifyArgs {
    #[arg(long)]
    path: PathBuf,
    #[arg(long)]
    no_golden: bool,
}

#[derive(Args)]
struct PartitionArgs {
    #[arg(long)]
    n: u32,
    /// Count only connected partitions.
    #[arg(long)]
    connected: bool,
    /// Restrict to even cycle types, counted inside the alternating group.
    #[arg(long)]
    even: bool,
    /// List the partitions instead of only counting.
    #[arg(long)]
    list: bool,
}

// exit codes per the interface contract
const EXIT_GOLDEN: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Tom(cmd) => match cmd {
            TomCommand::Export(args) => cmd_tom_export(args),
            TomCommand::Import(args) => cmd_tom_import(args),
            TomCommand::Verify(args) => cmd_tom_verify(args),
        },
        Command::Partitions(args) => cmd_partitions(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn cmd_report(args: ReportArgs) -> Result<ExitCode, Error> {
    let family = parse_family(&args.family)?;
    if args.max_n == 0 {
        return Err(Error::Format("--max-n must be at least 1".into()));
    }
    let tables = report::parse_table_list(&args.tables, family)?;
    let cache_dir = engine::resolve_cache_dir(args.cache.cache_dir, args.cache.no_cache);
    let mut eng = Engine::new(args.budget, cache_dir);
    if args.budget > DEFAULT_BUDGET {
        eprintln!(
            "note: budget {} exceeds the default {DEFAULT_BUDGET}; enumeration at this scale can take minutes",
            args.budget
        );
    }
    for path in &args.import {
        let text = std::fs::read_to_string(path)?;
        let (mt, props) = tomtext::parse_tom(&text)?;
        let name = mt.name().to_string();
        match eng.register_import(mt, props) {
            Some((fam, n)) => eprintln!("imported {name} as {}{n}", fam.letter()),
            None => {
                eprintln!("note: table name {name:?} is not S<n>/A<n>; import ignored for reports")
            }
        }
    }

    let mut reports = Vec::new();
    for table in tables {
        reports.push(build_report(&mut eng, table, family, args.max_n)?);
    }

    // a report where nothing at all could be computed is a refusal
    if reports.iter().all(|r| {
        r.rows
            .iter()
            .all(|(_, cell)| matches!(cell, Cell::RequiresImport))
    }) {
        eprintln!(
            "error: nothing computable: every requested degree exceeds budget {} and no import covers it",
            args.budget
        );
        return Ok(ExitCode::from(EXIT_BUDGET));
    }

    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
    }
    for r in &reports {
        match args.format.as_str() {
            "csv" => {
                let body = render_csv(r);
                match &args.out {
                    Some(dir) => std::fs::write(
                        dir.join(format!("{}_{}.csv", r.family.letter(), r.table)),
                        body,
                    )?,
                    None => print!("# table {} {}\n{body}", r.family.letter(), r.table),
                }
            }
            "json" => {
                let body = serde_json::to_string_pretty(&render_json(r)).expect("serializable");
                match &args.out {
                    Some(dir) => std::fs::write(
                        dir.join(format!("{}_{}.json", r.family.letter(), r.table)),
                        body + "\n",
                    )?,
                    None => println!("{body}"),
                }
            }
            "bfile" => {
                let Some(dir) = &args.out else {
                    return Err(Error::Format(
                        "bfile output writes one file per column; --out is required".into(),
                    ));
                };
                for (name, body) in render_bfiles(r) {
                    std::fs::write(dir.join(name), body)?;
                }
            }
            _ => unreachable!("clap validates the format"),
        }
    }

    if args.no_golden {
        return Ok(ExitCode::SUCCESS);
    }
    let mut mismatched = false;
    for r in &reports {
        for m in golden_mismatches(r) {
            mismatched = true;
            eprintln!(
                "golden mismatch: {} {} n={} column {}: computed {} expected {}",
                m.family.letter(),
                m.table,
                m.n,
                m.column,
                m.computed,
                m.expected
            );
        }
    }
    Ok(if mismatched {
        ExitCode::from(EXIT_GOLDEN)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_transform(args: TransformArgs) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&args.input)?;
    let (seq, format) = seqio::parse_auto(&text)?;
    let upto = args.upto.unwrap_or(seq.len());
    if upto == 0 {
        return Err(Error::Format("empty sequence".into()));
    }
    let transformed = match args.direction.as_str() {
        "euler" => transforms::euler_transform(&seq, upto)?,
        "inverse" => transforms::inverse_euler_transform(&seq, upto)?,
        _ => unreachable!("clap validates the direction"),
    };
    let body = seqio::write_in_format(&transformed, format);
    match &args.output {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tom_export(args: TomExportArgs) -> Result<ExitCode, Error> {
    let family = parse_family(&args.family)?;
    if args.n == 0 {
        return Err(Error::Format("--n must be at least 1".into()));
    }
    let cache_dir = engine::resolve_cache_dir(args.cache.cache_dir, args.cache.no_cache);
    let mut eng = Engine::new(args.budget, cache_dir);
    let table = eng.class_table(family, args.n)?;
    let flags = eng.property_flags(family, args.n)?;
    let mt = MarksTable::from_class_table(&table, true).with_name(format!(
        "{}{}",
        family.letter(),
        args.n
    ));
    let text = tomtext::write_tom(&mt, Some(&flags));
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tom_import(args: TomPathArgs) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&args.path)?;
    let (mt, props) = tomtext::parse_tom(&text)?;
    println!(
        "ok: {} with {} classes, group order {}, properties {}",
        mt.name(),
        mt.class_count(),
        mt.group_order(),
        if props.is_some() { "present" } else { "absent" }
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_tom_verify(args: TomVerifyArgs) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&args.path)?;
    let (mt, props) = tomtext::parse_tom(&text)?;
    let (distinct, missing) = mt.order_stats();
    println!("name {}", mt.name());
    println!("classes {}", mt.class_count());
    println!("group-order {}", mt.group_order());
    println!("total-subgroups {}", mt.total_subgroups());
    println!("entry-sum {}", mt.entry_sum());
    println!("diagonal-sum {}", mt.diagonal_sum());
    println!("poset-incidences {}", mt.incidence_count());
    println!("lattice-incidences {}", mt.containment_sum());
    println!("poset-edges {}", mt.poset_edge_count()?);
    println!("lattice-edges {}", mt.lattice_edge_count()?);
    println!("distinct-orders {distinct}");
    println!("missing-orders {missing}");
    if let Some(flags) = &props {
        for p in [
            Property::Solvable,
            Property::Supersolvable,
            Property::Abelian,
            Property::Cyclic,
            Property::Nilpotent,
        ] {
            println!(
                "maximal-{} classes {} total {}",
                p.name(),
                mt.maximal_property_classes(flags, p)?.len(),
                mt.total_maximal_property(flags, p)?
            );
        }
    }

    if args.no_golden {
        return Ok(ExitCode::SUCCESS);
    }
    let Some((family, n)) = engine::parse_table_name(mt.name()) else {
        return Ok(ExitCode::SUCCESS);
    };
    let mut mismatched = false;
    let mut check = |table: &str, values: Vec<i128>| {
        if let Some(expected) = golden::expected(table, family, n) {
            for (k, (&got, &want)) in values.iter().zip(expected).enumerate() {
                if got != want as i128 {
                    mismatched = true;
                    eprintln!(
                        "golden mismatch: {} {} n={} column {}: computed {} expected {}",
                        family.letter(),
                        table,
                        n,
                        k,
                        got,
                        want
                    );
                }
            }
        }
    };
    check("totals", vec![mt.total_subgroups()]);
    check("sums", vec![mt.entry_sum(), mt.diagonal_sum()]);
    check(
        "incidences",
        vec![mt.incidence_count(), mt.containment_sum()],
    );
    check(
        "edges",
        vec![mt.poset_edge_count()? as i128, mt.lattice_edge_count()?],
    );
    check("orders", vec![distinct as i128, missing as i128]);
    Ok(if mismatched {
        ExitCode::from(EXIT_GOLDEN)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_partitions(args: PartitionArgs) -> Result<ExitCode, Error> {
    if args.n == 0 {
        return Err(Error::Format("--n must be at least 1".into()));
    }
    if args.list {
        let parts = if args.connected || args.even {
            connectivity::connected_partitions(args.n, args.even)
        } else {
            connectivity::partitions_of(args.n)
        };
        for p in &parts {
            let values: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            println!("{}", values.join(" "));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let count = if args.connected || args.even {
        connectivity::connected_partition_count(args.n, args.even)
    } else {
        connectivity::partitions_of(args.n).len()
    };
    println!("{count}");
    Ok(ExitCode::SUCCESS)
}
