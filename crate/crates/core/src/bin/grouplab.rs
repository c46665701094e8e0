use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use grouplab::group::BuildOptions;
use grouplab::harness::{
    build_fixture, bundled_corpus, parse_fixture, parse_selection, run_checks, CheckReport,
    FixtureFile, RunOptions,
};
use grouplab::identities::WORD_EVALUATION_BUDGET;
use grouplab::lie::GradedLieRing;
use grouplab::series::{
    derived_series, dimension_series, fitting_series, lower_central_series, structure_predicates,
    NormalSeries,
};
use grouplab::{Error, Result};

#[derive(Parser)]
#[command(name = "grouplab", version, about = "Check finite-group and graded Lie ring facts on fixture files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the groups, automorphisms and actions in a fixture file.
    Info { file: PathBuf },
    /// Print the standard series of one group.
    Series {
        file: PathBuf,
        #[arg(long)]
        group: String,
        /// Prime for the dimension series; defaults to the group's prime.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Print the graded Lie ring of a p-group.
    Liering {
        file: PathBuf,
        #[arg(long)]
        group: String,
    },
    /// Run checks on a fixture file.
    Check {
        file: PathBuf,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        select: String,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Evaluation budget for word laws.
        #[arg(long, default_value_t = WORD_EVALUATION_BUDGET)]
        budget: u64,
        /// Record per-row wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Run every check on the bundled corpus.
    Corpus {
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        timings: bool,
    },
}

fn read_fixture(path: &Path) -> Result<FixtureFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedSpec(format!("{}: {e}", path.display())))?;
    parse_fixture(&text)
}

fn print_series(label: &str, s: &NormalSeries) {
    let orders: Vec<String> = s.orders().iter().map(usize::to_string).collect();
    println!("{label:<16} {}", orders.join(" > "));
}

fn info(file: &FixtureFile) -> Result<()> {
    let built = build_fixture(file, &BuildOptions::default());
    for (name, g) in &built.groups {
        match g {
            Ok(g) => {
                let s = structure_predicates(g);
                let class = s.nilpotency_class.map_or("-".into(), |c| c.to_string());
                let prime = s.p_group_prime.map_or("-".into(), |p| p.to_string());
                println!(
                    "group {name:<10} {:?}  order {:<5} exponent {:<4} p {prime:<2} class {class:<2} solvable {}",
                    g.backend(),
                    g.order(),
                    g.exponent(),
                    s.is_solvable
                );
            }
            Err(e) => println!("group {name:<10} build failed: {e}"),
        }
    }
    for (name, a) in &built.auts {
        match a {
            Ok(a) => println!("aut   {name:<10} order {}", a.order()),
            Err(e) => println!("aut   {name:<10} build failed: {e}"),
        }
    }
    for (name, a) in &built.actions {
        match a {
            Ok(a) => println!("action {name:<9} on {}  |A| = {}  coprime {}", a.group, a.order(), a.coprime),
            Err(e) => println!("action {name:<9} build failed: {e}"),
        }
    }
    for (name, h) in &built.isos {
        match h {
            Ok(h) => println!("iso   {name:<10} bijective {}", h.is_bijective()),
            Err(e) => println!("iso   {name:<10} build failed: {e}"),
        }
    }
    println!("{} explicit check lines", file.checks.len());
    Ok(())
}

fn series(file: &FixtureFile, name: &str, prime: Option<u64>) -> Result<()> {
    let built = build_fixture(file, &BuildOptions::default());
    let g = built.group(name)?;
    println!("{name}: order {}, exponent {}", g.order(), g.exponent());
    print_series("lower central", &lower_central_series(g));
    print_series("derived", &derived_series(g));
    if let Some(p) = prime.or(g.p_group_prime()) {
        print_series(&format!("dimension (p={p})"), &dimension_series(g, p)?);
    }
    match fitting_series(g) {
        Ok(s) => print_series("fitting", &s),
        Err(e) => println!("{:<16} {e}", "fitting"),
    }
    Ok(())
}

fn liering(file: &FixtureFile, name: &str) -> Result<()> {
    let built = build_fixture(file, &BuildOptions::default());
    let g = built.group(name)?;
    let p = g.p_group_prime().ok_or(Error::NotAPGroup { order: g.order(), p: 0 })?;
    let l = GradedLieRing::build(g, p, 0)?;
    println!("DL({name}) over F_{p}: dimension {}, class {}", l.dim(), l.nilpotency_class());
    for d in 1..=l.top_degree() {
        let reps: Vec<String> = l.component_range(d).map(|a| g.display(l.rep(a))).collect();
        println!("  L_{d}: dim {}  basis {}", l.component_dim(d), reps.join(", "));
    }
    for a in 0..l.dim() {
        for b in a + 1..l.dim() {
            let c = l.structure_constant(a, b);
            if c.iter().any(|&x| x != 0) {
                let terms: Vec<String> =
                    c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, x)| format!("{x}*e{k}")).collect();
                println!("  [e{a}, e{b}] = {}", terms.join(" + "));
            }
        }
    }
    let lp = l.lp_subalgebra();
    println!("  L_p dims {:?}", lp.dims());
    Ok(())
}

fn finish(report: &CheckReport, out: Option<&Path>, fitting: bool) -> Result<ExitCode> {
    print!("{}", report.to_table());
    if fitting {
        println!("\nexponent against Fitting height\n{}", report.fitting_table_text());
    }
    if let Some(path) = out {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Error::MalformedSpec(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.failures().next().is_some() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Info { file } => info(&read_fixture(&file)?).map(|_| ExitCode::SUCCESS),
        Command::Series { file, group, prime } => {
            series(&read_fixture(&file)?, &group, prime).map(|_| ExitCode::SUCCESS)
        }
        Command::Liering { file, group } => liering(&read_fixture(&file)?, &group).map(|_| ExitCode::SUCCESS),
        Command::Check { file, select, report, seed, budget, timings } => {
            let selection = parse_selection(&select)?;
            let fixture = read_fixture(&file)?;
            let opts = RunOptions { seed, budget, timings, ..RunOptions::default() };
            let built = build_fixture(&fixture, &opts.build);
            let r = run_checks(&built, &selection, &opts)?;
            finish(&r, report.as_deref(), selection.iter().any(|s| s == "fitting"))
        }
        Command::Corpus { report, seed, timings } => {
            let fixture = bundled_corpus()?;
            let opts = RunOptions { seed, timings, ..RunOptions::default() };
            let built = build_fixture(&fixture, &opts.build);
            let r = run_checks(&built, &parse_selection("all")?, &opts)?;
            finish(&r, report.as_deref(), true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
