//! Command-line surface: generation, analysis, property checks, theorem
//! verification, DOT export and isomorphism testing.
//!
//! Exit codes: 0 success / true / pass; 1 property false or verification
//! failure; 2 usage error; 3 parse or validation error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use loewy::error::LatticeError;
use loewy::lattice::FiniteLattice;
use loewy::suites::{Campaign, VerificationReport};
use loewy::{analysis, dot, families, format, iso, suites};

#[derive(Parser)]
#[command(name = "lattice", version, about = "Finite lattice analysis and theorem verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a lattice family and write the canonical file
    Gen {
        /// Family: chain, cube, divisor, grid, diamond, pentagon,
        /// subgroup-cyclic, subspace, paper, random
        family: String,
        /// Family parameters (integers, or a fixture name for `paper`)
        params: Vec<String>,
        /// Output file (`-` = standard output)
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Print the full invariant report for a lattice file
    Analyze {
        /// Input file (`-` = standard input)
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Loewy series, one element per line
    Loewy {
        file: String,
    },
    /// Check one property; prints true/false and exits 0/1
    Check {
        /// One of: chain, distributive, boolean, catenarian, p-extension
        property: String,
        file: String,
    },
    /// Run a theorem suite; exits 0 on pass, 1 on failure
    Verify {
        /// One of: core, distributive, p-extension, product, thm8131
        suite: String,
        /// Single divisor-lattice instance (thm8131)
        #[arg(long)]
        n: Option<u64>,
        /// Campaign range upper bound (thm8131)
        #[arg(long)]
        max_n: Option<u64>,
        /// Campaign seed (distributive, product)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Campaign instance count (distributive, product)
        #[arg(long)]
        count: Option<usize>,
        /// Size bound for random instances (distributive)
        #[arg(long, default_value_t = 64)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Export a DOT drawing of the cover relation
    ExportDot {
        file: String,
        /// Mark the Loewy series and highlight the chain
        #[arg(long)]
        loewy: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Test two lattice files for order-isomorphism; exits 0/1
    Iso {
        file1: String,
        file2: String,
    },
}

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn write_output(path: &str, content: &str) -> std::io::Result<()> {
    if path == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(path, content)
    }
}

fn load(path: &str) -> Result<FiniteLattice, ExitCode> {
    let text = read_input(path).map_err(|e| fail(EXIT_INVALID, format!("{path}: {e}")))?;
    format::parse_lattice(&text).map_err(|e| fail(EXIT_INVALID, format!("{path}: {e}")))
}

fn int_params(params: &[String]) -> Result<Vec<u64>, ExitCode> {
    params
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| fail(EXIT_USAGE, format!("expected an integer, got `{p}`")))
        })
        .collect()
}

fn one_int(params: &[String], family: &str) -> Result<u64, ExitCode> {
    let v = int_params(params)?;
    if v.len() != 1 {
        return Err(fail(EXIT_USAGE, format!("`{family}` takes exactly one integer parameter")));
    }
    Ok(v[0])
}

fn generate(family: &str, params: &[String]) -> Result<FiniteLattice, ExitCode> {
    let built = match family {
        "chain" => families::chain(one_int(params, family)? as usize),
        "cube" => families::boolean_cube(one_int(params, family)? as usize),
        "divisor" => families::divisor_lattice(one_int(params, family)?),
        "grid" => {
            let dims: Vec<usize> = int_params(params)?.iter().map(|&d| d as usize).collect();
            families::grid(&dims)
        }
        "diamond" => families::diamond(one_int(params, family)? as usize),
        "pentagon" => {
            if !params.is_empty() {
                return Err(fail(EXIT_USAGE, "`pentagon` takes no parameters"));
            }
            families::pentagon()
        }
        "subgroup-cyclic" => families::subgroup_lattice_cyclic(one_int(params, family)?),
        "subspace" => {
            let v = int_params(params)?;
            if v.len() != 2 {
                return Err(fail(EXIT_USAGE, "`subspace` takes two integers: q d"));
            }
            families::subspace_lattice(v[0] as usize, v[1] as usize)
        }
        "paper" => {
            if params.len() != 1 {
                return Err(fail(EXIT_USAGE, "`paper` takes one fixture name"));
            }
            families::paper_example(&params[0])
        }
        "random" => {
            let v = int_params(params)?;
            if v.len() != 2 {
                return Err(fail(EXIT_USAGE, "`random` takes two integers: seed max_size"));
            }
            families::random_distributive(v[0], v[1] as usize)
        }
        other => return Err(fail(EXIT_USAGE, format!("unknown family `{other}`"))),
    };
    built.map_err(|e| match e {
        LatticeError::Range(_) | LatticeError::UnknownName(_) => fail(EXIT_USAGE, e),
        other => fail(EXIT_INVALID, other),
    })
}

fn sorted_json<T: serde::Serialize>(value: &T) -> String {
    // serde_json maps are ordered; converting to Value sorts the keys
    let v = serde_json::to_value(value).expect("serializable report");
    serde_json::to_string_pretty(&v).expect("printable json")
}

fn print_report_human(r: &loewy::analysis::AnalysisReport) {
    let flag = |f: Option<bool>| match f {
        Some(v) => v.to_string(),
        None => "skipped".to_owned(),
    };
    println!("lattice:          {}", r.name);
    println!("cardinality:      {}", r.cardinality);
    println!("bottom / top:     {} / {}", r.bottom, r.top);
    println!("atoms:            {}", r.atoms.join(" "));
    println!("coatoms:          {}", r.coatoms.join(" "));
    match &r.essentials {
        Some(e) => println!("essentials:       {}", e.join(" ")),
        None => println!("essentials:       (undefined on 1-element lattice)"),
    }
    println!("socle:            {}", r.socle);
    println!("radical:          {}", r.radical);
    println!("loewy series:     {}", r.loewy_series.join(" < "));
    println!("loewy length:     {}", r.loewy_length);
    println!("lattice length:   {}", r.lattice_length);
    println!(
        "layer sizes:      {}",
        r.layer_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    );
    println!("join irreducible: {}", r.join_irreducibles.join(" "));
    println!("meet irreducible: {}", r.meet_irreducibles.join(" "));
    println!("chain:            {}", r.is_chain);
    println!("distributive:     {}", flag(r.is_distributive));
    println!("modular:          {}", flag(r.is_modular));
    println!("boolean:          {}", flag(r.is_boolean));
    println!("catenarian:       {}", r.is_catenarian);
    println!("p-extension:      {}", r.is_p_extension);
}

fn print_verification(r: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", sorted_json(r));
    } else {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{}: {} ({} instances, {} failures, {} skipped, {} ms)",
            r.suite,
            verdict,
            r.instances_checked,
            r.failures.len(),
            r.skipped.len(),
            r.elapsed_ms
        );
        for f in &r.failures {
            println!("  {} | {} | witness: {}", f.instance, f.clause, f.witness.join(", "));
        }
        for s in &r.skipped {
            println!("  skipped: {s}");
        }
    }
    if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FALSE)
    }
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { family, params, output } => {
            let l = match generate(&family, &params) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let text = format::write_lattice(&l);
            match write_output(&output, &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(EXIT_INVALID, format!("{output}: {e}")),
            }
        }
        Command::Analyze { file, json } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match analysis::analyze(&l) {
                Ok(r) => {
                    if json {
                        println!("{}", sorted_json(&r));
                    } else {
                        print_report_human(&r);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
        Command::Loewy { file } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match analysis::loewy_series(&l) {
                Ok(s) => {
                    for &i in &s.chain {
                        println!("{}", l.element(i));
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
        Command::Check { property, file } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let result = match property.as_str() {
                "chain" => Ok(analysis::is_chain(&l)),
                "distributive" => analysis::is_distributive(&l),
                "boolean" => analysis::is_boolean(&l),
                "catenarian" => Ok(analysis::is_catenarian(&l)),
                "p-extension" => analysis::is_p_extension(&l),
                other => return fail(EXIT_USAGE, format!("unknown property `{other}`")),
            };
            match result {
                Ok(v) => {
                    println!("{v}");
                    if v {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_FALSE)
                    }
                }
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
        Command::Verify { suite, n, max_n, seed, count, max_size, json } => {
            let outcome = match suite.as_str() {
                "thm8131" => match n {
                    Some(n) => suites::verify_thm_8_131(n),
                    None => suites::run_campaign(&Campaign::Thm8131 {
                        min_n: 2,
                        max_n: max_n.unwrap_or(1000),
                    }),
                },
                "core" => suites::run_campaign(&Campaign::Core),
                "distributive" => suites::run_campaign(&Campaign::Distributive {
                    seed,
                    count: count.unwrap_or(100),
                    max_size,
                }),
                "p-extension" => suites::run_campaign(&Campaign::PExtension),
                "product" => suites::run_campaign(&Campaign::Product {
                    seed,
                    count: count.unwrap_or(50),
                }),
                other => return fail(EXIT_USAGE, format!("unknown suite `{other}`")),
            };
            match outcome {
                Ok(r) => print_verification(&r, json),
                Err(e @ LatticeError::Range(_)) => fail(EXIT_USAGE, e),
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
        Command::ExportDot { file, loewy, output } => {
            let l = match load(&file) {
                Ok(l) => l,
                Err(code) => return code,
            };
            match dot::export_dot(&l, loewy) {
                Ok(text) => match write_output(&output, &text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => fail(EXIT_INVALID, format!("{output}: {e}")),
                },
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
        Command::Iso { file1, file2 } => {
            let l1 = match load(&file1) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let l2 = match load(&file2) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let cap = std::env::var("LATTICE_MAX_N")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(iso::DEFAULT_ISO_CAP);
            match iso::are_isomorphic_capped(&l1, &l2, cap) {
                Ok(Some(map)) => {
                    for (i, &j) in map.iter().enumerate() {
                        println!("{} -> {}", l1.element(i), l2.element(j));
                    }
                    ExitCode::SUCCESS
                }
                Ok(None) => {
                    println!("not isomorphic");
                    ExitCode::from(EXIT_FALSE)
                }
                Err(e) => fail(EXIT_INVALID, e),
            }
        }
    }
}

fn main() -> ExitCode {
    run()
}
