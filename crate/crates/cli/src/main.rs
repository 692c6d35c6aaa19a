use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trigpoly_core::chebyshev::{ChebKind, ChebMatrix};
use trigpoly_core::combinatorics::{pyramidal, CatalanTriangles};
use trigpoly_core::exact::{Integer, Matrix};
use trigpoly_core::factor::{factor_table, golden_fixed_points, pyramidal_column_report, run_conjecture_battery};
use trigpoly_core::fourier::{lu_lower, SuperCatalanMatrix};
use trigpoly_core::spread::SpreadFamily;
use rayon::prelude::*;
use trigpoly_core::suite::{run_suite, Fault, Suite, SuiteReport};
use trigpoly_oeis::{crosscheck, generator, AId, Client, OeisError};

mod render;

// Output goes through these so that `trigpoly ... | head` ends quietly.
macro_rules! print {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($t)*) {
            $crate::stdout_failed(e);
        }
    }};
}

macro_rules! println {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($t)*) {
            $crate::stdout_failed(e);
        }
    }};
}

fn stdout_failed(e: std::io::Error) -> ! {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("trigpoly: writing output: {e}");
    std::process::exit(EXIT_FAIL.into());
}

use render::{Format, Grid};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "trigpoly", version, about = "Exact Chebyshev, spread and Riordan tables, identity suites and conjecture runs")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a coefficient table.
    Gen {
        #[arg(long, value_enum, ignore_case = true)]
        object: Object,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run identity suites; exit 1 on any failure.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Perturb one input coefficient by +1 ("row,col", or the suite's default).
        #[arg(long, hide = true, num_args = 0..=1, default_missing_value = "default")]
        inject_fault: Option<String>,
    },
    /// Build Φ_d / ψ_d through n and run the conjecture battery.
    Factor {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Append the (non-fatal) pyramidal-column alignment report.
        #[arg(long)]
        report_pyramidal: bool,
    },
    /// Check the fixed points of Z_n at 2, 3 and 2+φ in exact Z[φ].
    FixedPoints {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Compare a registered sequence with its OEIS b-file.
    Oeis {
        #[arg(long, value_parser = |s: &str| s.parse::<AId>().map_err(|e| e.to_string()))]
        id: AId,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Use only bundled fixtures and the local cache.
        #[arg(long)]
        offline: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    #[value(name = "P")]
    P,
    #[value(name = "V")]
    V,
    #[value(name = "S")]
    S,
    #[value(name = "Z")]
    Z,
    #[value(name = "Beven")]
    Beven,
    #[value(name = "Bodd")]
    Bodd,
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
    Pyramidal,
    PhiTable,
}

#[derive(Clone, Copy, Debug)]
enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(SuiteArg::All);
    }
    s.parse().map(SuiteArg::One).map_err(|e| format!("{e}; expected one of chebyshev, riordan, basechange, fourier, spread, all"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    match cli.command {
        Command::Gen { object, size, format } => gen(object, size as usize, format),
        Command::Verify { suite, order, inject_fault } => verify(suite, order as usize, inject_fault.as_deref()),
        Command::Factor { max_n, report_pyramidal } => factor(max_n, report_pyramidal),
        Command::FixedPoints { max_n } => match golden_fixed_points(max_n) {
            Ok(report) => {
                print!("{report}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(EXIT_FAIL)
            }
        },
        Command::Oeis { id, terms, offline } => oeis(id, terms, offline),
    }
}

fn gen(object: Object, size: usize, format: Format) -> ExitCode {
    let cheb = |kind| ChebMatrix::new(kind, size).into_matrix();
    let (name, matrix, blank_zeros): (&str, Matrix<Integer>, bool) = match object {
        Object::T => ("T", cheb(ChebKind::T), true),
        Object::U => ("U", cheb(ChebKind::U), true),
        Object::P => ("P", cheb(ChebKind::P), true),
        Object::V => ("V", cheb(ChebKind::V), true),
        Object::S => ("S", SpreadFamily::spread(size).matrix(size), true),
        Object::Z => ("Z", SpreadFamily::zpread(size).matrix(size), true),
        Object::Beven => ("Beven", CatalanTriangles::new(size).even, true),
        Object::Bodd => ("Bodd", CatalanTriangles::new(size).odd, true),
        Object::M => ("M", SuperCatalanMatrix::new(size).entries, false),
        Object::L => ("L", lu_lower(size), true),
        Object::Pyramidal => {
            // rows i = 1..=size, at least ten columns
            let cols = size.max(10);
            let m = Matrix::from_fn(size, cols, |i, j| pyramidal(i as u32 + 1, j as i64));
            ("pyramidal", m, false)
        }
        Object::PhiTable => {
            let table = match factor_table(size as u64) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_FAIL);
                }
            };
            let rows: Vec<_> = table.phi.iter().map(|(d, phi)| (*d, phi, table.psi.get(d))).collect();
            print!("{}", render::phi_table(&rows, format));
            return ExitCode::SUCCESS;
        }
    };
    print!("{}", render::grid(&Grid { name, matrix: &matrix, blank_zeros }, format));
    ExitCode::SUCCESS
}

fn verify(suite: SuiteArg, order: usize, inject: Option<&str>) -> ExitCode {
    let suites: Vec<Suite> = match suite {
        SuiteArg::One(s) => vec![s],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut planned = Vec::new();
    for s in suites {
        let fault = match inject {
            None => None,
            Some("default") => Some(s.default_fault()),
            Some(spec) => match spec.split_once(',').map(|(r, c)| (r.trim().parse(), c.trim().parse())) {
                Some((Ok(r), Ok(c))) => Some(Fault::new(r, c)),
                _ => {
                    eprintln!("error: --inject-fault expects \"row,col\", got {spec:?}");
                    return ExitCode::from(EXIT_USAGE);
                }
            },
        };
        planned.push((s, fault));
    }
    let reports: Vec<SuiteReport> = match planned.par_iter().map(|&(s, f)| run_suite(s, order, f)).collect() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mut ok = true;
    for r in &reports {
        print!("{r}");
        if !r.passed() {
            ok = false;
            for f in r.failures() {
                eprintln!("{}: {f}", r.suite);
            }
        }
    }
    if ok {
        println!("all checks passed");
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn factor(max_n: u64, report_pyramidal: bool) -> ExitCode {
    let table = match factor_table(max_n) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let rows: Vec<_> = table.phi.iter().map(|(d, phi)| (*d, phi, table.psi.get(d))).collect();
    print!("{}", render::phi_table(&rows, Format::Plain));
    if max_n >= 16 {
        println!("note: ψ₁₆ = 2 - 16x + 20x^2 - 8x^3 + x^4 (quadratic coefficient 20; confirmed by Z_16 = Φ₁Φ₂Φ₄Φ₈Φ₁₆)");
    }
    let battery = run_conjecture_battery(&table);
    print!("{battery}");
    if report_pyramidal {
        println!("pyramidal-column report (exploratory, not asserted):");
        for row in pyramidal_column_report(&table) {
            println!("  {row}");
        }
    }
    if battery.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn oeis(id: AId, terms: usize, offline: bool) -> ExitCode {
    let client = Client::new(offline);
    let fail = |e: OeisError| {
        eprintln!("{e}");
        ExitCode::from(EXIT_FAIL)
    };
    let Some(gen) = generator(id) else {
        // unregistered: just show what the b-file says
        return match client.fetch_sequence(id, terms) {
            Ok(f) => {
                let t: Vec<String> = f.terms.iter().map(ToString::to_string).collect();
                println!("{id} (offset {}, {:?}): {}", f.offset, f.source, t.join(", "));
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        };
    };
    match crosscheck(&client, id, terms) {
        Ok(report) => {
            let t: Vec<String> = (gen.terms)(terms).iter().map(ToString::to_string).collect();
            println!("{id} from index {}: {}", gen.first_index, t.join(", "));
            println!("match: {report}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}
