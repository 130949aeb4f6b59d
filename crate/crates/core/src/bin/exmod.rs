//! Command-line front end for the exact-model library.
//!
//! Exit codes: 0 on success or a passing verdict, 1 when the answer is
//! negative (failed verdict, no witness, invalid input object or sequence),
//! 2 on usage, IO and parse errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use exact_model::complex::{cone, direct_sum, ChainComplex, ChainMap, Homotopy};
use exact_model::dw_exact::{axiom_suite, DwSes};
use exact_model::error::Error;
use exact_model::frobenius::{
    class_to_ses, classify, ext_dw, factor_cof_trivfib, factor_trivcof_fib, find_homotopy, is_contractible,
    path_object, pi_group, ses_to_class,
};
use exact_model::hovey::{
    check_hereditary, check_orthogonality, check_sub_model, check_thick, ChainInstance, Class, ClassSpec,
    ExactInstance, KEpsInstance, Verdict,
};
use exact_model::io::{load, store, Document};
use exact_model::keps::{decompose, ext1_keps, stable_hom, KEpsModule};
use exact_model::linalg::{ExactMatrix, Ring};

#[derive(Parser)]
#[command(name = "exmod", version, about = "Exact categories, chain homotopy and cotorsion-pair checks")]
struct Cli {
    /// Directory for output documents (verdicts and constructed objects).
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a document and check its invariants.
    Validate { file: PathBuf },
    /// Mapping cone of a chain map.
    Cone { map: PathBuf },
    /// Shift a complex by `--by` degrees.
    Shift {
        complex: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        by: i64,
    },
    /// Direct sum of two complexes.
    Sum { a: PathBuf, b: PathBuf },
    /// Cofibration / fibration / weak-equivalence flags of a chain map.
    Classify { map: PathBuf },
    /// A chain homotopy from the first map to the second, or NONE.
    Homotopy { f: PathBuf, g: PathBuf },
    /// A contracting homotopy of a complex, or NONE.
    Contractible { complex: PathBuf },
    /// Homotopy classes of maps X → Y.
    Pi { x: PathBuf, y: PathBuf },
    /// Ext^n(X, Y) in the degreewise split structure.
    Ext {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        x: PathBuf,
        y: PathBuf,
    },
    /// Factor a chain map as a cofibration followed by a fibration.
    Factor {
        map: PathBuf,
        #[arg(long, value_enum)]
        mode: FactorMode,
    },
    /// Path object of a complex with its structure maps.
    PathObject { complex: PathBuf },
    /// The class of the sequence given by a mono and an epi.
    SesClass { i: PathBuf, p: PathBuf },
    /// The sequence classified by a map C → ΣA.
    ClassSes { map: PathBuf },
    /// Modules over k[ε]/(ε²).
    Keps {
        #[command(subcommand)]
        command: KepsCommand,
    },
    /// Seeded sampling checks.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorMode {
    TrivcofFib,
    CofTrivfib,
}

#[derive(Subcommand)]
enum KepsCommand {
    /// Normal form k^a ⊕ k[ε]^b.
    Decompose { module: PathBuf },
    /// Homs modulo those factoring through a free module.
    Stablehom { m: PathBuf, n: PathBuf },
    Ext1 { m: PathBuf, n: PathBuf },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum InstanceKind {
    Chain,
    Keps,
}

#[derive(clap::Args)]
struct Sampling {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    samples: usize,
    #[arg(long, default_value = "Z")]
    ring: Ring,
}

#[derive(clap::Args)]
struct Classes {
    #[arg(long, value_enum, default_value = "chain")]
    instance: InstanceKind,
    /// `all`, `trivial` (contractibles or frees) or comma-separated document files.
    #[arg(long, default_value = "all")]
    left: String,
    #[arg(long, default_value = "trivial")]
    right: String,
    /// Class of trivial objects for thick and submodel checks.
    #[arg(long, default_value = "trivial")]
    w: String,
}

#[derive(Subcommand)]
enum CheckKind {
    /// Exact-category axioms for the degreewise split structure.
    Axioms {
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Orthogonality of `--left` and `--right`.
    Cotorsion {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        classes: Classes,
    },
    Thick {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        classes: Classes,
    },
    Hereditary {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        classes: Classes,
    },
    /// Cotorsion pairs (left, right ∩ w) and (left ∩ w, right) with sub-models.
    Submodel {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        classes: Classes,
    },
}

/// A negative answer; printed, then exit code 1.
struct Negative(String);

enum Failure {
    Negative(Negative),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

type Outcome = Result<(), Failure>;

fn negative(msg: impl Into<String>) -> Failure {
    Failure::Negative(Negative(msg.into()))
}

/// Errors that describe an invalid mathematical object rather than bad input.
fn invalid_object(e: Error) -> Failure {
    match e {
        Error::InvalidComplex { .. } | Error::InvalidMap { .. } | Error::InvalidModule(_) | Error::InvalidWitness(_) => {
            negative(e.to_string())
        }
        e => Failure::Error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(Negative(msg))) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("exmod: {e}");
            ExitCode::from(2)
        }
    }
}

fn complex(path: &Path) -> Result<ChainComplex, Failure> {
    Ok(load(path)?.into_complex()?)
}

fn chain_map(path: &Path) -> Result<ChainMap, Failure> {
    Ok(load(path)?.into_chain_map()?)
}

fn module(path: &Path) -> Result<KEpsModule, Failure> {
    Ok(load(path)?.into_keps_module()?)
}

fn same_ring(a: Ring, b: Ring) -> Result<(), Failure> {
    Ok(a.ensure_same(&b)?)
}

/// Print a document, and store it under `--out-dir` when given.
fn emit(cli: &Cli, name: &str, doc: &Document) -> Outcome {
    print!("{}", doc.to_json());
    save(cli, name, doc)
}

fn save(cli: &Cli, name: &str, doc: &Document) -> Outcome {
    if let Some(dir) = &cli.out_dir {
        std::fs::create_dir_all(dir)?;
        store(doc, &dir.join(format!("{name}.json")))?;
    }
    Ok(())
}

fn print_value(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn matrix_value(m: &ExactMatrix) -> Value {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into()
}

fn homotopy_value(h: &Homotopy) -> Value {
    let comps: Vec<Value> =
        h.components().iter().map(|(n, m)| json!({"degree": n, "matrix": matrix_value(m)})).collect();
    json!({"homotopy": comps})
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file).map_err(invalid_object)?;
            println!("valid {} over {}", doc.payload.kind(), doc.ring);
            Ok(())
        }
        Command::Cone { map } => {
            let f = chain_map(map)?;
            emit(cli, "cone", &Document::complex(&cone(&f).complex))
        }
        Command::Shift { complex: path, by } => emit(cli, "shift", &Document::complex(&complex(path)?.shift(*by))),
        Command::Sum { a, b } => {
            let (x, y) = (complex(a)?, complex(b)?);
            emit(cli, "sum", &Document::complex(&direct_sum(&x, &y)?.sum))
        }
        Command::Classify { map } => {
            let c = classify(&chain_map(map)?);
            print_value(&serde_json::to_value(c).expect("flags serialize"));
            Ok(())
        }
        Command::Homotopy { f, g } => {
            let (f, g) = (chain_map(f)?, chain_map(g)?);
            match find_homotopy(&f, &g)? {
                Some(h) => {
                    print_value(&homotopy_value(&h));
                    Ok(())
                }
                None => Err(negative("NONE")),
            }
        }
        Command::Contractible { complex: path } => match is_contractible(&complex(path)?) {
            Some(h) => {
                print_value(&homotopy_value(&h));
                Ok(())
            }
            None => Err(negative("NONE")),
        },
        Command::Pi { x, y } => {
            let (x, y) = (complex(x)?, complex(y)?);
            same_ring(x.ring(), y.ring())?;
            let g = pi_group(&x, &y)?;
            println!("{}", g.group);
            for (k, gen) in g.generators.iter().enumerate() {
                println!("generator {k}:");
                print!("{}", Document::chain_map(gen).to_json());
                save(cli, &format!("pi-generator-{k}"), &Document::chain_map(gen))?;
            }
            save(cli, "pi", &Document::group(&g.group))
        }
        Command::Ext { n, x, y } => {
            let (x, y) = (complex(x)?, complex(y)?);
            same_ring(x.ring(), y.ring())?;
            let g = ext_dw(*n, &x, &y)?;
            println!("{g}");
            save(cli, "ext", &Document::group(&g))
        }
        Command::Factor { map, mode } => {
            let f = chain_map(map)?;
            let fac = match mode {
                FactorMode::TrivcofFib => factor_trivcof_fib(&f),
                FactorMode::CofTrivfib => factor_cof_trivfib(&f),
            };
            let (i, p) = (Document::chain_map(&fac.i), Document::chain_map(&fac.p));
            print_value(&json!({"i": i.to_value(), "p": p.to_value()}));
            save(cli, "factor-i", &i)?;
            save(cli, "factor-p", &p)
        }
        Command::PathObject { complex: path } => {
            let po = path_object(&complex(path)?);
            let (i, p) = (Document::chain_map(&po.i), Document::chain_map(&po.p));
            print_value(&json!({"i": i.to_value(), "p": p.to_value()}));
            save(cli, "path-i", &i)?;
            save(cli, "path-p", &p)
        }
        Command::SesClass { i, p } => {
            let (i, p) = (chain_map(i)?, chain_map(p)?);
            same_ring(i.ring(), p.ring())?;
            let e = DwSes::from_maps(i, p).map_err(invalid_object)?;
            let class = ses_to_class(&e)?;
            println!("{}", class.group.group);
            let coords: Vec<String> = class.coordinates.iter().map(ToString::to_string).collect();
            println!("coordinates [{}]", coords.join(", "));
            emit(cli, "class", &Document::chain_map(&class.map))
        }
        Command::ClassSes { map } => {
            let e = class_to_ses(&chain_map(map)?).map_err(invalid_object)?;
            let (i, p) = (Document::chain_map(&e.i), Document::chain_map(&e.p));
            print_value(&json!({"i": i.to_value(), "p": p.to_value()}));
            save(cli, "ses-i", &i)?;
            save(cli, "ses-p", &p)
        }
        Command::Keps { command } => run_keps(cli, command),
        Command::Check { kind } => run_check(cli, kind),
    }
}

fn run_keps(cli: &Cli, command: &KepsCommand) -> Outcome {
    match command {
        KepsCommand::Decompose { module: path } => {
            let d = decompose(&module(path)?);
            println!("k^{} + k[e]^{}", d.a, d.b);
            Ok(())
        }
        KepsCommand::Stablehom { m, n } => {
            let s = stable_hom(&module(m)?, &module(n)?)?;
            println!("{}", s.group);
            save(cli, "stablehom", &Document::group(&s.group))
        }
        KepsCommand::Ext1 { m, n } => {
            let g = ext1_keps(&module(m)?, &module(n)?)?;
            println!("{g}");
            save(cli, "ext1", &Document::group(&g))
        }
    }
}

/// Parse a class selector against an instance.
fn class_for<I: ExactInstance>(
    selector: &str,
    all: Class<I::Object>,
    trivial: Class<I::Object>,
    read: impl Fn(&Path) -> Result<I::Object, Failure>,
) -> Result<Class<I::Object>, Failure> {
    match selector {
        "all" => Ok(all),
        "trivial" => Ok(trivial),
        files => {
            let members = files.split(',').map(|f| read(Path::new(f.trim()))).collect::<Result<Vec<_>, _>>()?;
            Ok(Class::finite(&format!("{{{files}}}"), members))
        }
    }
}

fn report(cli: &Cli, ring: Ring, v: &Verdict, name: &str, seed: u64) -> Outcome {
    println!("{}: {}", v.check, if v.passed { "PASS" } else { "FAIL" });
    println!("samples {} inconclusive {}", v.samples_run, v.inconclusive);
    for c in &v.counterexamples {
        println!("counterexample seed {} index {}: {}", c.seed, c.index, c.description);
    }
    save(cli, &format!("{name}-seed{seed}"), &Document::verdict(ring, v))?;
    if v.passed {
        Ok(())
    } else {
        Err(negative(format!("{} counterexample(s)", v.counterexamples.len())))
    }
}

enum Job {
    Cotorsion,
    Thick,
    Hereditary,
    Submodel,
}

fn run_job<I: ExactInstance>(
    inst: &I,
    job: &Job,
    sel: &Classes,
    s: &Sampling,
    all: Class<I::Object>,
    trivial: Class<I::Object>,
    read: impl Fn(&Path) -> Result<I::Object, Failure> + Copy,
) -> Result<Verdict, Failure> {
    let class = |name: &str| class_for::<I>(name, all.clone(), trivial.clone(), read);
    let (left, right, w) = (class(&sel.left)?, class(&sel.right)?, class(&sel.w)?);
    Ok(match job {
        Job::Cotorsion => check_orthogonality(inst, &left, &right, s.seed, s.samples),
        Job::Thick => check_thick(inst, &w, s.seed, s.samples),
        Job::Hereditary => check_hereditary(inst, &left, &right, s.seed, s.samples),
        Job::Submodel => check_sub_model(inst, &ClassSpec { q: left, r: right, w }, s.seed, s.samples),
    })
}

fn run_check(cli: &Cli, kind: &CheckKind) -> Outcome {
    let (job, sampling, classes) = match kind {
        CheckKind::Axioms { sampling } => {
            let v = Verdict::from(&axiom_suite(sampling.ring, sampling.seed, sampling.samples));
            return report(cli, sampling.ring, &v, "axioms", sampling.seed);
        }
        CheckKind::Cotorsion { sampling, classes } => (Job::Cotorsion, sampling, classes),
        CheckKind::Thick { sampling, classes } => (Job::Thick, sampling, classes),
        CheckKind::Hereditary { sampling, classes } => (Job::Hereditary, sampling, classes),
        CheckKind::Submodel { sampling, classes } => (Job::Submodel, sampling, classes),
    };
    let name = match job {
        Job::Cotorsion => "cotorsion",
        Job::Thick => "thick",
        Job::Hereditary => "hereditary",
        Job::Submodel => "submodel",
    };
    let ring = sampling.ring;
    let v = match classes.instance {
        InstanceKind::Chain => {
            let inst = ChainInstance::new(ring);
            let read = move |p: &Path| {
                let x = complex(p)?;
                same_ring(ring, x.ring())?;
                Ok(x)
            };
            run_job(&inst, &job, classes, sampling, inst.all(), inst.contractibles(), read)?
        }
        InstanceKind::Keps => {
            if ring == Ring::Integers {
                return Err(Failure::Error(Error::InvalidModule("k[ε] modules need a field; pass --ring F2".into())));
            }
            let inst = KEpsInstance::new(ring);
            let read = move |p: &Path| {
                let m = module(p)?;
                same_ring(ring, m.field())?;
                Ok(m)
            };
            run_job(&inst, &job, classes, sampling, inst.all(), inst.frees(), read)?
        }
    };
    report(cli, ring, &v, name, sampling.seed)
}
