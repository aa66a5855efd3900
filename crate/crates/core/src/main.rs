//! Command-line interface: inspect matroid files, run the class deciders,
//! relax/tighten, search minors, decompose, classify, and run the
//! verification suites.
//!
//! Files are in the text format of `matkit::fileio`; the pseudo-path
//! `catalog:NAME` loads a catalog matroid instead of a file. Exit codes:
//! 0 for yes/pass, 1 for a negative verdict, 2 for usage or validation
//! errors.

use clap::{Parser, Subcommand};
use matkit::classes;
use matkit::error::Error;
use matkit::fileio::{emit, parse, MatroidFile, MatroidValue};
use matkit::ground::Subset;
use matkit::matroid::Matroid;
use matkit::minors::MinorWitness;
use matkit::relaxed::{circuit_hyperplanes, relax, tighten, RelaxedBinaryMatroid};
use matkit::verify::SuiteKind;
use matkit::{catalog, verify};

#[derive(Parser)]
#[command(name = "matkit", version, about = "matroid kernel and verification CLI")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rank, circuits, connectivity, and circuit-hyperplanes
    Show { file: String },
    /// Decide membership in a class; exit 0 = yes, 1 = no
    Check {
        file: String,
        #[arg(long, value_parser = ["binary", "Z", "R", "D"])]
        class: String,
    },
    /// Relax a circuit-hyperplane and print the result
    Relax {
        file: String,
        #[arg(long)]
        set: String,
    },
    /// Tighten a free basis and print the result
    Tighten {
        file: String,
        #[arg(long)]
        basis: String,
    },
    /// Search for a minor isomorphic to a catalog matroid
    Minor {
        file: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        using: Option<String>,
    },
    /// Print the canonical tree decomposition
    Treedec { file: String },
    /// Classify a member of Z and print the witness
    Classify { file: String },
    /// List catalog names, or print one catalog matroid
    Catalog { name: Option<String> },
    /// Run a verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long, value_parser = ["axioms", "lemmas", "excluded-minors", "cross-check", "pg-spike", "all"])]
        suite: String,
        #[arg(long)]
        max_elements: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load(file: &str) -> Result<MatroidFile, Error> {
    if let Some(name) = file.strip_prefix("catalog:") {
        // spikes and the wide construction come as GF(2) representations
        if let Ok(lazy) = catalog::named_lazy(name) {
            return Ok(MatroidFile {
                name: name.to_string(),
                value: MatroidValue::Lazy(lazy),
            });
        }
        let m = catalog::named(name)?;
        return Ok(MatroidFile {
            name: name.to_string(),
            value: MatroidValue::Explicit(m),
        });
    }
    let text = std::fs::read_to_string(file).map_err(|e| Error::SyntaxError {
        line: 0,
        msg: format!("cannot read {file}: {e}"),
    })?;
    parse(&text)
}

fn print_subsets(label: &str, ground: &matkit::ground::GroundSet, sets: &[Subset]) {
    const CAP: usize = 200;
    let words: Vec<String> = sets.iter().take(CAP).map(|&s| ground.word(s)).collect();
    if sets.len() > CAP {
        println!("{label} ({} total, first {CAP}): {}", sets.len(), words.join(" "));
    } else {
        println!("{label} ({}): {}", sets.len(), words.join(" "));
    }
}

fn show(file: &MatroidFile) -> Result<i32, Error> {
    match &file.value {
        MatroidValue::Explicit(m) => show_explicit(&file.name, m),
        MatroidValue::Lazy(l) => {
            if l.size() <= matkit::ground::MAX_EXPLICIT {
                show_explicit(&file.name, &l.materialize()?)
            } else {
                let g = l.base().ground();
                println!("matroid {}", file.name);
                println!("elements {}", g.labels().join(" "));
                println!("rank {}", l.full_rank());
                println!(
                    "representation: {}x{} GF(2) matrix, {} relaxed set(s)",
                    l.base().rows(),
                    l.base().cols(),
                    l.relaxed_sets().len()
                );
                for &x in l.relaxed_sets() {
                    println!("relaxed {}", g.word(x));
                }
                println!(
                    "base connected: {}",
                    l.base().vector_matroid_connected()
                );
                Ok(0)
            }
        }
    }
}

fn show_explicit(name: &str, m: &Matroid) -> Result<i32, Error> {
    let g = m.ground();
    println!("matroid {name}");
    println!("elements {}", g.labels().join(" "));
    println!("rank {}", m.rank());
    println!("bases {}", m.bases().len());
    if !m.loops().is_empty() {
        println!("loops {}", g.word(m.loops()));
    }
    if !m.coloops().is_empty() {
        println!("coloops {}", g.word(m.coloops()));
    }
    let rep = m.connectivity();
    println!(
        "connected {}; 3-connected {}",
        rep.is_connected, rep.is_three_connected
    );
    if let Some((side, order)) = rep.witness_separation {
        println!("separation of order {order}: {}", g.word(side));
    }
    print_subsets("circuits", g, &m.circuits());
    print_subsets("circuit-hyperplanes", g, &circuit_hyperplanes(m));
    Ok(0)
}

fn print_witness(host: &Matroid, w: &MinorWitness) {
    let g = host.ground();
    println!("contract {}", g.word(w.contract));
    println!("delete {}", g.word(w.delete));
    for (t, h) in &w.iso {
        println!("map {t} -> {h}");
    }
}

fn check(file: &MatroidFile, class: &str) -> Result<i32, Error> {
    match class {
        "binary" => {
            let m = file.value.explicit()?;
            match matkit::gf2::is_binary(&m) {
                Some(mat) => {
                    println!("YES: binary");
                    let f = MatroidFile {
                        name: format!("{}_repr", file.name),
                        value: MatroidValue::Lazy(RelaxedBinaryMatroid::new(mat, vec![])?),
                    };
                    print!("{}", emit(&f));
                    Ok(0)
                }
                None => {
                    println!("NO: not representable over GF(2)");
                    Ok(1)
                }
            }
        }
        "Z" => {
            let m = file.value.explicit()?;
            let (flag, witness) = classes::in_z(&m);
            if flag {
                println!("YES: every element has a binary deletion or contraction");
                Ok(0)
            } else {
                println!(
                    "NO: element {} has non-binary deletion and contraction",
                    witness.unwrap_or_default()
                );
                Ok(1)
            }
        }
        "R" => {
            let m = file.value.explicit()?;
            let (flag, witness) = classes::in_r(&m);
            match (flag, witness) {
                (true, None) => {
                    println!("YES: binary");
                    Ok(0)
                }
                (true, Some((parent, x))) => {
                    println!(
                        "YES: relaxation of a binary matroid at {}",
                        parent.ground().word(x)
                    );
                    let f = MatroidFile {
                        name: format!("{}_parent", file.name),
                        value: MatroidValue::Explicit(parent),
                    };
                    print!("{}", emit(&f));
                    Ok(0)
                }
                (false, _) => {
                    println!("NO: neither binary nor a relaxation of a binary matroid");
                    Ok(1)
                }
            }
        }
        "D" => {
            if let MatroidValue::Lazy(l) = &file.value {
                if l.size() > matkit::ground::MAX_EXPLICIT {
                    return if classes::in_d_lazy(l) {
                        println!("YES: double relaxation of a connected binary matroid");
                        Ok(0)
                    } else {
                        println!("NO");
                        Ok(1)
                    };
                }
            }
            let m = file.value.explicit()?;
            match classes::in_d(&m) {
                Some(mem) => {
                    println!(
                        "YES: relax {} and {} in the binary matroid below",
                        m.ground().word(mem.x),
                        m.ground().word(mem.y)
                    );
                    let f = MatroidFile {
                        name: format!("{}_parent", file.name),
                        value: MatroidValue::Explicit(mem.parent),
                    };
                    print!("{}", emit(&f));
                    Ok(0)
                }
                None => {
                    println!("NO");
                    Ok(1)
                }
            }
        }
        _ => unreachable!("clap restricts the values"),
    }
}

fn relax_cmd(file: &MatroidFile, set: &str) -> Result<i32, Error> {
    let out = match &file.value {
        MatroidValue::Explicit(m) => {
            let h = m.ground().parse_word(set)?;
            MatroidValue::Explicit(relax(m, h)?)
        }
        MatroidValue::Lazy(l) => {
            let h = l.base().ground().parse_word(set)?;
            let mut sets = l.relaxed_sets().to_vec();
            sets.push(h);
            MatroidValue::Lazy(RelaxedBinaryMatroid::new(l.base().clone(), sets)?)
        }
    };
    let f = MatroidFile {
        name: format!("{}_relaxed", file.name),
        value: out,
    };
    print!("{}", emit(&f));
    Ok(0)
}

fn tighten_cmd(file: &MatroidFile, basis: &str) -> Result<i32, Error> {
    let m = file.value.explicit()?;
    let b = m.ground().parse_word(basis)?;
    let t = tighten(&m, b)?;
    let f = MatroidFile {
        name: format!("{}_tightened", file.name),
        value: MatroidValue::Explicit(t),
    };
    print!("{}", emit(&f));
    Ok(0)
}

fn minor_cmd(file: &MatroidFile, target: &str, using: Option<&str>) -> Result<i32, Error> {
    let host = file.value.explicit()?;
    let t = catalog::named(target)?;
    let witness = match using {
        Some(e) => matkit::minors::has_minor_using(&host, &t, e)?,
        None => matkit::minors::has_minor(&host, &t),
    };
    match witness {
        Some(w) => {
            print_witness(&host, &w);
            let minor = host.minor(w.contract, w.delete)?;
            let f = MatroidFile {
                name: format!("{}_minor", file.name),
                value: MatroidValue::Explicit(minor),
            };
            print!("{}", emit(&f));
            Ok(0)
        }
        None => {
            println!("none");
            Ok(1)
        }
    }
}

fn treedec_cmd(file: &MatroidFile) -> Result<i32, Error> {
    let m = file.value.explicit()?;
    let t = matkit::sums::tree_decompose(&m)?;
    print!("{}", t.render());
    Ok(0)
}

fn classify_cmd(file: &MatroidFile) -> Result<i32, Error> {
    let m = file.value.explicit()?;
    let result = classes::classify_z(&m);
    println!("case: {}", result.case.tag());
    if result.also_matched.len() > 1 {
        println!("also matched: {}", result.also_matched.join(", "));
    }
    match &result.case {
        classes::ClassCase::RelaxationOfBinary { parent, relaxed } => {
            println!("relaxed set {}", parent.ground().word(*relaxed));
            let f = MatroidFile {
                name: format!("{}_parent", file.name),
                value: MatroidValue::Lazy(RelaxedBinaryMatroid::new(parent.clone(), vec![])?),
            };
            print!("{}", emit(&f));
        }
        classes::ClassCase::ParallelExtU2n { n, classes } => {
            println!("parallel extension of U_2_{n}");
            for cls in classes {
                println!("class {}", cls.join(""));
            }
        }
        classes::ClassCase::SeriesExtUn2n { n, classes } => {
            println!("series extension of U_{}_{n}", n - 2);
            for cls in classes {
                println!("class {}", cls.join(""));
            }
        }
        classes::ClassCase::U24SeriesParallel { s, t, base, .. } => {
            println!(
                "series set {} and parallel set {} over U_2_4 on {}",
                base.ground().word(*s),
                base.ground().word(*t),
                base.ground().labels().join(" ")
            );
        }
        classes::ClassCase::Binary { .. } => {}
        classes::ClassCase::NotInZ { witness } => {
            println!("witness element {witness}");
        }
    }
    let verified = classes::verify_classification(&m, &result);
    println!("witness verified: {verified}");
    Ok(if matches!(result.case, classes::ClassCase::NotInZ { .. }) {
        1
    } else {
        0
    })
}

fn catalog_cmd(name: Option<&str>) -> Result<i32, Error> {
    match name {
        None => {
            for n in catalog::names() {
                println!("{n}");
            }
            println!("pgspike_3 (GF(2) representation with two relaxed sets)");
            Ok(0)
        }
        Some(n) => {
            let file = load(&format!("catalog:{n}"))?;
            print!("{}", emit(&file));
            Ok(0)
        }
    }
}

fn verify_cmd(suite: &str, max_elements: Option<usize>, seed: u64) -> Result<i32, Error> {
    let kind = SuiteKind::parse(suite).expect("clap restricts the values");
    let max = max_elements
        .or_else(|| {
            std::env::var("MATKIT_MAX_ELEMENTS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(10);
    let report = verify::run_suite(kind, seed, max)?;
    print!("{}", report.render());
    Ok(if report.passed() { 0 } else { 1 })
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Show { file } => show(&load(file)?),
        Command::Check { file, class } => check(&load(file)?, class),
        Command::Relax { file, set } => relax_cmd(&load(file)?, set),
        Command::Tighten { file, basis } => tighten_cmd(&load(file)?, basis),
        Command::Minor {
            file,
            target,
            using,
        } => minor_cmd(&load(file)?, target, using.as_deref()),
        Command::Treedec { file } => treedec_cmd(&load(file)?),
        Command::Classify { file } => classify_cmd(&load(file)?),
        Command::Catalog { name } => catalog_cmd(name.as_deref()),
        Command::Verify {
            suite,
            max_elements,
            seed,
        } => verify_cmd(suite, *max_elements, *seed),
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
