use std::fmt::Display;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fishmaps::bijection::{phi, phi_inv, xi, xi_inv};
use fishmaps::enumerate::{
    all_down_bridge_free, all_ff, all_gff, all_up_bridge_free, count_ff, count_gff, grammar_maps, seeded_rng,
    CountTable, FishSampler, GffSampler, RNG_ALGORITHM,
};
use fishmaps::gff::{check_gff, down_bridges, fish_decompose, is_fighting_fish, is_gff, up_bridges};
use fishmaps::map::{parse_map, serialize_map};
use fishmaps::render::render_svg;
use fishmaps::word::{is_quadrant_excursion, jaw, parse_word, visits_ell};
use fishmaps::{verify, LatticeWord, RootedMap, Step};

/// Default largest size for the counting tables and samplers.
const DP_LIMIT: usize = 500;
/// Default largest size for exhaustive listings.
const EXHAUSTIVE_LIMIT: usize = 7;

#[derive(Parser)]
#[command(name = "fishmaps", version, about = "Fighting fish, generalized fighting fish and rooted planar maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Class {
    /// Rooted planar maps
    Map,
    /// Nonseparable rooted planar maps
    Ns,
    /// Generalized fighting fish
    Gff,
    /// Fighting fish
    Ff,
    /// Loopless maps (Gff without up bridges)
    Loopless,
    /// Bridgeless maps (Gff without down bridges)
    Bridgeless,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Lines,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Print the code of a map file (`-` or no argument reads stdin).
    Encode {
        file: Option<String>,
        #[arg(long, value_enum, default_value = "map")]
        class: Class,
    },
    /// Print the map file of a code.
    Decode {
        word: String,
        #[arg(long, value_enum, default_value = "gff")]
        class: Class,
    },
    /// Classify a word and print its statistics.
    Recognize { word: String },
    /// Exact counts by size and statistic.
    Count {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// List every object of one size.
    Enumerate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Draw one uniform object.
    Sample {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Cross-check every construction on objects up to a size.
    Verify {
        #[arg(long, default_value_t = 4)]
        limit: usize,
    },
    /// SVG of the walk and the cell diagram of a word.
    Render { word: String },
}

/// Failure with its exit code.
struct Fail {
    code: u8,
    msg: String,
}

fn usage(msg: impl Display) -> Fail {
    Fail { code: 2, msg: msg.to_string() }
}

fn violation(msg: impl Display) -> Fail {
    Fail { code: 3, msg: msg.to_string() }
}

type Out = Result<String, Fail>;

fn read_input(arg: &str) -> Result<String, Fail> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))
    }
}

fn word_arg(arg: &str) -> Result<LatticeWord, Fail> {
    let text = if arg == "-" { read_input(arg)? } else { arg.to_string() };
    parse_word(text.trim()).map_err(usage)
}

fn check_limit(size: usize, limit: Option<usize>, default: usize) -> Result<(), Fail> {
    let limit = limit.unwrap_or(default);
    if size > limit {
        return Err(usage(format!("size {size} is beyond the limit {limit}; raise it with --limit")));
    }
    Ok(())
}

fn is_ns_class(class: Class) -> bool {
    matches!(class, Class::Ns | Class::Ff)
}

fn encode(file: Option<String>, class: Class) -> Out {
    let text = read_input(file.as_deref().unwrap_or("-"))?;
    let m = parse_map(&text).map_err(usage)?;
    let w = if is_ns_class(class) { phi(&m).map_err(violation)?.into_word() } else { xi(&m).into_word() };
    Ok(format!("{w}\n"))
}

fn decode(word: &str, class: Class) -> Out {
    let w = word_arg(word)?;
    let m = if is_ns_class(class) { phi_inv(&w).map_err(violation)? } else { xi_inv(&w).map_err(violation)? };
    Ok(serialize_map(&m))
}

fn recognize(word: &str) -> Out {
    let w = word_arg(word)?;
    let excursion = is_quadrant_excursion(&w);
    let gff = is_gff(&w);
    let fish = gff && is_fighting_fish(&w);
    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let up = gff.then(|| up_bridges(&w).expect("Gff"));
    let down = gff.then(|| down_bridges(&w).expect("Gff"));
    let mut out = String::new();
    let mut push = |k: &str, v: &dyn Display| out.push_str(&format!("{k} {v}\n"));
    let flag = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
    push("word", &w);
    push("excursion", &excursion);
    push("gff", &gff);
    push("fighting-fish", &fish);
    push("up-bridge-free", &flag(up.map(|u| u == 0)));
    push("down-bridge-free", &flag(down.map(|d| d == 0)));
    push("size", &show(excursion.then(|| w.len() / 2)));
    push("jaw", &jaw(&w));
    push("ell", &show(visits_ell(&w).ok()));
    push("E", &w.count(Step::E));
    push("N", &w.count(Step::N));
    push("down-bridges", &show(down));
    push("up-bridges", &show(up));
    if !gff {
        let why = check_gff(&w).err().map(|e| e.to_string()).unwrap_or_default();
        push("reason", &why);
    } else if !fish {
        let why = fish_decompose(&w).err().map(|e| e.to_string()).unwrap_or_default();
        push("reason", &why);
    }
    Ok(out)
}

/// Exhaustive table of `(size, ell)` for the words of `list(n)`.
fn observed(class: &str, n: usize, list: fn(usize) -> Vec<LatticeWord>) -> CountTable {
    let items = (0..=n).flat_map(|m| list(m).into_iter().map(move |w| (m, visits_ell(&w).expect("excursion"))));
    CountTable::from_observations(class, "ell", n, items)
}

fn count(class: Class, size: usize, limit: Option<usize>, format: Format) -> Out {
    let relabel = |t: CountTable, class: &str, stat: &str| {
        CountTable::new(class, stat, (0..=t.max_size()).map(|n| t.row(n).to_vec()).collect())
    };
    let table = match class {
        Class::Map | Class::Gff | Class::Ns | Class::Ff => {
            check_limit(size, limit, DP_LIMIT)?;
            match class {
                Class::Map => relabel(count_gff(size), "map", "root-face-corners"),
                Class::Gff => count_gff(size),
                Class::Ns => relabel(count_ff(size), "ns", "out"),
                _ => count_ff(size),
            }
        }
        Class::Loopless | Class::Bridgeless => {
            check_limit(size, limit, EXHAUSTIVE_LIMIT)?;
            if class == Class::Loopless {
                observed("loopless", size, all_up_bridge_free)
            } else {
                observed("bridgeless", size, all_down_bridge_free)
            }
        }
    };
    match format {
        Format::Csv => Ok(table.to_csv()),
        Format::Lines => Ok(format!("{}\n", table.total(size))),
        Format::Svg => Err(usage("count has no svg format")),
    }
}

fn enumerate(class: Class, size: usize, limit: Option<usize>) -> Out {
    check_limit(size, limit, EXHAUSTIVE_LIMIT)?;
    let words = |mut v: Vec<LatticeWord>| {
        v.sort();
        v.iter().map(|w| format!("{w}\n")).collect::<String>()
    };
    let maps = |ns: bool| {
        let mut found: Vec<RootedMap> =
            grammar_maps(size).into_iter().filter(|m| !ns || m.is_nonseparable()).map(|m| m.canonical()).collect();
        found.sort_by_cached_key(|m| xi(m).into_word());
        found.iter().map(serialize_map).collect::<Vec<_>>().join("\n")
    };
    Ok(match class {
        Class::Map => maps(false),
        Class::Ns => maps(true),
        Class::Gff => words(all_gff(size).into_iter().map(|g| g.into_word()).collect()),
        Class::Ff => words(all_ff(size).into_iter().map(|f| f.into_word()).collect()),
        Class::Loopless => words(all_up_bridge_free(size)),
        Class::Bridgeless => words(all_down_bridge_free(size)),
    })
}

fn sample(class: Class, size: usize, seed: u64, limit: Option<usize>, format: Format) -> Out {
    check_limit(size, limit, DP_LIMIT)?;
    let mut rng = seeded_rng(seed);
    let w = match class {
        Class::Map | Class::Gff => GffSampler::new(size).sample(&mut rng).into_word(),
        Class::Ns | Class::Ff => {
            let mut s = FishSampler::new(size).ok_or_else(|| usage("fighting fish have size at least 2"))?;
            s.sample(&mut rng).into_word()
        }
        Class::Loopless | Class::Bridgeless => return Err(usage("no sampler for this class")),
    };
    let header = format!("rng {RNG_ALGORITHM} seed {seed} class {class:?} size {size}").to_lowercase();
    eprintln!("{header}");
    match (class, format) {
        (_, Format::Svg) => {
            let svg = render_svg(&w);
            Ok(match svg.split_once('\n') {
                Some((first, rest)) => format!("{first}\n<!-- {header} -->\n{rest}"),
                None => svg,
            })
        }
        (Class::Map, Format::Csv) => Ok(serialize_map(&xi_inv(&w).expect("sampled Gff"))),
        (Class::Ns, Format::Csv) => Ok(serialize_map(&phi_inv(&w).expect("sampled fish"))),
        _ => Ok(format!("{w}\n")),
    }
}

fn verify_all(limit: usize) -> Result<String, Fail> {
    let mut out = String::new();
    let mut failed = None;
    for o in verify::run(limit) {
        match &o.result {
            Ok(d) => out.push_str(&format!("ok   {}: {d}\n", o.name)),
            Err(d) => {
                out.push_str(&format!("FAIL {}: {d}\n", o.name));
                failed.get_or_insert_with(|| format!("{}: {d}", o.name));
            }
        }
    }
    match failed {
        None => Ok(out),
        Some(first) => {
            print!("{out}");
            Err(Fail { code: 1, msg: format!("verification failed at limit {limit}; first counterexample in {first}") })
        }
    }
}

fn render(word: &str) -> Out {
    let w = word_arg(word)?;
    check_gff(&w).map_err(violation)?;
    Ok(render_svg(&w))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Encode { file, class } => encode(file, class),
        Command::Decode { word, class } => decode(&word, class),
        Command::Recognize { word } => recognize(&word),
        Command::Count { class, size, limit, format } => count(class, size, limit, format),
        Command::Enumerate { class, size, limit } => enumerate(class, size, limit),
        Command::Sample { class, size, seed, limit, format } => sample(class, size, seed, limit, format),
        Command::Verify { limit } => verify_all(limit),
        Command::Render { word } => render(&word),
    };
    match out {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Fail { code, msg }) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
