//! `sgfree`: decide freeness of signed-graphic hyperplane arrangements.
//!
//! Exit codes: 0 = free (or plain success), 1 = non-free, 2 = usage or input
//! error, 3 = the enumeration oracles disagreed (reproducer files dumped).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use sgfree_core::{
    char_poly_finite_field, char_poly_lattice_with_bound, check_conditions, divisional_search,
    m_class_certificate, parse_graph, verify_certificate, write_graph, Certificate, CharPoly,
    EdgeTag, FreenessVerdict, SignedGraph, VerdictBasis, DEFAULT_LATTICE_BOUND,
};

#[derive(Parser)]
#[command(
    name = "sgfree",
    version,
    about = "Freeness of signed-graphic hyperplane arrangements: verdicts with \
             re-checkable certificates, exact characteristic polynomials, and \
             exhaustive small-graph enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide freeness; print the verdict with its certificate or witness.
    Check {
        /// Graph file (`vertices N` header, then `edge I J +|-|+-` lines).
        file: PathBuf,
        /// Also print the characteristic polynomial.
        #[arg(long)]
        charpoly: bool,
        /// Polynomial method when `--charpoly` is given.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the characteristic polynomial of the arrangement.
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a certificate: an elimination/join construction, a divisional
    /// chain, or a non-freeness witness.
    Certify {
        file: PathBuf,
        /// Search for a divisional chain instead of a construction.
        #[arg(long)]
        divisional: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all labeled signed graphs on N vertices, cross-check the
    /// freeness oracles against each other, and print the tallies.
    Enumerate {
        n: usize,
        /// Allow vertex counts outside the supported window.
        #[arg(long)]
        force: bool,
        /// Also count graphs up to relabeling plus switching (N <= 5).
        #[arg(long)]
        reduce_switching_iso: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Intersection-lattice Möbius summation.
    Lattice,
    /// Finite-field point counting and interpolation.
    Ff,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable report.
    Text,
    /// One machine-readable record per line.
    Lines,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check {
            file,
            charpoly,
            method,
            format,
        } => run_check(&file, charpoly, method, format),
        Command::Charpoly { file, method, format } => {
            let g = load_graph(&file)?;
            print_charpoly(&g, method, format)?;
            Ok(0)
        }
        Command::Certify {
            file,
            divisional,
            format,
        } => run_certify(&file, divisional, format),
        Command::Enumerate {
            n,
            force,
            reduce_switching_iso,
            format,
        } => run_enumerate(n, force, reduce_switching_iso, format),
    }
}

/// `SGFREE_MAX_VERTICES` overrides every built-in vertex-count guard.
fn env_max_vertices() -> Result<Option<usize>, String> {
    match std::env::var("SGFREE_MAX_VERTICES") {
        Ok(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| format!("SGFREE_MAX_VERTICES must be a number, got `{raw}`")),
        Err(_) => Ok(None),
    }
}

/// Guard for per-graph commands; cycle and subgraph enumeration get
/// expensive quickly beyond this.
fn check_guard() -> Result<usize, String> {
    Ok(env_max_vertices()?.unwrap_or(10))
}

/// Guard for full intersection-lattice computations.
fn lattice_guard() -> Result<usize, String> {
    Ok(env_max_vertices()?.unwrap_or(DEFAULT_LATTICE_BOUND))
}

fn load_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let g = parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let guard = check_guard()?;
    if g.vertex_count() > guard {
        return Err(format!(
            "{}: {} vertices exceeds the limit of {guard}; set SGFREE_MAX_VERTICES to override",
            path.display(),
            g.vertex_count()
        ));
    }
    Ok(g)
}

fn coeff_line(label: &str, p: &CharPoly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("charpoly {label} {}", coeffs.join(" "))
}

fn print_charpoly(g: &SignedGraph, method: Method, format: Format) -> Result<(), String> {
    if matches!(method, Method::Lattice | Method::Both) {
        let bound = lattice_guard()?;
        let chi = char_poly_lattice_with_bound(g, bound).map_err(|e| {
            format!("{e}; set SGFREE_MAX_VERTICES to raise the lattice bound or use --method ff")
        })?;
        match format {
            Format::Text => println!("characteristic polynomial (lattice): {chi}"),
            Format::Lines => println!("{}", coeff_line("lattice", &chi)),
        }
    }
    if matches!(method, Method::Ff | Method::Both) {
        let chi = char_poly_finite_field(g).map_err(|e| e.to_string())?;
        match format {
            Format::Text => println!("characteristic polynomial (finite-field): {chi}"),
            Format::Lines => println!("{}", coeff_line("ff", &chi)),
        }
    }
    Ok(())
}

fn print_verdict(verdict: &FreenessVerdict, format: Format) {
    match format {
        Format::Text => {
            println!("{}", if verdict.free { "FREE" } else { "NON-FREE" });
            println!("basis: {}", verdict.basis);
            match &verdict.certificate {
                Certificate::NonFree(w) => println!("witness: {w}"),
                cert => {
                    println!("certificate:");
                    println!("{cert}");
                }
            }
        }
        Format::Lines => {
            println!(
                "verdict {}",
                if verdict.free { "free" } else { "non-free" }
            );
            println!("basis {}", verdict.basis);
            match &verdict.certificate {
                Certificate::NonFree(w) => println!("witness {w}"),
                cert => println!("certificate {cert}"),
            }
        }
    }
}

fn run_check(path: &Path, charpoly: bool, method: Method, format: Format) -> Result<u8, String> {
    let g = load_graph(path)?;
    let verdict = sgfree_core::decide_freeness(&g);
    assert!(
        verify_certificate(&g, &verdict.certificate),
        "internal error: produced a certificate that does not verify"
    );
    print_verdict(&verdict, format);
    if charpoly {
        print_charpoly(&g, method, format)?;
    }
    Ok(u8::from(!verdict.free))
}

fn run_certify(path: &Path, divisional: bool, format: Format) -> Result<u8, String> {
    let g = load_graph(path)?;
    let verdict = if divisional {
        let bound = lattice_guard()?;
        if g.vertex_count() > bound {
            return Err(format!(
                "divisional search needs the intersection lattice; {} vertices exceeds the \
                 bound of {bound}; set SGFREE_MAX_VERTICES to override",
                g.vertex_count()
            ));
        }
        match divisional_search(&g, g.vertex_count()).map_err(|e| e.to_string())? {
            Some(chain) => FreenessVerdict {
                free: true,
                basis: VerdictBasis::DivisionalChain,
                certificate: Certificate::DivisionalChain(chain),
            },
            None => {
                let witness = check_conditions(&g)
                    .expect("no divisional chain exists, so a condition witness must");
                FreenessVerdict {
                    free: false,
                    basis: VerdictBasis::Conditions,
                    certificate: Certificate::NonFree(witness),
                }
            }
        }
    } else {
        sgfree_core::decide_freeness(&g)
    };
    assert!(
        verify_certificate(&g, &verdict.certificate),
        "internal error: produced a certificate that does not verify"
    );
    print_verdict(&verdict, format);
    Ok(u8::from(!verdict.free))
}

// ---------------------------------------------------------------------------
// Enumeration. Graphs are coded by base-4 digits over the lexicographic pair
// list: 0 = none, 1 = positive, 2 = negative, 3 = double.

fn pair_list(l: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            pairs.push((i, j));
        }
    }
    pairs
}

fn graph_from_code(l: usize, code: u64) -> SignedGraph {
    let mut edges = Vec::new();
    let mut c = code;
    for (i, j) in pair_list(l) {
        match c % 4 {
            0 => {}
            1 => edges.push((i, j, EdgeTag::Pos)),
            2 => edges.push((i, j, EdgeTag::Neg)),
            _ => edges.push((i, j, EdgeTag::Double)),
        }
        c /= 4;
    }
    SignedGraph::build(l, &edges).expect("codes are valid graphs")
}

struct GraphRecord {
    free: bool,
    witness_tag: Option<&'static str>,
    disagreement: Option<String>,
}

fn examine(search: &mut sgfree_core::DivisionalSearch, g: &SignedGraph, use_divisional: bool) -> GraphRecord {
    let witness = check_conditions(g);
    let free = witness.is_none();
    let witness_tag = witness.as_ref().map(|w| w.tag());
    let mut problems = Vec::new();

    let construction = m_class_certificate(g);
    if construction.is_some() != free {
        problems.push(format!(
            "conditions say free={free} but construction certificate {}",
            if construction.is_some() { "exists" } else { "is missing" }
        ));
    }
    if let Some(cert) = &construction {
        if !verify_certificate(g, cert) {
            problems.push("construction certificate fails verification".to_string());
        }
    }
    if let Some(w) = witness {
        if !verify_certificate(g, &Certificate::NonFree(w)) {
            problems.push("condition witness fails verification".to_string());
        }
    }
    if use_divisional {
        match search.search(g, g.vertex_count()) {
            Ok(chain) => {
                if chain.is_some() != free {
                    problems.push(format!(
                        "conditions say free={free} but divisional chain {}",
                        if chain.is_some() { "exists" } else { "is missing" }
                    ));
                }
            }
            Err(e) => problems.push(format!("divisional search failed: {e}")),
        }
    }
    GraphRecord {
        free,
        witness_tag,
        disagreement: if problems.is_empty() {
            None
        } else {
            Some(problems.join("; "))
        },
    }
}

fn run_enumerate(n: usize, force: bool, reduce: bool, format: Format) -> Result<u8, String> {
    let max_n = env_max_vertices()?.unwrap_or(5);
    if !force && !(2..=max_n).contains(&n) {
        return Err(format!(
            "enumerate supports 2..={max_n} vertices ({} requested); pass --force or set \
             SGFREE_MAX_VERTICES to override",
            n
        ));
    }
    let pairs = pair_list(n).len() as u32;
    if 2 * pairs > 62 {
        return Err(format!("4^{pairs} graphs is beyond any feasible enumeration"));
    }
    let total = 4u64.pow(pairs);
    let use_divisional = n <= lattice_guard()?;

    let records: Vec<GraphRecord> = (0..total)
        .into_par_iter()
        .map_init(sgfree_core::DivisionalSearch::new, |search, code| {
            examine(search, &graph_from_code(n, code), use_divisional)
        })
        .collect();

    let free = records.iter().filter(|r| r.free).count() as u64;
    let mut tags: BTreeMap<&'static str, u64> = BTreeMap::new();
    for r in &records {
        if let Some(t) = r.witness_tag {
            *tags.entry(t).or_insert(0) += 1;
        }
    }
    let disagreements: Vec<(u64, &String)> = records
        .iter()
        .enumerate()
        .filter_map(|(code, r)| r.disagreement.as_ref().map(|d| (code as u64, d)))
        .collect();

    for &(code, problem) in &disagreements {
        let file = format!("sgfree-disagreement-{n}-{code}.sg");
        std::fs::write(&file, write_graph(&graph_from_code(n, code)))
            .map_err(|e| format!("cannot write reproducer {file}: {e}"))?;
        eprintln!("disagreement on graph code {code}: {problem} (reproducer: {file})");
    }

    let classes = if reduce {
        if n > 5 {
            return Err("--reduce-switching-iso supports at most 5 vertices".to_string());
        }
        Some(switching_iso_classes(n))
    } else {
        None
    };

    match format {
        Format::Text => {
            println!("enumerated {total} signed graphs on {n} vertices");
            println!("free: {free}");
            println!("non-free: {}", total - free);
            for (tag, count) in &tags {
                println!("  witness {tag}: {count}");
            }
            if let Some((all, free_classes)) = classes {
                println!("switching-isomorphism classes: {all} ({free_classes} free)");
            }
            println!("oracle disagreements: {}", disagreements.len());
        }
        Format::Lines => {
            println!(
                "enumerate n={n} total={total} free={free} non-free={} disagreements={}",
                total - free,
                disagreements.len()
            );
            for (tag, count) in &tags {
                println!("witness {tag} {count}");
            }
            if let Some((all, free_classes)) = classes {
                println!("classes total={all} free={free_classes}");
            }
        }
    }
    Ok(if disagreements.is_empty() { 0 } else { 3 })
}

// ---------------------------------------------------------------------------
// Counting up to switching isomorphism: orbits of the pair-state codes under
// vertex relabelings and switchings, found by flood fill from each unvisited
// code. Generators: adjacent vertex transpositions (permute pair positions)
// and one switching per vertex (swap the positive/negative states on its
// incident pairs).

struct CodeAction {
    /// `new_digits[position_map[t]] = flip(digits[t])`.
    position_map: Vec<usize>,
    /// Swap states 1 and 2 at this pair position.
    flip: Vec<bool>,
}

fn code_generators(n: usize) -> Vec<CodeAction> {
    let pairs = pair_list(n);
    let index: BTreeMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(t, &p)| (p, t))
        .collect();
    let mut generators = Vec::new();
    for v in 1..n {
        // Transpose vertices v and v+1.
        let sigma = |x: usize| {
            if x == v {
                v + 1
            } else if x == v + 1 {
                v
            } else {
                x
            }
        };
        generators.push(CodeAction {
            position_map: pairs
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (sigma(i).min(sigma(j)), sigma(i).max(sigma(j)));
                    index[&(a, b)]
                })
                .collect(),
            flip: vec![false; pairs.len()],
        });
    }
    for v in 1..=n {
        generators.push(CodeAction {
            position_map: (0..pairs.len()).collect(),
            flip: pairs.iter().map(|&(i, j)| i == v || j == v).collect(),
        });
    }
    generators
}

fn apply_action(action: &CodeAction, code: u64, k: usize) -> u64 {
    let mut digits = vec![0u8; k];
    let mut c = code;
    for d in digits.iter_mut() {
        *d = (c % 4) as u8;
        c /= 4;
    }
    let mut out = vec![0u8; k];
    for t in 0..k {
        let d = digits[t];
        let d = if action.flip[t] {
            match d {
                1 => 2,
                2 => 1,
                other => other,
            }
        } else {
            d
        };
        out[action.position_map[t]] = d;
    }
    out.iter()
        .rev()
        .fold(0u64, |acc, &d| acc * 4 + u64::from(d))
}

fn switching_iso_classes(n: usize) -> (u64, u64) {
    let k = pair_list(n).len();
    let total = 4u64.pow(k as u32) as usize;
    let generators = code_generators(n);
    let mut visited = vec![false; total];
    let mut classes = 0u64;
    let mut free_classes = 0u64;
    for start in 0..total as u64 {
        if visited[start as usize] {
            continue;
        }
        classes += 1;
        if check_conditions(&graph_from_code(n, start)).is_none() {
            free_classes += 1;
        }
        visited[start as usize] = true;
        let mut queue = vec![start];
        while let Some(code) = queue.pop() {
            for action in &generators {
                let next = apply_action(action, code, k);
                if !visited[next as usize] {
                    visited[next as usize] = true;
                    queue.push(next);
                }
            }
        }
    }
    (classes, free_classes)
}
