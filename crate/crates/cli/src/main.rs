//! Command-line front end: graph I/O, decomposition runs, classification
//! reports, DOT/JSON export.
//!
//! Exit codes: 0 success, 2 input error, 3 capability-bound error,
//! 4 internal invariant violation (a structural claim failed its check).

use std::io::Read;

use tetradecomp_cli::{io, report};

use serde_json::json;
use tetradecomp::classic::{
    full_pipeline, tetra_decompose, tri_decompose, tutte_decomposition, ydelta, PipelineOptions,
};
use tetradecomp::connectivity::is_k_connected;
use tetradecomp::generate;
use tetradecomp::recognize::classify_4_angry;
use tetradecomp::separation::{corner_diagram, crossing_classification};
use tetradecomp::tetra::{
    all_mixed_separations_plus, crossing_pairs, enumerate_tetra_separations,
    is_tetra_separation, left_right_reduction, reduction_characterization, totally_nested_among,
};
use tetradecomp::{EnumBounds, Error, Graph, NestednessMethod, Result};

use io::GraphFormat;

const USAGE: &str = "\
usage: tetradecomp <command> [options] [file]

commands:
  tetra enumerate        list all tetra-separations of a 4-connected graph
  tetra nested           list the totally-nested tetra-separations
  decompose              canonical decomposition of a 4-connected graph
  tri-decompose          canonical decomposition of a 3-connected graph
  pipeline               full multi-stage decomposition of any graph
  classify-angry         angry classification of a 4-connected graph (|V| >= 8)
  ydelta                 apply the Y-Delta operation and print the graph
  gen <family> <params>  generate a named graph (see below)
  check                  run the invariant suite on a 4-connected graph

options:
  --format edgelist|json   input/output graph format (default edgelist)
  --out json|dot|text      report format (default text)
  --bound <n>              enumeration cap (default 24 vertices)
  --method oracle|characterization|both   nestedness method (default both)
  --seed <u64>             seed for gen random (default 0)
  --threads <n>            worker cap (default: all cores)

gen families:
  saw <n> <k>
  double-wheel <rim> [hub]
  double-wheel-triangles <rim>
  k4m pure|thickened <m>
  k4m sprinkled <m> <u-v> ...
  k3m pure|thickened|sprinkled <m> [<u-v> ...]
  gdw <pattern of k/t, e.g. ktkkt> [hub]
  clique-ring <count> <k>
  random <n>

The graph is read from the given file or standard input.
";

struct Options {
    format: GraphFormat,
    out: OutFormat,
    bounds: EnumBounds,
    ring_bound: usize,
    method: NestednessMethod,
    seed: u64,
    threads: Option<usize>,
    file: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutFormat {
    Json,
    Dot,
    Text,
}

fn parse_options(args: &[String]) -> Result<(Vec<String>, Options)> {
    let mut positional = Vec::new();
    let mut opts = Options {
        format: GraphFormat::EdgeList,
        out: OutFormat::Text,
        bounds: EnumBounds::default(),
        ring_bound: tetradecomp::recognize::RING_SEARCH_BOUND,
        method: NestednessMethod::Both,
        seed: 0,
        threads: None,
        file: None,
    };
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let mut take = |name: &str| -> Result<String> {
            i += 1;
            args.get(i)
                .cloned()
                .ok_or_else(|| Error::input(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "--format" => opts.format = GraphFormat::parse(&take("--format")?)?,
            "--out" => {
                opts.out = match take("--out")?.as_str() {
                    "json" => OutFormat::Json,
                    "dot" => OutFormat::Dot,
                    "text" => OutFormat::Text,
                    other => return Err(Error::input(format!("unknown output format '{other}'"))),
                }
            }
            "--bound" => {
                let n: usize = take("--bound")?
                    .parse()
                    .map_err(|_| Error::input("--bound needs an integer"))?;
                opts.bounds = EnumBounds {
                    max_vertices: n,
                    max_vertices_plus_edges: 5 * n,
                };
                opts.ring_bound = n;
            }
            "--method" => {
                opts.method = match take("--method")?.as_str() {
                    "oracle" => NestednessMethod::Oracle,
                    "characterization" => NestednessMethod::Characterization,
                    "both" => NestednessMethod::Both,
                    other => return Err(Error::input(format!("unknown method '{other}'"))),
                }
            }
            "--seed" => {
                opts.seed = take("--seed")?
                    .parse()
                    .map_err(|_| Error::input("--seed needs an unsigned integer"))?
            }
            "--threads" => {
                opts.threads = Some(
                    take("--threads")?
                        .parse()
                        .map_err(|_| Error::input("--threads needs an integer"))?,
                )
            }
            other => positional.push(other.to_string()),
        }
        i += 1;
    }
    Ok((positional, opts))
}

fn read_graph(opts: &Options) -> Result<Graph> {
    let text = match &opts.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {path}: {e}")))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    io::parse_graph(&text, opts.format)
}

fn sep_line(g: &Graph, s: &tetradecomp::MixedSeparation) -> String {
    let sep = s.separator(g);
    format!(
        "A={:?} B={:?} separatorVertices={:?} separatorEdges={:?}",
        s.side_a, s.side_b, sep.vertices, sep.edges
    )
}

fn cmd_tetra(sub: &str, opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let all = enumerate_tetra_separations(&g, opts.bounds)?;
    let list = match sub {
        "enumerate" => all.clone(),
        "nested" => totally_nested_among(&g, &all, opts.method)?,
        other => return Err(Error::input(format!("unknown tetra subcommand '{other}'"))),
    };
    match opts.out {
        OutFormat::Json => {
            let items: Vec<_> = list
                .iter()
                .map(|t| {
                    let sep = t.sep().separator(&g);
                    json!({
                        "sideA": t.sep().side_a.iter().collect::<Vec<_>>(),
                        "sideB": t.sep().side_b.iter().collect::<Vec<_>>(),
                        "separatorVertices": sep.vertices.iter().collect::<Vec<_>>(),
                        "separatorEdges": sep.edges.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(format!("{}\n", json!({ "count": list.len(), "separations": items })))
        }
        _ => {
            let mut out = format!("{} tetra-separations\n", list.len());
            for t in &list {
                out.push_str(&sep_line(&g, t.sep()));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_decompose(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let d = tetra_decompose(&g, opts.bounds, opts.ring_bound)?;
    Ok(match opts.out {
        OutFormat::Json => format!("{}\n", report::four_decomposition_json(&g, &d)),
        OutFormat::Dot => report::four_decomposition_dot(&d),
        OutFormat::Text => report::four_decomposition_text(&d),
    })
}

fn cmd_tri_decompose(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let d = tri_decompose(&g, opts.bounds, opts.ring_bound)?;
    Ok(match opts.out {
        OutFormat::Json => format!("{}\n", report::tri_decomposition_json(&g, &d)),
        OutFormat::Dot => {
            let mut out = String::from("graph decomposition {\n");
            for (i, bag) in d.tree.bags.iter().enumerate() {
                out.push_str(&format!(
                    "  n{i} [label=\"bag size {} | {}\"];\n",
                    bag.len(),
                    d.torsos[i].1.name()
                ));
            }
            for &(i, j) in &d.tree.edges {
                out.push_str(&format!("  n{i} -- n{j};\n"));
            }
            out.push_str("}\n");
            out
        }
        OutFormat::Text => report::tri_decomposition_text(&d),
    })
}

fn cmd_pipeline(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let node = full_pipeline(
        &g,
        PipelineOptions {
            bounds: opts.bounds,
            ring_bound: opts.ring_bound,
        },
    )?;
    Ok(match opts.out {
        OutFormat::Json => format!("{}\n", report::pipeline_json(&node)),
        _ => report::pipeline_text(&node, 0),
    })
}

fn cmd_classify_angry(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let verdict = classify_4_angry(&g, opts.bounds, opts.ring_bound)?;
    Ok(match opts.out {
        OutFormat::Json => format!("{}\n", report::angry_json(&verdict)),
        _ => report::angry_text(&verdict),
    })
}

fn cmd_ydelta(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let yd = ydelta(&g);
    io::serialize_graph(&yd.result, opts.format)
}

fn cmd_gen(params: &[String], opts: &Options) -> Result<String> {
    let parse_u32 = |s: &String, what: &str| -> Result<u32> {
        s.parse()
            .map_err(|_| Error::input(format!("{what} must be a non-negative integer")))
    };
    let family = params
        .first()
        .ok_or_else(|| Error::input("gen needs a family name"))?;
    let g = match family.as_str() {
        "saw" => {
            let [n, k] = two(&params[1..], "saw <n> <k>")?;
            generate::circular_saw(parse_u32(n, "n")?, parse_u32(k, "k")?)?
        }
        "double-wheel" => {
            let rim = params
                .get(1)
                .ok_or_else(|| Error::input("double-wheel needs a rim length"))?;
            let hub = params.get(2).map(String::as_str) == Some("hub");
            generate::double_wheel(parse_u32(rim, "rim")?, hub)?
        }
        "double-wheel-triangles" => {
            let rim = params
                .get(1)
                .ok_or_else(|| Error::input("double-wheel-triangles needs a rim length"))?;
            generate::double_wheel_of_triangles(parse_u32(rim, "rim")?)?
        }
        "k4m" | "k3m" => {
            let kind_name = params
                .get(1)
                .ok_or_else(|| Error::input("k4m/k3m needs a kind"))?;
            let m = parse_u32(
                params.get(2).ok_or_else(|| Error::input("k4m/k3m needs m"))?,
                "m",
            )?;
            let kind = match kind_name.as_str() {
                "pure" => generate::K4mKind::Pure,
                "thickened" => generate::K4mKind::Thickened,
                "sprinkled" => {
                    let edges: Vec<(u32, u32)> = params[3..]
                        .iter()
                        .map(|t| {
                            let (a, b) = t
                                .split_once('-')
                                .ok_or_else(|| Error::input("sprinkle edges look like u-v"))?;
                            Ok((
                                parse_u32(&a.to_string(), "sprinkle endpoint")?,
                                parse_u32(&b.to_string(), "sprinkle endpoint")?,
                            ))
                        })
                        .collect::<Result<_>>()?;
                    generate::K4mKind::Sprinkled(edges)
                }
                other => return Err(Error::input(format!("unknown k4m kind '{other}'"))),
            };
            if family == "k4m" {
                generate::k4m(kind, m)?
            } else {
                generate::k3m(kind, m)?
            }
        }
        "gdw" => {
            let pattern = params
                .get(1)
                .ok_or_else(|| Error::input("gdw needs a k/t pattern"))?;
            let pieces: Vec<generate::RimPiece> = pattern
                .chars()
                .map(|c| match c {
                    'k' => Ok(generate::RimPiece::K2),
                    't' => Ok(generate::RimPiece::Triangle),
                    other => Err(Error::input(format!("pattern characters are k/t, got '{other}'"))),
                })
                .collect::<Result<_>>()?;
            let hub = params.get(2).map(String::as_str) == Some("hub");
            generate::generalised_double_wheel(&pieces, hub)?.graph
        }
        "clique-ring" => {
            let [count, k] = two(&params[1..], "clique-ring <count> <k>")?;
            generate::cycle_of_cliques(parse_u32(count, "count")? as usize, parse_u32(k, "k")?)?
                .graph
        }
        "random" => {
            let n = params
                .get(1)
                .ok_or_else(|| Error::input("random needs a vertex count"))?;
            generate::random_4_connected(parse_u32(n, "n")?, opts.seed)?
        }
        other => return Err(Error::input(format!("unknown family '{other}'"))),
    };
    io::serialize_graph(&g, opts.format)
}

fn two<'a>(params: &'a [String], usage: &str) -> Result<[&'a String; 2]> {
    match params {
        [a, b, ..] => Ok([a, b]),
        _ => Err(Error::input(format!("usage: gen {usage}"))),
    }
}

/// The invariant suite over one input graph: nestedness method agreement,
/// the crossing classification over every crossing pair, the reduction
/// characterization sweep, and the decomposition with witness re-checks.
fn cmd_check(opts: &Options) -> Result<String> {
    let g = read_graph(opts)?;
    let mut out = String::new();
    if !is_k_connected(&g, 4) {
        return Err(Error::input("check expects a 4-connected graph"));
    }
    let all = enumerate_tetra_separations(&g, opts.bounds)?;
    out.push_str(&format!("check enumerate: ok ({} separations)\n", all.len()));
    let nested = totally_nested_among(&g, &all, NestednessMethod::Both)?;
    out.push_str(&format!(
        "check nestedness methods agree: ok ({} totally-nested)\n",
        nested.len()
    ));
    let mut pairs = 0usize;
    for (s, t) in crossing_pairs(&all) {
        let d = corner_diagram(&g, s.sep(), t.sep())?;
        crossing_classification(&g, &d)?;
        pairs += 1;
    }
    out.push_str(&format!("check crossing classification: ok ({pairs} crossing pairs)\n"));
    if g.vertex_count() <= 10 {
        let mut checked = 0usize;
        for s in all_mixed_separations_plus(&g, 4, 10)? {
            let predicted = reduction_characterization(&g, &s);
            let direct = is_tetra_separation(&g, &left_right_reduction(&g, &s));
            if predicted != direct {
                return Err(Error::invariant(format!(
                    "reduction characterization disagrees at {s:?}"
                )));
            }
            checked += 1;
        }
        out.push_str(&format!(
            "check reduction characterization: ok ({checked} mixed-4-separations)\n"
        ));
    } else {
        out.push_str("check reduction characterization: skipped (|V| > 10)\n");
    }
    let d = tetra_decompose(&g, opts.bounds, opts.ring_bound)?;
    for (result, class) in &d.torsos {
        class.verify(&result.torso)?;
    }
    out.push_str(&format!(
        "check decomposition and torso witnesses: ok ({} torsos)\n",
        d.torsos.len()
    ));
    // The Tutte stage invariant suite runs on the way when applicable.
    if is_k_connected(&g, 2) {
        tutte_decomposition(&g)?;
        out.push_str("check tutte structure: ok\n");
    }
    out.push_str("all checks passed\n");
    Ok(out)
}

fn run() -> Result<String> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (mut positional, mut opts) = parse_options(&args)?;
    if positional.is_empty() {
        return Err(Error::input(USAGE.to_string()));
    }
    if let Some(n) = opts.threads {
        // A second initialization attempt is harmless; the pool is global.
        let _ = rayon_pool(n);
    }
    let command = positional.remove(0);
    match command.as_str() {
        "tetra" => {
            if positional.is_empty() {
                return Err(Error::input("tetra needs a subcommand: enumerate | nested"));
            }
            let sub = positional.remove(0);
            opts.file = positional.pop();
            cmd_tetra(&sub, &opts)
        }
        "decompose" => {
            opts.file = positional.pop();
            cmd_decompose(&opts)
        }
        "tri-decompose" => {
            opts.file = positional.pop();
            cmd_tri_decompose(&opts)
        }
        "pipeline" => {
            opts.file = positional.pop();
            cmd_pipeline(&opts)
        }
        "classify-angry" => {
            opts.file = positional.pop();
            cmd_classify_angry(&opts)
        }
        "ydelta" => {
            opts.file = positional.pop();
            cmd_ydelta(&opts)
        }
        "gen" => cmd_gen(&positional, &opts),
        "check" => {
            opts.file = positional.pop();
            cmd_check(&opts)
        }
        "help" | "--help" | "-h" => Ok(USAGE.to_string()),
        other => Err(Error::input(format!("unknown command '{other}'\n\n{USAGE}"))),
    }
}

fn rayon_pool(n: usize) -> std::result::Result<(), rayon::ThreadPoolBuildError> {
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()
}

fn main() {
    match run() {
        Ok(output) => {
            print!("{output}");
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
