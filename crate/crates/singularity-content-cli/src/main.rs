//! `singcontent`: singularity content, degrees, Hilbert series and mutation
//! graphs of Fano polygons, on the command line.
//!
//! Exit codes: 0 on success, 1 when a mathematical cross-check fails,
//! 2 on invalid input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use singularity_content::{
    a_correction, decompose, ehrhart_hilbert_oracle, explore_orbit, format, hilbert_series,
    hj_data, mutate, same_content, type_to_cone, Error, FanoPolygon, Factor, HilbertSeries,
    Residue,
};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "singcontent", version, about = "Exact invariants of cyclic quotient singularities and Fano polygons")]
struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a singularity type given as 1/r(a,b)
    Cone {
        /// Type, e.g. "1/60(1,23)"
        r#type: String,
        /// Residual slot position in the printed decomposition
        #[arg(long, default_value_t = 0)]
        slot: usize,
    },
    /// Invariants of a Fano polygon read from JSON
    Polygon {
        file: PathBuf,
        /// Hilbert expansion length
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Mutate a polygon along the factor with inner normal h
    Mutate {
        file: PathBuf,
        /// Primitive dual vector "x,y"
        #[arg(long)]
        h: String,
    },
    /// Breadth-first mutation graph exploration
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long = "max-nodes", default_value_t = 1000)]
        max_nodes: usize,
        /// Output prefix; writes <out>.json and <out>.dot
        #[arg(long, default_value = "orbit")]
        out: PathBuf,
    },
    /// Run the identity checks on one polygon
    Check { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cone { ref r#type, slot } => cmd_cone(r#type, slot, cli.json),
        Command::Polygon { ref file, terms } => cmd_polygon(file, terms, cli.json),
        Command::Mutate { ref file, ref h } => cmd_mutate(file, h, cli.json),
        Command::Orbit {
            ref file,
            depth,
            max_nodes,
            ref out,
        } => cmd_orbit(file, depth, max_nodes, out, cli.json),
        Command::Check { ref file } => cmd_check(file, cli.json),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(2)
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{}", m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<ExitCode, CliError>;

fn read_polygon(file: &PathBuf) -> Result<FanoPolygon, CliError> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("{}: {}", file.display(), e)))?;
    Ok(format::polygon_from_json(&text)?)
}

fn rat(r: &singularity_content::Rational) -> String {
    format::format_rational(r)
}

fn residue_json(r: &Residue) -> Value {
    match r {
        Residue::Empty => Value::Null,
        Residue::Type(t) => Value::String(t.to_string()),
    }
}

fn cmd_cone(input: &str, slot: usize, as_json: bool) -> CliResult {
    let sigma = format::parse_singularity_type(input)?;
    let profile = sigma.profile();
    let content = sigma.singularity_content();
    let cone = type_to_cone(&sigma);
    let parts = decompose(&cone, slot)?;
    let part_types: Vec<String> = parts.iter().map(|(_, t)| t.to_string()).collect();

    let hj = if sigma.is_smooth() {
        None
    } else {
        Some((hj_data(&sigma)?, a_correction(&sigma)?))
    };

    if as_json {
        let hj_json = hj.as_ref().map(|(e, a)| {
            json!({
                "b": e.b.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "alpha": e.alpha.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "beta": e.beta.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "discrepancies": e.discrepancies.iter().map(rat).collect::<Vec<_>>(),
                "a_correction": rat(a),
            })
        });
        let payload = json!({
            "schema": SCHEMA,
            "input": input,
            "type": sigma.to_string(),
            "r": sigma.r().to_string(),
            "w": profile.w.to_string(),
            "l": profile.l.to_string(),
            "n": profile.n.to_string(),
            "rho": profile.rho.to_string(),
            "t_singularity": sigma.is_t_singularity(),
            "residue": residue_json(&content.residue),
            "content": {
                "n": content.n.to_string(),
                "residue": residue_json(&content.residue),
            },
            "decomposition": {
                "slot": slot,
                "types": part_types,
                "cones": parts.iter().map(|(c, _)| json!([
                    [c.u().x.to_string(), c.u().y.to_string()],
                    [c.v().x.to_string(), c.v().y.to_string()],
                ])).collect::<Vec<_>>(),
            },
            "hj": hj_json,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("type: {}", sigma);
        println!("r: {}", sigma.r());
        println!("width w: {}", profile.w);
        println!("local index l: {}", profile.l);
        println!("n: {}", profile.n);
        println!("rho: {}", profile.rho);
        println!(
            "T-singularity: {}",
            if sigma.is_t_singularity() { "yes" } else { "no" }
        );
        println!("residue: {}", content.residue);
        println!("singularity content: {}", content);
        println!("decomposition (slot {}): {}", slot, part_types.join(", "));
        if let Some((e, a)) = hj {
            let b: Vec<String> = e.b.iter().map(|x| x.to_string()).collect();
            let alpha: Vec<String> = e.alpha.iter().map(|x| x.to_string()).collect();
            let beta: Vec<String> = e.beta.iter().map(|x| x.to_string()).collect();
            let d: Vec<String> = e.discrepancies.iter().map(rat).collect();
            println!("hj expansion: [{}]", b.join(", "));
            println!("alpha: [{}]", alpha.join(", "));
            println!("beta: [{}]", beta.join(", "));
            println!("discrepancies: [{}]", d.join(", "));
            println!("A(sigma): {}", rat(&a));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn hilbert_json(h: &HilbertSeries, oracle: &[num_bigint::BigInt]) -> Value {
    json!({
        "leading": [rat(&h.leading[0]), rat(&h.leading[1]), rat(&h.leading[2])],
        "corrections": h.corrections.iter().map(|c| json!({
            "type": c.sigma.to_string(),
            "period": c.period,
            "numerator": c.numerator.iter().map(rat).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "coefficients": h.expanded.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "oracle": oracle.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "oracle_match": h.expanded == oracle,
    })
}

fn content_json(c: &singularity_content::PolygonSingularityContent) -> Value {
    json!({
        "n": c.n.to_string(),
        "basket": c.basket.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

fn cmd_polygon(file: &PathBuf, terms: usize, as_json: bool) -> CliResult {
    let p = read_polygon(file)?;
    let sc = p.singularity_content();
    let degree = p.degree();
    let oracle_degree = p.degree_oracle();
    let degree_match = degree == oracle_degree;
    let picard = p.picard_rank();
    let bound: num_bigint::BigInt = &sc.n + num_bigint::BigInt::from(sc.basket.len() as u64) - 2;
    let wps = p.wps_weights();
    let h = hilbert_series(&p, terms);
    let ehrhart = ehrhart_hilbert_oracle(&p, terms);
    let hilbert_match = h.expanded == ehrhart;

    if as_json {
        let payload = json!({
            "schema": SCHEMA,
            "polygon": format::polygon_to_json(&p),
            "content": content_json(&sc),
            "degree": rat(&degree),
            "degree_oracle": rat(&oracle_degree),
            "degree_match": degree_match,
            "picard_rank": picard,
            "picard_bound": bound.to_string(),
            "wps": wps.as_ref().map(|w| json!({
                "weights": w.weights.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "index": w.index.to_string(),
            })),
            "hilbert": hilbert_json(&h, &ehrhart),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("polygon: {}", p);
        println!("vertices: {}", p.len());
        println!("singularity content: {}", sc);
        println!("degree (formula): {}", rat(&degree));
        println!("degree (dual-area oracle): {}", rat(&oracle_degree));
        println!("degree match: {}", if degree_match { "yes" } else { "NO" });
        println!("picard rank: {} (bound n+|B|-2 = {})", picard, bound);
        match &wps {
            Some(w) => println!(
                "weighted projective plane: P({},{},{}), index {}",
                w.weights[0], w.weights[1], w.weights[2], w.index
            ),
            None => println!("weighted projective plane: not a triangle"),
        }
        println!(
            "hilbert leading term: (1 + ({})t + t^2)/(1-t)^3",
            rat(&h.leading[1])
        );
        for c in &h.corrections {
            let nums: Vec<String> = c.numerator.iter().map(rat).collect();
            println!(
                "correction Q[{}]: numerator [{}], period {}",
                c.sigma.to_string(),
                nums.join(", "),
                c.period
            );
        }
        let coeffs: Vec<String> = h.expanded.iter().map(|x| x.to_string()).collect();
        println!("hilbert coefficients: {}", coeffs.join(", "));
        println!(
            "hilbert oracle match: {}",
            if hilbert_match { "yes" } else { "NO" }
        );
    }
    if degree_match && hilbert_match {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_mutate(file: &PathBuf, h_text: &str, as_json: bool) -> CliResult {
    let p = read_polygon(file)?;
    let h = format::parse_dual_vector(h_text)?;
    if !h.is_primitive() {
        return Err(CliError::Input(format!("h = {} is not primitive", h)));
    }
    let factor = Factor::from_normal(h)?;
    let result = mutate(&p, &factor);

    if as_json {
        let payload = json!({
            "schema": SCHEMA,
            "source": format::polygon_to_json(&p),
            "source_content": content_json(&p.singularity_content()),
            "h": [factor.h().x.to_string(), factor.h().y.to_string()],
            "f": [factor.f().x.to_string(), factor.f().y.to_string()],
            "mutation": result.as_ref().map(format::polygon_to_json),
            "target_content": result.as_ref().map(|q| content_json(&q.singularity_content())),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("source content: {}", p.singularity_content());
        match &result {
            Some(q) => {
                debug_assert!(same_content(&p, q));
                println!("target content: {}", q.singularity_content());
                println!("{}", format::polygon_to_json(q));
            }
            None => println!("no mutation exists for this h"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_orbit(
    file: &PathBuf,
    depth: usize,
    max_nodes: usize,
    out: &PathBuf,
    as_json: bool,
) -> CliResult {
    let p = read_polygon(file)?;
    let graph = explore_orbit(&p, depth, max_nodes);
    let json_path = out.with_extension("json");
    let dot_path = out.with_extension("dot");
    fs::write(&json_path, serde_json::to_string_pretty(&graph.to_json()).unwrap())?;
    fs::write(&dot_path, graph.to_dot())?;

    let root = &graph.nodes[0];
    if as_json {
        let payload = json!({
            "schema": SCHEMA,
            "nodes": graph.node_count(),
            "edges": graph.edge_count(),
            "truncated": graph.truncated,
            "shared_content": content_json(&root.content),
            "shared_degree": rat(&root.degree),
            "json_file": json_path.display().to_string(),
            "dot_file": dot_path.display().to_string(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("nodes: {}", graph.node_count());
        println!("edges: {}", graph.edge_count());
        println!("truncated: {}", if graph.truncated { "yes" } else { "no" });
        println!("shared content: {}", root.content);
        println!("shared degree: {}", rat(&root.degree));
        println!("wrote {} and {}", json_path.display(), dot_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(file: &PathBuf, as_json: bool) -> CliResult {
    let p = read_polygon(file)?;
    let mut checks: Vec<(&str, bool, String)> = Vec::new();

    let degree = p.degree();
    let oracle = p.degree_oracle();
    checks.push((
        "degree_formula_vs_oracle",
        degree == oracle,
        format!("{} vs {}", rat(&degree), rat(&oracle)),
    ));

    let terms = singularity_content::hilbert::default_check_terms(&p);
    let h = hilbert_series(&p, terms);
    let ehrhart = ehrhart_hilbert_oracle(&p, terms);
    checks.push((
        "hilbert_formula_vs_ehrhart",
        h.expanded == ehrhart,
        format!("first {} coefficients", terms),
    ));

    let sc = p.singularity_content();
    let bound: num_bigint::BigInt = &sc.n + num_bigint::BigInt::from(sc.basket.len() as u64) - 2;
    let picard_ok = num_bigint::BigInt::from(p.picard_rank() as u64) <= bound;
    checks.push((
        "picard_rank_bound",
        picard_ok,
        format!("{} <= {}", p.picard_rank(), bound),
    ));

    if sc.basket.is_empty() {
        let milnor: num_bigint::BigInt = p
            .edge_cones()
            .iter()
            .map(|c| c.singularity_type())
            .filter(|s| !s.is_smooth())
            .map(|s| s.milnor_number().expect("empty basket means T-singularities"))
            .sum();
        let noether = p.noether_check()?;
        checks.push((
            "noether_identity",
            noether,
            format!("{} + {} + {} = 10", rat(&degree), p.picard_rank(), milnor),
        ));
    }

    let failures: Vec<&str> = checks
        .iter()
        .filter(|(_, ok, _)| !ok)
        .map(|(name, _, _)| *name)
        .collect();

    if as_json {
        let payload = json!({
            "schema": SCHEMA,
            "checks": checks.iter().map(|(name, ok, detail)| json!({
                "name": name,
                "pass": ok,
                "detail": detail,
            })).collect::<Vec<_>>(),
            "failures": failures,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        for (name, ok, detail) in &checks {
            println!(
                "check {}: {} ({})",
                name,
                if *ok { "PASS" } else { "FAIL" },
                detail
            );
        }
        if !failures.is_empty() {
            println!("failures: {}", serde_json::to_string(&failures).unwrap());
        }
    }
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
