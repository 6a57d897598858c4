//! Subcommand implementations. Each returns whether its check passed.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ramsey_stepup::hyperverify::StepUpColoring;
use ramsey_stepup::jgraph::JppResult;
use ramsey_stepup::probsearch::{
    expected_clique_count_log2, expected_jpp_count_log2, families_for, required_d_range,
    RejectReason,
};
use ramsey_stepup::{
    base_bound, build_jpp, color_triple, enumerate_jpp, sampling_params, search_good_base_graph,
    step_up, tower_bound, verify_certificate, verify_no_mono_clique, BaseGraph, Certificate,
    DeltaSequence, SearchOutcome, SearchParams, TVertex, TowerExpr,
};

use crate::{BoundsArgs, BoundsCommand, CertCommand, Command, JppCommand, SearchArgs};

pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Color { n, graph, triple } => color(n, &graph, triple),
        Command::VerifyBrute { n, graph, l } => {
            let g = read_graph(&graph)?;
            let report = verify_no_mono_clique(&g, n, l)?;
            print!("{report}");
            Ok(report.passed())
        }
        Command::Jpp(JppCommand::Enum { d, out }) => {
            let family = enumerate_jpp(d)?;
            match out {
                Some(path) => {
                    write(&path, &family.to_text())?;
                    println!("d={d} count={}", family.len());
                }
                None => print!("{}", family.to_text()),
            }
            Ok(true)
        }
        Command::Jpp(JppCommand::Build { seq }) => {
            let values = seq
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .with_context(|| format!("bad sequence entry {s:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let seq = DeltaSequence::new(values)?;
            let r = build_jpp(&seq)?;
            print!("{}", jpp_trace(&seq, &r));
            Ok(true)
        }
        Command::Search(args) => search(args),
        Command::Cert(CertCommand::Verify { cert, brute }) => {
            let text =
                fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let cert = Certificate::parse(&text)?;
            let report = verify_certificate(&cert, brute)?;
            print!("{report}");
            if report.passed() {
                println!("claim: {}", cert.claimed_bound());
            }
            Ok(report.passed())
        }
        Command::Bounds(args) => bounds(args),
        Command::Expect { l, c, d, n, p } => expect(l, c, d, n, p),
    }
}

fn read_graph(path: &Path) -> Result<BaseGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(BaseGraph::parse_text(&text)?)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn color(n: usize, graph: &Path, triple: Option<Vec<u64>>) -> Result<bool> {
    let g = read_graph(graph)?;
    match triple {
        Some(r) => {
            let v = r
                .iter()
                .map(|&x| TVertex::from_rank(n, x))
                .collect::<ramsey_stepup::Result<Vec<_>>>()?;
            println!("{}", color_triple(&g, &v[0], &v[1], &v[2])?);
        }
        None => {
            let counts = StepUpColoring::new(&g, n)?.triple_counts();
            println!("C1: {}\nC2: {}\nC3: {}", counts[0], counts[1], counts[2]);
        }
    }
    Ok(true)
}

fn jpp_trace(seq: &DeltaSequence, r: &JppResult) -> String {
    let mut s = String::new();
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let _ = writeln!(s, "sequence: {seq}");
    let _ = writeln!(s, "d={} m={} t={}", r.d, r.m, join(&r.t));
    for round in &r.rounds {
        let parts: Vec<String> = round
            .regions
            .iter()
            .map(|g| {
                let parent = g.parent.map(|p| format!(" under {p}")).unwrap_or_default();
                match &g.choice {
                    Some(c) => format!(
                        "[{}..{}]{parent} picks {} at {}",
                        g.start, g.end, c.class, c.position
                    ),
                    None => format!("[{}..{}]{parent} picks nothing", g.start, g.end),
                }
            })
            .collect();
        let _ = writeln!(
            s,
            "round {} (t={}): {}",
            round.index,
            round.t,
            parts.join("; ")
        );
    }
    let _ = writeln!(
        s,
        "edges={} dm-sum(t)={}",
        r.pattern.edge_count(),
        r.edge_bookkeeping()
    );
    let _ = writeln!(s, "within_j={} backtracked={}", r.within_j, r.backtracked);
    let _ = writeln!(s, "classes: {}", join(r.pattern.classes()));
    s.push_str(&r.pattern.graph().to_text());
    s
}

fn search(args: SearchArgs) -> Result<bool> {
    let params = SearchParams {
        l: args.l,
        c: args.c,
        n_override: args.n,
        p_override: args.p,
        seed: args.seed,
        max_attempts: args.max_attempts,
    };
    let (n, p) = params.resolve()?;
    let families = families_for(args.l, n)?;
    match search_good_base_graph(&params, &families)? {
        SearchOutcome::Certificate(cert) => {
            write(&args.out, &cert.to_text())?;
            println!("n={n} p={p}");
            println!("accepted attempt {}", cert.attempt());
            println!("claim: {}", cert.claimed_bound());
            Ok(true)
        }
        SearchOutcome::Failure(f) => {
            println!("n={n} p={p}");
            for (i, r) in f.rejections.iter().enumerate() {
                match r {
                    RejectReason::CliqueFound => println!("attempt {i}: clique of size {}", args.l),
                    RejectReason::PatternFound { d } => {
                        println!("attempt {i}: pattern on {d} vertices")
                    }
                }
            }
            println!("no base graph found in {} attempts", f.rejections.len());
            Ok(false)
        }
    }
}

fn bounds(args: BoundsArgs) -> Result<bool> {
    if let Some(BoundsCommand::Stepup { k, l, n }) = args.stepup {
        let n: TowerExpr = n.parse()?;
        println!("{}", step_up(k, l, n)?);
        return Ok(true);
    }
    let (Some(k), Some(l), Some(c)) = (args.k, args.l, args.c) else {
        bail!("bounds needs --k, --l and --c, or the stepup subcommand");
    };
    let base = base_bound(l, c)?;
    let lifted = tower_bound(k, l, c)?;
    println!("three colours, k=3: {base}");
    println!("stepped up to k={k}: {lifted}");
    println!("tower height: {}", lifted.bound.height);
    Ok(true)
}

fn expect(l: u64, c: f64, d: Option<u64>, n: Option<u64>, p: Option<f64>) -> Result<bool> {
    let (n, p) = match (n, p) {
        (Some(n), Some(p)) => (n, p),
        (n, p) => {
            let (pn, pp) = sampling_params(l as usize, c)?;
            (n.unwrap_or(pn as u64), p.unwrap_or(pp))
        }
    };
    println!("n={n} p={p}");
    if l <= n {
        println!(
            "log2 E[l-cliques] = {:.6}",
            expected_clique_count_log2(n, l, p)?
        );
    } else {
        println!("log2 E[l-cliques] = -inf (l > n)");
    }
    let (lo, hi) = required_d_range(l as usize);
    let ds: Vec<u64> = match d {
        Some(d) => vec![d],
        None => (lo as u64..=hi as u64).collect(),
    };
    for d in ds {
        println!(
            "d={d} log2 bound = {:.6}",
            expected_jpp_count_log2(n, l, p, d)?
        );
    }
    Ok(true)
}
