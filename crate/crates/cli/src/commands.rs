use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use abc_core::analytic::{check_grid, grid_points, threshold_table, GridLemma};
use abc_core::branches::{classify_branches, decompose_paths, default_root};
use abc_core::enumerate::{enumerate_trees, enumerate_trees_with_degree_sequence};
use abc_core::greedy::build_greedy_tree;
use abc_core::io::{read_tree, write_atomic, write_tree, Format};
use abc_core::transforms::{
    apply_case_transform, bound_table, exception_windows, identify_case, random_instance, switch, CaseId, Relationship,
};
use abc_core::verify::{
    claim_reports, csv_summary, evaluate_claim, negative_control, run_verify, t_k_control, thm7_boundary, verify_thm1,
    Claim, SearchConfig,
};
use abc_core::{abc_index, DegreeSequence, Tree};

use crate::{AnalyticCommand, Command, OutFormat, TransformArgs, TreeFormat, VerifyArgs};

pub enum Outcome {
    Success,
    ClaimFailed,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::ClaimFailed
        }
    }
}

pub fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Abc { tree } => {
            let t = load(&tree)?;
            println!("{:.10}", abc_index(&t));
            Ok(Outcome::Success)
        }
        Command::Enumerate {
            n,
            degseq,
            count_only,
            format,
            out,
        } => enumerate(n, degseq, count_only, format, out.as_deref()),
        Command::Greedy { degseq, format, abc } => {
            let d = DegreeSequence::new(degseq)?;
            let layout = build_greedy_tree(&d)?;
            print!("{}", write_tree(&layout.tree, tree_format(format)));
            if abc {
                println!("abc {:.10}", abc_index(&layout.tree));
            }
            Ok(Outcome::Success)
        }
        Command::Analyze { tree, root, json } => analyze(&tree, &root, json),
        Command::Transform(args) => transform(args),
        Command::Bounds { case, table, extra } => bounds(&case, table, extra),
        Command::Analytic { command } => analytic(command),
        Command::Verify(args) => verify(args),
        Command::GreedyCheck { n_max } => {
            let check = verify_thm1(n_max)?;
            println!("n,sequences");
            for (n, count) in &check.sequences_per_n {
                println!("{n},{count}");
            }
            for m in &check.mismatches {
                println!(
                    "mismatch {} greedy {:.12} min {:.12}",
                    m.sequence, m.greedy_abc, m.min_abc
                );
            }
            println!(
                "{} degree sequences, {}",
                check.sequences_checked(),
                if check.passed() {
                    "greedy minimal on all"
                } else {
                    "MISMATCH"
                }
            );
            Ok(Outcome::from_ok(check.passed()))
        }
        Command::Agreement { case, samples, seed } => agreement(&case, samples, seed),
        Command::Controls => controls(),
    }
}

fn load(path: &Path) -> Result<Tree> {
    read_tree(path).with_context(|| format!("reading {}", path.display()))
}

fn tree_format(f: TreeFormat) -> Format {
    match f {
        TreeFormat::Edges => Format::Edges,
        TreeFormat::Parents => Format::Parents,
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes()).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_root(t: &Tree, root: &str) -> Result<usize> {
    if root == "auto" {
        return Ok(default_root(t));
    }
    let r: usize = root
        .parse()
        .map_err(|_| anyhow!("--root must be `auto` or a vertex id, got {root:?}"))?;
    if r >= t.n() {
        bail!("root {r} is not a vertex (n = {})", t.n());
    }
    Ok(r)
}

fn cases(spec: &str) -> Result<Vec<CaseId>> {
    if spec.eq_ignore_ascii_case("all") {
        return Ok(CaseId::TRANSFORMS.to_vec());
    }
    spec.split(',')
        .map(|s| s.parse::<CaseId>().map_err(Into::into))
        .collect()
}

fn enumerate(
    n: usize,
    degseq: Option<Vec<usize>>,
    count_only: bool,
    format: TreeFormat,
    out: Option<&Path>,
) -> Result<Outcome> {
    let trees: Box<dyn Iterator<Item = Tree>> = match degseq {
        Some(values) => {
            if values.len() != n {
                bail!("--degseq has {} entries but --n is {n}", values.len());
            }
            let d = DegreeSequence::new(values)?;
            Box::new(enumerate_trees_with_degree_sequence(&d)?.into_iter())
        }
        None => Box::new(enumerate_trees(n)?),
    };
    let mut text = String::new();
    if count_only {
        writeln!(text, "n,count\n{n},{}", trees.count())?;
    } else {
        for (i, t) in trees.enumerate() {
            if i > 0 {
                text.push('\n');
            }
            text.push_str(&write_tree(&t, tree_format(format)));
        }
    }
    emit(out, &text)?;
    Ok(Outcome::Success)
}

fn analyze(path: &Path, root: &str, json: bool) -> Result<Outcome> {
    let t = load(path)?;
    let root = resolve_root(&t, root)?;
    let profile = classify_branches(&t, root);
    let paths = decompose_paths(&t);
    if json {
        let value = serde_json::json!({ "root": root, "profile": profile, "paths": paths });
        println!("{}", serde_json::to_string_pretty(&value)?);
        return Ok(Outcome::Success);
    }
    println!("n {}", t.n());
    println!("abc {:.10}", abc_index(&t));
    println!("root {root} (degree {})", t.degree(root));
    for (k, centers) in &profile.b_centers {
        println!("B{k} {centers:?}");
    }
    for (k, centers) in &profile.b_star_centers {
        println!("B{k}* {centers:?}");
    }
    for (v, k) in &profile.terminal_vertices {
        println!("terminal {v} (k = {k})");
    }
    match paths.whole_path {
        Some(len) => println!("path of length {len}"),
        None => {
            println!("pendant lengths {:?}", paths.pendant_lengths());
            let internal: Vec<usize> = paths.internal_paths.iter().map(|p| p.length).collect();
            println!("internal lengths {internal:?}");
        }
    }
    Ok(Outcome::Success)
}

fn transform(args: TransformArgs) -> Result<Outcome> {
    let t = load(&args.tree)?;
    let id: CaseId = args.case.parse()?;
    let json = match args.report.as_str() {
        "json" => true,
        "text" => false,
        other => bail!("--report must be `json` or `text`, got {other:?}"),
    };
    let (after, value, ok) = if id == CaseId::Switch {
        let (Some(x), Some(y)) = (args.x, args.y) else {
            bail!("SWITCH needs --x and --y for the second edge");
        };
        let (after, r) = switch(&t, (args.u, args.v), (x, y))?;
        let ok = !r.condition_holds
            || if r.equality_expected {
                r.structural_delta.abs() <= abc_core::transforms::DELTA_TOLERANCE
            } else {
                r.structural_delta < 0.0
            };
        (after, serde_json::to_value(&r)?, ok)
    } else {
        let root = resolve_root(&t, &args.root)?;
        let case = identify_case(&t, root, id, args.u, args.v)?;
        let (after, r) = apply_case_transform(&t, &case)?;
        let ok = r.agrees();
        (after, serde_json::to_value(&r)?, ok)
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("case {id}");
        for key in [
            "structural_delta",
            "formula_delta",
            "bound_delta",
            "refined_bound_delta",
            "exact",
        ] {
            if let Some(v) = value.get(key) {
                println!("{key} {v}");
            }
        }
        if id == CaseId::Switch {
            println!("condition_holds {}", value["condition_holds"]);
            println!("equality_expected {}", value["equality_expected"]);
        }
        println!("{}", if ok { "consistent" } else { "INCONSISTENT" });
    }
    if let Some(out) = &args.out {
        emit(Some(out), &write_tree(&after, Format::Edges))?;
    }
    Ok(Outcome::from_ok(ok))
}

fn bounds(case: &str, table: bool, extra: usize) -> Result<Outcome> {
    let ids = cases(case)?;
    let mut text = String::new();
    if table {
        text.push_str("case,dv,n1,du,bound,refined,in_window\n");
        for id in ids {
            for r in bound_table(id, extra)? {
                writeln!(
                    text,
                    "{},{},{},{},{:.9},{:.9},{}",
                    r.case, r.dv, r.n1, r.du, r.bound, r.refined, r.in_window
                )?;
            }
        }
    } else {
        text.push_str("case,dv,du_min,du_max\n");
        for id in ids {
            for w in exception_windows(id) {
                writeln!(text, "{id},{},{},{}", w.dv, w.du_min, w.du_max)?;
            }
        }
    }
    emit(None, &text)?;
    Ok(Outcome::Success)
}

fn analytic(command: AnalyticCommand) -> Result<Outcome> {
    match command {
        AnalyticCommand::Thresholds { dv, out } => {
            let rows = threshold_table(dv)?;
            match out {
                OutFormat::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
                OutFormat::Csv | OutFormat::Text => {
                    println!("dv,threshold,limit");
                    for r in &rows {
                        let th = r.threshold.map_or("none".to_string(), |x| x.to_string());
                        println!("{},{th},{:.9}", r.dv, r.limit);
                    }
                }
            }
            Ok(Outcome::Success)
        }
        AnalyticCommand::Grid { lemma, out } => {
            let lemma = match lemma {
                5 => GridLemma::IncreaseX,
                6 => GridLemma::DecreaseX,
                other => bail!("--lemma must be 5 or 6, got {other}"),
            };
            let report = check_grid(lemma);
            match out {
                OutFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                OutFormat::Csv => {
                    println!("x,y,dx,dy,g");
                    for p in grid_points(lemma) {
                        println!("{},{},{},{},{:.12}", p.x, p.y, p.dx, p.dy, p.g);
                    }
                }
                OutFormat::Text => println!(
                    "{:?}: {} points, {} violations, {} flat steps",
                    report.lemma,
                    report.points,
                    report.violations.len(),
                    report.flat_steps
                ),
            }
            Ok(Outcome::from_ok(report.violations.is_empty()))
        }
    }
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    let claims: Vec<Claim> = if args.claims.eq_ignore_ascii_case("all") {
        Claim::ALL.to_vec()
    } else {
        args.claims
            .split(',')
            .map(|s| s.parse::<Claim>().map_err(Into::into))
            .collect::<Result<_>>()?
    };
    let config = SearchConfig {
        n_max: args.budget,
        epsilon: args.epsilon,
        parallel: !args.sequential,
        checkpoint_dir: args.checkpoint,
        ..SearchConfig::default()
    };
    let report = run_verify(args.n_min, args.n_max, &claims, &config)?;
    if let Some(out) = &args.out {
        emit(Some(out), &(serde_json::to_string_pretty(&report)? + "\n"))?;
    }
    let csv = csv_summary(&report);
    match &args.csv {
        Some(path) => emit(Some(path), &csv)?,
        None => print!("{csv}"),
    }
    for c in claim_reports(&report) {
        let status = if !c.passed() {
            "FAIL"
        } else if c.applicable() == 0 {
            "not-applicable"
        } else {
            "pass"
        };
        println!(
            "{} {status} (n {}..={}, {} orders checked)",
            c.id,
            c.n_min,
            c.n_max,
            c.applicable()
        );
    }
    for f in report.failures() {
        if let abc_core::Status::Fail { witness, condition } = &f.status {
            println!("{} n={} witness={witness}: {condition}", f.id, f.n);
        }
    }
    Ok(Outcome::from_ok(!report.has_failures()))
}

fn agreement(case: &str, samples: usize, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_ok = true;
    println!("case,relationship,samples,max_abs_diff,exact,agree");
    for id in cases(case)? {
        if id == CaseId::Switch {
            bail!("SWITCH has no closed form; use `transform --case switch`");
        }
        for rel in Relationship::ALL {
            let mut max_diff: f64 = 0.0;
            let mut exact = true;
            let mut agree = true;
            for _ in 0..samples {
                let (t, c) = random_instance(id, rel, &mut rng)?;
                let (_, r) = apply_case_transform(&t, &c)?;
                max_diff = max_diff.max((r.structural_delta - r.formula_delta).abs());
                exact &= r.exact;
                agree &= r.agrees();
            }
            all_ok &= agree;
            println!(
                "{id},{},{samples},{max_diff:.3e},{exact},{agree}",
                relationship_name(rel)
            );
        }
    }
    Ok(Outcome::from_ok(all_ok))
}

fn relationship_name(rel: Relationship) -> &'static str {
    match rel {
        Relationship::A => "a",
        Relationship::B => "b",
        Relationship::C => "c",
        Relationship::D => "d",
    }
}

fn controls() -> Result<Outcome> {
    let mut ok = true;
    let mut line = |label: String, t: &Tree, claim: Claim, want_fail: bool| {
        let e = evaluate_claim(claim, t);
        let good = e.status.is_fail() == want_fail;
        ok &= good;
        let verdict = match &e.status {
            abc_core::Status::Fail { condition, .. } => format!("flagged: {condition}"),
            abc_core::Status::Pass => "pass".to_string(),
            abc_core::Status::NotApplicable => "not-applicable".to_string(),
        };
        println!("{} {label} n={} {verdict}", if good { "ok  " } else { "BAD " }, t.n());
    };
    for claim in Claim::ALL {
        line(claim.to_string(), &negative_control(claim), claim, true);
    }
    line("THM7 T_k".into(), &t_k_control(), Claim::Thm7, true);
    line("THM7 boundary".into(), &thm7_boundary(), Claim::Thm7, false);
    Ok(Outcome::from_ok(ok))
}
