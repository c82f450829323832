//! Argument handling and dispatch for the `cohom` binary. [`run`] never
//! touches the process exit code or stdout, so it can be driven from tests.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cohom_core::brieskorn::{delta_at_one, delta_poly, homology, BrieskornParams};
use cohom_core::classification::{
    classify_diagram, realize_torsion, seven_family_torsion, SevenFamilyParams,
};
use cohom_core::diagram::{
    double_disk_euler, equivalent, gh_classify, mv_feasible, primitivity, validate, Case6Fiber,
    DiagramDocument, ValidatedDiagram,
};
use cohom_core::homotopy::{
    euler_characteristic, hilbert_series, odd_product_poincare, quotient_homotopy,
    HomogeneousSpaceModel,
};
use cohom_core::lie::{
    sphere_quotient, spheres_acted_on, GroupType, NamedEmbedding, RankDeclaration,
};
use cohom_core::verify::verify_tables;
use cohom_core::{Catalog, Error, IntegerPolynomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Library operations reached by each subcommand.
pub const DISPATCH: &[(&str, &[&str])] = &[
    ("brieskorn", &["delta_poly", "delta_at_one", "homology"]),
    (
        "degrees",
        &["canonicalize", "degrees", "weyl_order", "spheres_acted_on"],
    ),
    (
        "quotient",
        &[
            "quotient_homotopy",
            "sphere_quotient",
            "odd_product_poincare",
        ],
    ),
    ("hilbert", &["hilbert_series", "euler_characteristic"]),
    ("gh-case", &["gh_classify"]),
    (
        "classify",
        &[
            "validate",
            "classify_diagram",
            "equivalent",
            "double_disk_euler",
        ],
    ),
    ("primitivity", &["primitivity"]),
    ("mv-check", &["mv_feasible"]),
    ("seven-family", &["seven_family_torsion", "realize_torsion"]),
    (
        "verify-tables",
        &[
            "verify_tables",
            "transitive_sphere_pairs",
            "enumerate_corank2",
            "table3_filter",
            "case6_pairs",
        ],
    ),
];

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: Value,
    /// Message for the error stream, if any.
    pub diagnostic: Option<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            payload,
            diagnostic: None,
        }
    }

    fn failed(payload: Value, diagnostic: String) -> Self {
        CommandResult {
            exit_code: EXIT_CHECK_FAILED,
            payload,
            diagnostic: Some(diagnostic),
        }
    }

    fn error(code: i32, message: String) -> Self {
        CommandResult {
            exit_code: code,
            payload: json!({ "error": message }),
            diagnostic: Some(message),
        }
    }

    /// Pretty JSON with a trailing newline; keys are sorted. Help and
    /// version text is a bare string and is printed as is.
    pub fn render(&self) -> String {
        if let Value::String(text) = &self.payload {
            return text.clone();
        }
        let mut s = serde_json::to_string_pretty(&self.payload).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cohom",
    version,
    about = "Cohomogeneity-one rational sphere toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monodromy polynomial and homology of a Brieskorn variety.
    Brieskorn {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
    },
    /// Canonical type, rank, dimension, degrees and Weyl order of a group.
    Degrees {
        #[arg(long)]
        group: String,
    },
    /// Rational homotopy of `G/H`.
    Quotient(SpaceArgs),
    /// Poincaré polynomial and Euler characteristic of an equal-rank `G/H`.
    Hilbert(SpaceArgs),
    /// Grove-Halperin cases compatible with the fiber data.
    GhCase {
        #[arg(long)]
        l_minus: u32,
        #[arg(long)]
        l_plus: u32,
        #[arg(long)]
        h: u8,
        /// Restrict case 6 to one fiber, e.g. `SU(3)/T^2`.
        #[arg(long)]
        fiber: Option<String>,
    },
    /// Validate a diagram and match it against the known families.
    Classify {
        #[command(flatten)]
        source: DiagramSource,
        /// Diagram file to compare against (`-` for stdin).
        #[arg(long, conflicts_with = "compare_diagram")]
        compare: Option<PathBuf>,
        /// Catalog diagram to compare against.
        #[arg(long)]
        compare_diagram: Option<String>,
    },
    /// Search the catalog for a proper subgroup containing both `K±`.
    Primitivity {
        #[command(flatten)]
        source: DiagramSource,
        /// Assert that the manifold is a rational sphere.
        #[arg(long)]
        rational_sphere: bool,
    },
    /// Mayer-Vietoris feasibility of orbit Betti numbers for an `n`-sphere.
    MvCheck {
        /// Coefficients of the principal orbit's Poincaré polynomial, e.g. `1,0,0,2`.
        #[arg(long = "h", value_name = "COEFFS")]
        p_h: String,
        #[arg(long = "k-plus", value_name = "COEFFS")]
        p_k_plus: String,
        #[arg(long = "k-minus", value_name = "COEFFS")]
        p_k_minus: String,
        #[arg(long)]
        n: u32,
    },
    /// Torsion order `r` of the seven-manifold family, or parameters realising `r = t`.
    SevenFamily {
        #[arg(long, allow_negative_numbers = true, requires_all = ["q_minus", "p_plus", "q_plus"])]
        p_minus: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        q_minus: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        p_plus: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        q_plus: Option<i64>,
        #[arg(long, conflicts_with_all = ["p_minus", "q_minus", "p_plus", "q_plus"])]
        realize: Option<u64>,
    },
    /// Recompute every table and report each cell.
    VerifyTables {
        /// Only counts and failing records.
        #[arg(long)]
        summary: bool,
    },
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// Catalog embedding id, e.g. `su-block[m=4]`.
    #[arg(long, conflicts_with_all = ["group", "subgroup"])]
    embedding: Option<String>,
    #[arg(long, requires = "subgroup")]
    group: Option<String>,
    #[arg(long, requires = "group")]
    subgroup: Option<String>,
    /// Rank declaration for an ad hoc pair: `generic` (rank `min(c_H, c_G)`
    /// per degree), `injective` or `undeclared`.
    #[arg(long, default_value = "generic")]
    ranks: String,
    /// Tags for an ad hoc pair, e.g. `standard`.
    #[arg(long = "tag")]
    tags: Vec<String>,
}

#[derive(Args, Debug)]
struct DiagramSource {
    /// Diagram JSON file, or `-` for stdin.
    #[arg(conflicts_with = "diagram")]
    file: Option<PathBuf>,
    /// Catalog diagram name, e.g. `brieskorn[m=5,d=3]`.
    #[arg(long)]
    diagram: Option<String>,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidLabel(_) | Error::InvalidParams(_) | Error::Catalog(_) => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<CommandResult, Failure>;

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

/// Parse `argv` (program name first) and execute the subcommand.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CommandResult {
                    exit_code: EXIT_OK,
                    payload: Value::String(e.to_string()),
                    diagnostic: None,
                };
            }
            return CommandResult::error(EXIT_USAGE, e.to_string());
        }
    };
    execute(cli.command).unwrap_or_else(|f| CommandResult::error(f.code, f.message))
}

fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Brieskorn { m, d } => brieskorn(m, d),
        Command::Degrees { group } => degrees(&group),
        Command::Quotient(space) => quotient(&space),
        Command::Hilbert(space) => hilbert(&space),
        Command::GhCase {
            l_minus,
            l_plus,
            h,
            fiber,
        } => gh_case(l_minus, l_plus, h, fiber.as_deref()),
        Command::Classify {
            source,
            compare,
            compare_diagram,
        } => classify(&source, compare, compare_diagram),
        Command::Primitivity {
            source,
            rational_sphere,
        } => primitivity_cmd(&source, rational_sphere),
        Command::MvCheck {
            p_h,
            p_k_plus,
            p_k_minus,
            n,
        } => mv_check(&p_h, &p_k_plus, &p_k_minus, n),
        Command::SevenFamily {
            p_minus,
            q_minus,
            p_plus,
            q_plus,
            realize,
        } => seven(p_minus.zip(q_minus).zip(p_plus.zip(q_plus)), realize),
        Command::VerifyTables { summary } => verify(summary),
    }
}

fn catalog() -> Result<Catalog, Failure> {
    Catalog::from_env().map_err(|e| usage(e.to_string()))
}

fn brieskorn(m: u32, d: u32) -> Outcome {
    let p = BrieskornParams::new(m, d)?;
    let h = homology(p)?;
    Ok(CommandResult::ok(json!({
        "m": m,
        "d": d,
        "dimension": p.dimension(),
        "delta_poly": delta_poly(p)?,
        "delta_at_one": delta_at_one(p),
        "homology": h,
        "homology_text": h.to_string(),
        "rational_sphere": h.is_rational_sphere(p.dimension()),
    })))
}

fn degrees(group: &str) -> Outcome {
    let g: GroupType = group.parse()?;
    let spheres = if g.is_simple() {
        to_value(spheres_acted_on(&g)?)
    } else {
        Value::Null
    };
    Ok(CommandResult::ok(json!({
        "input": group,
        "canonical": g,
        "rank": g.rank(),
        "dimension": g.dimension(),
        "degrees": g.degrees(),
        "weyl_order": g.weyl_order().to_string(),
        "spheres_acted_on": spheres,
    })))
}

fn space_embedding(args: &SpaceArgs) -> Result<NamedEmbedding, Failure> {
    if let Some(id) = &args.embedding {
        return Ok(catalog()?.embedding(id)?);
    }
    let (Some(g), Some(h)) = (&args.group, &args.subgroup) else {
        return Err(usage("give --embedding or both --group and --subgroup"));
    };
    let ranks = match args.ranks.as_str() {
        "injective" => RankDeclaration::Injective,
        "generic" => RankDeclaration::Generic,
        "undeclared" => RankDeclaration::Undeclared,
        other => return Err(usage(format!("unknown rank declaration `{other}`"))),
    };
    Ok(NamedEmbedding::new(
        format!("{h} in {g}"),
        g.parse()?,
        h.parse()?,
        ranks,
        args.tags.iter().cloned(),
    )?)
}

fn quotient(args: &SpaceArgs) -> Outcome {
    let e = space_embedding(args)?;
    let space = HomogeneousSpaceModel::new(e.clone());
    let q = quotient_homotopy(&space)?;
    let exterior = if q.even_degrees.is_empty() {
        to_value(odd_product_poincare(&q.odd_degrees))
    } else {
        Value::Null
    };
    Ok(CommandResult::ok(json!({
        "embedding": e.id,
        "ambient": e.ambient,
        "subgroup": e.subgroup,
        "dimension": space.dimension(),
        "odd_degrees": q.odd_degrees,
        "even_degrees": q.even_degrees,
        "heuristic": q.heuristic,
        "sphere": sphere_quotient(&e.ambient, &e),
        "exterior_poincare": exterior,
    })))
}

fn hilbert(args: &SpaceArgs) -> Outcome {
    let e = space_embedding(args)?;
    let space = HomogeneousSpaceModel::new(e.clone());
    let series = if space.is_equal_rank() {
        to_value(hilbert_series(&space)?)
    } else {
        Value::Null
    };
    Ok(CommandResult::ok(json!({
        "embedding": e.id,
        "ambient": e.ambient,
        "subgroup": e.subgroup,
        "equal_rank": space.is_equal_rank(),
        "hilbert_series": series,
        "euler_characteristic": euler_characteristic(&space)?.to_string(),
    })))
}

fn gh_case(l_minus: u32, l_plus: u32, h: u8, fiber: Option<&str>) -> Outcome {
    let hint = fiber.map(str::parse::<Case6Fiber>).transpose()?;
    let cases = gh_classify(l_minus, l_plus, h, hint)?;
    let dims: Vec<u32> = cases.iter().map(|c| c.forced_dim).collect();
    Ok(CommandResult::ok(json!({
        "ell_minus": l_minus,
        "ell_plus": l_plus,
        "h": h,
        "cases": cases,
        "forced_dimensions": dims,
    })))
}

fn read_document(path: &PathBuf) -> Result<DiagramDocument, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
    };
    serde_json::from_str(&text)
        .map_err(|e| usage(format!("malformed diagram JSON in {}: {e}", path.display())))
}

fn load_document(
    cat: &Catalog,
    file: Option<&PathBuf>,
    id: Option<&str>,
) -> Result<DiagramDocument, Failure> {
    match (file, id) {
        (Some(path), _) => read_document(path),
        (None, Some(id)) => Ok(cat.diagram(id)?),
        (None, None) => Err(usage("give a diagram file, `-`, or --diagram NAME")),
    }
}

/// Resolve and validate; violations become a check failure with payload.
fn load_diagram(
    cat: &Catalog,
    file: Option<&PathBuf>,
    id: Option<&str>,
) -> Result<Result<ValidatedDiagram, CommandResult>, Failure> {
    let doc = load_document(cat, file, id)?;
    let d = cat.resolve(&doc)?;
    Ok(validate(d).map_err(|violations| {
        let n = violations.len();
        CommandResult::failed(
            json!({ "diagram": doc.name, "valid": false, "violations": violations }),
            format!("diagram `{}` violates {n} rule(s)", doc.name),
        )
    }))
}

fn classify(
    source: &DiagramSource,
    compare: Option<PathBuf>,
    compare_diagram: Option<String>,
) -> Outcome {
    let cat = catalog()?;
    let d = match load_diagram(&cat, source.file.as_ref(), source.diagram.as_deref())? {
        Ok(d) => d,
        Err(failed) => return Ok(failed),
    };
    let outcome = classify_diagram(&d);
    let euler = double_disk_euler(&d)
        .map(to_value)
        .unwrap_or_else(|e| json!({ "error": e.to_string() }));
    let mut payload = json!({
        "diagram": d.name,
        "valid": true,
        "group": d.group,
        "ell_minus": d.ell_minus,
        "ell_plus": d.ell_plus,
        "dimension": d.manifold_dim(),
        "nonorientable_orbits": d.nonorientable_count(),
        "gh_cases": d.gh_cases()?,
        "double_disk_euler": euler,
        "outcome": outcome,
        "summary": outcome.to_string(),
    });
    if compare.is_some() || compare_diagram.is_some() {
        let other = match load_diagram(&cat, compare.as_ref(), compare_diagram.as_deref())? {
            Ok(o) => o,
            Err(failed) => return Ok(failed),
        };
        payload["comparison"] = json!({
            "other": other.name,
            "equivalence": equivalent(&d, &other)?,
        });
    }
    Ok(CommandResult::ok(payload))
}

fn primitivity_cmd(source: &DiagramSource, rational_sphere: bool) -> Outcome {
    let cat = catalog()?;
    let d = match load_diagram(&cat, source.file.as_ref(), source.diagram.as_deref())? {
        Ok(d) => d,
        Err(failed) => return Ok(failed),
    };
    let lattice = cat.lattice_for(&d.group)?;
    let verdict = primitivity(&d, &lattice, cat.containments(), rational_sphere)?;
    Ok(CommandResult::ok(json!({
        "diagram": d.name,
        "lattice": lattice.iter().map(|l| l.id.as_str()).collect::<Vec<_>>(),
        "primitivity": verdict,
    })))
}

fn parse_coefficients(flag: &str, s: &str) -> Result<IntegerPolynomial, Failure> {
    let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coeffs = trimmed
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            usage(format!(
                "--{flag}: expected comma-separated integers, got `{s}`"
            ))
        })?;
    if coeffs.iter().any(|&c| c < 0) {
        return Err(usage(format!(
            "--{flag}: Betti numbers must be non-negative"
        )));
    }
    Ok(IntegerPolynomial::new(coeffs))
}

fn mv_check(p_h: &str, p_k_plus: &str, p_k_minus: &str, n: u32) -> Outcome {
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let h = parse_coefficients("h", p_h)?;
    let kp = parse_coefficients("k-plus", p_k_plus)?;
    let km = parse_coefficients("k-minus", p_k_minus)?;
    let result = mv_feasible(&h, &kp, &km, n);
    Ok(CommandResult::ok(json!({
        "n": n,
        "H": h,
        "K_plus": kp,
        "K_minus": km,
        "feasibility": result,
    })))
}

fn seven(params: Option<((i64, i64), (i64, i64))>, realize: Option<u64>) -> Outcome {
    let p = match (params, realize) {
        (Some(((pm, qm), (pp, qp))), None) => SevenFamilyParams::new(pm, qm, pp, qp)?,
        (None, Some(t)) => realize_torsion(t)?,
        _ => {
            return Err(usage(
                "give --p-minus/--q-minus/--p-plus/--q-plus or --realize T",
            ))
        }
    };
    let r = seven_family_torsion(&p)?;
    Ok(CommandResult::ok(json!({
        "params": p,
        "r": r.to_string(),
        "rational_sphere": r != 0,
    })))
}

fn verify(summary: bool) -> Outcome {
    let report = verify_tables(&catalog()?)?;
    let payload = if summary {
        json!({
            "total": report.total,
            "failures": report.failures,
            "failed": report.failed().collect::<Vec<_>>(),
        })
    } else {
        to_value(&report)
    };
    if report.all_match() {
        Ok(CommandResult::ok(payload))
    } else {
        let msg = format!("{} of {} checks failed", report.failures, report.total);
        Ok(CommandResult::failed(payload, msg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let r = run(std::iter::once("cohom").chain(args.iter().copied()));
        assert_eq!(r.exit_code, EXIT_OK, "{args:?}: {:?}", r.diagnostic);
        r.payload
    }

    #[test]
    fn brieskorn_delta() {
        let p = run_ok(&["brieskorn", "--m", "4", "--d", "5"]);
        assert_eq!(p["delta_at_one"], 5);
        assert_eq!(p["homology_text"], "H_0 = Z, H_3 = Z/5, H_7 = Z");
    }

    #[test]
    fn gh_case_tensor_query() {
        let p = run_ok(&["gh-case", "--l-minus", "3", "--l-plus", "2", "--h", "0"]);
        assert_eq!(p["cases"][0]["case_index"], 4);
        assert_eq!(p["forced_dimensions"], json!([11]));
    }

    #[test]
    fn seven_family_negative_parameters() {
        let p = run_ok(&[
            "seven-family",
            "--p-minus",
            "-3",
            "--q-minus",
            "1",
            "--p-plus",
            "5",
            "--q-plus",
            "1",
        ]);
        assert_eq!(p["r"], "2");
        let p = run_ok(&["seven-family", "--realize", "25"]);
        assert_eq!(p["r"], "25");
    }

    #[test]
    fn degrees_and_quotients() {
        let p = run_ok(&["degrees", "--group", "Spin(8)"]);
        assert_eq!(p["degrees"], json!([3, 7, 7, 11]));
        assert_eq!(p["weyl_order"], "192");
        let p = run_ok(&["quotient", "--group", "Spin(8)", "--subgroup", "G2"]);
        assert_eq!(p["odd_degrees"], json!([7, 7]));
        let p = run_ok(&["hilbert", "--group", "Sp(2)", "--subgroup", "T^2"]);
        assert_eq!(p["euler_characteristic"], "8");
        let p = run_ok(&["quotient", "--embedding", "g2-in-spin7"]);
        assert_eq!(p["sphere"], 7);
    }

    #[test]
    fn classify_catalog_diagrams() {
        let p = run_ok(&["classify", "--diagram", "table5-row1"]);
        assert_eq!(p["outcome"], json!({"kind": "G2modSU2", "index": 3}));
        let p = run_ok(&[
            "classify",
            "--diagram",
            "adjoint-su3",
            "--compare-diagram",
            "adjoint-su3",
        ]);
        assert_eq!(p["comparison"]["equivalence"], "equal");
        let p = run_ok(&["primitivity", "--diagram", "wu", "--rational-sphere"]);
        assert_eq!(p["primitivity"]["status"], "primitive-required");
    }

    #[test]
    fn mv_counterexample() {
        let p = run_ok(&[
            "mv-check",
            "--h",
            "1,0,0,1",
            "--k-plus",
            "1,0,1",
            "--k-minus",
            "1,0,1",
            "--n",
            "5",
        ]);
        assert_eq!(p["feasibility"]["verdict"], "infeasible");
        assert_eq!(p["feasibility"]["failing_degree"], 2);
    }

    #[test]
    fn usage_errors() {
        for args in [
            vec!["cohom", "frobnicate"],
            vec!["cohom", "brieskorn", "--m", "2", "--d", "3"],
            vec!["cohom", "degrees", "--group", "XY(3)"],
            vec!["cohom", "classify", "--diagram", "no-such-diagram"],
            vec![
                "cohom",
                "mv-check",
                "--h",
                "1,x",
                "--k-plus",
                "1",
                "--k-minus",
                "1",
                "--n",
                "3",
            ],
        ] {
            let r = run(args.clone());
            assert_ne!(r.exit_code, EXIT_OK, "{args:?}");
            assert!(r.diagnostic.is_some());
        }
        assert_eq!(run(["cohom", "frobnicate"]).exit_code, EXIT_USAGE);
    }
}
