//! The `strathom` command line.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{build_algebra, fixture, Algebra, Presentation, DEFAULT_PATH_CAP, FIXTURE_NAMES};
use crate::error::{Error, Result};
use crate::homology::{
    ext_dims, global_dim, is_exceptional, proj_dim, sgldim_probe, staircase, tor_dims, Dimension, ProjComplex,
    Verdict, DEFAULT_CAP,
};
use crate::io::{
    complex_from_document, complex_to_document, fx43_staircase, module_from_document, module_from_expr,
    parse_field, parse_json, quiver_dot, to_json, tree_dot, verify_fixtures, AlgebraDocument, ComplexDocument,
    ModuleDocument, Provenance, Report,
};
use crate::linalg::Field;
use crate::module::{decompose, Module};
use crate::tilting::{
    check_tilting, compare_factor_multisets, ell, epi_verdict, exceptional_sequence_check, heredity_check,
    induced_epi, is_complete, legal_orders, perpendicular_epi, recollement_from_tilting, stratify, FailureReport,
    RecollementOutcome, TResolution,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "strathom", version, about = "Homological computations for finite-dimensional algebras")]
struct Cli {
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Base field, `Q` or `Fp:<p>`; overrides the field of a document.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Resolution and Ext cap.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Path length cap when building an algebra from a presentation.
    #[arg(long, global = true)]
    path_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgArg {
    /// Fixture name (e.g. FX-43) or path to an algebra document.
    algebra: String,
}

#[derive(Args, Debug)]
struct TiltArgs {
    /// Tilting module expression, e.g. "P2+S2".
    #[arg(long)]
    tilting: String,
    /// Add this module to both ends of the minimal T-resolution of A.
    #[arg(long)]
    split: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions, radical, center and projectives.
    Info {
        #[command(flatten)]
        alg: AlgArg,
        /// Print the quiver in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Dimensions of Ext^k(left, right).
    Ext {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 3)]
        upto: usize,
    },
    /// Projective dimension of a module.
    Pd {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        module: String,
    },
    /// Global dimension.
    Gldim {
        #[command(flatten)]
        alg: AlgArg,
    },
    /// Decide whether a module is tilting.
    TiltingCheck {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        tilting: String,
    },
    /// The left approximation of A in the perpendicular category of T1.
    Ell {
        #[command(flatten)]
        alg: AlgArg,
        #[command(flatten)]
        tilt: TiltArgs,
    },
    /// The induced algebra map A -> B and whether it is a homological epimorphism.
    EpiCheck {
        #[command(flatten)]
        alg: AlgArg,
        #[command(flatten)]
        tilt: TiltArgs,
    },
    /// Recollement data from a tilting module or an exceptional module.
    Recollement {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, conflicts_with = "perpendicular")]
        tilting: Option<String>,
        #[arg(long, requires = "tilting")]
        split: Option<String>,
        /// Exceptional module over a hereditary algebra.
        #[arg(long)]
        perpendicular: Option<String>,
    },
    /// Check that AeA is a heredity ideal and build the standard recollement.
    Heredity {
        #[command(flatten)]
        alg: AlgArg,
        /// Comma-separated vertex labels of e.
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<String>,
    },
    /// Stratify a directed algebra by splitting off simple projectives.
    Stratify {
        #[command(flatten)]
        alg: AlgArg,
        /// Comma-separated vertex labels in the order they are split off.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// Run every legal order and compare the factors.
        #[arg(long)]
        all_orders: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check an exceptional sequence given as comma-separated module expressions.
    ExseqCheck {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<String>,
    },
    /// Minimize a complex of projectives.
    Minimize {
        #[command(flatten)]
        alg: AlgArg,
        /// Complex document.
        #[arg(long, conflicts_with = "staircase")]
        complex: Option<PathBuf>,
        /// Staircase P(from) -> ... -> P(from) -> P(to) with this many maps.
        #[arg(long)]
        staircase: Option<usize>,
        #[arg(long, default_value = "2")]
        from: String,
        #[arg(long, default_value = "1")]
        to: String,
        /// Comma-separated arrow ids of the repeated map.
        #[arg(long, value_delimiter = ',', default_value = "alpha,beta")]
        step: Vec<String>,
        /// Comma-separated arrow ids of the last map.
        #[arg(long, value_delimiter = ',', default_value = "beta")]
        last: Vec<String>,
    },
    /// Lower bound for the strong global dimension.
    SgldimProbe {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// List, write out or verify the bundled fixtures.
    Fixtures {
        #[arg(long)]
        verify: bool,
        /// Directory to write algebra and staircase documents into.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    field: Option<Field>,
    cap: usize,
    path_cap: usize,
}

struct Loaded {
    alg: Arc<Algebra>,
    presentation: Presentation,
    provenance: Provenance,
}

fn env_cap() -> Option<usize> {
    std::env::var("STRATHOM_CAP").ok().and_then(|v| v.parse().ok())
}

fn load(ctx: &Ctx, name: &str) -> Result<Loaded> {
    if FIXTURE_NAMES.contains(&name) {
        let p = fixture(name, ctx.field.unwrap_or(Field::Rationals))?;
        return Ok(Loaded {
            alg: Arc::new(build_algebra(&p, ctx.path_cap)?),
            presentation: p,
            provenance: Provenance::Fixture(name.into()),
        });
    }
    let text = read(Path::new(name))?;
    let doc = AlgebraDocument::parse(&text)?;
    let p = doc.to_presentation(ctx.field)?;
    Ok(Loaded {
        alg: Arc::new(build_algebra(&p, ctx.path_cap)?),
        presentation: p,
        provenance: Provenance::digest(text.as_bytes()),
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// A module expression, or `@file` for a module document.
fn module(spec: &str, a: &Arc<Algebra>) -> Result<Module> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let doc: ModuleDocument = parse_json(&read(Path::new(path))?)?;
            module_from_document(&doc, a)
        }
        None => module_from_expr(spec, a),
    }
}

fn vertex(a: &Algebra, label: &str) -> Result<usize> {
    a.vertex_index(label)
        .ok_or_else(|| Error::Input(format!("unknown vertex '{label}'")))
}

fn dims_by_label(a: &Algebra, m: &Module) -> Value {
    let mut map = serde_json::Map::new();
    for (l, d) in a.vertex_labels().iter().zip(m.dims()) {
        map.insert(l.clone(), json!(d));
    }
    Value::Object(map)
}

fn decomposition(m: &Module) -> Result<Value> {
    Ok(Value::Array(
        decompose(m)?
            .into_iter()
            .map(|(x, k)| json!({"dims": x.dims(), "multiplicity": k}))
            .collect(),
    ))
}

fn resolution(a: &Arc<Algebra>, tilt: &TiltArgs, cap: usize) -> Result<TResolution> {
    let t = module(&tilt.tilting, a)?;
    let cert = check_tilting(&t, cap)?;
    if !cert.is_tilting {
        return Err(Error::Input(format!(
            "'{}' is not a tilting module: {}",
            tilt.tilting,
            cert.failure.unwrap_or_default()
        )));
    }
    let res = cert.coresolution.expect("tilting modules have a coresolution");
    Ok(match &tilt.split {
        Some(x) => res.with_split_summand(&module(x, a)?),
        None => res,
    })
}

fn dimension_code(d: Dimension) -> i32 {
    if d == Dimension::Unknown {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn verdict_code(v: Verdict) -> i32 {
    if v == Verdict::Unknown {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn failure_json(f: &FailureReport) -> Value {
    json!({
        "outcome": "failure",
        "hypothesis": f.hypothesis,
        "detail": f.detail,
        "datum": f.datum.as_ref().map(|d| d.summary()),
    })
}

fn outcome_json(o: &RecollementOutcome) -> (Value, i32) {
    match o {
        Ok(d) => (json!({"outcome": "success", "datum": d.summary()}), EXIT_OK),
        Err(f) => {
            let unknown = f.datum.as_ref().is_some_and(|d| d.homological_epi == Verdict::Unknown)
                && f.hypothesis == "homological epimorphism";
            (failure_json(f), if unknown { EXIT_UNKNOWN } else { EXIT_OK })
        }
    }
}

/// `(result, exit code, alternative plain output)`.
type Computed = (Value, i32, Option<String>, Option<Provenance>);

fn execute(ctx: &Ctx, cmd: &Command) -> Result<Computed> {
    let cap = ctx.cap;
    match cmd {
        Command::Info { alg, dot } => {
            let l = load(ctx, &alg.algebra)?;
            let a = &l.alg;
            let projectives: Vec<Value> = (0..a.num_vertices())
                .map(|v| {
                    json!({
                        "vertex": a.vertex_labels()[v],
                        "dims": dims_by_label(a, &Module::projective(a.clone(), v)),
                    })
                })
                .collect();
            let result = json!({
                "name": l.presentation.name,
                "field": crate::io::field_name(a.field()),
                "summary": a.summary(),
                "directed": a.is_directed(),
                "basis": (0..a.dim()).map(|i| a.basis_label(i).to_string()).collect::<Vec<_>>(),
                "projectives": projectives,
            });
            let plain = dot.then(|| quiver_dot(&l.presentation));
            Ok((result, EXIT_OK, plain, Some(l.provenance)))
        }
        Command::Ext { alg, left, right, upto } => {
            let l = load(ctx, &alg.algebra)?;
            let (m, n) = (module(left, &l.alg)?, module(right, &l.alg)?);
            let dims = ext_dims(&m, &n, *upto);
            Ok((json!({"ext_dims": dims}), EXIT_OK, None, Some(l.provenance)))
        }
        Command::Pd { alg, module: spec } => {
            let l = load(ctx, &alg.algebra)?;
            let d = proj_dim(&module(spec, &l.alg)?, cap);
            Ok((json!({"projective_dimension": d, "cap": cap}), dimension_code(d), None, Some(l.provenance)))
        }
        Command::Gldim { alg } => {
            let l = load(ctx, &alg.algebra)?;
            let d = global_dim(&l.alg, cap);
            Ok((json!({"global_dimension": d, "cap": cap}), dimension_code(d), None, Some(l.provenance)))
        }
        Command::TiltingCheck { alg, tilting } => {
            let l = load(ctx, &alg.algebra)?;
            let cert = check_tilting(&module(tilting, &l.alg)?, cap)?;
            let code = dimension_code(cert.pd);
            Ok((json!(cert.summary()), code, None, Some(l.provenance)))
        }
        Command::Ell { alg, tilt } => {
            let l = load(ctx, &alg.algebra)?;
            let res = resolution(&l.alg, tilt, cap)?;
            let e = ell(&res)?;
            let result = json!({
                "t0": dims_by_label(&l.alg, &res.t0),
                "t1": dims_by_label(&l.alg, &res.t1),
                "trace_dim": e.trace_dim,
                "ell": dims_by_label(&l.alg, &e.module),
                "ell_dim": e.module.dim(),
                "ell_summands": decomposition(&e.module)?,
                "hom_from_t1": e.hom_from_t1,
                "ext1_from_t1": e.ext1_from_t1,
            });
            Ok((result, EXIT_OK, None, Some(l.provenance)))
        }
        Command::EpiCheck { alg, tilt } => {
            let l = load(ctx, &alg.algebra)?;
            let res = resolution(&l.alg, tilt, cap)?;
            let e = ell(&res)?;
            let epi = induced_epi(&l.alg, &e)?;
            let verdict = epi_verdict(&l.alg, &e.module, &epi.phi, cap);
            let (right, left) = crate::homology::bimodule_sides(&epi.phi);
            let tor = if epi.b.dim() == 0 { vec![0] } else { tor_dims(&right, &left, 3) };
            let result = json!({
                "b": epi.b.summary(),
                "phi_unital": epi.phi.is_unital(),
                "phi_multiplicative": epi.phi.is_multiplicative(),
                "phi_injective": epi.phi.is_injective(),
                "phi_rank": epi.phi.rank(),
                "ell_exceptional": is_exceptional(&e.module, cap),
                "tor_b_b": tor,
                "homological_epi": verdict,
            });
            Ok((result, verdict_code(verdict), None, Some(l.provenance)))
        }
        Command::Recollement {
            alg,
            tilting,
            split,
            perpendicular,
        } => {
            let l = load(ctx, &alg.algebra)?;
            let out = match (tilting, perpendicular) {
                (Some(t), None) => {
                    let tilt = TiltArgs {
                        tilting: t.clone(),
                        split: split.clone(),
                    };
                    recollement_from_tilting(&resolution(&l.alg, &tilt, cap)?, cap)?
                }
                (None, Some(x)) => perpendicular_epi(&module(x, &l.alg)?, cap)?,
                _ => return Err(Error::Input("give either --tilting or --perpendicular".into())),
            };
            let (v, code) = outcome_json(&out);
            Ok((v, code, None, Some(l.provenance)))
        }
        Command::Heredity { alg, vertices } => {
            let l = load(ctx, &alg.algebra)?;
            let vs = vertices.iter().map(|v| vertex(&l.alg, v)).collect::<Result<Vec<_>>>()?;
            let (report, out) = heredity_check(&l.alg, &vs, cap)?;
            let (v, code) = outcome_json(&out);
            Ok((json!({"heredity": report, "recollement": v}), code, None, Some(l.provenance)))
        }
        Command::Stratify {
            alg,
            order,
            all_orders,
            dot,
        } => {
            let l = load(ctx, &alg.algebra)?;
            let tree = stratify(&l.alg, order.as_deref())?;
            let mut result = json!({
                "tree": tree,
                "leaf_count": tree.leaf_count(),
                "leaves": tree.leaves(),
                "order": tree.order(),
            });
            if *all_orders {
                let orders = legal_orders(&l.alg)?;
                let mut same = true;
                for o in &orders {
                    same &= compare_factor_multisets(&tree, &stratify(&l.alg, Some(o))?);
                }
                result["legal_orders"] = json!(orders);
                result["factors_agree"] = json!(same);
            }
            let plain = dot.then(|| tree_dot(&tree));
            Ok((result, EXIT_OK, plain, Some(l.provenance)))
        }
        Command::ExseqCheck { alg, seq } => {
            let l = load(ctx, &alg.algebra)?;
            let ms = seq.iter().map(|s| module(s, &l.alg)).collect::<Result<Vec<_>>>()?;
            let result = match exceptional_sequence_check(&ms, cap)? {
                Ok(s) => json!({"valid": true, "length": s.terms.len(), "complete": is_complete(&s, &l.alg)}),
                Err(f) => json!({"valid": false, "hypothesis": f.hypothesis, "detail": f.detail}),
            };
            let code = if result["detail"].as_str().is_some_and(|d| d.starts_with("undecided")) {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            Ok((result, code, None, Some(l.provenance)))
        }
        Command::Minimize {
            alg,
            complex,
            staircase: stairs,
            from,
            to,
            step,
            last,
        } => {
            let l = load(ctx, &alg.algebra)?;
            let a = &l.alg;
            let c = match (complex, stairs) {
                (Some(path), None) => {
                    let doc: ComplexDocument = parse_json(&read(path)?)?;
                    complex_from_document(&doc, a)?
                }
                (None, Some(m)) => {
                    let word = |ids: &[String]| {
                        let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
                        a.word_element(&ids)
                            .ok_or_else(|| Error::Input(format!("'{}' is not a path", ids.join(" "))))
                    };
                    staircase(a, vertex(a, from)?, vertex(a, to)?, &word(step)?, &word(last)?, *m)?
                }
                _ => return Err(Error::Input("give either --complex or --staircase".into())),
            };
            let min = c.minimize(a);
            let result = json!({
                "input_length": c.length(),
                "length": min.length(),
                "window": min.window(),
                "unchanged": min == c,
                "minimal": min.is_minimal(a),
                "terms": min.terms.iter().map(|t| t.iter().map(|&v| a.vertex_labels()[v].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "cohomology": min.cohomology(a),
                "hom_to_regular": min.hom_to_regular(a),
                "hom_extents": min.hom_extents(a),
                "complex": complex_to_document(&min, a, l.presentation.name.as_deref().unwrap_or("")),
            });
            Ok((result, EXIT_OK, None, Some(l.provenance)))
        }
        Command::SgldimProbe { alg, max_len } => {
            let l = load(ctx, &alg.algebra)?;
            let p = sgldim_probe(&l.alg, *max_len);
            let witness: Vec<String> = p.witness.iter().map(|&v| l.alg.vertex_labels()[v].clone()).collect();
            let result = json!({
                "lower_bound": p.lower_bound,
                "max_len": max_len,
                "witness": witness,
                "note": "lower bound only",
            });
            Ok((result, EXIT_OK, None, Some(l.provenance)))
        }
        Command::Fixtures { verify, write } => {
            let mut list = Vec::new();
            for name in FIXTURE_NAMES {
                let p = fixture(name, ctx.field.unwrap_or(Field::Rationals))?;
                let a = build_algebra(&p, ctx.path_cap)?;
                list.push(json!({"name": name, "dim": a.dim(), "vertices": a.num_vertices()}));
                if let Some(dir) = write {
                    write_file(&dir.join(format!("{name}.json")), &AlgebraDocument::from_presentation(&p).serialize())?;
                }
            }
            if let Some(dir) = write {
                let p = fixture("FX-43", ctx.field.unwrap_or(Field::Rationals))?;
                let a = build_algebra(&p, ctx.path_cap)?;
                for m in 1..=6 {
                    let c: ProjComplex = fx43_staircase(&a, m)?;
                    write_file(
                        &dir.join(format!("FX-43-staircase-{m}.json")),
                        &to_json(&complex_to_document(&c, &a, "FX-43")),
                    )?;
                }
            }
            let mut result = json!({"fixtures": list, "staircases": "FX-43-staircase-1 .. 6"});
            let mut code = EXIT_OK;
            if *verify {
                let rows = verify_fixtures(cap)?;
                let ok = rows.iter().all(|r| r.ok);
                result["verify"] = json!(rows);
                result["all_ok"] = json!(ok);
                if !ok {
                    code = EXIT_INPUT;
                }
            }
            Ok((result, code, None, None))
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let field = match cli.field.as_deref().map(parse_field).transpose() {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    let default = env_cap();
    let ctx = Ctx {
        field,
        cap: cli.cap.or(default).unwrap_or(DEFAULT_CAP),
        path_cap: cli.path_cap.or(default).unwrap_or(DEFAULT_PATH_CAP),
    };
    match execute(&ctx, &cli.command) {
        Ok((result, code, plain, provenance)) => {
            let report = Report::new(echo, provenance, result);
            let stdout = match plain {
                Some(text) if !cli.json => text,
                _ if cli.json => report.to_json(),
                _ => report.to_text(),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => input_error(e),
    }
}

fn input_error(e: Error) -> Outcome {
    Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}
