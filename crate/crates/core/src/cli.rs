//! Command-line front end.
//!
//! Exit codes: 0 after a completed analysis (whatever the verdict), 1 on bad
//! input, 2 when an internal consistency check fails.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::cone::{classify_chart, ChartClass};
use crate::constructions::{
    arrangement_closure, building_product, is_building_set, permutation_polynomial_maxvectors,
    permutohedral_ideal, permutohedral_ideal_unguarded, permutohedron_vertices,
    rosenberg_expected_vertices, rosenberg_ideal, rosenberg_intermediate, smooth_product,
    BuildingFamily, PermutohedronSpec, POLYNOMIAL_MAX_N,
};
use crate::error::{Error, Result};
use crate::exactmath::IntVec;
use crate::ideal::{format_ideal, parse_ideal, CoordinateCloud, ExponentVector, MonomialIdeal};
use crate::tameness::{is_tame, verify_lattice_equality, TamenessReport};

/// Lattice points sampled per smooth chart by `--verify`.
pub const VERIFY_SAMPLES: usize = 50;
const VERIFY_SEED: u64 = 0x7a3e;
/// Largest arrangement closure built without `--force`.
pub const MAX_CLOSURE: usize = 512;

#[derive(Parser, Debug)]
#[command(
    name = "tame",
    version,
    about = "Decide whether blowing up affine space in a monomial ideal gives a smooth variety"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IdealArg {
    /// Ideal such as "(x1^2, x1*x2, x2^3)"
    #[arg(long)]
    ideal: String,
    /// Number of variables (default: largest index used)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Cross-check every smooth chart by lattice sampling
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full tameness report
    Analyze {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        out: Output,
    },
    /// Vertices of the Newton polyhedron
    Vertices {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        json: bool,
    },
    /// Classify one chart of the blowup
    Chart {
        #[command(flatten)]
        ideal: IdealArg,
        /// Exponent vector such as "0,1,1"
        #[arg(long)]
        at: String,
        #[arg(long)]
        json: bool,
    },
    /// Ideal arithmetic
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// The smoothing I ∩ m³ of the first s coordinate axes in n-space
    Rosenberg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        /// Use I ∩ m² instead
        #[arg(long)]
        intermediate: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Product of all coordinate ideals on k of the n variables
    Permutohedral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Allow n beyond the size guard
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Product over a building set of coordinate ideals
    Building {
        /// Index sets separated by ';', e.g. "1,2;2,3,4;4,5"
        #[arg(long)]
        sets: String,
        #[arg(long)]
        n: Option<usize>,
        /// Allow arrangement closures beyond the size guard
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// ∏ I_i · ∏_{i<j} (I_i + I_j) for coordinate ideals I_i
    Smooth {
        /// Index sets separated by ';', e.g. "1,2;1,3"
        #[arg(long)]
        clouds: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct TwoIdeals {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum AlgebraOp {
    Product(TwoIdeals),
    Intersect(TwoIdeals),
    Sum(TwoIdeals),
    Equals(TwoIdeals),
    Power {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    Radical {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 1 };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// 2 for a failed internal consistency check, 1 for anything the caller did.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Analyze { ideal, out } => {
            let i = read_ideal(&ideal.ideal, ideal.n)?;
            analysis(&i, out, &[])
        }
        Command::Vertices { ideal, json } => {
            let i = read_ideal(&ideal.ideal, ideal.n)?;
            let v = crate::cone::vertices(&i);
            Ok(if json {
                line(serde_json::to_string(&v).expect("vectors serialize"))
            } else {
                v.iter().map(|a| format!("{a}\n")).collect()
            })
        }
        Command::Chart { ideal, at, json } => {
            let i = read_ideal(&ideal.ideal, ideal.n)?;
            let a = read_vector(&at, i.dim())?;
            let class = classify_chart(&i, &a)?;
            Ok(if json {
                line(
                    serde_json::json!({
                        "vertex": a,
                        "class": class.name(),
                        "minimal_generators": class.minimal_generators(),
                    })
                    .to_string(),
                )
            } else {
                line(chart_line(&a, &class))
            })
        }
        Command::Algebra { op } => algebra(op),
        Command::Rosenberg {
            n,
            s,
            intermediate,
            out,
        } => {
            let i = if intermediate {
                rosenberg_intermediate(n, s)?
            } else {
                rosenberg_ideal(n, s)?
            };
            let mut checks = Vec::new();
            if out.verify && !intermediate {
                let report = is_tame(&i)?;
                let expected = rosenberg_expected_vertices(n, s)?;
                if report.vertices != expected {
                    return Err(Error::invariant(format!(
                        "vertices {:?} differ from the expected {:?}",
                        report.vertices, expected
                    )));
                }
                if i.radical() != crate::constructions::axes_ideal(n, s)? {
                    return Err(Error::invariant("the radical is not the axes ideal"));
                }
                checks.push(format!(
                    "vertices match the closed form ({})",
                    expected.len()
                ));
                checks.push("radical equals the axes ideal".to_string());
            }
            analysis(&i, out, &checks)
        }
        Command::Permutohedral { n, k, force, out } => {
            let spec = PermutohedronSpec::new(n, k)?;
            let i = if force {
                permutohedral_ideal_unguarded(spec)?
            } else {
                permutohedral_ideal(spec).map_err(|e| match e {
                    Error::ResourceLimit(m) => Error::ResourceLimit(format!("{m}; pass --force")),
                    other => other,
                })?
            };
            let mut checks = Vec::new();
            if out.verify {
                let expected = permutohedron_vertices(spec)?;
                let found = crate::cone::vertices(&i);
                if found != expected {
                    return Err(Error::invariant(
                        "Newton polyhedron vertices differ from the permutohedron",
                    ));
                }
                if expected.len() as u128 != spec.vertex_count() {
                    return Err(Error::invariant("permutohedron vertex count is off"));
                }
                checks.push(format!("vertices are the permutations of {}", spec.base()?));
                checks.push(format!("vertex count n!/(k-1)! = {}", spec.vertex_count()));
                if n <= POLYNOMIAL_MAX_N {
                    if permutation_polynomial_maxvectors(spec)? != expected {
                        return Err(Error::invariant(
                            "coefficient-1 exponents differ from the permutohedron",
                        ));
                    }
                    checks.push("coefficient-1 exponents of the polynomial agree".to_string());
                }
            }
            analysis(&i, out, &checks)
        }
        Command::Building {
            sets,
            n,
            force,
            out,
        } => {
            let sets = read_sets(&sets)?;
            let n = n.unwrap_or_else(|| sets.iter().flatten().copied().max().unwrap_or(0));
            let f = BuildingFamily::new(n, sets)?;
            let closure = arrangement_closure(&f);
            if closure.len() > MAX_CLOSURE && !force {
                return Err(Error::ResourceLimit(format!(
                    "arrangement closure has {} sets (limit {MAX_CLOSURE}); pass --force",
                    closure.len()
                )));
            }
            if !is_building_set(&f)? {
                return Err(Error::input(
                    "not a building set: two intersecting members have a union outside the family",
                ));
            }
            let i = building_product(&f)?;
            let checks = if out.verify {
                vec![format!(
                    "building set; arrangement closure has {} sets",
                    closure.len()
                )]
            } else {
                Vec::new()
            };
            analysis(&i, out, &checks)
        }
        Command::Smooth { clouds, n, out } => {
            let sets = read_sets(&clouds)?;
            let n = n.unwrap_or_else(|| sets.iter().flatten().copied().max().unwrap_or(0));
            let clouds = sets
                .into_iter()
                .map(|s| CoordinateCloud::new(n, s))
                .collect::<Result<Vec<_>>>()?;
            // smooth_product itself checks tameness and the radical
            let i = smooth_product(&clouds)?;
            let checks = if out.verify {
                vec!["radical equals the radical of the plain product".to_string()]
            } else {
                Vec::new()
            };
            analysis(&i, out, &checks)
        }
    }
}

fn algebra(op: AlgebraOp) -> Result<String> {
    let binary = |t: &TwoIdeals| -> Result<(MonomialIdeal, MonomialIdeal)> {
        let (l, r) = (
            read_ideal_loose(&t.left, t.n)?,
            read_ideal_loose(&t.right, t.n)?,
        );
        let n = t.n.unwrap_or(l.dim().max(r.dim()));
        Ok((l.embed(n)?, r.embed(n)?))
    };
    let (result, json) = match &op {
        AlgebraOp::Product(t) => {
            let (l, r) = binary(t)?;
            (l.product(&r)?, t.json)
        }
        AlgebraOp::Intersect(t) => {
            let (l, r) = binary(t)?;
            (l.intersect(&r)?, t.json)
        }
        AlgebraOp::Sum(t) => {
            let (l, r) = binary(t)?;
            (l.sum(&r)?, t.json)
        }
        AlgebraOp::Equals(t) => {
            let (l, r) = binary(t)?;
            let eq = l.equals(&r)?;
            return Ok(if t.json {
                line(serde_json::json!({ "equal": eq }).to_string())
            } else {
                line(eq.to_string())
            });
        }
        AlgebraOp::Power { ideal, k, json } => {
            (read_ideal(&ideal.ideal, ideal.n)?.power(*k)?, *json)
        }
        AlgebraOp::Radical { ideal, json } => (read_ideal(&ideal.ideal, ideal.n)?.radical(), *json),
    };
    Ok(if json {
        line(serde_json::to_string(&result).expect("ideal serializes"))
    } else {
        line(format_ideal(&result))
    })
}

fn analysis(ideal: &MonomialIdeal, out: Output, checks: &[String]) -> Result<String> {
    let report = is_tame(ideal)?;
    let mut checks = checks.to_vec();
    if out.verify {
        for (v, class) in &report.charts {
            if class.is_smooth() {
                verify_lattice_equality(ideal, v, VERIFY_SAMPLES, VERIFY_SEED)?;
            }
        }
        let smooth = report.charts.iter().filter(|(_, c)| c.is_smooth()).count();
        checks.push(format!(
            "lattice membership matches real-cone membership on {smooth} smooth charts ({VERIFY_SAMPLES} samples each)"
        ));
    }
    Ok(if out.json {
        line(report.to_json())
    } else {
        text_report(&report, &checks)
    })
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

/// Renders the text report.
pub fn text_report(report: &TamenessReport, checks: &[String]) -> String {
    let mut s = String::new();
    let n = report.ideal.dim();
    s += &format!("ideal: {}\n", format_ideal(&report.ideal));
    s += &format!(
        "n = {n}, {} minimal generators, {} vertices\n",
        report.ideal.len(),
        report.vertices.len()
    );
    for (v, class) in &report.charts {
        s += &format!("  {}\n", chart_line(v, class));
    }
    for c in checks {
        s += &format!("verified: {c}\n");
    }
    match (&report.witness, report.witness_chart()) {
        (Some(w), Some(class)) => {
            let count = class.minimal_generators().map_or(0, <[IntVec]>::len);
            s += &format!(
                "NOT TAME: the chart at {w} is singular ({count} minimal generators, n = {n})\n"
            );
        }
        _ => s += "TAME: every vertex chart is affine space\n",
    }
    s
}

fn chart_line(v: &ExponentVector, class: &ChartClass) -> String {
    match class {
        ChartClass::Smooth { basis } => {
            let coords: Vec<String> = basis.iter().map(chart_coordinate).collect();
            format!("{v}: smooth, coordinates {}", coords.join(", "))
        }
        ChartClass::Singular { minimal_generators } => {
            let gens: Vec<String> = minimal_generators.iter().map(IntVec::to_string).collect();
            format!(
                "{v}: singular, {} minimal generators {}",
                minimal_generators.len(),
                gens.join(" ")
            )
        }
        ChartClass::Torus => format!("{v}: torus"),
        ChartClass::Covered => format!("{v}: covered by the vertex charts"),
    }
}

/// The Laurent monomial `x^v`, e.g. `x2/x1` for `v = (−1, 1)`.
pub fn chart_coordinate(v: &IntVec) -> String {
    let pos = IntVec::new(v.iter().map(|&x| x.max(0)).collect());
    let neg = IntVec::new(v.iter().map(|&x| (-x).max(0)).collect());
    let num = crate::ideal::format_monomial(&pos);
    if neg.is_zero() {
        return num;
    }
    let den = crate::ideal::format_monomial(&neg);
    if den.contains('*') {
        format!("{num}/({den})")
    } else {
        format!("{num}/{den}")
    }
}

/// Parses an ideal and reports parse errors with line and column.
fn read_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    parse_ideal(text, n).map_err(|e| locate(text, e))
}

/// Like [`read_ideal`], but lets a constant ideal default to one variable so
/// that the other operand can fix the dimension.
fn read_ideal_loose(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    match parse_ideal(text, n) {
        Err(Error::Parse { .. }) if n.is_none() => match parse_ideal(text, Some(1)) {
            Ok(i) if i.is_unit() => Ok(i),
            _ => read_ideal(text, n),
        },
        other => other.map_err(|e| locate(text, e)),
    }
}

fn locate(text: &str, e: Error) -> Error {
    match e {
        Error::Parse { offset, message } => {
            let before = &text.as_bytes()[..offset.min(text.len())];
            let lineno = before.iter().filter(|&&b| b == b'\n').count() + 1;
            let col = offset
                - before
                    .iter()
                    .rposition(|&b| b == b'\n')
                    .map_or(0, |p| p + 1)
                + 1;
            Error::Input(format!(
                "parse error at line {lineno}, column {col}: {message}"
            ))
        }
        other => other,
    }
}

fn read_vector(text: &str, n: usize) -> Result<ExponentVector> {
    let entries = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::input(format!("bad vector entry '{}'", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Error::check_dim(n, entries.len())?;
    Ok(IntVec::new(entries))
}

fn read_sets(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::input(format!("bad index '{}'", t.trim())))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tame").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn chart_coordinates() {
        assert_eq!(chart_coordinate(&IntVec::from([1, 0])), "x1");
        assert_eq!(chart_coordinate(&IntVec::from([-1, 1])), "x2/x1");
        assert_eq!(chart_coordinate(&IntVec::from([2, -1, -1])), "x1^2/(x2*x3)");
        assert_eq!(chart_coordinate(&IntVec::from([0, -1])), "1/x2");
    }

    #[test]
    fn analyze_text_and_json() {
        let (code, out, _) = call(&["analyze", "--ideal", "(x1, x2)"]);
        assert_eq!(code, 0);
        assert!(out.contains("TAME"));
        assert!(out.contains("(1,0): smooth, coordinates x2/x1, x1"));
        let (code, out, _) = call(&["analyze", "--ideal", "(x1^2,x1*x2,x1*x3,x2*x3)", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["tame"], false);
        assert_eq!(v["witness"], serde_json::json!([0, 1, 1]));
    }

    #[test]
    fn input_errors_exit_one() {
        let (code, _, err) = call(&["analyze", "--ideal", "(x0)"]);
        assert_eq!(code, 1);
        assert!(err.contains("line 1, column 3"));
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["analyze", "--ideal", "(x1)", "--bogus"]).0, 1);
        assert_eq!(call(&["permutohedral", "--n", "7", "--k", "2"]).0, 1);
        assert_eq!(call(&["building", "--sets", "1,2;1,3;2,3"]).0, 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("analyze"));
    }

    #[test]
    fn algebra_ops() {
        assert_eq!(
            call(&["algebra", "product", "--left", "(x1,x2)", "--right", "(x1,x3)"]).1,
            "(x2*x3, x1*x3, x1*x2, x1^2)\n"
        );
        assert_eq!(
            call(&["algebra", "radical", "--ideal", "(x1^2,x1*x2,x2^3)"]).1,
            "(x2, x1)\n"
        );
        assert_eq!(
            call(&[
                "algebra",
                "equals",
                "--left",
                "(x1^2,x2^2)",
                "--right",
                "(x1^2,x1*x2,x2^2)"
            ])
            .1,
            "false\n"
        );
        assert_eq!(
            call(&["algebra", "power", "--ideal", "(x1,x2)", "--k", "2", "--json"]).1,
            "{\"n\":2,\"cloud\":[[0,2],[1,1],[2,0]]}\n"
        );
        assert_eq!(
            call(&["algebra", "product", "--left", "(1)", "--right", "(x1,x2)"]).1,
            "(x2, x1)\n"
        );
    }
}
