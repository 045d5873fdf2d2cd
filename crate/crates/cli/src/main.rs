//! `axial`: build catalog algebras and analyse algebra JSON files.

use std::io::{Read, Write};
use std::process::ExitCode;

use axial_core::axial::{
    check_axis, classify_2gen_axet, close_axes, miyamoto_group, AxisReport, Axet, Caps,
};
use axial_core::catalog;
use axial_core::frobenius::{evaluate, form_radical, radical, solve_frobenius};
use axial_core::highwater::{
    hw_ideal_window_contains, hw_periodic_quotient, ideal_type_report, Membership,
};
use axial_core::io::{algebra_from_json, algebra_to_json, hw_from_json, hw_to_json, vector_to_json};
use axial_core::structure::{is_slender, sum_decomposition};
use axial_core::{Algebra, Error, Field, FusionLaw, Matrix, Scalar, Subspace, Vector};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "axial", version, about = "Exact computation with axial algebras")]
struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog algebra and write its JSON.
    Build {
        spec: String,
        #[arg(short, long)]
        output: Option<String>,
        /// Work over F_p instead of Q.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Check every designated axis against a fusion law.
    Verify {
        file: Option<String>,
        /// `A`, `J:<eta>` or `M:<alpha>,<beta>`; defaults to the attached law.
        #[arg(long)]
        law: Option<String>,
    },
    /// Close the designated axes under Miyamoto maps and report the group.
    Miyamoto {
        file: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        law: Option<String>,
    },
    /// Solve for Frobenius forms.
    Frobenius { file: Option<String> },
    /// The radical, computed through the canonical Frobenius form.
    Radical { file: Option<String> },
    /// Non-annihilating graph components and the sum decomposition.
    Decompose { file: Option<String> },
    /// Classify the axet generated by two designated axes.
    Axet {
        file: Option<String>,
        /// Indices of two designated axes, e.g. `0,1`.
        #[arg(long)]
        gens: String,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        law: Option<String>,
    },
    /// Highwater algebra tools.
    Hw {
        #[command(subcommand)]
        command: HwCommand,
    },
}

#[derive(Subcommand)]
enum HwCommand {
    /// The periodic quotient `H / (a_0 - a_D)` as algebra JSON.
    Quotient {
        period: u64,
        #[arg(short, long)]
        output: Option<String>,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Test whether a comma-separated tuple is of ideal type.
    CheckTuple {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Search for an element in the ideal generated by a tuple.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        /// Element JSON, inline or as a file path.
        #[arg(long)]
        element: String,
        #[arg(long)]
        window: Option<u64>,
        #[arg(long, default_value_t = 10)]
        rounds: usize,
        #[arg(long)]
        prime: Option<u64>,
    },
}

/// A finished command: report text and exit status.
struct Outcome {
    report: String,
    code: u8,
}

impl Outcome {
    fn ok(report: String) -> Outcome {
        Outcome { report, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) | Error::ClosureCapExceeded(_) | Error::GroupCapExceeded(_) => 3,
        Error::NotAnAxis(_)
        | Error::NotPrimitive(_)
        | Error::NotSemisimple(_)
        | Error::NotAnIdeal(_)
        | Error::NotTwoGenerated(_)
        | Error::ConsistencyFailure(_) => 1,
        _ => 2,
    }
}

fn field_of(prime: Option<u64>) -> Result<Field, Error> {
    prime.map_or(Ok(Field::Rational), Field::prime)
}

fn read_input(file: Option<&str>) -> Result<String, Error> {
    let mut text = String::new();
    match file {
        None | Some("-") => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
        }
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        }
    }
    Ok(text)
}

fn load(file: Option<&str>) -> Result<Algebra, Error> {
    algebra_from_json(&read_input(file)?)
}

fn write_output(path: Option<&str>, text: &str) -> Result<String, Error> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Parse(format!("cannot write {p}: {e}")))?;
            Ok(String::new())
        }
        None => Ok(text.to_string()),
    }
}

fn law_for(alg: &Algebra, spec: Option<&str>) -> Result<FusionLaw, Error> {
    match spec {
        Some(s) => FusionLaw::parse_spec(alg.field(), s),
        None => alg
            .law()
            .cloned()
            .ok_or_else(|| Error::Parse("no fusion law attached; pass --law".into())),
    }
}

fn caps(cap: Option<usize>) -> Caps {
    let mut c = Caps::from_env();
    if let Some(n) = cap {
        c.axes = n;
    }
    c
}

fn named_axes(alg: &Algebra) -> Vec<(String, Vector)> {
    alg.axes().iter().map(|a| (a.name.clone(), a.v.clone())).collect()
}

fn lit(x: &Scalar) -> String {
    x.to_literal()
}

fn gram_json(g: &Matrix) -> Value {
    Value::Array(
        (0..g.nrows())
            .map(|i| Value::Array((0..g.ncols()).map(|j| json!(lit(g.get(i, j)))).collect()))
            .collect(),
    )
}

fn basis_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(vector_to_json).collect())
}

fn render(json_mode: bool, value: &Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(value).expect("plain data");
        s.push('\n');
        s
    } else {
        text
    }
}

fn build(spec: &str, output: Option<&str>, prime: Option<u64>) -> Result<Outcome, Error> {
    let entry = catalog::build(spec, field_of(prime)?)?;
    Ok(Outcome::ok(write_output(output, &algebra_to_json(&entry.algebra))?))
}

fn axis_json(name: &str, r: &AxisReport) -> Value {
    json!({
        "axis": name,
        "idempotent": r.is_idempotent,
        "eigenspaces": r.dims.iter().map(|(l, d)| json!({"eigenvalue": lit(l), "dim": d})).collect::<Vec<_>>(),
        "semisimple": r.is_semisimple,
        "primitive": r.is_primitive,
        "violations": r.violations.iter().map(|v| json!({
            "lambda": lit(&v.lambda),
            "mu": lit(&v.mu),
            "witness": [v.witness.0, v.witness.1],
        })).collect::<Vec<_>>(),
        "pass": r.is_axis(),
    })
}

fn verify(json_mode: bool, file: Option<&str>, law: Option<&str>) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let law = law_for(&alg, law)?;
    let mut entries = Vec::new();
    let mut text = format!("law {law}\n");
    let mut all = true;
    for axis in alg.axes() {
        let r = check_axis(&alg, &axis.v, &law)?;
        all &= r.is_axis();
        let dims: Vec<String> = r.dims.iter().map(|(l, d)| format!("{}:{d}", lit(l))).collect();
        text.push_str(&format!(
            "axis {}: {}{} dims {}\n",
            axis.name,
            if r.is_axis() { "PASS" } else { "FAIL" },
            if r.is_primitive { " primitive" } else { "" },
            dims.join(" ")
        ));
        if !r.is_idempotent {
            text.push_str("  not idempotent\n");
        }
        if !r.is_semisimple {
            text.push_str("  adjoint not semisimple over the law\n");
        }
        for v in &r.violations {
            text.push_str(&format!(
                "  violation ({}, {}) witness ({}, {})\n",
                lit(&v.lambda),
                lit(&v.mu),
                v.witness.0,
                v.witness.1
            ));
        }
        entries.push(axis_json(&axis.name, &r));
    }
    if alg.axes().is_empty() {
        text.push_str("no designated axes\n");
    }
    text.push_str(if all { "result PASS\n" } else { "result FAIL\n" });
    let value = json!({"law": law.to_string(), "axes": entries, "pass": all});
    Ok(Outcome {
        report: render(json_mode, &value, text),
        code: if all { 0 } else { 1 },
    })
}

fn axet_value(axet: &Axet) -> (Value, Vec<Vec<String>>) {
    let orbits: Vec<Vec<String>> = axet
        .orbits
        .iter()
        .map(|o| o.iter().map(|&i| axet.names[i].clone()).collect())
        .collect();
    let value = json!({
        "axes": axet.names,
        "orbits": orbits,
        "taus": axet.taus.iter().map(|t| t.to_cycle_string(0)).collect::<Vec<_>>(),
    });
    (value, orbits)
}

fn miyamoto_cmd(
    json_mode: bool,
    file: Option<&str>,
    cap: Option<usize>,
    law: Option<&str>,
) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let law = law_for(&alg, law)?;
    let caps = caps(cap);
    let axet = close_axes(&alg, &named_axes(&alg), &law, &law.standard_grading(), caps)?;
    let group = miyamoto_group(&axet, caps)?;
    let (mut value, orbits) = axet_value(&axet);
    value["group_order"] = json!(group.order);
    let mut text = format!("axes {}\n", axet.len());
    for (i, name) in axet.names.iter().enumerate() {
        text.push_str(&format!("  {i} {name} tau {}\n", axet.taus[i].to_cycle_string(0)));
    }
    for o in &orbits {
        text.push_str(&format!("orbit {{{}}}\n", o.join(", ")));
    }
    text.push_str(&format!("group order {}\n", group.order));
    Ok(Outcome::ok(render(json_mode, &value, text)))
}

fn frobenius_cmd(json_mode: bool, file: Option<&str>) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let sol = solve_frobenius(&alg);
    let mut text = format!("solution space dimension {}\n", sol.dim());
    let mut value = json!({
        "dim": sol.dim(),
        "ambiguous": sol.ambiguous,
        "normalized_on_all_axes": sol.normalized_on_all_axes,
        "gram": Value::Null,
        "radical": Value::Null,
        "norms": Value::Null,
    });
    if sol.ambiguous {
        text.push_str("form not determined by axis norms\n");
    }
    match &sol.canonical {
        None => text.push_str("no nonzero Frobenius form\n"),
        Some(g) => {
            let r = form_radical(g);
            text.push_str("gram\n");
            for i in 0..g.nrows() {
                let row: Vec<String> = (0..g.ncols()).map(|j| lit(g.get(i, j))).collect();
                text.push_str(&format!("  [{}]\n", row.join(", ")));
            }
            text.push_str(&format!("radical dimension {}\n", r.dim()));
            for v in r.basis() {
                text.push_str(&format!("  {v}\n"));
            }
            let mut norms = serde_json::Map::new();
            for axis in alg.axes() {
                let n = evaluate(g, &axis.v, &axis.v);
                text.push_str(&format!("norm {} = {}\n", axis.name, lit(&n)));
                norms.insert(axis.name.clone(), json!(lit(&n)));
            }
            value["gram"] = gram_json(g);
            value["radical"] = basis_json(&r);
            value["norms"] = Value::Object(norms);
        }
    }
    Ok(Outcome::ok(render(json_mode, &value, text)))
}

fn radical_cmd(json_mode: bool, file: Option<&str>) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let r = radical(&alg)?;
    let mut text = format!("radical dimension {}\n", r.dim());
    for v in r.basis() {
        text.push_str(&format!("  {v}\n"));
    }
    let value = json!({"dim": r.dim(), "basis": basis_json(&r)});
    Ok(Outcome::ok(render(json_mode, &value, text)))
}

fn decompose_cmd(json_mode: bool, file: Option<&str>) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let axes = alg.axis_vectors();
    let d = sum_decomposition(&alg, &axes)?;
    let slender = is_slender(&alg, &axes)?;
    let names = |c: &Vec<usize>| -> Vec<String> {
        c.iter().map(|&i| alg.axes()[i].name.clone()).collect()
    };
    let dims: Vec<usize> = d.subalgebras.iter().map(Subspace::dim).collect();
    let mut text = String::new();
    for (c, dim) in d.components.iter().zip(&dims) {
        text.push_str(&format!("component {{{}}} subalgebra dimension {dim}\n", names(c).join(", ")));
    }
    text.push_str(&format!(
        "pairwise zero {}\ndirect {}\nspans {}\nslender {}\nannihilator dimension {}\n",
        d.pairwise_zero,
        d.direct,
        d.spans,
        slender,
        alg.annihilator().dim()
    ));
    let value = json!({
        "components": d.components.iter().map(names).collect::<Vec<_>>(),
        "subalgebra_dims": dims,
        "pairwise_zero": d.pairwise_zero,
        "direct": d.direct,
        "spans": d.spans,
        "slender": slender,
        "annihilator_dim": alg.annihilator().dim(),
    });
    Ok(Outcome::ok(render(json_mode, &value, text)))
}

fn parse_gens(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("expected --gens i,j, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn axet_cmd(
    json_mode: bool,
    file: Option<&str>,
    gens: &str,
    cap: Option<usize>,
    law: Option<&str>,
) -> Result<Outcome, Error> {
    let alg = load(file)?;
    let law = law_for(&alg, law)?;
    let (i, j) = parse_gens(gens)?;
    let axes = named_axes(&alg);
    let pick = |k: usize| {
        axes.get(k).cloned().ok_or_else(|| {
            Error::Parse(format!("axis index {k} out of range for {} axes", axes.len()))
        })
    };
    let start = vec![pick(i)?, pick(j)?];
    let axet = close_axes(&alg, &start, &law, &law.standard_grading(), caps(cap))?;
    let (shape, _) = classify_2gen_axet(&axet, (0, axet.generators[axet.generators.len() - 1]))?;
    let (mut value, orbits) = axet_value(&axet);
    value["shape"] = json!(shape.to_string());
    value["skew"] = json!(shape.is_skew());
    let mut text = format!("shape {shape}\nskew {}\n", shape.is_skew());
    for o in &orbits {
        text.push_str(&format!("orbit {{{}}}\n", o.join(", ")));
    }
    Ok(Outcome::ok(render(json_mode, &value, text)))
}

fn parse_tuple(field: Field, s: &str) -> Result<Vec<Scalar>, Error> {
    s.split(',').map(|x| field.parse(x)).collect()
}

fn hw_cmd(json_mode: bool, cmd: &HwCommand) -> Result<Outcome, Error> {
    match cmd {
        HwCommand::Quotient {
            period,
            output,
            prime,
        } => {
            let alg = hw_periodic_quotient(field_of(*prime)?, *period)?;
            Ok(Outcome::ok(write_output(output.as_deref(), &algebra_to_json(&alg))?))
        }
        HwCommand::CheckTuple { tuple, prime } => {
            let t = parse_tuple(field_of(*prime)?, tuple)?;
            let r = ideal_type_report(&t);
            let value = json!({
                "ideal_type": r.is_ideal_type(),
                "epsilon": r.epsilon,
                "ends_and_sum": r.ends_and_sum,
                "literal_symmetry": r.literal_symmetry,
                "readings_disagree": r.readings_disagree(),
            });
            let mut text = format!(
                "ideal type {}\n",
                if r.is_ideal_type() { "yes" } else { "no" }
            );
            if let Some(e) = r.epsilon.filter(|_| r.is_ideal_type()) {
                text.push_str(&format!("epsilon {e}\n"));
            }
            if r.readings_disagree() {
                text.push_str("note: fails the unsigned symmetry alpha_i = alpha_(D-i)\n");
            }
            Ok(Outcome {
                report: render(json_mode, &value, text),
                code: if r.is_ideal_type() { 0 } else { 1 },
            })
        }
        HwCommand::Member {
            tuple,
            element,
            window,
            rounds,
            prime,
        } => {
            let field = field_of(*prime)?;
            let t = parse_tuple(field, tuple)?;
            let text = if element.trim_start().starts_with('{') {
                element.clone()
            } else {
                read_input(Some(element))?
            };
            let v = hw_from_json(field, &serde_json::from_str(&text)?)?;
            let w = window.unwrap_or(3 * (t.len().max(1) as u64 - 1).max(1));
            let m = hw_ideal_window_contains(&t, &v, w, *rounds)?;
            let answer = match m {
                Membership::Yes => "yes",
                Membership::Unknown => "unknown",
            };
            let value = json!({"element": hw_to_json(&v), "window": w, "rounds": rounds, "member": answer});
            Ok(Outcome::ok(render(json_mode, &value, format!("member {answer}\n"))))
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let j = cli.json;
    match &cli.command {
        Command::Build {
            spec,
            output,
            prime,
        } => build(spec, output.as_deref(), *prime),
        Command::Verify { file, law } => verify(j, file.as_deref(), law.as_deref()),
        Command::Miyamoto { file, cap, law } => miyamoto_cmd(j, file.as_deref(), *cap, law.as_deref()),
        Command::Frobenius { file } => frobenius_cmd(j, file.as_deref()),
        Command::Radical { file } => radical_cmd(j, file.as_deref()),
        Command::Decompose { file } => decompose_cmd(j, file.as_deref()),
        Command::Axet {
            file,
            gens,
            cap,
            law,
        } => axet_cmd(j, file.as_deref(), gens, *cap, law.as_deref()),
        Command::Hw { command } => hw_cmd(j, command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.report.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
