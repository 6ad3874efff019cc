use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sbp_core::action::{ActionFailure, PairWitness};
use sbp_core::algebra::{are_equivalent, canonical_form, canonical_form_anti, Verdict};
use sbp_core::enumeration::{
    action_census, enumerate_semibiproducts, DedupMode, EnumSpec, StructureFilter,
};
use sbp_core::io::{self, DerivedFile, IoError};
use sbp_core::props::{cokernel_property, is_pointed_monoid_case, kernel_property, pointed_hypotheses_agree};
use sbp_core::semibiproduct::{
    group_checks, is_unitary_semidirect, monoid_formula_check, thm5_battery,
};
use sbp_core::props::UniversalReport;
use sbp_core::{AlgebraError, Semibiproduct};

mod report;

use report::{one_based, pair, Format, Outcome, Report};

#[derive(Parser)]
#[command(name = "sbp", version, about = "Verify, convert and enumerate semibiproducts and magma-actions")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining conditions of a magma-action
    VerifyAction { file: PathBuf },
    /// Check the defining equations of a semibiproduct
    VerifySbp { file: PathBuf },
    /// Print h, rho, phi, gamma, t and the set R of a semigroup semibiproduct
    Derive { file: PathBuf },
    /// Convert a magma-action to its semibiproduct
    ToSbp { file: PathBuf },
    /// Convert a semibiproduct to its magma-action
    ToAction { file: PathBuf },
    /// Check a single property
    Check {
        #[command(subcommand)]
        property: Property,
    },
    /// Enumerate semibiproducts with fixed ends
    Enumerate {
        /// End files X and B
        #[arg(long, num_args = 2, value_names = ["X", "B"], required = true)]
        ends: Vec<PathBuf>,
        #[arg(long, default_value_t = 3)]
        middle_order: usize,
        /// magma | semigroup | monoid | group
        #[arg(long, default_value = "semigroup")]
        structure: String,
        /// labelled | middle-iso
        #[arg(long, default_value = "middle-iso")]
        dedup: String,
        /// Print every solution as a semibiproduct object, one per line
        #[arg(long)]
        list: bool,
    },
    /// Classify every six-tuple with |X| = |B| = order
    Census {
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// Write the flagged actions here, one per line
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded checks of the kernel-like and cokernel-like properties
    Props {
        file: PathBuf,
        #[arg(long)]
        kernel: bool,
        #[arg(long)]
        cokernel: bool,
        #[arg(long, default_value_t = 3)]
        z_bound: usize,
    },
}

#[derive(Subcommand)]
enum Property {
    /// A magma table or an action file
    Associative { file: PathBuf },
    /// Representability condition of an action
    Representable { file: PathBuf },
    /// Is MAP a homomorphism SRC -> DST
    Homomorphism { map: PathBuf, src: PathBuf, dst: PathBuf },
    /// Are two magmas isomorphic (or anti-isomorphic with --anti)
    Equivalent {
        first: PathBuf,
        second: PathBuf,
        /// Also accept anti-isomorphisms
        #[arg(long)]
        anti: bool,
    },
    /// Canonical relabelling of a magma table
    Canonical {
        file: PathBuf,
        #[arg(long)]
        anti: bool,
    },
    /// All eleven items of the structure theorem
    Thm5 { file: PathBuf },
    /// The group specialization
    Group { file: PathBuf },
    /// Compare the unmodified monoid formula with the semigroup formula
    MonoidFormula { file: PathBuf },
    /// Is the semibiproduct pointed (monoid case)
    Pointed { file: PathBuf },
    /// Is the action unitary, so that the semibiproduct is a semidirect product
    UnitarySemidirect { file: PathBuf },
}

/// Errors that end a run with status 2.
#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: IoError },
    #[error("{0}")]
    Usage(String),
}

type Run = Result<(Report, Vec<String>), InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, IoError>) -> Result<T, InputError> {
    parse(&read(path)?).map_err(|source| InputError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn single(report: Report) -> Run {
    Ok((report, Vec::new()))
}

/// An algebraic precondition that does not hold; reported with status 1.
fn precondition(verb: &str, e: AlgebraError) -> Run {
    single(
        Report::new(Outcome::Failed)
            .field("check", verb)
            .field("result", "precondition-failed")
            .field("reason", e.to_string()),
    )
}

fn action_failure_fields(r: Report, f: &ActionFailure) -> Report {
    let r = r.field("failed_condition", f.tag());
    match *f {
        ActionFailure::HomCompat { x, x2 } => r.field("witness", one_based(&[x, x2])),
        ActionFailure::HInR { x } => r.field("witness", one_based(&[x])),
        ActionFailure::TInR { b } => r.field("witness", one_based(&[b])),
        ActionFailure::RClosure { left, right } => r.field("witness", json!([pair(left), pair(right)])),
    }
}

fn verify_action(path: &Path) -> Run {
    let action = load(path, io::parse_action)?;
    let report = action.verify();
    let mut r = Report::new(Outcome::from_bool(report.is_action))
        .field("check", "verify-action")
        .field("result", if report.is_action { "valid" } else { "invalid" });
    if let Some(f) = &report.failed_condition {
        r = action_failure_fields(r, f);
    }
    if let Some(rep) = &report.representable {
        r = r.field("representable", rep.holds());
    }
    if let Some(assoc) = &report.associative {
        r = r.field("associative", assoc.holds());
    }
    single(r)
}

fn verify_sbp(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let report = sb.verify();
    let mut r = Report::new(Outcome::from_bool(report.valid))
        .field("check", "verify-sbp")
        .field("result", if report.valid { "valid" } else { "invalid" });
    if let Some(f) = report.failing_equation {
        r = r.field("failing_equation", f.tag()).field("witness", one_based(&f.witness()));
    }
    single(r)
}

fn derive(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let data = match sb.derive_tuple() {
        Ok(d) => d,
        Err(e) => return precondition("derive", e),
    };
    let r_set = match sb.to_action().and_then(|a| a.compute_r()) {
        Ok(r) => r,
        Err(e) => return precondition("derive", e),
    };
    let file = DerivedFile::new(&data, &r_set);
    single(object_report(&serde_json::to_string(&file).expect("plain data")))
}

fn to_sbp(path: &Path) -> Run {
    let action = load(path, io::parse_action)?;
    match Semibiproduct::from_action(&action) {
        Ok(sb) => single(object_report(&io::sbp_to_json(&sb))),
        Err(e) => precondition("to-sbp", e),
    }
}

fn to_action(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    match sb.to_action() {
        Ok(a) => single(object_report(&io::action_to_json(&a))),
        Err(e) => precondition("to-action", e),
    }
}

/// A file object re-emitted field by field, preserving its key order.
fn object_report(json: &str) -> Report {
    let mut r = Report::new(Outcome::Ok);
    let map: serde_json::Map<String, Value> = serde_json::from_str(json).expect("own output");
    let mut keys: Vec<(usize, &String)> = map.keys().map(|k| (json.find(&format!("\"{k}\":")).unwrap_or(0), k)).collect();
    keys.sort();
    for (_, k) in keys {
        r = r.field(k, map[k].clone());
    }
    r
}

/// Files holding an action carry a `phi` field; everything else is read as
/// a magma.
fn is_action_file(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("phi")))
        .unwrap_or(false)
}

fn check_associative(path: &Path) -> Run {
    let text = read(path)?;
    let parse_err = |source| InputError::Parse {
        path: path.display().to_string(),
        source,
    };
    let base = Report::new(Outcome::Ok).field("check", "associative");
    if is_action_file(&text) {
        let action = io::parse_action(&text).map_err(parse_err)?;
        let r_set = match action.compute_r() {
            Ok(r) => r,
            Err(e) => return precondition("associative", e),
        };
        let verdict = action.is_associative_action().expect("R computed");
        single(match verdict {
            Verdict::Holds => base.field("result", true),
            Verdict::Fails((u, v, w)) => {
                let op = |l, r| {
                    let (i, j) = (r_set.index_of(l).unwrap(), r_set.index_of(r).unwrap());
                    r_set.pairs[r_set.magma.op(i, j)]
                };
                let left = op(op(u, v), w);
                let right = op(u, op(v, w));
                let mut r = base
                    .field("result", false)
                    .field("witness", json!([pair(u), pair(v), pair(w)]))
                    .field("left", pair(left))
                    .field("right", pair(right));
                r.outcome = Outcome::Failed;
                r
            }
        })
    } else {
        let m = io::parse_magma(&text).map_err(parse_err)?;
        single(match m.is_associative() {
            Verdict::Holds => base.field("result", true),
            Verdict::Fails((a, b, c)) => {
                let mut r = base
                    .field("result", false)
                    .field("witness", one_based(&[a, b, c]))
                    .field("left", m.op(m.op(a, b), c) + 1)
                    .field("right", m.op(a, m.op(b, c)) + 1);
                r.outcome = Outcome::Failed;
                r
            }
        })
    }
}

fn check_representable(path: &Path) -> Run {
    let action = load(path, io::parse_action)?;
    if !action.is_action() {
        return precondition("representable", AlgebraError::Invalid("magma-action"));
    }
    let v = action.is_representable();
    let mut r = Report::new(Outcome::from_bool(v.holds()))
        .field("check", "representable")
        .field("result", v.holds());
    if let Some(&(l, rr)) = v.witness() {
        r = r.field("witness", json!([pair(l), pair(rr)]));
    }
    single(r)
}

fn check_homomorphism(map: &Path, src: &Path, dst: &Path) -> Run {
    let f = load(map, io::parse_map)?;
    let (s, d) = (load(src, io::parse_magma)?, load(dst, io::parse_magma)?);
    let v = match f.is_homomorphism(&s, &d) {
        Ok(v) => v,
        Err(e) => return Err(InputError::Usage(e.to_string())),
    };
    let mut r = Report::new(Outcome::from_bool(v.holds()))
        .field("check", "homomorphism")
        .field("result", v.holds());
    if let Some(&(a, b)) = v.witness() {
        r = r.field("witness", one_based(&[a, b]));
    }
    single(r)
}

fn check_equivalent(first: &Path, second: &Path, anti: bool) -> Run {
    let (m1, m2) = (load(first, io::parse_magma)?, load(second, io::parse_magma)?);
    let found = are_equivalent(&m1, &m2, anti);
    let mut r = Report::new(Outcome::from_bool(found.is_some()))
        .field("check", "equivalent")
        .field("result", found.is_some());
    if let Some(e) = found {
        r = r
            .field("permutation", one_based(&e.permutation))
            .field("anti", e.anti);
    }
    single(r)
}

fn check_canonical(path: &Path, anti: bool) -> Run {
    let m = load(path, io::parse_magma)?;
    let c = if anti { canonical_form_anti(&m) } else { canonical_form(&m) };
    single(
        Report::new(Outcome::Ok)
            .field("check", "canonical")
            .field("order", c.order())
            .field("table", c.rows_one_based()),
    )
}

fn check_thm5(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let battery = match thm5_battery(&sb) {
        Ok(b) => b,
        Err(e) => return precondition("thm5", e),
    };
    let items: Vec<Value> = battery
        .items
        .iter()
        .map(|i| {
            json!({
                "item": i.item,
                "holds": i.holds,
                "witness": i.witness.as_deref().map(one_based),
            })
        })
        .collect();
    single(
        Report::new(Outcome::from_bool(battery.all_hold()))
            .field("check", "thm5")
            .field("result", battery.all_hold())
            .field("items", items),
    )
}

fn check_group(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let g = match group_checks(&sb) {
        Ok(g) => g,
        Err(e) => return precondition("group", e),
    };
    let mut r = Report::new(Outcome::from_bool(g.all_hold()))
        .field("check", "group")
        .field("result", g.all_hold())
        .field("q_unique", g.q_unique.holds())
        .field("h_trivial", g.h_trivial.holds())
        .field("rho_trivial", g.rho_trivial.holds())
        .field("alpha_iso", g.alpha_iso.holds());
    if let Some(law) = g.alpha_iso.witness() {
        r = r.field("alpha_failure", *law);
    }
    single(r.field("factor_product", g.factor_product.rows_one_based()))
}

fn check_monoid_formula(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let f = match monoid_formula_check(&sb) {
        Ok(f) => f,
        Err(e) => return precondition("monoid-formula", e),
    };
    let witness = |v: &Verdict<PairWitness>| match v.witness() {
        Some(&(l, r)) => json!([pair(l), pair(r)]),
        None => Value::Null,
    };
    // the semigroup formula is the theorem; disagreement of the monoid
    // formula is an expected finding, not a failure
    single(
        Report::new(Outcome::from_bool(f.semigroup_formula.holds()))
            .field("check", "monoid-formula")
            .field("semigroup_formula", f.semigroup_formula.holds())
            .field("semigroup_witness", witness(&f.semigroup_formula))
            .field("monoid_formula", f.monoid_formula.holds())
            .field("monoid_witness", witness(&f.monoid_formula))
            .field("agree", f.formulas_agree()),
    )
}

fn check_pointed(path: &Path) -> Run {
    let sb = load(path, io::parse_sbp)?;
    match is_pointed_monoid_case(&sb) {
        Ok(p) => single(
            Report::new(Outcome::from_bool(p))
                .field("check", "pointed")
                .field("result", p),
        ),
        Err(e) => precondition("pointed", e),
    }
}

fn check_unitary(path: &Path) -> Run {
    let action = load(path, io::parse_action)?;
    match is_unitary_semidirect(&action) {
        Ok(u) => single(
            Report::new(Outcome::from_bool(u))
                .field("check", "unitary-semidirect")
                .field("result", u),
        ),
        Err(e) => precondition("unitary-semidirect", e),
    }
}

fn enumerate(ends: &[PathBuf], middle_order: usize, structure: &str, dedup: &str, list: bool) -> Run {
    let filter = StructureFilter::from_tag(structure)
        .ok_or_else(|| InputError::Usage(format!("unknown structure '{structure}'")))?;
    let dedup_mode =
        DedupMode::from_tag(dedup).ok_or_else(|| InputError::Usage(format!("unknown dedup mode '{dedup}'")))?;
    let x = load(&ends[0], io::parse_magma)?;
    let b = load(&ends[1], io::parse_magma)?;
    let spec = EnumSpec {
        dedup: dedup_mode,
        filter,
        ..EnumSpec::new(x, b, middle_order)
    };
    let found = enumerate_semibiproducts(&spec).map_err(|e| InputError::Usage(e.to_string()))?;
    let report = Report::new(Outcome::Ok)
        .field("check", "enumerate")
        .field("middle_order", middle_order)
        .field("structure", filter.tag())
        .field("dedup", dedup_mode.tag())
        .field("count", found.count())
        .field("labelled_count", found.labelled_count);
    let lines = if list {
        found.solutions.iter().map(io::sbp_to_json).collect()
    } else {
        Vec::new()
    };
    Ok((report, lines))
}

fn census(order: usize, out: Option<&Path>) -> Run {
    let c = action_census(order, order).map_err(|e| InputError::Usage(e.to_string()))?;
    let s = c.summary;
    if let Some(path) = out {
        let mut text = String::new();
        for e in &c.flagged {
            text.push_str(&io::action_to_json(&e.action));
            text.push('\n');
        }
        std::fs::write(path, text).map_err(|source| InputError::Read {
            path: path.display().to_string(),
            source,
        })?;
    }
    let prop_holds = s.associative_not_representable == 0;
    single(
        Report::new(Outcome::from_bool(prop_holds))
            .field("check", "census")
            .field("order", order)
            .field("total", s.total)
            .field("valid", s.valid)
            .field("representable", s.representable)
            .field("associative", s.associative)
            .field("representable_not_associative", s.representable_not_associative)
            .field("associative_not_representable", s.associative_not_representable)
            .field("flagged", c.flagged.len()),
    )
}

type PropertyCheck = fn(&Semibiproduct, usize) -> Result<UniversalReport, AlgebraError>;

fn props(path: &Path, kernel: bool, cokernel: bool, z_bound: usize) -> Run {
    let sb = load(path, io::parse_sbp)?;
    let (kernel, cokernel) = if kernel || cokernel { (kernel, cokernel) } else { (true, true) };
    let mut r = Report::new(Outcome::Ok)
        .field("check", "props")
        .field("z_bound", z_bound)
        .field("bounded", format!("test semigroups of order <= {z_bound} only"));
    let mut outcome = Outcome::Ok;
    let mut checks: Vec<(&str, PropertyCheck)> = Vec::new();
    if cokernel {
        checks.push(("cokernel_like", cokernel_property));
    }
    if kernel {
        checks.push(("kernel_like", kernel_property));
    }
    for (key, check) in checks {
        let rep = match check(&sb, z_bound) {
            Ok(rep) => rep,
            Err(e) => return precondition("props", e),
        };
        outcome = outcome.and(Outcome::from_bool(rep.holds));
        let witness = rep.witness.as_ref().map(|w| {
            json!({
                "Z": w.z.rows_one_based(),
                "f": w.f.one_based(),
                "kind": w.kind.tag(),
            })
        });
        r = r.field(
            key,
            json!({"holds": rep.holds, "tested_homs": rep.tested_homs, "witness": witness}),
        );
    }
    if let Ok(true) = is_pointed_monoid_case(&sb) {
        let agree = pointed_hypotheses_agree(&sb, z_bound).map(|v| v.holds()).unwrap_or(false);
        outcome = outcome.and(Outcome::from_bool(agree));
        r = r.field("pointed_hypotheses_agree", agree);
    }
    r.outcome = outcome;
    single(r)
}

fn dispatch(cmd: &Command) -> Run {
    match cmd {
        Command::VerifyAction { file } => verify_action(file),
        Command::VerifySbp { file } => verify_sbp(file),
        Command::Derive { file } => derive(file),
        Command::ToSbp { file } => to_sbp(file),
        Command::ToAction { file } => to_action(file),
        Command::Check { property } => match property {
            Property::Associative { file } => check_associative(file),
            Property::Representable { file } => check_representable(file),
            Property::Homomorphism { map, src, dst } => check_homomorphism(map, src, dst),
            Property::Equivalent { first, second, anti } => check_equivalent(first, second, *anti),
            Property::Canonical { file, anti } => check_canonical(file, *anti),
            Property::Thm5 { file } => check_thm5(file),
            Property::Group { file } => check_group(file),
            Property::MonoidFormula { file } => check_monoid_formula(file),
            Property::Pointed { file } => check_pointed(file),
            Property::UnitarySemidirect { file } => check_unitary(file),
        },
        Command::Enumerate {
            ends,
            middle_order,
            structure,
            dedup,
            list,
        } => enumerate(ends, *middle_order, structure, dedup, *list),
        Command::Census { order, out } => census(*order, out.as_deref()),
        Command::Props {
            file,
            kernel,
            cokernel,
            z_bound,
        } => props(file, *kernel, *cokernel, *z_bound),
    }
}

fn configure_workers() -> Result<(), InputError> {
    let Ok(raw) = std::env::var("SBP_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| InputError::Usage(format!("SBP_WORKERS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| InputError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers().and_then(|()| dispatch(&cli.command));
    match result {
        Ok((report, lines)) => {
            println!("{}", report.render(cli.format));
            for line in lines {
                println!("{line}");
            }
            match report.outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Failed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
