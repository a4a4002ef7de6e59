//! `fusprod`: builds products of normal fusion subsystems with p-subgroups
//! and checks them.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! bad input.

mod instance;
mod report;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fusion_product::catalog::{
    fixture_example_7_1, fixture_example_7_4, fixture_example_7_5, oracle_product, standard_catalog,
};
use fusion_product::fusion::{systems_equal, FusionSystem};
use fusion_product::product::{hyperfocal_subgroup, op_residual_subsystem, verify_main_theorem};

use instance::InstanceArgs;
use report::{OutputMode, Report, Section};

#[derive(Parser, Debug)]
#[command(
    name = "fusprod",
    version,
    about = "Products of normal fusion subsystems with p-subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    output: OutputMode,
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build F0T and report saturation, the O^p identity and the group oracle.
    Product(InstanceArgs),
    /// Run every check of the main theorem.
    Verify(InstanceArgs),
    /// Compare F0T with F_T(NT) cell by cell.
    OracleCompare(InstanceArgs),
    /// Run one of the worked examples.
    Example(ExampleArgs),
    /// List the built-in cases.
    Catalog,
    /// Print a fusion system in the dump format.
    Dump(DumpArgs),
}

#[derive(Args, Debug)]
struct ExampleArgs {
    #[arg(long, value_parser = ["7.1", "7.4", "7.5"])]
    name: String,
    /// Field size for 7.4 and 7.5.
    #[arg(long, default_value_t = 3)]
    q: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Product,
    Ambient,
    Normal,
    Oracle,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = Which::Product)]
    system: Which,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

/// A section per case when there are several, otherwise one plain section.
fn section_for(title: &str, case: &str, many: bool) -> Section {
    if many {
        Section::prefixed(case)
    } else {
        Section::new(title)
    }
}

fn product(args: &InstanceArgs, out: &mut Report, verbose: bool) -> Result<bool> {
    let cases = args.resolve()?;
    let many = cases.len() > 1;
    let mut ok = true;
    for case in &cases {
        let sys = case.systems()?;
        let d = sys.instance.product_subsystem();
        let oracle = oracle_product(&sys.lattice, &case.normal, sys.carrier)?;
        let op_d = op_residual_subsystem(d, None)?;
        let op_0 = op_residual_subsystem(&sys.normal, None)?;
        let (saturated, op_identity, oracle_equal) =
            (d.is_saturated(), systems_equal(&op_d, &op_0), systems_equal(d, &oracle));
        ok &= saturated && op_identity && oracle_equal;

        let l = &sys.lattice;
        let mut s = section_for("product", case.name, many);
        s.put("carrier", l.label(sys.carrier))
            .put("carrier_order", l.order(sys.carrier))
            .put("normal_carrier", l.label(sys.normal.carrier()))
            .put("morphism_count", d.morphism_count())
            .put("saturated", saturated)
            .put("op_identity", op_identity)
            .put("oracle_equal", oracle_equal);
        if verbose {
            for (&(p, q), set) in d.iso_table() {
                s.put(format!("cell {} -> {}", p.0, q.0), set.len());
            }
        }
        out.push(s);
    }
    Ok(ok)
}

fn verify(args: &InstanceArgs, out: &mut Report, verbose: bool) -> Result<bool> {
    let mut s = Section::new("verify");
    let mut ok = true;
    for case in args.resolve()? {
        let sys = case.systems()?;
        let candidates = case.candidates(&sys.lattice)?;
        let report = verify_main_theorem(&sys.instance, &candidates);
        ok &= report.passed();
        s.put(case.name, yes_no(report.passed()));
        if verbose {
            for c in &report.checks {
                s.put(format!("{}.{}", case.name, c.name), yes_no(c.passed));
                if let Some(w) = &c.witness {
                    s.put(format!("{}.{}.witness", case.name, c.name), w);
                }
            }
            s.put(format!("{}.candidates", case.name), report.candidates_applicable)
                .put(format!("{}.elapsed_ms", case.name), report.elapsed.as_millis());
        } else {
            for c in report.checks.iter().filter(|c| !c.passed) {
                s.put(
                    format!("{}.{}", case.name, c.name),
                    c.witness.as_deref().unwrap_or("fail"),
                );
            }
        }
    }
    out.push(s);
    Ok(ok)
}

fn oracle_compare(args: &InstanceArgs, out: &mut Report) -> Result<bool> {
    let cases = args.resolve()?;
    let many = cases.len() > 1;
    let mut ok = true;
    for case in &cases {
        let sys = case.systems()?;
        let d = sys.instance.product_subsystem();
        let oracle = oracle_product(&sys.lattice, &case.normal, sys.carrier)?;
        let diff = d.first_difference(&oracle);
        ok &= diff.is_none();
        let mut s = section_for("oracle", case.name, many);
        s.put("oracle_equal", diff.is_none())
            .put("product_morphisms", d.morphism_count())
            .put("oracle_morphisms", oracle.morphism_count());
        if let Some(diff) = diff {
            s.put("first_difference", diff);
        }
        out.push(s);
    }
    Ok(ok)
}

/// Pushes `(key, computed, expected)` rows and reports whether all match.
fn flag_section(title: &str, rows: &[(&str, bool, bool)], out: &mut Report) -> bool {
    let mut s = Section::new(title);
    let mut ok = true;
    for &(key, got, want) in rows {
        s.put(key, got);
        if got != want {
            eprintln!("warning: {key} = {got}, expected {want}");
            ok = false;
        }
    }
    s.put("all_match", ok);
    out.push(s);
    ok
}

fn example(args: &ExampleArgs, out: &mut Report) -> Result<bool> {
    let title = format!("example {}", args.name);
    match args.name.as_str() {
        "7.1" => {
            let ex = fixture_example_7_1()?;
            let trivial = ex.quotient()?.quotient_group().order() == 1;
            Ok(flag_section(
                &title,
                &[
                    ("quotient_trivial", trivial, true),
                    ("F0T_eq_F0", ex.product_equals_normal(), true),
                    ("F0_proper", ex.normal_is_proper(), true),
                ],
                out,
            ))
        }
        "7.4" => {
            let ex = fixture_example_7_4(args.q)?;
            let op_g = ex.op_g()?;
            let (in_f, in_g) = ex.products()?;
            Ok(flag_section(
                &title,
                &[
                    ("F_eq_G", systems_equal(&ex.f, &ex.g), false),
                    ("Op_eq", systems_equal(&ex.f0, &op_g), true),
                    ("Op_eq_FU", systems_equal(&ex.f0, &ex.expected_residual()?), true),
                    ("hyp_eq_U", hyperfocal_subgroup(&ex.f)? == ex.u, true),
                    ("products_eq", systems_equal(&in_f, &in_g), false),
                ],
                out,
            ))
        }
        "7.5" => {
            let ex = fixture_example_7_5(args.q)?;
            Ok(flag_section(
                &title,
                &[
                    ("alpha_in_Acirc", ex.alpha_in_a_circ()?, true),
                    ("AutF0S_trivial", ex.product_automizer().order() == 1, true),
                    ("acirc_in_F0S", ex.a_circ_in_product()?, false),
                ],
                out,
            ))
        }
        other => bail!("unknown example {other:?}"),
    }
}

fn catalog(out: &mut Report) {
    for case in standard_catalog() {
        let mut s = Section::prefixed(case.name);
        s.put("description", case.description)
            .put("group_order", case.group.order())
            .put("prime", case.prime)
            .put("sylow_order", case.sylow.order())
            .put("normal_carrier_order", case.normal_carrier().order())
            .put("carrier_order", case.carrier.order());
        out.push(s);
    }
}

fn dump(args: &DumpArgs, verbose: bool) -> Result<String> {
    let mut cases = args.instance.resolve()?;
    if cases.len() != 1 {
        bail!("dump needs exactly one case");
    }
    let case = cases.remove(0);
    let sys = case.systems()?;
    let oracle;
    let system: &FusionSystem = match args.system {
        Which::Product => sys.instance.product_subsystem(),
        Which::Ambient => &sys.ambient,
        Which::Normal => &sys.normal,
        Which::Oracle => {
            oracle = oracle_product(&sys.lattice, &case.normal, sys.carrier)?;
            &oracle
        }
    };
    let mut text = String::new();
    if verbose {
        for id in sys.lattice.ids() {
            text.push_str(&format!(
                "# {} {} order={}\n",
                id.0,
                sys.lattice.label(id),
                sys.lattice.order(id)
            ));
        }
    }
    text.push_str(&system.dump());
    Ok(text)
}

fn run(cli: &Cli) -> Result<bool> {
    let mut out = Report::default();
    let ok = match &cli.command {
        Command::Product(a) => product(a, &mut out, cli.verbose)?,
        Command::Verify(a) => verify(a, &mut out, cli.verbose)?,
        Command::OracleCompare(a) => oracle_compare(a, &mut out)?,
        Command::Example(a) => example(a, &mut out)?,
        Command::Catalog => {
            catalog(&mut out);
            true
        }
        Command::Dump(a) => {
            print!("{}", dump(a, cli.verbose).context("dump")?);
            return Ok(true);
        }
    };
    print!("{}", out.render(cli.output));
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
