//! Executes a parsed script and renders the results.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use primdec_core::groebner::annihilator;
use primdec_core::homology::equidim_hull;
use primdec_core::primdec::{localize_module, min_ass_seeded, primdec_ehv_with, PrimdecConfig};
use primdec_core::verify::validate_decomposition;

use crate::report::{
    canonical_strings, compare_all, compare_reports, components_json, parse_expected,
    CommandReport, ValidationJson,
};
use crate::script::{parse, Command, CommandKind, Script, Statement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub json: bool,
    pub config: PrimdecConfig,
    /// Directory that relative `validate` paths are resolved against.
    pub base_dir: PathBuf,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            json: false,
            config: PrimdecConfig::default(),
            base_dir: PathBuf::from("."),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub reports: Vec<CommandReport>,
}

/// Why a command stopped the run.
enum Failure {
    Usage(String),
    Compute(String),
}

fn compute<T>(r: primdec_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Compute(e.to_string()))
}

fn primdec_report(c: &Command, opts: &RunOptions, command: &str) -> Result<CommandReport, Failure> {
    let d = compute(primdec_ehv_with(&c.value, &opts.config))?;
    let mut r = CommandReport::new(command, &c.target, &c.value);
    r.components = components_json(&d);
    r.validation = Some(ValidationJson::from(&validate_decomposition(&c.value, &d)));
    Ok(r)
}

fn execute(c: &Command, opts: &RunOptions) -> Result<CommandReport, Failure> {
    let mut r = CommandReport::new(c.kind.name(), &c.target, &c.value);
    match c.kind {
        CommandKind::Primdec => return primdec_report(c, opts, "primdec"),
        CommandKind::Hull => {
            r.generators = Some(canonical_strings(&compute(equidim_hull(&c.value))?));
        }
        CommandKind::Minass => {
            let ann = if c.value.is_ideal() {
                c.value.clone()
            } else {
                compute(annihilator(&c.value))?
            };
            let primes = compute(min_ass_seeded(&ann, opts.config.seed))?;
            r.primes = Some(primes.iter().map(|p| canonical_strings(&p.ideal)).collect());
        }
        CommandKind::Localize => {
            let (_, j) = c.ideal.as_ref().expect("localize has an ideal operand");
            r.generators = Some(canonical_strings(&compute(localize_module(&c.value, j, None))?));
        }
        CommandKind::Validate => {
            let written = c.path.as_deref().expect("validate has a file operand");
            let path = opts.base_dir.join(written);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let expected = parse_expected(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let mut r = primdec_report(c, opts, "validate")?;
            // prefer the entry computed from the same generators
            let target = expected
                .iter()
                .filter(|e| e.command == "primdec" || e.command == "validate")
                .find(|e| e.input == r.input)
                .or_else(|| expected.iter().find(|e| e.command == "primdec"));
            r.mismatches = match target {
                Some(e) => compare_reports(&r, e),
                None => vec![format!("{} holds no primdec result", path.display())],
            };
            r.expected = Some(written.to_string());
            r.matches = Some(r.mismatches.is_empty());
            return Ok(r);
        }
    }
    Ok(r)
}

/// Comma-separated generators; the zero submodule prints as `0`.
fn list(gens: &[String]) -> String {
    if gens.is_empty() {
        "0".into()
    } else {
        gens.join(", ")
    }
}

fn render_text(r: &CommandReport, out: &mut String) {
    let _ = writeln!(out, "{} {}", r.command, r.name);
    let _ = writeln!(out, "  input: {}", list(&r.input));
    for (i, c) in r.components.iter().enumerate() {
        let kind = if c.embedded { "embedded" } else { "isolated" };
        let _ = writeln!(out, "  component {}: {}", i + 1, list(&c.generators));
        let _ = writeln!(out, "    prime: {} (codim {}, {kind})", list(&c.prime), c.codim);
    }
    if let Some(g) = &r.generators {
        let _ = writeln!(out, "  generators: {}", list(g));
    }
    if let Some(ps) = &r.primes {
        for p in ps {
            let _ = writeln!(out, "  prime: {}", list(p));
        }
    }
    if let Some(v) = &r.validation {
        if v.pass {
            let _ = writeln!(out, "  validation: pass");
        } else {
            let _ = writeln!(
                out,
                "  validation: FAIL (intersection {}, irredundant {}, distinct primes {})",
                v.intersection_ok, v.irredundant_ok, v.primes_distinct_ok
            );
            for p in v.primaries_ok.iter().filter(|p| !p.ok) {
                let _ = writeln!(out, "    component {}: {}", p.index + 1, p.reason);
            }
        }
    }
    if let Some(m) = r.matches {
        let file = r.expected.as_deref().unwrap_or("");
        let _ = writeln!(out, "  expected {file}: {}", if m { "match" } else { "MISMATCH" });
        for s in &r.mismatches {
            let _ = writeln!(out, "    {s}");
        }
    }
}

/// Renders reports as a pretty-printed JSON array.
pub fn render_json(reports: &[CommandReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs every command in order. Stops at the first failure; results of
/// the commands before it are still rendered.
pub fn run(script: &Script, opts: &RunOptions) -> RunOutcome {
    let mut outcome = RunOutcome::default();
    let mut text = String::new();
    for st in &script.statements {
        let Statement::Command(c) = st else { continue };
        match execute(c, opts) {
            Ok(r) => {
                if r.matches == Some(false) {
                    outcome.code = EXIT_MISMATCH;
                }
                render_text(&r, &mut text);
                outcome.reports.push(r);
            }
            Err(f) => {
                let (code, msg) = match f {
                    Failure::Usage(m) => (EXIT_USAGE, m),
                    Failure::Compute(m) => (EXIT_COMPUTE, m),
                };
                outcome.code = code;
                outcome.stderr = format!("line {}: {} {}: {msg}\n", c.line, c.kind.name(), c.target);
                break;
            }
        }
    }
    outcome.stdout = if opts.json {
        render_json(&outcome.reports)
    } else {
        text
    };
    outcome
}

fn load(path: &Path) -> Result<Script, RunOutcome> {
    let usage = |msg: String| RunOutcome {
        code: EXIT_USAGE,
        stderr: msg,
        ..RunOutcome::default()
    };
    let source = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}\n", path.display())))?;
    parse(&source).map_err(|e| usage(format!("{}:{e}\n", path.display())))
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map_or_else(|| PathBuf::from("."), Path::to_path_buf)
}

/// Reads, parses and runs a script file.
pub fn run_file(path: &Path, json: bool, config: PrimdecConfig) -> RunOutcome {
    match load(path) {
        Ok(script) => run(
            &script,
            &RunOptions {
                json,
                config,
                base_dir: base_dir(path),
            },
        ),
        Err(o) => o,
    }
}

/// Runs a script and compares all of its results with an expected JSON
/// document.
pub fn validate_file(path: &Path, expected: &Path, config: PrimdecConfig) -> RunOutcome {
    let mut o = run_file(path, true, config);
    if o.code != EXIT_OK && o.code != EXIT_MISMATCH {
        return o;
    }
    let text = match std::fs::read_to_string(expected) {
        Ok(t) => t,
        Err(e) => {
            o.code = EXIT_USAGE;
            o.stdout.clear();
            o.stderr = format!("cannot read {}: {e}\n", expected.display());
            return o;
        }
    };
    let wanted = match parse_expected(&text) {
        Ok(w) => w,
        Err(e) => {
            o.code = EXIT_USAGE;
            o.stdout.clear();
            o.stderr = format!("{}: {e}\n", expected.display());
            return o;
        }
    };
    let mut diffs = compare_all(&o.reports, &wanted);
    for r in &o.reports {
        diffs.extend(r.mismatches.iter().cloned());
    }
    o.stdout = if diffs.is_empty() {
        format!("{}: match ({} commands)\n", expected.display(), o.reports.len())
    } else {
        let mut s = format!("mismatch against {}:\n", expected.display());
        for d in &diffs {
            let _ = writeln!(s, "  {d}");
        }
        s
    };
    o.code = if diffs.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    o
}
