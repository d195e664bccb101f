//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! fails.

use std::path::PathBuf;
use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use primdec_cli::{parse, Command};
use primdec_core::groebner::{canonical, codim};
use primdec_core::homology::{equidim_hull, ext_all};
use primdec_core::polyring::Submodule;
use primdec_core::primdec::{primdec_ehv, DecompositionResult, DEFAULT_BOUND};
use primdec_core::verify::properties::{
    check_intersection, check_lift_and_modulo, check_membership, check_normal_form,
    check_quotient, check_saturation,
};
use primdec_core::verify::{
    component_theorem_checks, monomial_corpus, monomial_hull_oracle, validate_decomposition,
};

const WORKED: &str = "ring r = 0, (x,y), dp; ideal I = x^2, x*y; hull I;";
const MONOMIAL: &str = "ring r = 0, (x,y,z), dp; ideal I = x^2*y, x*z^2, y^2*z; hull I;";
const MODULE: &str = "ring r = 0, (x,y,z), dp; module M = [x*y,0,y*z], [0,x*z,z^2]; hull M;";

fn input(source: &str) -> Submodule {
    let script = parse(source).expect("acceptance input parses");
    let c: Vec<&Command> = script.commands().collect();
    c[0].value.clone()
}

fn inputs() -> Vec<Submodule> {
    [WORKED, MONOMIAL, MODULE].iter().map(|s| input(s)).collect()
}

fn ideal_in(like: &Submodule, gens: &str) -> Submodule {
    let names = like.ring().names().join(",");
    input(&format!("ring r = 0, ({names}), dp; ideal I = {gens}; hull I;"))
}

fn decompose_checked(m: &Submodule) -> Result<DecompositionResult, String> {
    let d = primdec_ehv(m).map_err(|e| e.to_string())?;
    let report = validate_decomposition(m, &d);
    if !report.pass() {
        return Err(format!("validation failed: {report:?}"));
    }
    Ok(d)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn worked_example() -> Result<String, String> {
    let i = input(WORKED);
    let start = Instant::now();
    let d = decompose_checked(&i)?;
    within(start, Duration::from_secs(1))?;
    let x = canonical(&ideal_in(&i, "x"));
    let xy = canonical(&ideal_in(&i, "x, y"));
    let cube = canonical(&ideal_in(&i, "x^2, x*y, y^2"));
    let shape: Vec<_> = d
        .components
        .iter()
        .map(|c| (canonical(&c.primary), c.prime.ideal.clone(), c.embedded))
        .collect();
    if shape != [(x.clone(), x, false), (cube.clone(), xy.clone(), true)] {
        return Err(format!("unexpected components {d:?}"));
    }
    let step = d
        .trace
        .iter()
        .find(|t| t.prime == xy && t.power == 2)
        .ok_or("no trace step for <x,y> at power 2")?;
    if canonical(&step.candidate) != cube || !step.accepted {
        return Err(format!("trace step at power 2 is {step:?}"));
    }
    Ok(format!("<x>, <x^2,xy,y^2> embedded; hull(I+P^2) accepted in {:?}", start.elapsed()))
}

fn monomial_example() -> Result<String, String> {
    let i = input(MONOMIAL);
    let start = Instant::now();
    let d = decompose_checked(&i)?;
    within(start, Duration::from_secs(10))?;
    let n = d.components.len();
    let flags: Vec<bool> = d.components.iter().map(|c| c.embedded).collect();
    if n != 4 || flags != [false, false, false, true] {
        return Err(format!("{n} components, embedded flags {flags:?}"));
    }
    let mut found: Vec<Submodule> = d.components.iter().map(|c| c.prime.ideal.clone()).collect();
    let wanted: Vec<Submodule> = ["x, y", "x, z", "y, z", "x, y, z"]
        .iter()
        .map(|g| canonical(&ideal_in(&i, g)))
        .collect();
    if found[3] != wanted[3] {
        return Err(format!("embedded prime is <{}>", found[3]));
    }
    found.sort_by_key(|p| p.to_string());
    let mut sorted = wanted.clone();
    sorted.sort_by_key(|p| p.to_string());
    if found != sorted {
        return Err(format!("primes {found:?}"));
    }
    Ok(format!("primes <x,y>, <x,z>, <y,z>, <x,y,z> (embedded), {:?}", start.elapsed()))
}

fn module_example() -> Result<String, String> {
    let m = input(MODULE);
    let start = Instant::now();
    let d = decompose_checked(&m)?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} components validate, {:?}", d.components.len(), start.elapsed()))
}

fn grade_holds(m: &Submodule) -> Result<bool, String> {
    let c0 = codim(m);
    let exts = ext_all(m).map_err(|e| e.to_string())?;
    for (c, e) in exts.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if (c as i64) < c0 {
            return Ok(false);
        }
        let ann = e.annihilator().map_err(|e| e.to_string())?;
        if codim(&canonical(&ann)) < c as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn corpus() -> Vec<Submodule> {
    monomial_corpus(7, 50)
}

fn ext_grade() -> Result<String, String> {
    let all: Vec<Submodule> = corpus().into_iter().chain(inputs()).collect();
    for (k, m) in all.iter().enumerate() {
        if !grade_holds(m)? {
            return Err(format!("instance {k} <{m}>"));
        }
    }
    Ok(format!("{}/{} inputs", all.len(), all.len()))
}

fn hull_oracle() -> Result<String, String> {
    let all = corpus();
    let mut agree = 0;
    for (k, m) in all.iter().enumerate() {
        let h = equidim_hull(m).map_err(|e| e.to_string())?;
        let o = monomial_hull_oracle(m).map_err(|e| e.to_string())?;
        if h != o {
            return Err(format!("instance {k} <{m}>: <{h}> vs <{o}>"));
        }
        agree += 1;
    }
    Ok(format!("{agree}/{}", all.len()))
}

fn theorem_checks() -> Result<String, String> {
    let all: Vec<Submodule> = inputs().into_iter().chain(corpus()).collect();
    let mut count = 0;
    for (k, m) in all.iter().enumerate() {
        let d = decompose_checked(m).map_err(|e| format!("instance {k}: {e}"))?;
        let checks = component_theorem_checks(m, &d, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        if let Some(c) = checks.iter().find(|c| !(c.containment && c.witness)) {
            return Err(format!("instance {k} <{m}>: {c:?}"));
        }
        count += checks.len();
    }
    Ok(format!("{count} components over {} inputs", all.len()))
}

fn kernel_properties() -> Result<String, String> {
    const INSTANCES: usize = 200;
    let start = Instant::now();
    let suite: [(&str, fn(u64, usize) -> Result<(), String>); 6] = [
        ("normal form", check_normal_form),
        ("membership", check_membership),
        ("saturation", check_saturation),
        ("quotient", check_quotient),
        ("intersection", check_intersection),
        ("lift/modulo", check_lift_and_modulo),
    ];
    for (seed, (name, check)) in suite.iter().enumerate() {
        check(seed as u64 + 1, INSTANCES).map_err(|e| format!("{name}: {e}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("6 x {INSTANCES} instances in {:?}", start.elapsed()))
}

fn determinism_script() -> String {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut s = String::new();
    for f in ["worked_example.pd", "monomial_three.pd", "module_rank3.pd", "commands.pd"] {
        s += &std::fs::read_to_string(fixtures.join(f)).expect("fixture exists");
        s.push('\n');
    }
    for (k, m) in corpus().iter().enumerate() {
        let names = m.ring().names().join(",");
        s += &format!("ring c{k} = 0, ({names}), dp;\nideal I = {m};\nprimdec I;\n");
    }
    s
}

fn determinism() -> Result<String, String> {
    let dir = std::env::temp_dir().join(format!("primdec-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("determinism.pd");
    std::fs::write(&path, determinism_script()).map_err(|e| e.to_string())?;
    let once = || {
        Process::new(env!("CARGO_BIN_EXE_primdec"))
            .arg("run")
            .arg("--json")
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (once()?, once()?);
    let _ = std::fs::remove_dir_all(&dir);
    if !a.status.success() {
        return Err(format!("exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr)));
    }
    if a.stdout != b.stdout {
        return Err("outputs differ between runs".into());
    }
    Ok(format!("{} bytes identical", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 8] = [
        ("worked example <x^2,xy>", worked_example),
        ("monomial <x^2y,xz^2,y^2z>", monomial_example),
        ("rank-3 module", module_example),
        ("Ext grade property", ext_grade),
        ("hull oracle equivalence", hull_oracle),
        ("component containment and witness", theorem_checks),
        ("kernel property suite", kernel_properties),
        ("deterministic JSON", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
