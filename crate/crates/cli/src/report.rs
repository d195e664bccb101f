//! JSON shape of command results and the comparison used by `validate`.

use primdec_core::groebner::canonical;
use primdec_core::polyring::Submodule;
use primdec_core::primdec::DecompositionResult;
use primdec_core::verify::ValidationReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub generators: Vec<String>,
    pub prime: Vec<String>,
    pub codim: usize,
    pub embedded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryCheckJson {
    pub index: usize,
    pub ok: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub intersection_ok: bool,
    pub primaries_ok: Vec<PrimaryCheckJson>,
    pub irredundant_ok: bool,
    pub primes_distinct_ok: bool,
    pub pass: bool,
}

impl From<&ValidationReport> for ValidationJson {
    fn from(r: &ValidationReport) -> Self {
        ValidationJson {
            intersection_ok: r.intersection_ok,
            primaries_ok: r
                .primaries_ok
                .iter()
                .map(|(index, ok, reason)| PrimaryCheckJson {
                    index: *index,
                    ok: *ok,
                    reason: reason.clone(),
                })
                .collect(),
            irredundant_ok: r.irredundant_ok,
            primes_distinct_ok: r.primes_distinct_ok,
            pass: r.pass(),
        }
    }
}

/// Result of one command. Polynomials are strings, so rational
/// coefficients survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    pub name: String,
    pub input: Vec<String>,
    #[serde(default)]
    pub components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    #[serde(default)]
    pub validation: Option<ValidationJson>,
}

impl CommandReport {
    pub fn new(command: &str, name: &str, input: &Submodule) -> Self {
        CommandReport {
            command: command.into(),
            name: name.into(),
            input: generator_strings(input),
            components: Vec::new(),
            generators: None,
            primes: None,
            expected: None,
            matches: None,
            mismatches: Vec::new(),
            validation: None,
        }
    }
}

/// Generators one per string; vectors print as `[a,b,...]`.
pub fn generator_strings(m: &Submodule) -> Vec<String> {
    m.gens()
        .iter()
        .map(|g| {
            if m.rank() == 1 {
                g.comps()[0].to_string()
            } else {
                g.to_string()
            }
        })
        .collect()
}

/// Reduced-basis generators of `m`.
pub fn canonical_strings(m: &Submodule) -> Vec<String> {
    generator_strings(&canonical(m))
}

pub fn components_json(d: &DecompositionResult) -> Vec<ComponentJson> {
    d.components
        .iter()
        .map(|c| ComponentJson {
            generators: canonical_strings(&c.primary),
            prime: canonical_strings(&c.prime.ideal),
            codim: c.prime.codim,
            embedded: c.embedded,
        })
        .collect()
}

/// Differences between a computed report and an expected one. Primes,
/// codimensions and embedded flags must agree, and so must the generators
/// of every non-embedded component; embedded components are not unique, so
/// for them only a passing validation is required.
pub fn compare_reports(actual: &CommandReport, expected: &CommandReport) -> Vec<String> {
    let mut out = Vec::new();
    let tag = format!("{} {}", actual.command, actual.name);
    if actual.input != expected.input {
        out.push(format!("{tag}: input differs"));
    }
    if actual.generators != expected.generators {
        out.push(format!("{tag}: generators differ"));
    }
    if actual.primes != expected.primes {
        out.push(format!("{tag}: primes differ"));
    }
    if actual.components.len() != expected.components.len() {
        out.push(format!(
            "{tag}: {} components, expected {}",
            actual.components.len(),
            expected.components.len()
        ));
    } else {
        for (i, (a, e)) in actual.components.iter().zip(&expected.components).enumerate() {
            if a.prime != e.prime {
                out.push(format!("{tag}: component {i} has prime <{}>, expected <{}>", a.prime.join(","), e.prime.join(",")));
            }
            if a.codim != e.codim {
                out.push(format!("{tag}: component {i} has codim {}, expected {}", a.codim, e.codim));
            }
            if a.embedded != e.embedded {
                out.push(format!("{tag}: component {i} embedded flag differs"));
            }
            if !e.embedded && a.generators != e.generators {
                out.push(format!("{tag}: component {i} generators differ"));
            }
        }
    }
    if let Some(v) = &actual.validation {
        if !v.pass {
            out.push(format!("{tag}: validation failed"));
        }
    }
    out
}

/// Compares report lists entry by entry.
pub fn compare_all(actual: &[CommandReport], expected: &[CommandReport]) -> Vec<String> {
    let mut out = Vec::new();
    if actual.len() != expected.len() {
        out.push(format!("{} results, expected {}", actual.len(), expected.len()));
    }
    for (a, e) in actual.iter().zip(expected) {
        if a.command != e.command || a.name != e.name {
            out.push(format!("{} {} where {} {} was expected", a.command, a.name, e.command, e.name));
            continue;
        }
        out.extend(compare_reports(a, e));
    }
    out
}

/// Reads an expected-output document: a list of reports or a single one.
pub fn parse_expected(text: &str) -> Result<Vec<CommandReport>, serde_json::Error> {
    match serde_json::from_str::<Vec<CommandReport>>(text) {
        Ok(v) => Ok(v),
        Err(_) => serde_json::from_str::<CommandReport>(text).map(|r| vec![r]),
    }
}
