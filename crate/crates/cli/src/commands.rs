//! The `check`, `example` and `laws` commands. Each returns its exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;
use skewlab_core::lab::{is_exact, run_law_suite, run_property, Instance, SuiteReport, Verdict, PROPERTIES};
use skewlab_core::Bounds;

use crate::descriptor::{read_corpus, InputError, InstanceDescriptor};
use crate::examples::{self, ExampleOutcome};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Parses `p,q`.
pub fn parse_bounds(s: &str) -> Result<Bounds, String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Bounds::new(num(p)?, num(q)?))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display())),
        None => Ok(writeln!(stdout, "{text}")?),
    }
}

pub struct CheckArgs {
    pub property: String,
    pub file: PathBuf,
    pub bounds: Bounds,
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

pub fn check(args: &CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<u8> {
    if !PROPERTIES.contains(&args.property.as_str()) {
        writeln!(stderr, "unknown property {:?}; expected one of {}", args.property, PROPERTIES.join(", "))?;
        return Ok(EXIT_INPUT);
    }
    let inst = match InstanceDescriptor::from_file(&args.file).and_then(|d| d.build()) {
        Ok(inst) => inst,
        Err(e) => {
            writeln!(stderr, "{e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    let report = run_property(&args.property, &inst, args.bounds, args.jobs)?;
    emit(&report, args.out.as_deref(), stdout)?;
    let scope = if is_exact(&args.property) { "exact".to_string() } else { format!("bounds {}", args.bounds) };
    writeln!(stderr, "{} on {}: {:?} ({scope}, {} pairs)", report.property, report.instance, report.verdict, report.pairs_scanned)?;
    Ok(if report.verdict == Verdict::Fails { EXIT_FAILED } else { EXIT_OK })
}

pub fn example(name: &str, jobs: usize, out: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<u8> {
    let records = if name == "all" {
        examples::registry()
    } else {
        match examples::find(name) {
            Some(r) => vec![r],
            None => {
                let known: Vec<_> = examples::registry().iter().map(|r| r.name).collect();
                writeln!(stderr, "unknown example {name:?}; known: all, {}", known.join(", "))?;
                return Ok(EXIT_INPUT);
            }
        }
    };
    let mut outcomes: Vec<ExampleOutcome> = Vec::new();
    for r in &records {
        let outcome = r.run(jobs).map_err(|e| anyhow::anyhow!("registered example {}: {e}", r.name))?;
        for c in &outcome.checks {
            let status = if c.passed { "ok" } else { "MISMATCH" };
            writeln!(stderr, "  {} {}: {:?} {status}", outcome.name, c.property, c.report.verdict)?;
            if let Some(m) = &c.mismatch {
                writeln!(stderr, "    {m}")?;
            }
        }
        writeln!(stdout, "{} {}", if outcome.passed { "PASS" } else { "FAIL" }, outcome.name)?;
        outcomes.push(outcome);
    }
    if let Some(path) = out {
        emit(&outcomes, Some(path), stdout)?;
    }
    Ok(if outcomes.iter().all(|o| o.passed) { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Serialize)]
pub struct LawsOutput {
    pub errors: Vec<String>,
    #[serde(flatten)]
    pub suite: SuiteReport,
}

pub fn laws(
    corpus: &Path,
    bounds: Bounds,
    jobs: usize,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<u8> {
    let entries = match read_corpus(corpus) {
        Ok(entries) => entries,
        Err(e) => {
            writeln!(stderr, "{e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    let mut instances: Vec<Instance> = Vec::new();
    let mut errors: Vec<InputError> = Vec::new();
    for (i, entry) in entries.into_iter().enumerate() {
        match entry.and_then(|d| {
            let name = d.name.clone();
            d.build().map_err(|e| InputError::new(format!("instances[{i}] ({name}).{}", e.path), e.message))
        }) {
            Ok(inst) => instances.push(inst),
            Err(e) => errors.push(e),
        }
    }
    for e in &errors {
        writeln!(stderr, "skipped: {e}")?;
    }
    let suite = run_law_suite(&instances, bounds, jobs);
    for r in suite.results.iter().filter(|r| r.is_violation()) {
        writeln!(stderr, "violated: {} on {}", r.law, r.instance)?;
    }
    let applicable = suite.results.iter().filter(|r| r.is_applicable()).count();
    writeln!(
        stderr,
        "{} instances, {} law checks ({applicable} applicable), {} violations, {} input errors",
        suite.instances.len(),
        suite.results.len(),
        suite.violations,
        errors.len()
    )?;
    let code = if suite.violations > 0 {
        EXIT_FAILED
    } else if !errors.is_empty() {
        EXIT_INPUT
    } else {
        EXIT_OK
    };
    let output = LawsOutput { errors: errors.iter().map(ToString::to_string).collect(), suite };
    emit(&output, out, stdout)?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        assert_eq!(parse_bounds("1,2"), Ok(Bounds::new(1, 2)));
        assert_eq!(parse_bounds(" 3 , 0"), Ok(Bounds::new(3, 0)));
        assert!(parse_bounds("3").is_err());
        assert!(parse_bounds("a,1").is_err());
    }
}
