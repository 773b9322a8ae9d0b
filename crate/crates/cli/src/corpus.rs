//! Runs every fixture in a directory against its checks and snapshot.

use std::fs;
use std::path::{Path, PathBuf};

use crate::commands::{analyze, Overrides, Settings};
use crate::error::{CliError, Result};
use crate::fixture::evaluate;
use crate::input::InputSpec;
use crate::report::{to_json, CorpusReport, FixtureOutcome};

/// Fixtures shipped with the crate.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// `<dir>/snapshots/<stem>.json`, the expected `analyze` output.
pub fn snapshot_path(fixture: &Path) -> PathBuf {
    let stem = fixture.file_stem().unwrap_or_default();
    fixture.parent().unwrap_or(Path::new(".")).join("snapshots").join(stem).with_extension("json")
}

pub fn fixture_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for e in entries {
        let path = e.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(CliError::Usage(format!("no fixtures (*.json) in {}", dir.display())));
    }
    Ok(files)
}

fn run_fixture(path: &Path) -> Result<(usize, Vec<String>)> {
    let spec = InputSpec::read(path)?;
    let p = spec.presentation()?;
    let mut newton = None;
    let mut failures = Vec::new();
    for (k, check) in spec.checks.iter().enumerate() {
        match evaluate(&p, check, &mut newton) {
            Ok(f) => failures.extend(f.into_iter().map(|m| format!("check {}: {m}", k + 1))),
            Err(e) => failures.push(format!("check {}: {e}", k + 1)),
        }
    }
    let mut checks = spec.checks.len();
    let snap = snapshot_path(path);
    if snap.exists() {
        checks += 1;
        let want = fs::read_to_string(&snap).map_err(|e| CliError::io(&snap, e))?;
        let got = to_json(&analyze(&spec, &Settings::resolve(&spec, &Overrides::default())?)?)?;
        if got != want {
            failures.push(format!("analyze output differs from {}", snap.display()));
        }
    }
    Ok((checks, failures))
}

/// Runs all fixtures; an unreadable or malformed fixture is a named failure.
pub fn run_corpus(dir: &Path) -> Result<CorpusReport> {
    let mut fixtures = Vec::new();
    for path in fixture_files(dir)? {
        let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let (checks, failures) = run_fixture(&path).unwrap_or_else(|e| (0, vec![e.to_string()]));
        fixtures.push(FixtureOutcome { fixture: name, passed: failures.is_empty(), checks, failures });
    }
    let passed = fixtures.iter().filter(|f| f.passed).count();
    let failed = fixtures.len() - passed;
    Ok(CorpusReport { fixtures, passed, failed })
}
