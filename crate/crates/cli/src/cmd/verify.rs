use serde_json::json;

use crate::args::VerifyCmd;
use crate::error::CliError;
use crate::output::Outcome;
use mcg_core::claims::{recipes, run_all, run_named, RecipeResult};
use mcg_core::SearchBudget;

fn line(r: &RecipeResult, timing: bool) -> String {
    let mut s = format!("{} {:>2} {:<20} {} checks", if r.passed { "PASS" } else { "FAIL" }, r.criterion, r.name, r.checks);
    if let (true, Some(ms)) = (timing, r.elapsed_ms) {
        s.push_str(&format!(" {ms}ms"));
    }
    for f in &r.failures {
        s.push_str(&format!("\n    {f}"));
    }
    s
}

fn strip(mut r: RecipeResult, timing: bool) -> RecipeResult {
    if !timing {
        r.elapsed_ms = None;
    }
    r
}

pub fn run(c: &VerifyCmd, budget: &SearchBudget) -> Result<Outcome, CliError> {
    Ok(match c {
        VerifyCmd::All { timing } => {
            let results: Vec<RecipeResult> = run_all(budget).into_iter().map(|r| strip(r, *timing)).collect();
            let passed = results.iter().all(|r| r.passed);
            let count = results.iter().filter(|r| r.passed).count();
            let mut text: Vec<String> = results.iter().map(|r| line(r, *timing)).collect();
            text.push(format!("{count} of {} recipes pass", results.len()));
            Outcome::verdict(passed, json!({ "passed": passed, "recipes": results }), text.join("\n"))
        }
        VerifyCmd::Recipe { name, timing } => {
            let r = run_named(name, budget).ok_or_else(|| CliError::Usage(format!("unknown recipe `{name}`")))?;
            let r = strip(r, *timing);
            let text = line(&r, *timing);
            Outcome::verdict(r.passed, serde_json::to_value(&r)?, text)
        }
        VerifyCmd::List => {
            let rs = recipes();
            let text = rs.iter().map(|r| format!("{:<20} {}", r.name, r.summary)).collect::<Vec<_>>();
            let names: Vec<_> = rs.iter().map(|r| json!({ "criterion": r.criterion, "name": r.name, "summary": r.summary })).collect();
            Outcome::success(json!(names), text.join("\n"))
        }
    })
}
