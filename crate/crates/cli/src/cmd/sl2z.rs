use serde_json::json;

use crate::args::Sl2zCmd;
use crate::error::CliError;
use crate::input::matrix;
use crate::output::Outcome;
use mcg_core::sl2z::{brute_force_roots, element_order, mth_roots, torsion_class, trace_classify, RootSet};
use mcg_core::{SearchBudget, Sl2Matrix};

fn list(ms: &[Sl2Matrix]) -> String {
    if ms.is_empty() {
        "no roots".into()
    } else {
        ms.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    }
}

pub fn run(c: &Sl2zCmd, budget: &SearchBudget) -> Result<Outcome, CliError> {
    Ok(match c {
        Sl2zCmd::Order(a) => {
            let o = element_order(&matrix(&a.matrix)?);
            Outcome::success(json!({ "order": o }), o.to_string())
        }
        Sl2zCmd::Classify(a) => {
            let t = trace_classify(&matrix(&a.matrix)?);
            Outcome::success(json!({ "class": t }), t.to_string())
        }
        Sl2zCmd::Roots { matrix: a, m } => {
            let roots = mth_roots(&matrix(&a.matrix)?, *m)?;
            let text = match &roots {
                RootSet::Finite { roots } => list(roots),
                RootSet::TorsionFamily { representatives } => format!(
                    "infinitely many roots, conjugate to one of: {}",
                    representatives.iter().map(|l| l.name()).collect::<Vec<_>>().join(", ")
                ),
            };
            Outcome::success(serde_json::to_value(&roots)?, text)
        }
        Sl2zCmd::TorsionClass(a) => {
            let l = torsion_class(&matrix(&a.matrix)?)?;
            Outcome::success(json!({ "class": l, "order": l.order() }), l.name())
        }
        Sl2zCmd::OracleRoots { matrix: a, m, bound } => {
            let bound = bound.unwrap_or(budget.brute);
            let roots = brute_force_roots(&matrix(&a.matrix)?, *m, bound);
            Outcome::success(json!({ "bound": bound, "roots": roots }), list(&roots))
        }
    })
}
