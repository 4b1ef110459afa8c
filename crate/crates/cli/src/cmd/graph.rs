use serde_json::json;

use crate::args::{GraphArg, GraphCmd};
use crate::error::CliError;
use crate::input::{one_of, read_file};
use crate::output::Outcome;
use mcg_core::reduction_graph::example_graph;
use mcg_core::{CaseLabel, DecompositionGraph, SearchBudget};

fn load(a: &GraphArg) -> Result<DecompositionGraph, CliError> {
    let (src, text) = one_of([
        ("file", a.file.as_ref().map(|p| p.display().to_string())),
        ("graph", a.graph.clone()),
        ("example", a.example.clone()),
    ])?;
    Ok(match src {
        "file" => DecompositionGraph::from_json(&read_file(std::path::Path::new(&text))?)?,
        "graph" => DecompositionGraph::from_json(&text)?,
        _ => {
            let case = match text.as_str() {
                "case1" => CaseLabel::Case1,
                "case2" => CaseLabel::Case2,
                "case3" => CaseLabel::Case3,
                "case4" => CaseLabel::Case4,
                other => return Err(CliError::Usage(format!("unknown example `{other}`; use case1..case4"))),
            };
            example_graph(case, 3)
        }
    })
}

pub fn run(c: &GraphCmd, budget: &SearchBudget) -> Result<Outcome, CliError> {
    Ok(match c {
        GraphCmd::Validate(a) => {
            let r = load(a)?.validate();
            let text = if r.valid { "valid".to_string() } else { format!("invalid: {}", r.diagnostics.join("; ")) };
            Outcome::verdict(r.valid, serde_json::to_value(&r)?, text)
        }
        GraphCmd::Rank(a) => {
            let k = load(a)?.cycle_rank()?;
            Outcome::success(json!({ "cycle_rank": k }), k.to_string())
        }
        GraphCmd::Classify(a) => {
            let case = load(a)?.classify_case()?;
            Outcome::success(json!({ "case": case }), case.to_string())
        }
        GraphCmd::Autos(a) => {
            let autos = load(a)?.leaf_fixing_automorphisms_within(budget.graph)?;
            let lines: Vec<String> = autos
                .iter()
                .map(|x| {
                    let moved: Vec<String> =
                        x.edge_map.iter().filter(|(a, b)| a != b).map(|(a, b)| format!("{a}->{b}")).collect();
                    let flips: Vec<String> = x.reversed_loops.iter().map(|e| format!("{e} reversed")).collect();
                    let parts: Vec<String> = moved.into_iter().chain(flips).collect();
                    if parts.is_empty() { "identity".to_string() } else { parts.join(", ") }
                })
                .collect();
            Outcome::success(json!({ "count": autos.len(), "automorphisms": autos }), lines.join("\n"))
        }
    })
}
