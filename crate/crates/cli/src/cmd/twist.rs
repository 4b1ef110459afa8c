use serde_json::json;

use crate::args::TwistCmd;
use crate::error::CliError;
use crate::output::Outcome;
use mcg_core::twist::{certify_model, evaluate, h1_matrix, model, relation, relations, verify_relation};
use mcg_core::TwistWord;

pub fn run(c: &TwistCmd) -> Result<Outcome, CliError> {
    Ok(match c {
        TwistCmd::Verify { relation: id } => {
            let r = relation(id)?;
            let ok = verify_relation(&model(r.model)?, &r.lhs, &r.rhs)?;
            let verdict = if ok { "verified" } else { "fails" };
            Outcome::verdict(
                ok,
                json!({ "relation": r.id, "model": r.model, "statement": r.statement, "verified": ok }),
                format!("{verdict}: {} on {}", r.statement, r.model),
            )
        }
        TwistCmd::Relations => {
            let rs = relations();
            let text = rs.iter().map(|r| format!("{:<16} {:<20} {}", r.id, r.model, r.statement)).collect::<Vec<_>>();
            Outcome::success(serde_json::to_value(&rs)?, text.join("\n"))
        }
        TwistCmd::Compose(a) => {
            let m = model(&a.model)?;
            let w = TwistWord::parse(&a.word)?;
            let e = evaluate(&m, &w)?;
            let text = e
                .images()
                .iter()
                .enumerate()
                .map(|(i, img)| format!("x{} -> {:?}", i + 1, img.letters()))
                .collect::<Vec<_>>();
            Outcome::success(json!({ "model": m.name, "word": w, "images": e.images() }), text.join("\n"))
        }
        TwistCmd::H1(a) => {
            let m = model(&a.model)?;
            let w = TwistWord::parse(&a.word)?;
            let h = h1_matrix(&m, &w)?;
            Outcome::success(json!({ "model": m.name, "word": w, "matrix": h }), h.to_string())
        }
        TwistCmd::Certify { model: name } => {
            let report = certify_model(&model(name)?);
            let lines: Vec<String> = report
                .clauses
                .iter()
                .map(|c| {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    format!("{status} {} ({} checks)", c.clause.label(), c.checks)
                })
                .collect();
            Outcome::verdict(report.passed(), serde_json::to_value(&report)?, lines.join("\n"))
        }
    })
}
