use serde_json::json;

use crate::args::{GlueCmd, PatternArg};
use crate::error::CliError;
use crate::input::{parse_json, read_file};
use crate::output::Outcome;
use mcg_core::gluing::{analyze, conjugacy_obstruction, induced_h1, pattern_from_id};
use mcg_core::poly::char_poly;
use mcg_core::GluingPattern;

fn pattern(a: &PatternArg) -> Result<(String, GluingPattern), CliError> {
    match (&a.pattern, &a.file) {
        (Some(id), None) => Ok((id.clone(), pattern_from_id(id)?)),
        (None, Some(path)) => {
            let p: GluingPattern = parse_json(&read_file(path)?)?;
            p.validate()?;
            Ok((path.display().to_string(), p))
        }
        _ => Err(CliError::Usage("give exactly one of --pattern, --file".into())),
    }
}

pub fn run(c: &GlueCmd) -> Result<Outcome, CliError> {
    Ok(match c {
        GlueCmd::Analyze(a) => {
            let (id, p) = pattern(a)?;
            let r = analyze(&p)?;
            let text = format!(
                "{id}: genus {}, {} boundary, H1 rank {} ({} vertex classes, {} edges)",
                r.genus, r.boundary_count, r.h1_rank, r.vertex_classes, r.edges
            );
            Outcome::success(json!({ "pattern": id, "report": r }), text)
        }
        GlueCmd::Induced(a) => {
            let (id, p) = pattern(a)?;
            let m = induced_h1(&p)?;
            Outcome::success(json!({ "pattern": id, "matrix": m }), m.to_string())
        }
        GlueCmd::Charpoly(a) => {
            let (id, p) = pattern(a)?;
            let cp = char_poly(&induced_h1(&p)?)?;
            let f = cp.factored_string();
            Outcome::success(json!({ "pattern": id, "charpoly": f, "expanded": cp.to_string() }), f)
        }
        GlueCmd::Compare { first, second } => {
            let p1 = char_poly(&induced_h1(&pattern_from_id(first)?)?)?;
            let p2 = char_poly(&induced_h1(&pattern_from_id(second)?)?)?;
            let obstruction = conjugacy_obstruction(&p1, &p2);
            let text = if obstruction {
                format!("not conjugate: {} vs {}", p1.factored_string(), p2.factored_string())
            } else {
                format!("no obstruction: both {}", p1.factored_string())
            };
            Outcome::verdict(
                !obstruction,
                json!({ "first": p1.factored_string(), "second": p2.factored_string(), "obstruction": obstruction }),
                text,
            )
        }
    })
}
