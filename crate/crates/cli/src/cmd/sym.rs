use serde_json::json;

use crate::args::SymCmd;
use crate::error::CliError;
use crate::input::family;
use crate::output::Outcome;
use mcg_core::symmetry::{verify_thm_5_2_1, verify_thm_5_2_2, FixedCount, FixedPointRule, TheoremReport};
use mcg_core::{SymElement, SymGroup};

fn names(xs: &[SymElement]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn report(r: TheoremReport) -> Result<Outcome, CliError> {
    let lines: Vec<String> = r
        .checks
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    Ok(Outcome::verdict(r.passed(), serde_json::to_value(&r)?, lines.join("\n")))
}

fn rule(text: &str) -> Result<FixedPointRule, CliError> {
    let (name, rho) = family(text)?;
    let rho = u32::try_from(rho).map_err(|_| CliError::Usage(format!("rho too large in `{text}`")))?;
    match name {
        "first" => Ok(FixedPointRule::first_family(rho)?),
        "second" => Ok(FixedPointRule::second_family(rho)?),
        other => Err(CliError::Usage(format!("unknown rule `{other}`; use first:<rho> or second:<rho>"))),
    }
}

pub fn run(c: &SymCmd) -> Result<Outcome, CliError> {
    Ok(match c {
        SymCmd::Elements { group, order } => {
            let g = SymGroup::parse(&group.group)?;
            let els = match order {
                Some(d) => g.elements_of_order(*d),
                None => g.elements(),
            };
            let n = names(&els);
            Outcome::success(json!({ "group": g.to_string(), "elements": n }), n.join(" "))
        }
        SymCmd::Order { group, element } => {
            let g = SymGroup::parse(&group.group)?;
            let x = g.parse_element(element)?;
            let o = g.elem_order(&x)?;
            Outcome::success(json!({ "element": x.to_string(), "order": o }), o.to_string())
        }
        SymCmd::Commute { group, element, other } => {
            let g = SymGroup::parse(&group.group)?;
            let x = g.parse_element(element)?;
            match other {
                Some(y) => {
                    let y = g.parse_element(y)?;
                    let ok = g.commutes(&x, &y)?;
                    Outcome::success(json!({ "commute": ok }), ok.to_string())
                }
                None => {
                    let n = names(&g.centralizer(&x)?);
                    Outcome::success(json!({ "element": x.to_string(), "centralizer": n }), n.join(" "))
                }
            }
        }
        SymCmd::Conj { group, element, other } => {
            let g = SymGroup::parse(&group.group)?;
            let (x, y) = (g.parse_element(element)?, g.parse_element(other)?);
            let ok = g.conjugate_exists(&x, &y)?;
            Outcome::success(json!({ "conjugate": ok }), ok.to_string())
        }
        SymCmd::Fixed { rule: r, element } => {
            let rule = rule(r)?;
            let x = rule.group().parse_element(element)?;
            let f = rule.fixed_points(&x)?;
            let text = match f {
                FixedCount::Finite(k) => k.to_string(),
                FixedCount::Infinite => "infinite".into(),
            };
            Outcome::success(json!({ "element": x.to_string(), "fixed_points": f }), text)
        }
        SymCmd::Verify521 { rho } => report(verify_thm_5_2_1(*rho)?)?,
        SymCmd::Verify522 { rho } => report(verify_thm_5_2_2(*rho)?)?,
    })
}
