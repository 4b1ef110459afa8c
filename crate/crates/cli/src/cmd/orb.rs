use serde_json::json;

use crate::args::OrbCmd;
use crate::error::CliError;
use crate::input::{family, one_of, parse_json, read_file};
use crate::output::Outcome;
use mcg_core::orbifold::{
    admissible_orders, check_prong_formula, check_riemann_hurwitz, cyclic_orbit_factorizations, euler_char, is_pivot,
    lift_exponent, max_fixed_points_sphere, parse_cycles, first_family_cover, first_family_pivot_data, second_family_cover,
    second_family_pivot_data, PivotPoint, SingularityDatum,
};
use mcg_core::{CoverDatum, FreeEndo, PermRep, SearchBudget};

fn numbers<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad {what} `{s}`"))))
        .collect()
}

fn cover(cover: &Option<String>, file: &Option<std::path::PathBuf>, fam: &Option<String>) -> Result<CoverDatum, CliError> {
    let (src, text) = one_of([("cover", cover.clone()), ("file", file.as_ref().map(|p| p.display().to_string())), ("family", fam.clone())])?;
    let c = match src {
        "cover" => parse_json::<CoverDatum>(&text)?,
        "file" => parse_json::<CoverDatum>(&read_file(std::path::Path::new(&text))?)?,
        _ => match family(&text)? {
            ("first", rho) => first_family_cover(rho)?,
            ("second", rho) => second_family_cover(rho)?,
            (other, _) => return Err(CliError::Usage(format!("unknown family `{other}`"))),
        },
    };
    c.validate()?;
    Ok(c)
}

fn pivot_points(points: &Option<String>, candidate: usize, fam: &Option<String>) -> Result<(Vec<PivotPoint>, usize), CliError> {
    match (points, fam) {
        (Some(p), None) => {
            let pts = p
                .split(',')
                .map(|item| {
                    let (i, r) = item
                        .split_once(':')
                        .ok_or_else(|| CliError::Usage(format!("point `{item}` must be ind:r")))?;
                    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad point `{item}`")));
                    Ok(PivotPoint { ind: parse(i)?, r: parse(r)? })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok((pts, candidate))
        }
        (None, Some(f)) => match family(f)? {
            ("first", rho) => Ok(first_family_pivot_data(rho)),
            ("second", rho) => Ok(second_family_pivot_data(rho)),
            (other, _) => Err(CliError::Usage(format!("unknown family `{other}`"))),
        },
        _ => Err(CliError::Usage("give exactly one of --points, --family".into())),
    }
}

pub fn run(c: &OrbCmd, budget: &SearchBudget) -> Result<Outcome, CliError> {
    Ok(match c {
        OrbCmd::Euler { genus, boundary } => {
            let chi = euler_char(*genus, *boundary);
            Outcome::success(json!({ "chi": chi }), chi.to_string())
        }
        OrbCmd::Prongs { chi, prongs } => {
            let ps: Vec<u32> = numbers(prongs, "prong count")?;
            let data: Vec<SingularityDatum> =
                ps.iter().enumerate().map(|(i, &p)| SingularityDatum::new(format!("P{i}"), p)).collect();
            let total: i64 = ps.iter().map(|&p| 2 - i64::from(p)).sum();
            let ok = check_prong_formula(*chi, &data);
            Outcome::verdict(ok, json!({ "holds": ok, "two_chi": 2 * chi, "sum": total }), format!("2chi = {} vs sum(2 - prongs) = {total}: {ok}", 2 * chi))
        }
        OrbCmd::Rh { cover: inline, file, family: fam } => {
            let c = cover(inline, file, fam)?;
            let ok = check_riemann_hurwitz(&c);
            Outcome::verdict(ok, json!({ "holds": ok, "cover": c }), ok.to_string())
        }
        OrbCmd::Pivot { points, candidate, family: fam } => {
            let (pts, cand) = pivot_points(points, *candidate, fam)?;
            let ok = is_pivot(&pts, cand)?;
            Outcome::verdict(ok, json!({ "pivot": ok, "points": pts, "candidate": cand }), ok.to_string())
        }
        OrbCmd::Orders { genus, q } => {
            let set: Vec<u64> = admissible_orders(*genus, *q).into_iter().collect();
            let text = set.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            Outcome::success(json!({ "genus": genus, "q": q, "orders": set }), text)
        }
        OrbCmd::Maxfix { m } => {
            let q = max_fixed_points_sphere(*m)?;
            Outcome::success(json!({ "m": m, "max_fixed_points": q }), q.to_string())
        }
        OrbCmd::Liftk { rep, degree, perm, phi, cap } => {
            let rep = match (rep, degree) {
                (Some(r), _) => parse_json::<PermRep>(r)?,
                (None, Some(d)) => PermRep { degree: *d, perms: perm.iter().map(|p| parse_cycles(p, *d)).collect::<Result<_, _>>()? },
                (None, None) => return Err(CliError::Usage("give --rep or --degree with --perm".into())),
            };
            rep.validate()?;
            let images: Vec<Vec<i32>> = parse_json(phi)?;
            let phi = FreeEndo::new(images.len(), images)?;
            let cap = cap.unwrap_or(budget.lift);
            match lift_exponent(&rep, &phi, cap)? {
                Some(k) => Outcome::success(json!({ "k": k, "cap": cap }), k.to_string()),
                None => Outcome::verdict(false, json!({ "k": null, "cap": cap }), format!("not found up to {cap}")),
            }
        }
        OrbCmd::Primesplit { n } => {
            let f = cyclic_orbit_factorizations(*n);
            let text = if f.is_empty() {
                "none".to_string()
            } else {
                f.iter().map(|(k, s)| format!("{k}x{s}")).collect::<Vec<_>>().join(" ")
            };
            Outcome::success(json!({ "n": n, "factorizations": f }), text)
        }
    })
}
