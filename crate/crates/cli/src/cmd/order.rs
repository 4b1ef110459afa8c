use serde_json::json;
use std::cmp::Ordering;

use crate::args::OrderCmd;
use crate::error::CliError;
use crate::input::parse_json;
use crate::output::Outcome;
use mcg_core::ordered::unique_root_check;
use mcg_core::{LexExtension, OrderedGroup, ZqLex};

fn name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn check<G: OrderedGroup>(g: &G, f: G::Elem, h: G::Elem, m: u32) -> Outcome
where
    G::Elem: serde::Serialize,
{
    let cmp = g.compare(&f, &h);
    let ok = unique_root_check(g, &f, &h, m);
    let powers_equal = g.pow(&f, m) == g.pow(&h, m);
    Outcome::verdict(
        ok,
        json!({ "compare": name(cmp), "powers_equal": powers_equal, "unique_root": ok }),
        format!("f {} g; f^{m} {} g^{m}; root uniqueness {}", name(cmp), if powers_equal { "=" } else { "!=" }, if ok { "holds" } else { "fails" }),
    )
}

pub fn run(c: &OrderCmd) -> Result<Outcome, CliError> {
    Ok(match c {
        OrderCmd::Demo => {
            let z2 = ZqLex::new(2);
            let ext = LexExtension::direct(ZqLex::new(1), 1);
            let h = LexExtension::heisenberg();
            let x = (vec![1, 0], vec![0]);
            let y = (vec![0, 1], vec![0]);
            let rows = vec![
                ("Z^2: (1,5) vs (2,0)", name(z2.compare(&vec![1, 5], &vec![2, 0]))),
                ("Z x Z: ((0),(3)) vs ((0),(-1))", name(ext.compare(&(vec![0], vec![3]), &(vec![0], vec![-1])))),
                ("Heisenberg: xy vs yx", name(h.compare(&h.mul(&x, &y), &h.mul(&y, &x)))),
            ];
            let text = rows.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n");
            let obj: serde_json::Map<String, serde_json::Value> = rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            Outcome::success(serde_json::Value::Object(obj), text)
        }
        OrderCmd::Check { group, f, g, m } => {
            if group == "heisenberg" {
                let f: (Vec<i64>, Vec<i64>) = parse_json(f)?;
                let h: (Vec<i64>, Vec<i64>) = parse_json(g)?;
                for e in [&f, &h] {
                    if e.0.len() != 2 || e.1.len() != 1 {
                        return Err(CliError::Usage("Heisenberg elements look like [[a,b],[c]]".into()));
                    }
                }
                check(&LexExtension::heisenberg(), f, h, *m)
            } else if let Some(q) = group.strip_prefix("zq:") {
                let q: usize = q.parse().map_err(|_| CliError::Usage(format!("bad rank in `{group}`")))?;
                let f: Vec<i64> = parse_json(f)?;
                let h: Vec<i64> = parse_json(g)?;
                if f.len() != q || h.len() != q {
                    return Err(CliError::Usage(format!("elements of Z^{q} need {q} coordinates")));
                }
                check(&ZqLex::new(q), f, h, *m)
            } else {
                return Err(CliError::Usage(format!("unknown group `{group}`; use zq:<q> or heisenberg")));
            }
        }
    })
}
