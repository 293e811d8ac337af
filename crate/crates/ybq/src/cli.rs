//! The `ybq` command line: thin argument handling over the library.
//!
//! Exit codes: 0 on success, 2 on validation failure, 3 on missing catalog
//! data, 1 on usage errors.

use crate::biquandle::FiniteBiquandle;
use crate::catalog::{self, CatalogError};
use crate::cocycle::{ConcreteCocycle, FiniteGroup};
use crate::coloring::enumerate_colorings;
use crate::diagram::LinkDiagram;
use crate::invariant::{invariant, invariant_hom, Mode};
use crate::presentation::{
    gamma_candidates, reduced_universal_group, suggest_s0, universal_group, Presentation,
};

const USAGE: &str = "\
ybq — finite biquandles, universal cocycle groups, link invariants

  ybq verify <biquandle>
  ybq catalog <name> [--emit <file>]
  ybq enum <n>
  ybq unc <biquandle> [--json]
  ybq unc-reduced <biquandle> [--s0 <pairs> | --auto-s0] [--json]
  ybq gamma-candidates <biquandle> [--json]
  ybq simplify <biquandle> [--reduced] [--s0 <pairs> | --auto-s0] [--json]
  ybq abelianize <biquandle> [--reduced] [--s0 <pairs> | --auto-s0] [--json]
  ybq diagram validate <diagram>
  ybq diagram lk <diagram> <i> <j>
  ybq diagram mirror <diagram> [--emit <file>]
  ybq diagram r1 <diagram> <arc> <+|-> [--over-first] [--emit <file>]
  ybq colorings <diagram> <biquandle> [--json]
  ybq invariant <diagram> <biquandle> [--reduced] [--s0 <pairs> | --auto-s0]
                [--mode cyclic|abelian|hom] [--cocycle <file>] [--json]
  ybq table <unc|unc-reduced|knots> [--json]

<biquandle> and <diagram> are catalog names or JSON file paths; pairs are
1-based, e.g. --s0 '[1,2],[1,3]'. YBQ_CATALOG points at a directory with
extra payloads.";

pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            classify_exit(&e)
        }
    }
}

fn classify_exit(e: &Box<dyn std::error::Error>) -> i32 {
    if let Some(c) = e.downcast_ref::<CatalogError>() {
        return match c {
            CatalogError::UnknownName(_) | CatalogError::ExternalDataRequired(_) => 3,
            _ => 2,
        };
    }
    2
}

type CliResult = Result<i32, Box<dyn std::error::Error>>;

fn dispatch(args: &[String]) -> CliResult {
    let Some(cmd) = args.first() else {
        println!("{USAGE}");
        return Ok(1);
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        "verify" => cmd_verify(rest),
        "catalog" => cmd_catalog(rest),
        "enum" => cmd_enum(rest),
        "unc" => cmd_unc(rest, false),
        "unc-reduced" => cmd_unc(rest, true),
        "gamma-candidates" => cmd_gamma(rest),
        "simplify" => cmd_simplify(rest),
        "abelianize" => cmd_abelianize(rest),
        "diagram" => cmd_diagram(rest),
        "colorings" => cmd_colorings(rest),
        "invariant" => cmd_invariant(rest),
        "table" => cmd_table(rest),
        other => {
            eprintln!("unknown subcommand {other}\n{USAGE}");
            Ok(1)
        }
    }
}

fn has_flag(args: &[String], flag: &str) -> bool {
    args.iter().any(|a| a == flag)
}

fn flag_value<'a>(args: &'a [String], flag: &str) -> Option<&'a str> {
    args.iter().position(|a| a == flag).and_then(|i| args.get(i + 1)).map(|s| s.as_str())
}

fn positional(args: &[String]) -> Vec<&str> {
    let mut out = Vec::new();
    let mut skip = false;
    for (i, a) in args.iter().enumerate() {
        if skip {
            skip = false;
            continue;
        }
        if a.starts_with("--") {
            // flags with values
            if matches!(a.as_str(), "--s0" | "--mode" | "--cocycle" | "--emit") {
                skip = true;
            }
            continue;
        }
        let _ = i;
        out.push(a.as_str());
    }
    out
}

fn load_biquandle(src: &str) -> Result<FiniteBiquandle, Box<dyn std::error::Error>> {
    if src.ends_with(".json") || std::path::Path::new(src).exists() {
        let text = std::fs::read_to_string(src)?;
        return FiniteBiquandle::from_json(&text);
    }
    Ok(catalog::biquandle(src)?)
}

fn load_diagram(src: &str) -> Result<LinkDiagram, Box<dyn std::error::Error>> {
    if src.ends_with(".json") || std::path::Path::new(src).exists() {
        let text = std::fs::read_to_string(src)?;
        return LinkDiagram::from_json(&text);
    }
    Ok(catalog::diagram(src)?)
}

fn parse_s0(text: &str) -> Result<Vec<(usize, usize)>, Box<dyn std::error::Error>> {
    // "[1,2],[1,3]" with 1-based entries
    let mut out = Vec::new();
    let cleaned = text.replace(' ', "");
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let rest2 = rest.strip_prefix('[').ok_or("expected '['")?;
        let (body, tail) = rest2.split_once(']').ok_or("expected ']'")?;
        let (a, b) = body.split_once(',').ok_or("expected two entries")?;
        let (a, b): (usize, usize) = (a.parse()?, b.parse()?);
        if a == 0 || b == 0 {
            return Err("entries are 1-based".into());
        }
        out.push((a - 1, b - 1));
        rest = tail.strip_prefix(',').unwrap_or(tail);
    }
    Ok(out)
}

/// The presentation selected by the common flags.
fn presentation_for(
    b: &FiniteBiquandle,
    args: &[String],
) -> Result<(Presentation, Option<Vec<(usize, usize)>>), Box<dyn std::error::Error>> {
    let reduced = has_flag(args, "--reduced") || has_flag(args, "--auto-s0") || flag_value(args, "--s0").is_some();
    if !reduced {
        return Ok((universal_group(b), None));
    }
    let s0 = match flag_value(args, "--s0") {
        Some(text) => parse_s0(text)?,
        None => suggest_s0(b),
    };
    Ok((reduced_universal_group(b, &s0), Some(s0)))
}

fn cmd_verify(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [src] = pos.as_slice() else {
        return Err("usage: ybq verify <biquandle>".into());
    };
    // verify accepts tables that are not biquandles, so parse leniently
    let text = if src.ends_with(".json") || std::path::Path::new(src).exists() {
        std::fs::read_to_string(src)?
    } else {
        catalog::biquandle(src)?.to_json()
    };
    let file: crate::biquandle::BiquandleFile = serde_json::from_str(&text)?;
    let conv = |t: &Vec<Vec<i64>>| -> Vec<Vec<usize>> {
        t.iter()
            .map(|r| r.iter().map(|&v| if v >= 1 { (v - 1) as usize } else { usize::MAX }).collect())
            .collect()
    };
    let tables = crate::biquandle::SigmaTables {
        n: file.n,
        sigma1: conv(&file.sigma1),
        sigma2: conv(&file.sigma2),
    };
    let report = crate::biquandle::verify(&tables);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.passed() { 0 } else { 2 })
}

fn cmd_catalog(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [name] = pos.as_slice() else {
        return Err("usage: ybq catalog <name> [--emit <file>]".into());
    };
    let b = catalog::biquandle(name)?;
    let json = b.to_json();
    match flag_value(args, "--emit") {
        Some(path) => {
            std::fs::write(path, &json)?;
            println!("wrote {path}");
        }
        None => println!("{json}"),
    }
    Ok(0)
}

fn cmd_enum(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [n] = pos.as_slice() else {
        return Err("usage: ybq enum <n>".into());
    };
    let n: usize = n.parse()?;
    let found = FiniteBiquandle::enumerate(n)?;
    println!("biquandles of order {n} up to isomorphism: {}", found.len());
    for (i, b) in found.iter().enumerate() {
        let p = universal_group(b);
        println!(
            "#{i}: sigma order {}, diagonal fixed points {}, generators {}",
            b.sigma_order(),
            b.diagonal_fixed_points(),
            p.generators.len()
        );
    }
    Ok(0)
}

fn cmd_unc(args: &[String], reduced: bool) -> CliResult {
    let pos = positional(args);
    let [src] = pos.as_slice() else {
        return Err("usage: ybq unc[-reduced] <biquandle> [flags]".into());
    };
    let b = load_biquandle(src)?;
    let (p, s0) = if reduced {
        let s0 = match flag_value(args, "--s0") {
            Some(text) => parse_s0(text)?,
            None => suggest_s0(&b),
        };
        (reduced_universal_group(&b, &s0), Some(s0))
    } else {
        (universal_group(&b), None)
    };
    if has_flag(args, "--json") {
        let mut v = p.to_json();
        if let Some(s0) = s0 {
            v["s0"] = serde_json::json!(s0.iter().map(|&(x, y)| vec![x + 1, y + 1]).collect::<Vec<_>>());
        }
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        if let Some(s0) = s0 {
            let parts: Vec<String> =
                s0.iter().map(|&(x, y)| format!("[{},{}]", x + 1, y + 1)).collect();
            println!("seed: {{{}}}", parts.join(", "));
        }
        print!("{}", p.display_text());
    }
    Ok(0)
}

fn cmd_gamma(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [src] = pos.as_slice() else {
        return Err("usage: ybq gamma-candidates <biquandle>".into());
    };
    let b = load_biquandle(src)?;
    let cands = gamma_candidates(&b);
    if has_flag(args, "--json") {
        let v: Vec<serde_json::Value> = cands
            .iter()
            .map(|c| {
                serde_json::json!([
                    c.class_of_first + 1,
                    [c.pair.0 + 1, c.pair.1 + 1],
                    c.class_of_output + 1
                ])
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        for c in &cands {
            println!(
                "[ {}, [{},{}], {} ]",
                c.class_of_first + 1,
                c.pair.0 + 1,
                c.pair.1 + 1,
                c.class_of_output + 1
            );
        }
        let s0 = suggest_s0(&b);
        let parts: Vec<String> = s0.iter().map(|&(x, y)| format!("[{},{}]", x + 1, y + 1)).collect();
        println!("suggested seed: {{{}}}", parts.join(", "));
    }
    Ok(0)
}

fn cmd_simplify(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [src] = pos.as_slice() else {
        return Err("usage: ybq simplify <biquandle> [flags]".into());
    };
    let b = load_biquandle(src)?;
    let (p, _) = presentation_for(&b, args)?;
    let t = p.tietze_simplified(p.tietze_budget());
    if has_flag(args, "--json") {
        println!("{}", serde_json::to_string_pretty(&t.to_json())?);
    } else {
        print!("{}", t.display_text());
    }
    Ok(0)
}

fn cmd_abelianize(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [src] = pos.as_slice() else {
        return Err("usage: ybq abelianize <biquandle> [flags]".into());
    };
    let b = load_biquandle(src)?;
    let (p, _) = presentation_for(&b, args)?;
    let ab = p.abelianization();
    if has_flag(args, "--json") {
        let t: Vec<String> = ab.torsion.iter().map(|d| d.to_string()).collect();
        println!(
            "{}",
            serde_json::json!({"torsion": t, "free_rank": ab.free_rank})
        );
    } else {
        println!("{ab}");
    }
    Ok(0)
}

fn cmd_diagram(args: &[String]) -> CliResult {
    let Some(op) = args.first() else {
        return Err("usage: ybq diagram <validate|lk|mirror|r1> ...".into());
    };
    let rest = &args[1..];
    let pos = positional(rest);
    match op.as_str() {
        "validate" => {
            let [src] = pos.as_slice() else {
                return Err("usage: ybq diagram validate <diagram>".into());
            };
            let d = load_diagram(src)?;
            println!(
                "ok: {} components, {} crossings, {} semi-arcs, writhe {}",
                d.components().len(),
                d.crossings().len(),
                d.num_arcs(),
                d.writhe()
            );
            Ok(0)
        }
        "lk" => {
            let [src, i, j] = pos.as_slice() else {
                return Err("usage: ybq diagram lk <diagram> <i> <j>".into());
            };
            let d = load_diagram(src)?;
            let (i, j): (usize, usize) = (i.parse()?, j.parse()?);
            if i == 0 || j == 0 {
                return Err("component indices are 1-based".into());
            }
            println!("{}", d.linking_number(i - 1, j - 1)?);
            Ok(0)
        }
        "mirror" => {
            let [src] = pos.as_slice() else {
                return Err("usage: ybq diagram mirror <diagram> [--emit <file>]".into());
            };
            let m = load_diagram(src)?.mirror();
            match flag_value(rest, "--emit") {
                Some(path) => {
                    std::fs::write(path, m.to_json())?;
                    println!("wrote {path}");
                }
                None => println!("{}", m.to_json()),
            }
            Ok(0)
        }
        "r1" => {
            let [src, arc, sign] = pos.as_slice() else {
                return Err("usage: ybq diagram r1 <diagram> <arc> <+|-> [--over-first]".into());
            };
            let d = load_diagram(src)?;
            let sign = match *sign {
                "+" | "+1" => 1i8,
                "-" | "-1" => -1i8,
                other => return Err(format!("bad sign {other}").into()),
            };
            let out = d.r1_insert(arc, sign, !has_flag(rest, "--over-first"))?;
            match flag_value(rest, "--emit") {
                Some(path) => {
                    std::fs::write(path, out.to_json())?;
                    println!("wrote {path}");
                }
                None => println!("{}", out.to_json()),
            }
            Ok(0)
        }
        other => Err(format!("unknown diagram operation {other}").into()),
    }
}

fn cmd_colorings(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [dsrc, bsrc] = pos.as_slice() else {
        return Err("usage: ybq colorings <diagram> <biquandle>".into());
    };
    let d = load_diagram(dsrc)?;
    let b = load_biquandle(bsrc)?;
    let cols = enumerate_colorings(&d, &b);
    if has_flag(args, "--json") {
        let list: Vec<serde_json::Value> = cols
            .iter()
            .map(|c| {
                let m: serde_json::Map<String, serde_json::Value> = (0..d.num_arcs())
                    .map(|a| (d.arc_name(a).to_string(), serde_json::json!(c[a] + 1)))
                    .collect();
                serde_json::Value::Object(m)
            })
            .collect();
        println!("{}", serde_json::json!({"count": cols.len(), "colorings": list}));
    } else {
        println!("{} colorings", cols.len());
        for c in &cols {
            let parts: Vec<String> =
                (0..d.num_arcs()).map(|a| format!("{}={}", d.arc_name(a), c[a] + 1)).collect();
            println!("  {}", parts.join(" "));
        }
    }
    Ok(0)
}

fn cmd_invariant(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [dsrc, bsrc] = pos.as_slice() else {
        return Err("usage: ybq invariant <diagram> <biquandle> [flags]".into());
    };
    let d = load_diagram(dsrc)?;
    let b = load_biquandle(bsrc)?;
    let (p0, _) = presentation_for(&b, args)?;
    let p = p0.tietze_simplified(p0.tietze_budget());
    let mode = flag_value(args, "--mode").unwrap_or("cyclic");
    let m = match mode {
        "cyclic" => invariant(&d, &b, &p, Mode::Cyclic),
        "abelian" => invariant(&d, &b, &p, Mode::Abelian),
        "hom" => {
            let path = flag_value(args, "--cocycle")
                .ok_or("--mode hom needs --cocycle <file> with a group table and values")?;
            let text = std::fs::read_to_string(path)?;
            let v: serde_json::Value = serde_json::from_str(&text)?;
            let parse_table = |key: &str| -> Result<Vec<Vec<usize>>, Box<dyn std::error::Error>> {
                let arr = v[key].as_array().ok_or_else(|| format!("missing {key}"))?;
                arr.iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| format!("bad row in {key}").into())
                            .and_then(|r| {
                                r.iter()
                                    .map(|x| {
                                        x.as_u64()
                                            .filter(|&v| v >= 1)
                                            .map(|v| (v - 1) as usize)
                                            .ok_or_else(|| "entries are 1-based".into())
                                    })
                                    .collect()
                            })
                    })
                    .collect()
            };
            let group = FiniteGroup::from_table(parse_table("group")?)?;
            let f = ConcreteCocycle { group, values: parse_table("values")? };
            invariant_hom(&d, &b, &p, &f)?
        }
        other => return Err(format!("unknown mode {other}").into()),
    };
    if matches!(m.used_mode, crate::invariant::UsedMode::AbelianFallback) {
        eprintln!("note: relations outside the cyclic rewrite families; abelian comparison used");
    }
    if has_flag(args, "--json") {
        println!("{}", serde_json::to_string_pretty(&m.to_json(&p))?);
    } else {
        print!("{}", m.display(&p));
    }
    Ok(0)
}

fn cmd_table(args: &[String]) -> CliResult {
    let pos = positional(args);
    let [which] = pos.as_slice() else {
        return Err("usage: ybq table <unc|unc-reduced|knots>".into());
    };
    let json = has_flag(args, "--json");
    match *which {
        "unc" => {
            let rows = catalog::table_universal();
            if json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name, "generators": r.generators,
                            "relations": r.relations, "sigma_order": r.sigma_order,
                            "diagonal_fixed": r.diagonal_fixed,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                print!("{}", catalog::render_group_table(&rows, false));
            }
        }
        "unc-reduced" => {
            let rows = catalog::table_reduced();
            if json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name, "generators": r.generators,
                            "relations": r.relations,
                            "s0": r.seed.as_ref().map(|s| s.iter().map(|&(x,y)| vec![x+1,y+1]).collect::<Vec<_>>()),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                print!("{}", catalog::render_group_table(&rows, true));
            }
        }
        "knots" => {
            let rows = catalog::table_knots()?;
            if json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(name, cells)| {
                        let cs: Vec<serde_json::Value> = cells
                            .iter()
                            .map(|c| {
                                serde_json::json!({
                                    "colorings": c.colorings,
                                    "nontrivial": c.nontrivial,
                                })
                            })
                            .collect();
                        serde_json::json!({"name": name, "cells": cs})
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                print!("{}", catalog::render_knot_table(&rows));
            }
        }
        other => return Err(format!("unknown table {other}").into()),
    }
    Ok(0)
}
