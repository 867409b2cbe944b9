use std::fs::File;
use std::io::{self, Read};
use std::path::Path;

use serde_json::{json, Value};

use braidknot::foliation::{bennequin_certificate, FoliationCertificate};
use braidknot::invariants::{homfly, mfw_lower_bound};
use braidknot::search::{self, CensusEntry, Decision};
use braidknot::table::{self, TableRow, BUNDLED_TABLE};
use braidknot::{closure, fingerprint, seifert, theorem_bounds, BraidWord, Fingerprint};

use crate::{BoundsArgs, DecideArgs};

pub struct Context {
    pub json: bool,
    pub cap: u128,
}

pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

type CmdResult = Result<Status, String>;

fn parse_word(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e: braidknot::BraidError| e.to_string())
}

fn read_input(path: &Path) -> Result<String, String> {
    let mut buf = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut buf))
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(buf)
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn find_row(args: &BoundsArgs, name: &str) -> Result<TableRow, String> {
    let rows = match &args.table {
        Some(p) => table::parse_table(read_input(p)?.as_bytes()),
        None => table::parse_table(BUNDLED_TABLE.as_bytes()),
    }
    .map_err(|e| e.to_string())?;
    rows.into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| format!("no table row named {name:?}"))
}

pub fn bounds(ctx: &Context, args: &BoundsArgs) -> CmdResult {
    let (chi, b, crossings, name) = match &args.row {
        Some(name) => {
            let r = find_row(args, name)?;
            (
                r.chi,
                r.braid_index,
                args.crossings.or(Some(r.crossing_number)),
                Some(r.name),
            )
        }
        None => (
            args.chi.unwrap_or_default(),
            args.b.unwrap_or_default(),
            args.crossings,
            None,
        ),
    };
    if b == 1 {
        return Err(format!(
            "b = 1 means the unknot (chi = 1, c = 0); the bounds need b >= 2 (got chi = {chi})"
        ));
    }
    let report = theorem_bounds(chi, b).map_err(|e| e.to_string())?;
    let inside = crossings.map(|c| report.contains(c));

    if ctx.json {
        let mut v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
        v["lower"] = json!({ "num": report.lower, "den": 1 });
        if let Some(n) = name {
            v["name"] = json!(n);
        }
        if let (Some(c), Some(ok)) = (crossings, inside) {
            v["crossings"] = json!(c);
            v["contains"] = json!(ok);
        }
        print_json(&v);
    } else {
        if let Some(n) = &name {
            println!("{n}");
        }
        println!("chi = {chi}, b = {b}");
        println!("{}", report.formula);
        println!("{} <= c <= {}", report.lower, report.upper);
        if let (Some(c), Some(ok)) = (crossings, inside) {
            println!("c = {c}: {}", if ok { "PASS" } else { "FAIL" });
        }
    }
    Ok(Status::from_bool(inside.unwrap_or(true)))
}

pub fn invariants(ctx: &Context, word: &str) -> CmdResult {
    let w = parse_word(word)?;
    let d = closure(&w);
    let s = seifert(&d);
    let fp = fingerprint(&w);
    let p = homfly(&w);
    let mfw = mfw_lower_bound(&p).map_err(|e| e.to_string())?;
    if ctx.json {
        print_json(&json!({
            "word": w.to_string(),
            "diagram": d.to_json(),
            "seifert": s,
            "fingerprint": fp,
            "homfly": p.to_json(),
            "mfw_bound": mfw,
        }));
    } else {
        println!("word: {w}");
        println!(
            "strands {}, crossings {}, writhe {}, components {}",
            d.strands(),
            d.crossing_count(),
            d.writhe(),
            d.component_count()
        );
        println!("seifert circles {}, chi {}", s.circles, s.chi);
        println!("jones: {}", fp.jones.display("A"));
        match &fp.alexander {
            Some(a) => println!("alexander: {}", a.display("t")),
            None => println!("alexander: (link)"),
        }
        println!("homfly: {}", p.display());
        println!("mfw braid index bound: {mfw}");
    }
    Ok(Status::Pass)
}

pub fn foliation_check(ctx: &Context, file: &Path) -> CmdResult {
    let text = read_input(file)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let cert = FoliationCertificate::from_json(&v).map_err(|e| format!("{}: {e}", file.display()))?;
    let reports = cert.check_all();
    let passed = reports.iter().all(|r| r.passed);
    if ctx.json {
        print_json(&json!({
            "passed": passed,
            "bm_reduced": cert.check_bm_reduced(),
            "checks": reports,
        }));
    } else {
        for r in &reports {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            print!("{:<16} {verdict}  lhs {} rhs {}", r.name, r.lhs, r.rhs);
            if let Some((a, b)) = r.secondary {
                print!("; lhs {a} rhs {b}");
            }
            if !r.passed {
                print!("  (delta {})", r.delta());
            }
            println!();
        }
        if !cert.check_bm_reduced() {
            println!("not reduced: main inequality skipped");
        }
    }
    Ok(Status::from_bool(passed))
}

pub fn foliation_certificate(word: &str) -> CmdResult {
    let w = parse_word(word)?;
    println!("{}", bennequin_certificate(&w).to_json());
    Ok(Status::Pass)
}

fn load_fingerprint(path: &Path) -> Result<Fingerprint, String> {
    let v: Value =
        serde_json::from_str(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    // accept `invariants --json` output as well as a bare fingerprint
    let fp = v.get("fingerprint").unwrap_or(&v);
    Fingerprint::from_json(fp).ok_or_else(|| format!("{}: not a fingerprint", path.display()))
}

pub fn decide(ctx: &Context, args: &DecideArgs) -> CmdResult {
    let target = match (&args.word, &args.fingerprint) {
        (Some(w), _) => fingerprint(&parse_word(w)?),
        (None, Some(p)) => load_fingerprint(p)?,
        (None, None) => return Err("give --word or --fingerprint".into()),
    };
    let result =
        search::decide_braid_index_leq(&target, args.chi, args.n, ctx.cap).map_err(|e| e.to_string())?;
    let positive = !matches!(result.decision, Decision::CertifiedNo);
    if ctx.json {
        print_json(&serde_json::to_value(&result).map_err(|e| e.to_string())?);
    } else {
        match &result.decision {
            Decision::CertifiedNo => {
                println!("CertifiedNo: b > {} (no closure within budget matches)", args.n)
            }
            Decision::CandidateFound { witness } => {
                println!("CandidateFound: {witness} (heuristic: fingerprints agree)")
            }
            Decision::UnknotSpecial => println!("UnknotSpecial: unknot fingerprint, b = 1"),
        }
        for l in &result.levels {
            println!(
                "  b'={} budget {} raw {} visited {} emitted {} fingerprinted {}",
                l.strands, l.budget, l.raw_words, l.visited, l.emitted, l.fingerprinted
            );
        }
    }
    Ok(Status::from_bool(positive))
}

fn entry_json(e: &CensusEntry, status: &str) -> Result<Value, String> {
    let mut v = serde_json::to_value(e).map_err(|e| e.to_string())?;
    v["status"] = json!(status);
    Ok(v)
}

pub fn census(ctx: &Context, genus: i64, n: usize) -> CmdResult {
    let report = search::census(genus, n, ctx.cap).map_err(|e| e.to_string())?;
    let tagged = report
        .certified
        .iter()
        .map(|e| (e, "certified"))
        .chain(report.residue.iter().map(|e| (e, "residue")));
    if ctx.json {
        for (e, status) in tagged {
            println!("{}", entry_json(e, status)?);
        }
    } else {
        println!(
            "genus {genus}, n {n}: budget {}, {} words emitted, {} certified, {} residue",
            report.budget,
            report.stats.emitted,
            report.certified.len(),
            report.residue.len()
        );
        for (e, status) in tagged {
            let opt = |x: Option<i64>| x.map_or("?".to_string(), |v| v.to_string());
            println!(
                "{status:<9} {:<28} genus {} ({}..{}) b {} (mfw {})  {}",
                e.witness.to_string(),
                opt(e.certified_genus),
                e.genus_bounds.0,
                e.genus_bounds.1,
                opt(e.certified_braid_index),
                e.mfw_bound,
                e.fingerprint.jones.display("A"),
            );
        }
    }
    Ok(Status::Pass)
}

pub fn table_validate(ctx: &Context, path: Option<&Path>) -> CmdResult {
    let rows = match path {
        Some(p) => table::parse_table(read_input(p)?.as_bytes()),
        None => table::parse_table(BUNDLED_TABLE.as_bytes()),
    }
    .map_err(|e| e.to_string())?;
    let reports = table::validate_table(&rows);
    let passed = reports.iter().all(|r| r.passed());
    if ctx.json {
        print_json(&json!({ "passed": passed, "rows": reports }));
    } else {
        for (row, rep) in rows.iter().zip(&reports) {
            let range = rep
                .bounds
                .as_ref()
                .map(|b| format!("{} <= {} <= {}", b.lower, row.crossing_number, b.upper))
                .unwrap_or_default();
            println!(
                "{:<8} {}  {range}",
                rep.name,
                if rep.passed() { "PASS" } else { "FAIL" }
            );
            for f in &rep.failures {
                println!("         {f}");
            }
        }
        println!(
            "{} rows, {} failing",
            reports.len(),
            reports.iter().filter(|r| !r.passed()).count()
        );
    }
    Ok(Status::from_bool(passed))
}
