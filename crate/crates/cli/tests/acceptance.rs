//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Command-line criteria drive the built binary; the
//! exhaustive property criteria call the library checks directly.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use peribrauer::checks::{self, CheckReport};
use peribrauer::exec::Exec;
use peribrauer::multiplicities::{cartan_matrix, cartan_mult_sum, cartan_mult_witness};
use peribrauer::partitions::{labels_lambda, Partition};
use peribrauer::skew::SkewDiagram;

const BIN: &str = env!("CARGO_BIN_EXE_peribrauer");

fn cli(args: &[&str]) -> Result<String, String> {
    let o = Command::new(BIN)
        .args(args)
        .env_remove("PERIBRAUER_WORKERS")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&o.stdout).into_owned();
    if o.status.success() {
        Ok(text)
    } else {
        Err(format!("exit {:?}: {}{}", o.status.code(), text, String::from_utf8_lossy(&o.stderr)))
    }
}

fn field(text: &str, key: &str) -> Option<usize> {
    text.lines().find_map(|l| l.strip_prefix(key)?.trim().parse().ok())
}

fn from_report(r: CheckReport) -> Result<String, String> {
    if r.passed() {
        Ok(format!("{} cases", r.cases))
    } else {
        Err(r.to_string())
    }
}

fn nine_shapes() -> Result<String, String> {
    let mut expected: Vec<SkewDiagram> = [
        "[2]",
        "[3,2]/[1]",
        "[3,3]/[2]",
        "[3,3]",
        "[4,3,2]/[2,1]",
        "[4,3,3]/[2,2]",
        "[4,4,2]/[3,1]",
        "[4,4,3]/[3,2]",
        "[4,4,4]/[3,3]",
    ]
    .iter()
    .map(|s| s.parse().expect("fixture"))
    .collect();
    expected.sort();
    let mut totals = Vec::new();
    for flavor in ["gamma", "upsilon", "upsilon-bar"] {
        let all = cli(&["gen", "--max-size", "6", "--flavor", flavor])?;
        let connected = cli(&["gen", "--max-size", "6", "--flavor", flavor, "--connected"])?;
        let mut shapes: Vec<SkewDiagram> = connected
            .lines()
            .skip(3)
            .map(|l| l.parse().map_err(|e| format!("{flavor}: {e}")))
            .collect::<Result<_, _>>()?;
        shapes.sort();
        if shapes != expected {
            return Err(format!("{flavor}: connected members {shapes:?}"));
        }
        if !all.lines().skip(3).any(|l| l == "empty") {
            return Err(format!("{flavor}: the empty diagram is missing"));
        }
        totals.push(field(&all, "members ").ok_or("no member count")?);
    }
    if totals.windows(2).any(|w| w[0] != w[1]) {
        return Err(format!("member counts differ: {totals:?}"));
    }
    Ok(format!("9 connected shapes, {} members per flavor", totals[0]))
}

fn equivalence() -> Result<String, String> {
    let mut notes = Vec::new();
    for args in [["--max-size", "10", "--max-span", "10"], ["--max-size", "8", "--max-span", "14"]]
    {
        let mut full = vec!["verify-equivalence"];
        full.extend(args);
        let text = cli(&full)?;
        let universe = field(&text, "universe ").ok_or("no universe count")?;
        if field(&text, "disagreements ") != Some(0) {
            return Err(text);
        }
        notes.push(format!("{universe} diagrams at {} {}", args[1], args[3]));
    }
    Ok(notes.join(", "))
}

fn flip_set() -> Result<String, String> {
    let out = cli(&["pi", "[3,2]"])?;
    let members: Vec<&str> = out.lines().skip(1).filter_map(|l| l.split(' ').next()).collect();
    if members != ["[3,2]", "[3]", "[1]"] {
        return Err(format!("Pi([3,2]) = {members:?}"));
    }
    from_report(checks::pi_matches_gamma(12, Exec::Sequential))
}

fn temperley_lieb() -> Result<String, String> {
    let text = cli(&["verify-tl", "--r-max", "10", "--q-range", "-12:12"])?;
    match field(&text, "violations ") {
        Some(0) => Ok(format!("{} identities", field(&text, "identities ").unwrap_or(0))),
        _ => Err(text),
    }
}

fn cartan() -> Result<String, String> {
    let mut entries = 0;
    for r in 2..=9 {
        let labels = labels_lambda(r).map_err(|e| e.to_string())?;
        for nu in &labels {
            for mu in &labels {
                let s = cartan_mult_sum(r, nu, mu).map_err(|e| e.to_string())?;
                let w = cartan_mult_witness(r, nu, mu).map_err(|e| e.to_string())?;
                if s != w || s > 1 {
                    return Err(format!("r={r} nu={nu} mu={mu}: sum {s}, witness {w}"));
                }
                entries += 1;
            }
        }
        cartan_matrix(r, Exec::Sequential).map_err(|e| e.to_string())?;
    }
    let m2 = cartan_matrix(2, Exec::Sequential).map_err(|e| e.to_string())?;
    let order: Vec<Partition> = vec!["[2]".parse().unwrap(), "[1,1]".parse().unwrap()];
    if m2.rows != order || m2.cols != order || m2.entries != vec![vec![1, 0], vec![1, 1]] {
        return Err(format!("r=2 matrix {:?}", m2.entries));
    }
    let json = cli(&["cartan-matrix", "--r", "2", "--format", "json"])?;
    if !json.contains("\"entries\":[[1,0],[1,1]]") {
        return Err(json);
    }
    Ok(format!("{entries} entries"))
}

fn main() -> ExitCode {
    let e = Exec::Sequential;
    type Criterion = (&'static str, Duration, Box<dyn Fn() -> Result<String, String>>);
    let criteria: Vec<Criterion> = vec![
        ("connected members up to six boxes", Duration::from_secs(1), Box::new(nine_shapes)),
        ("three membership tests agree", Duration::from_secs(120), Box::new(equivalence)),
        ("flip sets equal Gamma", Duration::from_secs(120), Box::new(flip_set)),
        (
            "arrow pairs equal Gamma0 hooks",
            Duration::from_secs(120),
            Box::new(move || from_report(checks::arrows_match_gamma0(12, e))),
        ),
        (
            "two-box cell multiplicities",
            Duration::from_secs(10),
            Box::new(move || from_report(checks::two_box_growth(10, e))),
        ),
        (
            "vertical domino exclusion",
            Duration::from_secs(60),
            Box::new(move || from_report(checks::domino_exclusion(10, 10, e))),
        ),
        ("temperley-lieb relations", Duration::from_secs(60), Box::new(temperley_lieb)),
        ("cartan sum equals witness", Duration::from_secs(120), Box::new(cartan)),
        (
            "covering uniqueness",
            Duration::from_secs(120),
            Box::new(move || from_report(checks::covering_uniqueness(8, 8, e))),
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, budget {budget:?}")),
            Err(d) => ("FAIL", d),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} criterion {}: {name} ({detail}) [{elapsed:.2?}]", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
