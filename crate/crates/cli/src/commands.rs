//! Subcommand bodies. Each one builds its whole report as a string so the
//! caller can route it to standard output or a file.

use std::fmt::Write;

use peribrauer::arrows::{pi_set, weight_of_partition};
use peribrauer::checks::{self, CheckReport};
use peribrauer::error::Error;
use peribrauer::exec::Exec;
use peribrauer::grothendieck::verify_tl;
use peribrauer::multiplicities::{cartan_matrix, cell_matrix, DecompositionMatrix};
use peribrauer::partitions::Partition;
use peribrauer::procedures::{equivalence_report, generate_upsilon};
use peribrauer::skew::{covering, is_gamma, is_gamma0, universe, SkewDiagram};
use serde_json::json;

use crate::{Command, Flavor, Format};

/// The rendered report and whether every verification in it passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// Largest size for which the covering-uniqueness search runs inside
/// `verify-all`.
const UNIQUENESS_MAX_SIZE: u32 = 8;

pub fn run(command: Command, exec: Exec) -> Result<Outcome, String> {
    match command {
        Command::Gamma { diagram, pair } => {
            let k = diagram.or(pair).expect("clap requires one of the two");
            Ok(Outcome::ok(gamma(&k)))
        }
        Command::Gen { max_size, max_span, flavor, connected, render } => Ok(Outcome::ok(gen(
            max_size,
            max_span.unwrap_or(max_size),
            flavor,
            connected,
            render,
            exec,
        ))),
        Command::VerifyEquivalence { max_size, max_span } => {
            let report = equivalence_report(max_size, max_span.unwrap_or(max_size), exec);
            Ok(Outcome { text: format!("{report}\n"), passed: report.is_consistent() })
        }
        Command::Arrows { partition } => {
            let w = weight_of_partition(&partition);
            Ok(Outcome::ok(format!("partition {partition}\n{}", w.render())))
        }
        Command::Pi { partition } => Ok(Outcome::ok(pi(&partition))),
        Command::Render { diagram, contents } => {
            let text = if diagram.is_empty() {
                "empty\n".to_string()
            } else {
                match contents {
                    Some(offset) => diagram.render_contents(offset),
                    None => diagram.render(),
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::CellMatrix { r, format } => matrix(cell_matrix(r, exec), format),
        Command::CartanMatrix { r, format } => matrix(cartan_matrix(r, exec), format),
        Command::VerifyTl { r_max, q_range: (lo, hi) } => {
            let report = verify_tl(r_max, lo, hi, exec).map_err(|e| e.to_string())?;
            let mut text = format!(
                "r-max {r_max} q-range {lo}:{hi}\nclasses {}\nidentities {}\nviolations {}\n",
                report.classes,
                report.identities,
                report.violations.len()
            );
            for v in &report.violations {
                let _ = writeln!(text, "  {v}");
            }
            Ok(Outcome { text, passed: report.violations.is_empty() })
        }
        Command::VerifyAll { max_size, r_max, json } => Ok(verify_all(max_size, r_max, json, exec)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn gamma(k: &SkewDiagram) -> String {
    let cov = covering(k);
    let member = is_gamma(k);
    let mut out = format!("diagram {k}\nsize {}\n", k.size());
    if member {
        out.push_str("verdict member\n");
    } else {
        let reasons: Vec<String> = cov
            .hooks
            .iter()
            .enumerate()
            .filter(|(_, h)| !is_gamma0(&h.hook))
            .map(|(i, h)| {
                let mut failed = Vec::new();
                if h.hook.size() % 2 == 1 {
                    failed.push(format!("size {} odd", h.hook.size()));
                }
                if !h.hook.satisfies_hw() {
                    failed.push("HW fails".to_string());
                }
                if !h.hook.satisfies_d() {
                    failed.push("D fails".to_string());
                }
                format!("hook {}: {}", i + 1, failed.join(", "))
            })
            .collect();
        let _ = writeln!(out, "verdict non-member ({})", reasons.join("; "));
    }
    let plural = if cov.hooks.len() == 1 { "" } else { "s" };
    let _ = writeln!(out, "covering {} hook{plural}", cov.hooks.len());
    for (i, h) in cov.hooks.iter().enumerate() {
        let cells: Vec<String> = h.cells.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "  hook {}: ht {} wd {} HW {} D {} cells {}",
            i + 1,
            h.hook.ht(),
            h.hook.wd(),
            yes_no(h.hook.satisfies_hw()),
            yes_no(h.hook.satisfies_d()),
            cells.join(" ")
        );
    }
    out.push_str("render\n");
    out.push_str(&if k.is_empty() { "empty\n".to_string() } else { k.render() });
    out
}

fn gen(
    max_size: u32,
    max_span: u32,
    flavor: Flavor,
    connected: bool,
    render: bool,
    exec: Exec,
) -> String {
    let (name, members) = match flavor {
        Flavor::Gamma => ("gamma", exec.filter(&universe(max_size, max_span, exec), is_gamma)),
        Flavor::Upsilon => ("upsilon", generate_upsilon(max_size, max_span, false, exec).members),
        Flavor::UpsilonBar => {
            ("upsilon-bar", generate_upsilon(max_size, max_span, true, exec).members)
        }
    };
    let total = members.len();
    let connected_count = members.iter().filter(|d| !d.is_empty() && d.is_connected()).count();
    let mut out = format!(
        "flavor {name} max-size {max_size} max-span {max_span}\nmembers {total}\nconnected {connected_count}\n"
    );
    for d in members.iter().filter(|d| !connected || (!d.is_empty() && d.is_connected())) {
        let _ = writeln!(out, "{d}");
        if render {
            out.push_str(&d.render());
        }
    }
    out
}

fn pi(mu: &Partition) -> String {
    let mut out = format!("partition {mu}\n");
    for lam in pi_set(mu) {
        let skew = SkewDiagram::from_pair(mu, &lam).expect("flips only remove boxes");
        let _ = writeln!(out, "{lam} {skew}");
    }
    out
}

fn matrix(
    m: peribrauer::error::Result<DecompositionMatrix>,
    format: Format,
) -> Result<Outcome, String> {
    let m = match m {
        Ok(m) => m,
        Err(e @ Error::Inconsistent(_)) => {
            return Ok(Outcome { text: format!("{e}\n"), passed: false })
        }
        Err(e) => return Err(e.to_string()),
    };
    let text = match format {
        Format::Text => format!("{m}\n"),
        Format::Csv => m.to_csv(),
        Format::Json => {
            let labels = |v: &[Partition]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
            let value = json!({
                "r": m.r,
                "rows": labels(&m.rows),
                "cols": labels(&m.cols),
                "entries": m.entries,
            });
            format!("{value}\n")
        }
    };
    Ok(Outcome::ok(text))
}

fn report(name: &'static str, cases: usize, failures: Vec<String>) -> CheckReport {
    CheckReport { name, cases, failures }
}

fn cartan_checks(r_max: u32, exec: Exec) -> CheckReport {
    let mut cases = 0;
    let mut failures = Vec::new();
    for r in 2..=r_max {
        match cartan_matrix(r, exec) {
            Ok(m) => {
                cases += m.entries.iter().map(Vec::len).sum::<usize>();
                if m.max_entry() > 1 {
                    failures.push(format!("r={r}: entry {} exceeds 1", m.max_entry()));
                }
                if r == 2 && m.entries != vec![vec![1, 0], vec![1, 1]] {
                    failures.push(format!("r=2: matrix is {:?}", m.entries));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
    }
    report("cartan sum equals witness", cases, failures)
}

fn tl_check(r_max: u32, exec: Exec) -> CheckReport {
    if r_max < 2 {
        return report("temperley-lieb relations", 0, Vec::new());
    }
    let q = r_max as i32 + 2;
    match verify_tl(r_max, -q, q, exec) {
        Ok(t) => report(
            "temperley-lieb relations",
            t.identities,
            t.violations.iter().map(|v| v.to_string()).collect(),
        ),
        Err(e) => report("temperley-lieb relations", 0, vec![e.to_string()]),
    }
}

fn verify_all(max_size: u32, r_max: u32, as_json: bool, exec: Exec) -> Outcome {
    let n = max_size;
    let u = n.min(UNIQUENESS_MAX_SIZE);
    let eq = equivalence_report(n, n, exec);
    let eq_failures = eq
        .disagreements
        .iter()
        .map(|d| {
            format!(
                "{} gamma={} upsilon={} upsilon-bar={}",
                d.diagram, d.in_gamma, d.in_upsilon, d.in_upsilon_bar
            )
        })
        .collect();
    let reports = vec![
        report("gamma-upsilon equivalence", eq.universe, eq_failures),
        checks::covering_validity(n, n, exec),
        checks::covering_uniqueness(u, u, exec),
        checks::domino_exclusion(n, n, exec),
        checks::gamma_predecessors(n, n, exec),
        checks::pi_matches_gamma(n, exec),
        checks::arrows_match_gamma0(n, exec),
        checks::flips_disjoint_or_nested(n, exec),
        checks::conjugate_reflection(n),
        checks::arrows_non_crossing(n),
        checks::vertical_pair_chains(n, exec),
        checks::two_box_growth(n, exec),
        checks::rank_stability(r_max, exec),
        cartan_checks(r_max, exec),
        tl_check(r_max, exec),
    ];
    let passed = reports.iter().all(CheckReport::passed);
    let text = if as_json {
        let items: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "passed": r.passed(),
                    "cases": r.cases,
                    "failures": r.failures.len(),
                    "first_failure": r.failures.first(),
                })
            })
            .collect();
        let value = json!({ "max_size": n, "r_max": r_max, "passed": passed, "checks": items });
        format!("{}\n", serde_json::to_string_pretty(&value).expect("plain JSON values"))
    } else {
        let mut out = String::new();
        for r in &reports {
            let _ = writeln!(out, "{r}");
        }
        let _ = writeln!(out, "verify-all {}", if passed { "PASS" } else { "FAIL" });
        out
    };
    Outcome { text, passed }
}
