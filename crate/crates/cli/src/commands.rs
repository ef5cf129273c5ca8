use serde_json::json;

use kvsyz::hilbert::{hilbert_polynomial_capped, Graded};
use kvsyz::kv::kv_verdict_capped;
use kvsyz::suites::run_suite;
use kvsyz::{buchberger, modalg, MonomialOrder, Polynomial, Result, Ring, Submodule};

use crate::exit;
use crate::report::{HilbertJson, KvJson};

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Ring,
    pub seed: u64,
    pub degree_cap: u32,
    pub json: bool,
}

/// Text written to stdout and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: exit::OK }
    }
}

fn render(s: &Session, value: serde_json::Value, text: String) -> String {
    if s.json {
        serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
    } else {
        text
    }
}

fn lines(items: &[String]) -> String {
    items.iter().map(|l| format!("{l}\n")).collect()
}

fn shown(s: &Session, fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(|f| s.ring.display(f).to_string()).collect()
}

pub fn gb(s: &Session, gens: &[Polynomial], pot: bool) -> Result<Outcome> {
    let i = Submodule::ideal(s.ring, gens)?;
    let order = if pot { MonomialOrder::PositionOverTerm } else { MonomialOrder::TermOverPosition };
    let basis = buchberger(&i, order);
    let items: Vec<String> = basis.elements().iter().map(|e| s.ring.display_vec(e)).collect();
    let value = json!({ "field_char": s.ring.characteristic(), "input": shown(s, gens), "basis": items });
    Ok(Outcome::ok(render(s, value, lines(&items))))
}

pub fn syz(s: &Session, gens: &[Polynomial]) -> Result<Outcome> {
    let i = Submodule::ideal(s.ring, gens)?;
    let syz = modalg::syzygies(&i)?;
    let items: Vec<String> = syz.generators().iter().map(|e| s.ring.display_vec(e)).collect();
    let value = json!({
        "field_char": s.ring.characteristic(),
        "input": shown(s, gens),
        "twists": syz.ambient().twists(),
        "degrees": syz.generator_degrees(),
        "syzygies": items,
    });
    Ok(Outcome::ok(render(s, value, lines(&items))))
}

pub fn saturate(s: &Session, gens: &[Polynomial]) -> Result<Outcome> {
    let sat = modalg::saturate(&Submodule::ideal(s.ring, gens)?)?;
    let items = shown(s, &sat.polys());
    let value = json!({ "field_char": s.ring.characteristic(), "input": shown(s, gens), "saturation": items });
    Ok(Outcome::ok(render(s, value, lines(&items))))
}

pub fn hilbert(s: &Session, gens: &[Polynomial], quotient: bool) -> Result<Outcome> {
    let i = Submodule::ideal(s.ring, gens)?;
    let g = if quotient { Graded::Quotient(&i) } else { Graded::Sub(&i) };
    let data = HilbertJson::from(&hilbert_polynomial_capped(g, s.degree_cap)?);
    let text = format!(
        "polynomial: {}\nstable from: {}\nvalues: {:?}\n",
        data.polynomial, data.stable_from, data.values
    );
    let value = json!({
        "field_char": s.ring.characteristic(),
        "input": shown(s, gens),
        "module": if quotient { "quotient" } else { "ideal" },
        "hilbert": data,
    });
    Ok(Outcome::ok(render(s, value, text)))
}

pub fn check(s: &Session, gens: &[Polynomial]) -> Result<Outcome> {
    let report = kv_verdict_capped(&s.ring, gens, s.degree_cap)?;
    let doc = KvJson::new(&s.ring, &report);
    let code = if doc.verdicts.consistent && doc.herzog_slack >= 0 { exit::OK } else { exit::INTERNAL };
    let output = if s.json { serde_json::to_string_pretty(&doc).expect("report serializes") + "\n" } else { doc.text() };
    Ok(Outcome { output, code })
}

pub fn verify(s: &Session, suite: &str, trials: Option<usize>) -> Result<Outcome> {
    let out = run_suite(&s.ring, suite, trials, s.seed)?;
    let code = if out.all_passed() { exit::OK } else { exit::INTERNAL };
    let value = json!({
        "suite": out.name,
        "seed": s.seed,
        "passed": out.passed(),
        "total": out.cases.len(),
        "cases": out.cases.iter().map(|c| json!({ "label": c.label, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for c in &out.cases {
        text.push_str(&format!("{:4}  {:<34} {}\n", if c.passed { "ok" } else { "FAIL" }, c.label, c.detail));
    }
    text.push_str(&format!("{}: {}/{} passed\n", out.name, out.passed(), out.cases.len()));
    Ok(Outcome { output: render(s, value, text), code })
}
