use serde::{Deserialize, Serialize};

use kvsyz::hilbert::HilbertData;
use kvsyz::kv::KvReport;
use kvsyz::poly::Ring;

pub const SCHEMA: &str = "kv-report/1";

/// A Hilbert polynomial with exact coefficients `[c0, c1, c2]`, each a
/// `(numerator, denominator)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub polynomial: String,
    pub coefficients: [(i64, i64); 3],
    pub stable_from: u32,
    pub values: Vec<u64>,
}

impl From<&HilbertData> for HilbertJson {
    fn from(h: &HilbertData) -> Self {
        HilbertJson {
            polynomial: h.polynomial.to_string(),
            coefficients: h.polynomial.coefficients(),
            stable_from: h.stable_from,
            values: h.values.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct HilbertBlock {
    pub K: HilbertJson,
    pub V: HilbertJson,
    pub I_mod_I2: HilbertJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub k_eq_v: bool,
    pub lci: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KvJson {
    pub schema: String,
    pub field_char: u32,
    pub input: Vec<String>,
    pub degrees: Vec<i32>,
    #[serde(rename = "deg_Z")]
    pub deg_z: i64,
    pub herzog_slack: i64,
    pub hilbert: HilbertBlock,
    pub verdicts: Verdicts,
    pub witnesses: Vec<String>,
    pub syzygies: Vec<String>,
    pub vanishing: Vec<String>,
}

impl KvJson {
    pub fn new(ring: &Ring, r: &KvReport) -> Self {
        let show = |m: &kvsyz::Submodule| m.generators().iter().map(|g| ring.display_vec(g)).collect();
        KvJson {
            schema: SCHEMA.into(),
            field_char: ring.characteristic(),
            input: r.generators.iter().map(|f| ring.display(f).to_string()).collect(),
            degrees: r.degrees.clone(),
            deg_z: r.deg_z,
            herzog_slack: r.herzog_slack,
            hilbert: HilbertBlock { K: (&r.h_k).into(), V: (&r.h_v).into(), I_mod_I2: (&r.h_i_mod_i2).into() },
            verdicts: Verdicts { k_eq_v: r.k_eq_v, lci: r.lci, consistent: r.consistent },
            witnesses: r.witness.iter().map(|w| ring.display_vec(w)).collect(),
            syzygies: show(&r.s),
            vanishing: show(&r.v),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("input: {}", self.input.join(", ")));
        line(format!("degrees: {:?}", self.degrees));
        line(format!("deg Z: {}", self.deg_z));
        line(format!("H(K): {}", self.hilbert.K.polynomial));
        line(format!("H(V): {}", self.hilbert.V.polynomial));
        line(format!("H(I/I^2): {}", self.hilbert.I_mod_I2.polynomial));
        line(format!("Herzog slack: {}", self.herzog_slack));
        line(format!("K=V: {}", self.verdicts.k_eq_v));
        line(format!("lci: {}", self.verdicts.lci));
        line(format!("consistent: {}", self.verdicts.consistent));
        for s in &self.syzygies {
            line(format!("syzygy: {s}"));
        }
        for w in &self.witnesses {
            line(format!("witness: {w}"));
        }
        out
    }
}
