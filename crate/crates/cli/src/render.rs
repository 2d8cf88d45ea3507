//! Byte-deterministic output rendering.
//!
//! CSV uses "\n" line endings, a period decimal separator, and coordinates
//! truncated (never rounded) to 12 decimal digits. JSON objects carry exact
//! rationals as "num/den" strings and sort map keys, so identical inputs
//! produce identical bytes.

use cubechaos_core::rational::{render_decimal_trunc, render_ratio};
use cubechaos_core::{
    Code, OrbitRecord, Rational, ScrambledPair, SensitivityWitness, TentInterval,
};
use serde_json::{json, Value};

pub const DECIMAL_DIGITS: u32 = 12;

pub fn orbit_csv(record: &OrbitRecord, dimension: u32) -> String {
    let mut out = String::from("step");
    for axis in 1..=dimension {
        out.push_str(&format!(",x{axis}"));
    }
    out.push('\n');
    for step in record.steps() {
        out.push_str(&step.index.to_string());
        for coord in &step.point {
            out.push(',');
            out.push_str(&render_decimal_trunc(coord, DECIMAL_DIGITS));
        }
        out.push('\n');
    }
    out
}

pub fn orbit_json(record: &OrbitRecord, dimension: u32, init: &str, depth: usize) -> String {
    let points: Vec<Value> = record
        .steps()
        .iter()
        .map(|step| json!({ "step": step.index, "point": ratios(&step.point) }))
        .collect();
    finish(json!({
        "command": "orbit",
        "dimension": dimension,
        "params": { "depth": depth, "init": init, "steps": record.len() - 1 },
        "points": points,
    }))
}

pub fn dense_json(code: &Code, order: usize) -> String {
    finish(json!({
        "command": "dense",
        "dimension": code.dimension().get(),
        "params": { "order": order },
        "digits": code.digits(),
        "length": code.order(),
        "decoded": ratios(&cubechaos_core::decode_code(code)),
    }))
}

pub fn periodic_json(target: &Code, approximant: &Code, containment: bool) -> String {
    finish(json!({
        "command": "periodic",
        "dimension": target.dimension().get(),
        "params": { "target": target.to_string(), "depth": approximant.order() },
        "block": target.digits(),
        "approximant": approximant.digits(),
        "decoded": ratios(&cubechaos_core::decode_code(approximant)),
        "containment": containment,
    }))
}

pub fn sensitivity_json(witness: &SensitivityWitness, achieved: &Rational) -> String {
    finish(json!({
        "command": "sensitivity",
        "dimension": witness.original.dimension().get(),
        "params": { "k": witness.agree_prefix },
        "original": witness.original.digits(),
        "perturbed": witness.perturbed.digits(),
        "separation_step": witness.separation_step,
        "guaranteed_squared_separation": render_ratio(&witness.guaranteed_squared_separation),
        "achieved_squared_separation": render_ratio(achieved),
        "original_point": ratios(&cubechaos_core::decode_code(&witness.original)),
        "perturbed_point": ratios(&cubechaos_core::decode_code(&witness.perturbed)),
    }))
}

pub fn liyorke_json(pair: &ScrambledPair) -> String {
    let segments = pair.schedule.len();
    let schedule: Vec<Value> = pair
        .schedule
        .iter()
        .map(|s| json!({ "agree": s.agree, "disagree": s.disagree }))
        .collect();
    let agree: Vec<usize> = (1..=segments).map(|s| pair.agree_checkpoint(s)).collect();
    let disagree: Vec<usize> = (1..=segments)
        .flat_map(|s| pair.disagree_checkpoints(s))
        .collect();
    finish(json!({
        "command": "liyorke",
        "dimension": pair.code_a.dimension().get(),
        "params": { "segments": segments },
        "code_a": pair.code_a.digits(),
        "code_b": pair.code_b.digits(),
        "schedule": schedule,
        "agree_checkpoints": agree,
        "disagree_checkpoints": disagree,
    }))
}

pub fn tent_json(init: &str, code: &Code, interval: &TentInterval, semiconjugacy: bool) -> String {
    finish(json!({
        "command": "tent",
        "dimension": 1,
        "params": { "depth": code.order(), "init": init },
        "itinerary": code.digits(),
        "interval": { "lower": render_ratio(&interval.lower), "upper": render_ratio(&interval.upper) },
        "semiconjugacy": semiconjugacy,
    }))
}

fn ratios(coords: &[Rational]) -> Vec<String> {
    coords.iter().map(render_ratio).collect()
}

fn finish(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("JSON value serializes");
    text.push('\n');
    text
}
