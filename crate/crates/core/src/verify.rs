//! Exhaustive and seeded verification suites over the coding and shift
//! layers, reporting exact witnesses.
//!
//! Each suite re-measures a claimed quantity with exact arithmetic and
//! fails on the first discrepancy, carrying the offending codes and values
//! as a counterexample. Seeded suites record their seed in the report
//! parameters, so a report is reproducible from its own metadata.
//!
//! The public entry points wire the real constructions into inner checkers
//! that take the measured quantity as a parameter; tests inject corrupted
//! measurements through the same seam to confirm each suite actually
//! rejects.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coding::{
    decode_code, diameter_squared, subcube_bounds, subcube_distance_squared, Code, Dimension,
};
use crate::dynamics::{dense_code, liyorke_pair, periodic_approximant, shift_by, ScrambledPair};
use crate::error::{Error, Result};
use crate::rational::{render_ratio, sixteenth_pow, Rational};

/// Enumeration budgets for the exhaustive suites. The caps are
/// configuration, not mathematics: exact arithmetic over complete
/// enumerations is kept at desk scale by default.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct VerifyLimits {
    /// Largest dimension whose first-order cubes are enumerated (4^n of
    /// them).
    pub max_dimension: u32,
    /// Largest number of codes a suite may enumerate.
    pub max_enumeration: usize,
    /// Longest carrier code a suite may construct.
    pub max_code_length: usize,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            max_dimension: 4,
            max_enumeration: 1 << 20,
            max_code_length: 1 << 20,
        }
    }
}

/// One exact observation: the codes involved and named rational or integer
/// values.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub codes: Vec<String>,
    pub values: BTreeMap<String, String>,
}

impl Witness {
    pub fn new() -> Witness {
        Witness {
            codes: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn with_code(mut self, code: &Code) -> Witness {
        self.codes.push(code.to_string());
        self
    }

    pub fn with_ratio(mut self, key: &str, value: &Rational) -> Witness {
        self.values.insert(key.to_string(), render_ratio(value));
        self
    }

    pub fn with_count(mut self, key: &str, value: usize) -> Witness {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

impl Default for Witness {
    fn default() -> Witness {
        Witness::new()
    }
}

/// Outcome of one suite: property name, exact parameters, pass flag,
/// witnesses, and a counterexample exactly when the suite failed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: String,
    pub dimension: u32,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Witness>,
}

impl VerificationReport {
    fn passed(
        property: &str,
        dimension: Dimension,
        params: BTreeMap<String, String>,
        witnesses: Vec<Witness>,
    ) -> VerificationReport {
        VerificationReport {
            property: property.to_string(),
            dimension: dimension.get(),
            params,
            pass: true,
            witnesses,
            counterexample: None,
        }
    }

    fn failed(
        property: &str,
        dimension: Dimension,
        params: BTreeMap<String, String>,
        witnesses: Vec<Witness>,
        counterexample: Witness,
    ) -> VerificationReport {
        VerificationReport {
            property: property.to_string(),
            dimension: dimension.get(),
            params,
            pass: false,
            witnesses,
            counterexample: Some(counterexample),
        }
    }
}

fn params_from(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Uniform random code of the given order. Digit arity is a power of two,
/// so reducing `next_u64` modulo it is exactly uniform.
pub(crate) fn sample_code(rng: &mut ChaCha8Rng, dimension: Dimension, order: usize) -> Code {
    let arity = dimension.arity();
    let digits = (0..order).map(|_| rng.next_u64() % arity + 1).collect();
    Code::new(dimension, digits).expect("sampled digits are in range")
}

/// Checks that sampled codes of every order `k <= k_max` have squared
/// diameter exactly `n/16^k`, strictly decreasing in `k`.
pub fn verify_diagonal(
    dimension: Dimension,
    k_max: usize,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    verify_diagonal_with(dimension, k_max, samples, seed, diameter_squared)
}

pub(crate) fn verify_diagonal_with(
    dimension: Dimension,
    k_max: usize,
    samples: usize,
    seed: u64,
    diameter: impl Fn(&Code) -> Rational,
) -> Result<VerificationReport> {
    let property = "diagonal-shrinks";
    let params = params_from(&[
        ("k_max", k_max.to_string()),
        ("samples", samples.to_string()),
        ("seed", seed.to_string()),
    ]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = Rational::from_integer(dimension.get().into());
    let mut witnesses = Vec::with_capacity(k_max);
    let mut previous: Option<Rational> = None;
    for k in 1..=k_max {
        let expected = &n * sixteenth_pow(k);
        let mut shown: Option<Code> = None;
        for _ in 0..samples.max(1) {
            let code = sample_code(&mut rng, dimension, k);
            let measured = diameter(&code);
            if measured != expected {
                let counterexample = Witness::new()
                    .with_code(&code)
                    .with_count("order", k)
                    .with_ratio("expected_diameter_squared", &expected)
                    .with_ratio("measured_diameter_squared", &measured);
                return Ok(VerificationReport::failed(
                    property,
                    dimension,
                    params,
                    witnesses,
                    counterexample,
                ));
            }
            shown.get_or_insert(code);
        }
        if let Some(prev) = &previous {
            if &expected >= prev {
                let counterexample = Witness::new()
                    .with_count("order", k)
                    .with_ratio("diameter_squared", &expected)
                    .with_ratio("previous_diameter_squared", prev);
                return Ok(VerificationReport::failed(
                    property,
                    dimension,
                    params,
                    witnesses,
                    counterexample,
                ));
            }
        }
        previous = Some(expected.clone());
        let mut witness = Witness::new()
            .with_count("order", k)
            .with_ratio("diameter_squared", &expected);
        if let Some(code) = shown {
            witness = witness.with_code(&code);
        }
        witnesses.push(witness);
    }
    Ok(VerificationReport::passed(
        property, dimension, params, witnesses,
    ))
}

/// Checks that every first-order cube has a partner at squared distance at
/// least `n/16`, enumerating all `4^n` digits. The witness for digit `i`
/// is the smallest partner digit meeting the bound.
pub fn verify_separation(
    dimension: Dimension,
    limits: &VerifyLimits,
) -> Result<VerificationReport> {
    verify_separation_with(dimension, limits, |a, b| {
        subcube_distance_squared(a, b).expect("first-order codes share the dimension")
    })
}

pub(crate) fn verify_separation_with(
    dimension: Dimension,
    limits: &VerifyLimits,
    distance: impl Fn(&Code, &Code) -> Rational,
) -> Result<VerificationReport> {
    if dimension.get() > limits.max_dimension {
        return Err(Error::CapacityExceeded {
            required: 1usize << (2 * dimension.get()),
            limit: 1usize << (2 * limits.max_dimension),
        });
    }
    let property = "first-order-separation";
    let bound = Rational::from_integer(dimension.get().into()) * sixteenth_pow(1);
    let params = params_from(&[("bound", render_ratio(&bound))]);
    let arity = dimension.arity();
    let mut witnesses = Vec::with_capacity(arity as usize);
    for i in 1..=arity {
        let from = Code::new(dimension, vec![i])?;
        let mut found = None;
        for j in 1..=arity {
            if j == i {
                continue;
            }
            let to = Code::new(dimension, vec![j])?;
            let d = distance(&from, &to);
            if d >= bound {
                found = Some((to, d));
                break;
            }
        }
        match found {
            Some((to, d)) => witnesses.push(
                Witness::new()
                    .with_code(&from)
                    .with_code(&to)
                    .with_ratio("distance_squared", &d),
            ),
            None => {
                let counterexample = Witness::new()
                    .with_code(&from)
                    .with_ratio("required_distance_squared", &bound);
                return Ok(VerificationReport::failed(
                    property,
                    dimension,
                    params,
                    witnesses,
                    counterexample,
                ));
            }
        }
    }
    Ok(VerificationReport::passed(
        property, dimension, params, witnesses,
    ))
}

/// Checks that the block-enumeration code visits every order-`q` sub-cube:
/// for each of the `(4^n)^q` codes some shift of the carrier starts with
/// it.
pub fn verify_transitivity(
    dimension: Dimension,
    q: usize,
    limits: &VerifyLimits,
) -> Result<VerificationReport> {
    let carrier = dense_code(dimension, q, limits.max_code_length)?;
    verify_transitivity_on(&carrier, dimension, q, limits)
}

pub(crate) fn verify_transitivity_on(
    carrier: &Code,
    dimension: Dimension,
    q: usize,
    limits: &VerifyLimits,
) -> Result<VerificationReport> {
    let arity = dimension.arity() as u128;
    let total = arity
        .checked_pow(q as u32)
        .filter(|&t| t <= limits.max_enumeration as u128)
        .ok_or(Error::CapacityExceeded {
            required: usize::MAX,
            limit: limits.max_enumeration,
        })? as usize;
    let property = "dense-orbit-coverage";
    let params = params_from(&[
        ("order", q.to_string()),
        ("carrier_length", carrier.order().to_string()),
        ("targets", total.to_string()),
    ]);
    let digits = carrier.digits();
    let mut witnesses = Vec::with_capacity(total);
    let mut target = vec![1u64; q];
    let arity = dimension.arity();
    loop {
        let hit = digits.windows(q).position(|w| w == target.as_slice());
        match hit {
            Some(t) => {
                let code = Code::new(dimension, target.clone())?;
                witnesses.push(
                    Witness::new()
                        .with_code(&code)
                        .with_count("first_visit_shift", t),
                );
            }
            None => {
                let code = Code::new(dimension, target.clone())?;
                let counterexample = Witness::new()
                    .with_code(&code)
                    .with_count("carrier_length", carrier.order());
                return Ok(VerificationReport::failed(
                    property,
                    dimension,
                    params,
                    witnesses,
                    counterexample,
                ));
            }
        }
        let mut pos = q;
        while pos > 0 {
            if target[pos - 1] < arity {
                target[pos - 1] += 1;
                break;
            }
            target[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    debug_assert_eq!(witnesses.len(), total);
    Ok(VerificationReport::passed(
        property, dimension, params, witnesses,
    ))
}

/// Checks that seeded random order-`p` targets each contain their periodic
/// approximant and have squared diameter exactly `n/16^p`.
pub fn verify_periodic_density(
    dimension: Dimension,
    p: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    verify_periodic_density_with(dimension, p, trials, seed, |target| {
        periodic_approximant(target, 2 * target.order())
    })
}

pub(crate) fn verify_periodic_density_with(
    dimension: Dimension,
    p: usize,
    trials: usize,
    seed: u64,
    approximant: impl Fn(&Code) -> Result<Code>,
) -> Result<VerificationReport> {
    if p == 0 {
        return Err(Error::EmptyBlock);
    }
    let property = "periodic-approximation";
    let epsilon_squared = Rational::from_integer(dimension.get().into()) * sixteenth_pow(p);
    let params = params_from(&[
        ("period", p.to_string()),
        ("trials", trials.to_string()),
        ("seed", seed.to_string()),
        ("epsilon_squared", render_ratio(&epsilon_squared)),
    ]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witnesses = Vec::with_capacity(trials);
    for _ in 0..trials {
        let target = sample_code(&mut rng, dimension, p);
        let approx = approximant(&target)?;
        let boxed = subcube_bounds(&target);
        let point = decode_code(&approx);
        let diameter = diameter_squared(&target);
        let periodic = approx.order() >= target.order()
            && approx
                .digits()
                .iter()
                .enumerate()
                .all(|(i, &d)| d == target.digits()[i % p]);
        if !boxed.contains(&point) || diameter != epsilon_squared || !periodic {
            let counterexample = Witness::new()
                .with_code(&target)
                .with_code(&approx)
                .with_ratio("target_diameter_squared", &diameter)
                .with_ratio("required_epsilon_squared", &epsilon_squared);
            return Ok(VerificationReport::failed(
                property,
                dimension,
                params,
                witnesses,
                counterexample,
            ));
        }
        witnesses.push(
            Witness::new()
                .with_code(&target)
                .with_code(&approx)
                .with_ratio("diameter_squared", &diameter),
        );
    }
    Ok(VerificationReport::passed(
        property, dimension, params, witnesses,
    ))
}

/// Checks the scrambled-pair checkpoint inequalities over `m` segments
/// against the all-ones base code: at each agree checkpoint the decoded
/// points sit within the shared box diameter, and at each disagree
/// checkpoint the leading cubes are separated by at least `n/16`.
pub fn verify_liyorke(dimension: Dimension, segments: usize) -> Result<VerificationReport> {
    verify_liyorke_with(dimension, segments, liyorke_pair)
}

pub(crate) fn verify_liyorke_with(
    dimension: Dimension,
    segments: usize,
    pair_builder: impl Fn(&Code, usize) -> Result<ScrambledPair>,
) -> Result<VerificationReport> {
    let length = ScrambledPair::schedule_length(segments);
    if segments == 0 || length > VerifyLimits::default().max_code_length {
        return Err(Error::CapacityExceeded {
            required: length,
            limit: VerifyLimits::default().max_code_length,
        });
    }
    let property = "scrambled-pair-checkpoints";
    let base = Code::new(dimension, vec![1; length])?;
    let pair = pair_builder(&base, segments)?;
    let n = Rational::from_integer(dimension.get().into());
    let separation_bound = &n * sixteenth_pow(1);
    let params = params_from(&[
        ("segments", segments.to_string()),
        ("base", base.prefix(1).to_string()),
        ("separation_bound", render_ratio(&separation_bound)),
    ]);
    let mut witnesses = Vec::new();
    let mut min_agree: Option<Rational> = None;
    let mut max_disagree: Option<Rational> = None;
    for s in 1..=segments {
        let t = pair.agree_checkpoint(s);
        let closeness_bound = &n * sixteenth_pow(s);
        let a = decode_code(&shift_by(&pair.code_a, t)?);
        let b = decode_code(&shift_by(&pair.code_b, t)?);
        let point_distance: Rational = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                let d = x - y;
                &d * &d
            })
            .sum();
        if point_distance > closeness_bound {
            let counterexample = Witness::new()
                .with_code(&pair.code_a)
                .with_code(&pair.code_b)
                .with_count("agree_shift", t)
                .with_ratio("point_distance_squared", &point_distance)
                .with_ratio("closeness_bound", &closeness_bound);
            return Ok(VerificationReport::failed(
                property,
                dimension,
                params,
                witnesses,
                counterexample,
            ));
        }
        min_agree = Some(match min_agree {
            Some(current) if current <= point_distance => current,
            _ => point_distance.clone(),
        });
        witnesses.push(
            Witness::new()
                .with_count("segment", s)
                .with_count("agree_shift", t)
                .with_ratio("point_distance_squared", &point_distance)
                .with_ratio("closeness_bound", &closeness_bound),
        );
        for t in pair.disagree_checkpoints(s) {
            let lead_a = Code::new(dimension, vec![pair.code_a.digits()[t]])?;
            let lead_b = Code::new(dimension, vec![pair.code_b.digits()[t]])?;
            let box_distance = subcube_distance_squared(&lead_a, &lead_b)?;
            if box_distance < separation_bound {
                let counterexample = Witness::new()
                    .with_code(&lead_a)
                    .with_code(&lead_b)
                    .with_count("disagree_shift", t)
                    .with_ratio("box_distance_squared", &box_distance)
                    .with_ratio("separation_bound", &separation_bound);
                return Ok(VerificationReport::failed(
                    property,
                    dimension,
                    params,
                    witnesses,
                    counterexample,
                ));
            }
            max_disagree = Some(match max_disagree {
                Some(current) if current >= box_distance => current,
                _ => box_distance.clone(),
            });
            witnesses.push(
                Witness::new()
                    .with_count("segment", s)
                    .with_count("disagree_shift", t)
                    .with_ratio("box_distance_squared", &box_distance),
            );
        }
    }
    let mut summary = Witness::new();
    if let Some(v) = &min_agree {
        summary = summary.with_ratio("min_agree_distance_squared", v);
    }
    if let Some(v) = &max_disagree {
        summary = summary.with_ratio("max_disagree_distance_squared", v);
    }
    witnesses.push(summary);
    Ok(VerificationReport::passed(
        property, dimension, params, witnesses,
    ))
}
