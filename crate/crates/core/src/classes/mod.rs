//! Structured graph classes: intersection models, threshold and chain
//! graphs, asteroidal triples and Hamiltonian paths.
//!
//! Interval and circular-arc graphs are handled through their
//! representations; the toolkit never tries to recognize them from a bare
//! graph.

mod arc;
mod at_free;
mod chain;
mod hamiltonian;
mod interval;
pub mod random;
mod threshold;

pub use arc::{Arc, ArcRepresentation, DominatingCycle};
pub use at_free::{is_at_free, AtFree};
pub use chain::{is_chain_graph, ChainSpec};
pub use hamiltonian::{hamiltonian_path, HAMILTONIAN_VERTEX_LIMIT};
pub use interval::{sharpness_family_interval, DominatingPath, IntervalRepresentation};
pub use threshold::{max_weight_dominating_vertex, recognize_threshold, ThresholdSpec};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = Rational64;

/// Any of the intensional descriptions a graph can be realized from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassRepresentation {
    Interval(IntervalRepresentation),
    Arc(ArcRepresentation),
    Threshold(ThresholdSpec),
    Chain(ChainSpec),
}

impl ClassRepresentation {
    pub fn realize(&self) -> Result<Graph> {
        match self {
            ClassRepresentation::Interval(r) => r.realize(),
            ClassRepresentation::Arc(r) => r.realize(),
            ClassRepresentation::Threshold(r) => r.realize(),
            ClassRepresentation::Chain(r) => r.realize(),
        }
    }
}

/// Parses `3`, `-2`, `7/4` or `0.125` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::arg(format!("not a rational number: {text:?}"));
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let w: i64 = if whole_digits.is_empty() {
            0
        } else {
            whole_digits.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = Rational::new(w * scale + f, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    t.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
