//! The JSON system format.
//!
//! ```json
//! {
//!   "n": 2,
//!   "supports": [[[0,0],[1,1]], [[0,0],[2,1],[1,2]], [[0,0],[2,1],[0,1]]],
//!   "coefficients": "generic",
//!   "delta": ["1/2", "1/2"],
//!   "Q": [[0,0]],
//!   "seed": 7
//! }
//! ```
//!
//! `coefficients` is either `"generic"` or one list of rationals per support,
//! written as `"p/q"` strings or integers.

use serde::Deserialize;
use toric_elim::{parse_rational, LatticePoint, Rat, SparseSystem};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub n: usize,
    pub supports: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub coefficients: CoefficientSpec,
    #[serde(default)]
    pub delta: Option<Vec<RationalText>>,
    #[serde(rename = "Q", default)]
    pub q: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Deserialize, Default)]
#[serde(untagged)]
pub enum CoefficientSpec {
    #[default]
    #[serde(skip)]
    Missing,
    Keyword(String),
    Values(Vec<Vec<RationalText>>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    pub fn value(&self) -> Result<Rat, String> {
        match self {
            RationalText::Text(s) => parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}")),
            RationalText::Integer(i) => Ok(Rat::from_integer((*i).into())),
        }
    }
}

/// Comma-separated rationals, as given to `--delta`.
pub fn parse_delta(text: &str) -> Result<Vec<Rat>, String> {
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}")))
        .collect()
}

/// Points separated by `;`, coordinates by `,`, as given to `--Q`.
pub fn parse_points(text: &str) -> Result<Vec<Vec<i64>>, String> {
    text.split(';')
        .map(|p| {
            p.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| format!("not an integer: {c:?}")))
                .collect()
        })
        .collect()
}

fn points(raw: &[Vec<i64>]) -> Vec<LatticePoint> {
    raw.iter().map(|p| LatticePoint(p.clone())).collect()
}

/// Input error raised while turning a file into a system.
#[derive(Debug)]
pub enum LoadError {
    Format(String),
    System(toric_elim::Error),
}

impl From<toric_elim::Error> for LoadError {
    fn from(e: toric_elim::Error) -> Self {
        LoadError::System(e)
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<SystemFile, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Format(e.to_string()))
    }

    pub fn into_system(
        self,
        delta: Option<Vec<Rat>>,
        q: Option<Vec<Vec<i64>>>,
    ) -> Result<SparseSystem, LoadError> {
        let supports: Vec<Vec<LatticePoint>> = self.supports.iter().map(|a| points(a)).collect();
        let mut system = SparseSystem::new(self.n, supports)?;
        match self.coefficients {
            CoefficientSpec::Missing => {}
            CoefficientSpec::Keyword(k) if k == "generic" => {}
            CoefficientSpec::Keyword(k) => {
                return Err(LoadError::Format(format!("unknown coefficient keyword {k:?}")));
            }
            CoefficientSpec::Values(values) => {
                let values = values
                    .iter()
                    .map(|row| row.iter().map(RationalText::value).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(LoadError::Format)?;
                system = system.with_coefficients(values)?;
            }
        }
        let delta = match (delta, self.delta) {
            (Some(d), _) => Some(d),
            (None, Some(d)) => {
                Some(d.iter().map(RationalText::value).collect::<Result<Vec<_>, _>>().map_err(LoadError::Format)?)
            }
            (None, None) => None,
        };
        if let Some(d) = delta {
            system = system.with_delta(d)?;
        }
        if let Some(q) = q.or(self.q) {
            system = system.with_q(&points(&q))?;
        }
        Ok(system)
    }
}
