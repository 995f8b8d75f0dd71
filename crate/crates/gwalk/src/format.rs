//! JSON documents for states, measures, evolutions and search results.
//!
//! Every rational travels as a `"p/q"` string so nothing passes through
//! floating point. Parsing accepts unreduced input (`"2/4"`, `"3"`) and
//! always writes the canonical form back.

use std::str::FromStr;

use gwalk_core::search::{SearchResult, SupportCandidate};
use gwalk_core::{Eigenvalue, LatticePoint, Measure, Rational, Scalar, ShiftKind, WaveFunction};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry {index}: point has {found} coordinates, expected {expected}")]
    PointLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {index}: bad rational {text:?}")]
    BadRational { index: usize, text: String },
    #[error(transparent)]
    State(#[from] gwalk_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftName {
    Moving,
    Flipflop,
}

impl From<ShiftKind> for ShiftName {
    fn from(s: ShiftKind) -> Self {
        match s {
            ShiftKind::Moving => ShiftName::Moving,
            ShiftKind::FlipFlop => ShiftName::Flipflop,
        }
    }
}

impl From<ShiftName> for ShiftKind {
    fn from(s: ShiftName) -> Self {
        match s {
            ShiftName::Moving => ShiftKind::Moving,
            ShiftName::Flipflop => ShiftKind::FlipFlop,
        }
    }
}

/// Accepts `+1`, `1`, `-1` and the typographic minus `−1`.
pub fn parse_lambda(s: &str) -> Result<Eigenvalue, String> {
    match s.trim() {
        "+1" | "1" => Ok(Eigenvalue::Plus),
        "-1" | "\u{2212}1" => Ok(Eigenvalue::Minus),
        other => Err(format!("eigenvalue must be +1 or -1, got {other:?}")),
    }
}

/// `+1` / `-1` in ASCII.
pub fn lambda_str(l: Eigenvalue) -> &'static str {
    match l {
        Eigenvalue::Plus => "+1",
        Eigenvalue::Minus => "-1",
    }
}

mod lambda_opt {
    use super::*;

    pub fn serialize<S: Serializer>(l: &Option<Eigenvalue>, s: S) -> Result<S::Ok, S::Error> {
        match l {
            Some(l) => s.serialize_str(lambda_str(*l)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Eigenvalue>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|s| parse_lambda(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

mod lambda_req {
    use super::*;

    pub fn serialize<S: Serializer>(l: &Eigenvalue, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(lambda_str(*l))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Eigenvalue, D::Error> {
        let raw = String::deserialize(d)?;
        parse_lambda(&raw).map_err(serde::de::Error::custom)
    }
}

fn parse_rational(text: &str, index: usize) -> Result<Rational, FormatError> {
    Rational::from_str(text).map_err(|_| FormatError::BadRational {
        index,
        text: text.to_owned(),
    })
}

fn check_point(x: &[i64], d: usize, index: usize) -> Result<LatticePoint, FormatError> {
    if x.len() != d {
        return Err(FormatError::PointLength {
            index,
            expected: d,
            found: x.len(),
        });
    }
    Ok(LatticePoint::new(x.to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateEntry {
    pub x: Vec<i64>,
    pub amp: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDocument {
    pub d: usize,
    pub shift: ShiftName,
    #[serde(default, with = "lambda_opt", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Eigenvalue>,
    pub entries: Vec<StateEntry>,
}

impl StateDocument {
    pub fn from_state(psi: &WaveFunction, shift: ShiftKind, lambda: Option<Eigenvalue>) -> Self {
        let entries = psi
            .iter()
            .map(|(x, amps)| StateEntry {
                x: x.coords().to_vec(),
                amp: amps
                    .iter()
                    .map(|s| [s.re.to_string(), s.im.to_string()])
                    .collect(),
            })
            .collect();
        StateDocument {
            d: psi.dim(),
            shift: shift.into(),
            lambda,
            entries,
        }
    }

    pub fn shift(&self) -> ShiftKind {
        self.shift.into()
    }

    pub fn to_state(&self) -> Result<WaveFunction, FormatError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (index, e) in self.entries.iter().enumerate() {
            let x = check_point(&e.x, self.d, index)?;
            let amps = e
                .amp
                .iter()
                .map(|[re, im]| {
                    Ok(Scalar::new(
                        parse_rational(re, index)?,
                        parse_rational(im, index)?,
                    ))
                })
                .collect::<Result<Vec<_>, FormatError>>()?;
            entries.push((x, amps));
        }
        Ok(WaveFunction::from_entries(self.d, entries)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureEntry {
    pub x: Vec<i64>,
    pub mu: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureDocument {
    pub d: usize,
    pub entries: Vec<MeasureEntry>,
}

impl MeasureDocument {
    pub fn from_measure(mu: &Measure) -> Self {
        MeasureDocument {
            d: mu.dim(),
            entries: mu
                .iter()
                .map(|(x, m)| MeasureEntry {
                    x: x.coords().to_vec(),
                    mu: m.to_string(),
                })
                .collect(),
        }
    }

    /// Point-value pairs with the values parsed, in document order.
    pub fn values(&self) -> Result<Vec<(LatticePoint, Rational)>, FormatError> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| Ok((check_point(&e.x, self.d, i)?, parse_rational(&e.mu, i)?)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvolveDocument {
    pub n: usize,
    pub state: StateDocument,
    pub measure: MeasureDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub size: usize,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub support: Vec<Vec<i64>>,
    pub witness: StateDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDocument {
    pub d: usize,
    pub shift: ShiftName,
    #[serde(with = "lambda_req")]
    pub lambda: Eigenvalue,
    pub window_radius: u32,
    pub max_size: usize,
    pub certified_min: Option<usize>,
    pub found: Option<Hit>,
    pub scans: Vec<ScanEntry>,
}

impl SearchDocument {
    pub fn from_result(r: &SearchResult) -> Self {
        SearchDocument {
            d: r.dim,
            shift: r.shift.into(),
            lambda: r.lambda,
            window_radius: r.window_radius,
            max_size: r.max_size,
            certified_min: r.certified_min,
            found: r
                .found
                .as_ref()
                .map(|(cand, w)| hit(cand, w, r.shift, r.lambda)),
            scans: r
                .scans
                .iter()
                .map(|s| ScanEntry {
                    size: s.size,
                    candidates: s.candidates,
                })
                .collect(),
        }
    }
}

fn hit(cand: &SupportCandidate, w: &WaveFunction, shift: ShiftKind, lambda: Eigenvalue) -> Hit {
    Hit {
        support: cand.points().iter().map(|p| p.coords().to_vec()).collect(),
        witness: StateDocument::from_state(w, shift, Some(lambda)),
    }
}

/// Written in place of a search result when the candidate budget runs out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetDocument {
    pub d: usize,
    pub shift: ShiftName,
    #[serde(with = "lambda_req")]
    pub lambda: Eigenvalue,
    pub window_radius: u32,
    pub max_size: usize,
    pub budget: u64,
    pub scanned: u64,
    /// Every size below this one was scanned completely without a hit.
    pub reached_size: usize,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}
