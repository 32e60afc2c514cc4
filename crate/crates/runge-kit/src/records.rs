//! JSON-lines persistence.
//!
//! Every line is one [`ResultRecord`]. Integers are written as decimal
//! strings and polynomials as coefficient arrays, constant term first, so
//! nothing is lost to 64-bit JSON numbers.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{IntInterval, IntPoly, RatPoly, SquarefreeDecomposition};

pub const ARTIFACT_VERSION: &str = concat!("runge-kit ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Solution,
    Report,
    Verification,
    PointCheck,
    Family,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::Solution => "solution",
            RecordKind::Report => "report",
            RecordKind::Verification => "verification",
            RecordKind::PointCheck => "point-check",
            RecordKind::Family => "family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub kind: RecordKind,
    /// Module, operation and parameters that reproduce the record.
    pub source: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub payload: serde_json::Value,
}

impl ResultRecord {
    pub fn new(kind: RecordKind, source: impl Into<String>, payload: &impl Serialize) -> Result<Self> {
        Ok(ResultRecord {
            kind,
            source: source.into(),
            version: ARTIFACT_VERSION.to_string(),
            timestamp: None,
            payload: serde_json::to_value(payload)?,
        })
    }

    pub fn stamped(mut self) -> Self {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
        self.timestamp = Some(format!("{}.{:03}", now.as_secs(), now.subsec_millis()));
        self
    }

    pub fn to_line(&self) -> Result<String> {
        let mut s = serde_json::to_string(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// Appends one record as a single line.
pub fn write_jsonl(sink: &mut impl Write, record: &ResultRecord) -> Result<()> {
    sink.write_all(record.to_line()?.as_bytes())?;
    Ok(())
}

/// Records read back from a file, plus an unterminated tail if one was found.
#[derive(Debug, Default)]
pub struct JsonlContents {
    pub records: Vec<ResultRecord>,
    /// An unparseable final line without a newline, as left by a crash.
    pub partial_tail: Option<String>,
}

pub fn read_jsonl(path: impl AsRef<Path>) -> Result<JsonlContents> {
    read_jsonl_from(File::open(path)?)
}

pub fn read_jsonl_from(reader: impl Read) -> Result<JsonlContents> {
    let mut out = JsonlContents::default();
    let mut reader = BufReader::new(reader);
    let mut line = String::new();
    let mut lineno = 0;
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        lineno += 1;
        let terminated = line.ends_with('\n');
        let body = line.trim_end_matches(['\n', '\r']);
        if body.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ResultRecord>(body) {
            Ok(r) => out.records.push(r),
            Err(_) if !terminated => {
                eprintln!("warning: ignoring partial final line {lineno}");
                out.partial_tail = Some(body.to_string());
            }
            Err(e) => return Err(Error::Record { line: lineno, message: e.to_string() }),
        }
    }
    Ok(out)
}

/// `#[serde(with = "dec")]` for a [`BigInt`] written as a decimal string.
pub mod dec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `#[serde(with = "dec_opt")]` for an optional [`BigInt`].
pub mod dec_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigInt>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| s.parse().map_err(D::Error::custom)).transpose()
    }
}

/// `#[serde(with = "dec_vec")]` for a list of integers written as strings.
pub mod dec_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.into_iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

/// `#[serde(with = "rat")]` for a [`BigRational`] written as `"p/q"` or `"p"`.
pub mod rat {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad rational {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad rational {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

fn ser_strings<S: Serializer, T: ToString>(items: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(items.len()))?;
    for c in items {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_strings(self.coeffs(), s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let cs = v.iter().map(|c| c.parse::<BigInt>().map_err(D::Error::custom)).collect::<std::result::Result<_, _>>()?;
        Ok(IntPoly::new(cs))
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_strings(self.coeffs(), s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let cs = v.iter().map(|c| parse_rational(c).map_err(D::Error::custom)).collect::<std::result::Result<_, _>>()?;
        Ok(RatPoly::new(cs))
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    #[serde(with = "dec")]
    lo: BigInt,
    #[serde(with = "dec")]
    hi: BigInt,
}

impl Serialize for IntInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.bounds() {
            None => s.serialize_none(),
            Some((lo, hi)) => IntervalRepr { lo: lo.clone(), hi: hi.clone() }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for IntInterval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Option::<IntervalRepr>::deserialize(d)? {
            None => IntInterval::Empty,
            Some(r) => IntInterval::new(r.lo, r.hi),
        })
    }
}

#[derive(Serialize)]
struct FactorRepr<'a> {
    factor: &'a IntPoly,
    multiplicity: u32,
}

impl Serialize for SquarefreeDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            content: String,
            factors: Vec<FactorRepr<'a>>,
        }
        Repr {
            content: self.content.to_string(),
            factors: self.factors.iter().map(|(f, k)| FactorRepr { factor: f, multiplicity: *k }).collect(),
        }
        .serialize(s)
    }
}
