//! The plain-text space file format.
//!
//! ```text
//! # comments run to end of line
//! carrier a b
//! denom 10
//! open 0 0
//! open 8 4
//! open 10 10
//! ```
//!
//! `carrier` and `denom` appear once each; every `open` line lists one
//! numerator per carrier point, in carrier order. The same format is used for
//! generator files, where the `open` lines need not form a topology yet.

use std::fmt::Write as _;
use std::sync::Arc;

use fuzzbound_core::topology::{complete_family, validate_family};
use fuzzbound_core::{Carrier, FuzzySet, FuzzyTopology, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing `carrier` line")]
    MissingCarrier,
    #[error("missing `denom` line")]
    MissingDenominator,
    #[error("`{0}` given more than once")]
    Repeated(&'static str),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{0}` is not a non-negative integer")]
    BadNumber(String),
    #[error("`denom` takes exactly one value")]
    DenominatorArity,
    #[error(transparent)]
    Core(#[from] fuzzbound_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 for errors about the file as a whole.
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A parsed file: carrier, denominator and the listed open sets, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceFile {
    pub carrier: Arc<Carrier>,
    pub denominator: u32,
    pub opens: Vec<FuzzySet>,
}

fn number(token: &str, line: usize) -> Result<u32, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::BadNumber(token.to_owned()),
    })
}

impl SpaceFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut carrier: Option<(usize, Vec<&str>)> = None;
        let mut denom: Option<u32> = None;
        let mut opens: Vec<(usize, Vec<u32>)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or_default();
            let mut tokens = content.split_whitespace();
            let Some(directive) = tokens.next() else { continue };
            let err = |kind| ParseError { line, kind };
            match directive {
                "carrier" => {
                    if carrier.is_some() {
                        return Err(err(ParseErrorKind::Repeated("carrier")));
                    }
                    carrier = Some((line, tokens.collect()));
                }
                "denom" => {
                    if denom.is_some() {
                        return Err(err(ParseErrorKind::Repeated("denom")));
                    }
                    let values: Vec<&str> = tokens.collect();
                    let [value] = values[..] else {
                        return Err(err(ParseErrorKind::DenominatorArity));
                    };
                    let d = number(value, line)?;
                    if d == 0 {
                        return Err(err(fuzzbound_core::Error::ZeroDenominator.into()));
                    }
                    denom = Some(d);
                }
                "open" => {
                    let values = tokens.map(|t| number(t, line)).collect::<Result<Vec<_>, _>>()?;
                    opens.push((line, values));
                }
                other => return Err(err(ParseErrorKind::UnknownDirective(other.to_owned()))),
            }
        }

        let whole = |kind| ParseError { line: 0, kind };
        let (carrier_line, labels) = carrier.ok_or(whole(ParseErrorKind::MissingCarrier))?;
        let denominator = denom.ok_or(whole(ParseErrorKind::MissingDenominator))?;
        let carrier = Arc::new(Carrier::new(labels).map_err(|e| ParseError {
            line: carrier_line,
            kind: e.into(),
        })?);
        let opens = opens
            .into_iter()
            .map(|(line, values)| {
                FuzzySet::new(carrier.clone(), denominator, values).map_err(|e| ParseError { line, kind: e.into() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpaceFile {
            carrier,
            denominator,
            opens,
        })
    }

    /// Axiom violations of the listed family; empty when it is a topology.
    pub fn violations(&self) -> Vec<Violation> {
        validate_family(&self.carrier, self.denominator, &self.opens)
    }

    /// The listed family as a topology, or the reasons it is not one.
    pub fn topology(&self) -> Result<FuzzyTopology, Vec<Violation>> {
        let violations = self.violations();
        if !violations.is_empty() {
            return Err(violations);
        }
        Ok(FuzzyTopology::new(self.carrier.clone(), self.denominator, self.opens.clone()).expect("validated family"))
    }

    /// Smallest topology containing the listed sets.
    pub fn complete(&self, cap: usize) -> fuzzbound_core::Result<FuzzyTopology> {
        complete_family(&self.carrier, self.denominator, &self.opens, cap)
    }

    /// Parse a command-line set `k1,k2,...` on this file's carrier and grid.
    pub fn parse_set(&self, text: &str) -> Result<FuzzySet, ParseError> {
        let values = text
            .split(',')
            .map(|t| number(t.trim(), 0))
            .collect::<Result<Vec<_>, _>>()?;
        FuzzySet::new(self.carrier.clone(), self.denominator, values).map_err(|e| ParseError {
            line: 0,
            kind: e.into(),
        })
    }
}

/// Render a topology; [`SpaceFile::parse`] of the result gives back the same topology.
pub fn render(t: &FuzzyTopology) -> String {
    let mut out = String::new();
    writeln!(out, "carrier {}", t.carrier().labels().join(" ")).unwrap();
    writeln!(out, "denom {}", t.denominator()).unwrap();
    for u in t.opens() {
        writeln!(out, "open {u}").unwrap();
    }
    out
}
