//! Verbatim block lists shipped as JSON and loaded by name.

use crate::design::{Design, DownLinkCertificate};
use crate::io::{decode_document, Document};

use super::GeneratorError;

macro_rules! fixture_table {
    ($($name:literal),* $(,)?) => {
        const FIXTURES: &[(&str, &str)] =
            &[$(($name, include_str!(concat!("../../fixtures/", $name, ".json")))),*];
    };
}

fixture_table!(
    "ex-bijective-P6",
    "ex-bijective-P3",
    "ex-bijective-downlink",
    "c5-k11-cyclic",
    "c5-k11-order9",
    "k12-p4-metamorphosis",
    "k36-p4-metamorphosis",
    "k36-p4-downlink",
    "p4-l6",
    "p4-l9",
    "p4-l10",
    "p4-l13",
    "kite-degree2-t1",
    "kite-degree2-t2",
);

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

/// The raw JSON text of a fixture.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn fixture(name: &str) -> Result<Document, GeneratorError> {
    let text = fixture_text(name).ok_or_else(|| GeneratorError::UnknownFixture(name.to_string()))?;
    decode_document(text).map_err(|e| GeneratorError::Fixture { name: name.to_string(), reason: e.to_string() })
}

pub fn fixture_design(name: &str) -> Result<Design, GeneratorError> {
    match fixture(name)? {
        Document::Design(d) => Ok(d),
        Document::Certificate(_) => {
            Err(GeneratorError::Fixture { name: name.to_string(), reason: "is a certificate".into() })
        }
    }
}

pub fn fixture_certificate(name: &str) -> Result<DownLinkCertificate, GeneratorError> {
    match fixture(name)? {
        Document::Certificate(c) => Ok(c),
        Document::Design(_) => {
            Err(GeneratorError::Fixture { name: name.to_string(), reason: "is a design".into() })
        }
    }
}
