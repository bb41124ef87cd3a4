//! JSON interchange for exact polynomials and tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly2::Poly2;
use crate::scalar::parse_rational;
use crate::{Poly2Q, PolyTableQ, Rational};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub i: u32,
    pub j: u32,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct EntryJson {
    pub p: u32,
    pub q: u32,
    pub poly: PolyJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TableJson {
    pub lambda: String,
    pub max_degree: u32,
    pub entries: Vec<EntryJson>,
}

impl From<&Poly2Q> for PolyJson {
    fn from(p: &Poly2Q) -> Self {
        PolyJson {
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    i: m.i,
                    j: m.j,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for Poly2Q {
    type Error = Error;

    fn try_from(p: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for t in &p.terms {
            let c = parse_rational(&format!("{}/{}", t.num, t.den))?;
            terms.push((t.i, t.j, c));
        }
        Ok(Poly2::from_terms(terms))
    }
}

pub fn poly_to_json(p: &Poly2Q) -> Result<String> {
    Ok(serde_json::to_string(&PolyJson::from(p))?)
}

pub fn poly_from_json(s: &str) -> Result<Poly2Q> {
    let v: PolyJson = serde_json::from_str(s)?;
    Poly2Q::try_from(&v)
}

fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl From<&PolyTableQ> for TableJson {
    fn from(t: &PolyTableQ) -> Self {
        TableJson {
            lambda: rational_string(t.lambda()),
            max_degree: t.max_degree(),
            entries: t
                .iter()
                .map(|(p, q, poly)| EntryJson {
                    p,
                    q,
                    poly: PolyJson::from(poly),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TableJson> for PolyTableQ {
    type Error = Error;

    fn try_from(t: &TableJson) -> Result<Self> {
        let lambda = parse_rational(&t.lambda)?;
        let cells = t
            .entries
            .iter()
            .map(|e| Ok((e.p, e.q, Poly2Q::try_from(&e.poly)?)))
            .collect::<Result<Vec<_>>>()?;
        PolyTableQ::from_entries(lambda, t.max_degree, cells)
    }
}

pub fn table_to_json(t: &PolyTableQ) -> Result<String> {
    Ok(serde_json::to_string_pretty(&TableJson::from(t))?)
}

pub fn table_from_json(s: &str) -> Result<PolyTableQ> {
    let v: TableJson = serde_json::from_str(s)?;
    PolyTableQ::try_from(&v)
}
