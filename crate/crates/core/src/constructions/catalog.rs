//! Name-addressable access to every construction, as used by the CLI.
//!
//! A construction spec is a name followed by `key=value` pairs, e.g.
//! `counterexample-ck k=13 n=390` or `witness name=c8-plus-chords`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::gluing::Gluing;
use super::witness::Witness;
use super::*;
use crate::io::from_graph6;

pub const NAMES: &[&str] =
    &["T", "O", "R", "T-np", "L-np", "counterexample-ck", "small-triangulation", "witness", "glue"];

pub const WITNESS_NAMES: &[&str] = &[
    "g-star",
    "c8-plus-chords",
    "windmill",
    "h-star-12",
    "two-k4",
    "k23",
    "k2-join-k3bar",
    "c6-complement",
    "k2m",
    "theta4-seven",
];

pub const GLUING_NAMES: &[&str] = &["glue-fan", "glue-double-fan", "glue-long-fan", "glue-star", "glue-face"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionSpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl ConstructionSpec {
    pub fn new(name: impl Into<String>) -> Self {
        ConstructionSpec { name: name.into(), params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn raw(&self, key: &str) -> Result<&str, ConstructionError> {
        self.params.get(key).map(String::as_str).ok_or_else(|| ConstructionError::MissingParameter {
            name: self.name.clone(),
            param: key.to_string(),
        })
    }

    fn int(&self, key: &str) -> Result<usize, ConstructionError> {
        let raw = self.raw(key)?;
        raw.parse().map_err(|_| ConstructionError::BadParameter { param: key.into(), value: raw.into() })
    }

    fn base(&self) -> Result<Graph, ConstructionError> {
        let raw = self.raw("base")?;
        from_graph6(raw).map_err(|_| ConstructionError::BadParameter { param: "base".into(), value: raw.into() })
    }

    fn witness(&self) -> Result<Witness, ConstructionError> {
        Ok(match self.raw("name")? {
            "g-star" => Witness::GStar { k: self.int("k")?, n: self.int("n")? },
            "c8-plus-chords" => Witness::C8PlusChords,
            "windmill" => Witness::Windmill { n: self.int("n")? },
            "h-star-12" => Witness::HStar12,
            "two-k4" => Witness::TwoK4,
            "k23" => Witness::K23,
            "k2-join-k3bar" => Witness::K2JoinK3Bar,
            "c6-complement" => Witness::C6Complement,
            "k2m" => Witness::K2m { m: self.int("m")? },
            "theta4-seven" => Witness::Theta4Seven,
            other => return Err(ConstructionError::UnknownName(other.to_string())),
        })
    }

    fn gluing(&self) -> Result<Gluing, ConstructionError> {
        Ok(match self.raw("name")? {
            "glue-fan" => Gluing::Fan { k: self.int("k")? },
            "glue-double-fan" => Gluing::DoubleFan { k: self.int("k")? },
            "glue-long-fan" => Gluing::LongFan { k: self.int("k")? },
            "glue-star" => Gluing::Star { t: self.int("t")? },
            "glue-face" => Gluing::FaceVertices { t: self.int("t")? },
            other => return Err(ConstructionError::UnknownName(other.to_string())),
        })
    }

    pub fn build(&self) -> Result<Built, ConstructionError> {
        let (graph, expected_edges, citation): (Graph, Option<usize>, String) = match self.name.as_str() {
            "T" => {
                let m = self.int("m")?;
                (triangulation(m)?.graph, Some(3 * m - 6), "plane triangulation K_2 + P_{m-2}".into())
            }
            "O" => {
                let p = self.int("p")?;
                (
                    outerplanar(p)?,
                    Some(outerplanar_edges(p)),
                    "maximal outerplanar graph with maximum degree at most four".into(),
                )
            }
            "R" => {
                let (ell, k) = (self.int("ell")?, self.int("k")?);
                (spine(ell, k)?.graph, Some(spine_edges(ell, k)), "spine of the glued C_k-free construction".into())
            }
            "T-np" => {
                let (n, p) = (self.int("n")?, self.int("p")?);
                (
                    stacked_triangulation(n, p)?.graph,
                    Some(3 * n - 6),
                    "T_p with n-p vertices stacked into distinct faces; C_{2p+1}-free".into(),
                )
            }
            "L-np" => {
                let (n, q) = (self.int("n")?, self.int("q")?);
                (
                    paired_triangulation(n, q)?.graph,
                    Some(3 * n - 6),
                    "T_{p-1} with an adjacent pair in one face and single vertices in others; C_{2p}-free".into(),
                )
            }
            "counterexample-ck" => {
                let built = counterexample_ck(self.int("k")?, self.int("n")?)?;
                let e = built.params.expected_edges();
                (
                    built.graph,
                    Some(e),
                    "C_k-free planar graph with 3n-3t+2floor((t+1)/(k-1))-min(r+8,9) edges".into(),
                )
            }
            "small-triangulation" => {
                let n = self.int("n")?;
                (
                    small_regime_triangulation(self.int("k")?, n)?.graph,
                    Some(3 * n - 6),
                    "C_k-free plane triangulation for n <= k-5+floor((k-1)/2)".into(),
                )
            }
            "witness" => {
                let w = self.witness()?;
                (w.build()?, w.expected_edges(), w.citation().into())
            }
            "glue" => {
                let gl = self.gluing()?;
                let base = self.base()?;
                let expected = base.edge_count() + gl.edge_delta();
                (gl.apply(&base)?, Some(expected), gl.citation().into())
            }
            other => return Err(ConstructionError::UnknownName(other.to_string())),
        };
        Ok(Built { spec: self.clone(), graph, expected_edges, citation })
    }
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_whitespace();
        let name = tokens.next().ok_or_else(|| ConstructionError::UnknownName(String::new()))?;
        let mut spec = ConstructionSpec::new(name);
        for token in tokens {
            let (key, value) = token.split_once('=').ok_or_else(|| ConstructionError::BadParameter {
                param: token.to_string(),
                value: String::new(),
            })?;
            spec.params.insert(key.to_string(), value.to_string());
        }
        Ok(spec)
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Built {
    pub spec: ConstructionSpec,
    pub graph: Graph,
    /// Closed-form edge count, when the construction has one.
    pub expected_edges: Option<usize>,
    pub citation: String,
}

pub fn build(spec: &str) -> Result<Built, ConstructionError> {
    spec.parse::<ConstructionSpec>()?.build()
}
