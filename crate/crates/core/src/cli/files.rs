//! JSON input and output files.
//!
//! A factorization file holds `field`, `vars`, an optional monomial `order`,
//! `W`, `lambda`, and the matrices `e1`, `e0` as arrays of rows of polynomial
//! strings. Morphism and complex files refer to factorizations by relative
//! path, by a built-in name such as `An:3:1`, or inline.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::mf::{corpus, MFMorphism, MatrixFactorization, PairComplex};
use crate::mirror::ToricSpec;
use crate::poly::{Field, MonomialOrder, PolyError, PolyMatrix, Polynomial, RingContext};

use super::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationFile {
    pub field: String,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(rename = "W")]
    pub w: String,
    #[serde(default = "zero")]
    pub lambda: String,
    pub e1: Vec<Vec<String>>,
    pub e0: Vec<Vec<String>>,
}

fn zero() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectRef {
    Named(String),
    Inline(FactorizationFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntries {
    pub p1: Vec<Vec<String>>,
    pub p0: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: ObjectRef,
    pub target: ObjectRef,
    pub p1: Vec<Vec<String>>,
    pub p0: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub objects: Vec<ObjectRef>,
    pub maps: Vec<MapEntries>,
}

fn matrix_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.to_strings()
}

fn located(location: &str, e: PolyError) -> CliError {
    match e {
        PolyError::Parse { .. } => CliError::domain("PARSE_ERROR", format!("{location}: {e}")),
        other => CliError::domain("SCHEMA_ERROR", format!("{location}: {other}")),
    }
}

fn parse_matrix(ring: &crate::poly::Ring, name: &str, rows: &[Vec<String>]) -> Result<PolyMatrix, CliError> {
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            Polynomial::parse(ring, s).map_err(|e| located(&format!("{name}[{i}][{j}]"), e))?;
        }
    }
    PolyMatrix::parse(ring, rows).map_err(|e| located(name, e))
}

impl FactorizationFile {
    pub fn from_factorization(e: &MatrixFactorization) -> Self {
        let ring = e.ring();
        FactorizationFile {
            field: ring.field().to_string(),
            vars: ring.vars().to_vec(),
            order: (ring.order() != MonomialOrder::default()).then(|| ring.order().name().to_string()),
            w: e.w().to_string(),
            lambda: e.lambda().to_string(),
            e1: matrix_strings(e.e1()),
            e0: matrix_strings(e.e0()),
        }
    }

    pub fn to_factorization(&self, field: Option<Field>) -> Result<MatrixFactorization, CliError> {
        let f = match field {
            Some(f) => f,
            None => self.field.parse().map_err(|e: PolyError| CliError::domain("SCHEMA_ERROR", format!("field: {e}")))?,
        };
        let order = match &self.order {
            None => MonomialOrder::default(),
            Some(o) => MonomialOrder::from_name(o)
                .ok_or_else(|| CliError::domain("SCHEMA_ERROR", format!("order: unknown monomial order '{o}'")))?,
        };
        let ring = RingContext::new(&self.vars, f, order).map_err(|e| located("vars", e))?;
        let w = Polynomial::parse(&ring, &self.w).map_err(|e| located("W", e))?;
        let lambda = Polynomial::parse(&ring, &self.lambda).map_err(|e| located("lambda", e))?;
        if !lambda.is_constant() {
            return Err(CliError::domain("SCHEMA_ERROR", "lambda: must be a constant".to_string()));
        }
        let e1 = parse_matrix(&ring, "e1", &self.e1)?;
        let e0 = parse_matrix(&ring, "e0", &self.e0)?;
        Ok(MatrixFactorization::new(&ring, w, lambda.constant_coeff(), e1, e0)?)
    }

    /// Canonical text: pretty JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Loaded input of any of the four kinds.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Input {
    Factorization(MatrixFactorization),
    Morphism(MFMorphism),
    Complex(PairComplex),
    Toric(ToricSpec),
}

pub struct Loader {
    pub field: Option<Field>,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::domain(
            "PARSE_ERROR",
            format!("{}: line {} column {}: {e}", path.display(), e.line(), e.column()),
        )
    })
}

fn from_value<T: DeserializeOwned>(path: &Path, v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::domain("SCHEMA_ERROR", format!("{}: {e}", path.display())))
}

/// Parses `An:<n>:<a>`.
pub fn preset_factorization(name: &str) -> Option<Result<MatrixFactorization, CliError>> {
    let rest = name.strip_prefix("An:")?;
    let mut parts = rest.split(':');
    let parsed = (|| {
        let n: u32 = parts.next()?.parse().ok()?;
        let a: u32 = parts.next()?.parse().ok()?;
        parts.next().is_none().then_some((n, a))
    })();
    Some(match parsed.and_then(|(n, a)| corpus::try_a_n(n, a)) {
        Some(e) => Ok(e),
        None => Err(CliError::Usage(format!("'{name}' is not a valid preset; expected An:<n>:<a> with 1 <= a <= n"))),
    })
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

impl Loader {
    fn with_field(&self, e: MatrixFactorization) -> Result<MatrixFactorization, CliError> {
        match self.field {
            Some(f) if f != e.ring().field() => FactorizationFile::from_factorization(&e).to_factorization(Some(f)),
            _ => Ok(e),
        }
    }

    /// A factorization given as a path or a built-in name.
    pub fn factorization(&self, arg: &str) -> Result<MatrixFactorization, CliError> {
        self.object(&ObjectRef::Named(arg.to_string()), Path::new(""))
    }

    fn object(&self, r: &ObjectRef, base: &Path) -> Result<MatrixFactorization, CliError> {
        match r {
            ObjectRef::Inline(f) => f.to_factorization(self.field),
            ObjectRef::Named(name) => {
                if let Some(p) = preset_factorization(name) {
                    return self.with_field(p?);
                }
                match self.load(&base.join(name))? {
                    Input::Factorization(e) => Ok(e),
                    _ => Err(CliError::domain("SCHEMA_ERROR", format!("{name}: not a factorization file"))),
                }
            }
        }
    }

    fn morphism(&self, m: &MorphismFile, base: &Path) -> Result<MFMorphism, CliError> {
        let source = self.object(&m.source, base)?;
        let target = self.object(&m.target, base)?;
        let p1 = parse_matrix(source.ring(), "p1", &m.p1)?;
        let p0 = parse_matrix(source.ring(), "p0", &m.p0)?;
        Ok(MFMorphism::new(&source, &target, p1, p0)?)
    }

    fn complex(&self, c: &ComplexFile, base: &Path) -> Result<PairComplex, CliError> {
        let objects = c.objects.iter().map(|o| self.object(o, base)).collect::<Result<Vec<_>, _>>()?;
        if c.maps.len() + 1 != objects.len() {
            return Err(CliError::domain(
                "SCHEMA_ERROR",
                format!("{} objects need {} maps, found {}", objects.len(), objects.len().saturating_sub(1), c.maps.len()),
            ));
        }
        let maps = c
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let ring = objects[i].ring();
                let p1 = parse_matrix(ring, &format!("maps[{i}].p1"), &m.p1)?;
                let p0 = parse_matrix(ring, &format!("maps[{i}].p0"), &m.p0)?;
                Ok(MFMorphism::new(&objects[i], &objects[i + 1], p1, p0)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(PairComplex::new(objects, maps)?)
    }

    /// Loads a file, recognising its kind from its keys.
    pub fn load(&self, path: &Path) -> Result<Input, CliError> {
        let v = read_json(path)?;
        let base = base_dir(path);
        let has = |k: &str| v.get(k).is_some();
        if has("rays") {
            Ok(Input::Toric(from_value(path, v)?))
        } else if has("objects") {
            let c: ComplexFile = from_value(path, v)?;
            Ok(Input::Complex(self.complex(&c, &base)?))
        } else if has("p1") || has("source") {
            let m: MorphismFile = from_value(path, v)?;
            Ok(Input::Morphism(self.morphism(&m, &base)?))
        } else {
            let f: FactorizationFile = from_value(path, v)?;
            Ok(Input::Factorization(f.to_factorization(self.field)?))
        }
    }

    pub fn load_morphism(&self, path: &Path) -> Result<MFMorphism, CliError> {
        match self.load(path)? {
            Input::Morphism(m) => Ok(m),
            _ => Err(CliError::domain("SCHEMA_ERROR", format!("{}: not a morphism file", path.display()))),
        }
    }

    pub fn load_complex(&self, path: &Path) -> Result<PairComplex, CliError> {
        match self.load(path)? {
            Input::Complex(c) => Ok(c),
            _ => Err(CliError::domain("SCHEMA_ERROR", format!("{}: not a complex file", path.display()))),
        }
    }

    pub fn load_toric(&self, path: &Path) -> Result<ToricSpec, CliError> {
        match self.load(path)? {
            Input::Toric(t) => Ok(t),
            _ => Err(CliError::domain("SCHEMA_ERROR", format!("{}: not a toric file", path.display()))),
        }
    }
}
