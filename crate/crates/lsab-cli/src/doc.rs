//! The `.lsab` document format: JSON with a version header and a list of
//! named objects holding sparse rational entries. Parsing validates
//! everything up front — syntax, shapes, rationals, name uniqueness and
//! cross-references — and reports the offending field on failure.

use std::collections::BTreeMap;

use lsab_core::algebra::{Algebra, AlgebraKind};
use lsab_core::bialgebra::BialgebraPair;
use lsab_core::form::BilinearForm;
use lsab_core::matrix::Matrix;
use lsab_core::rep::Representation;
use lsab_core::scalar::Scalar;
use lsab_core::tensor::Tensor2;
use lsab_core::yangbaxter::OOperatorData;
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("JSON syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

impl DocError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocError::Invalid {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type DocResult<T> = std::result::Result<T, DocError>;

/// One named object of a document.
#[derive(Clone, Debug, PartialEq)]
pub enum ObjectValue {
    Algebra(Algebra),
    Tensor2(Tensor2),
    Form(BilinearForm),
    Rep { algebra: String, rep: Representation },
    Bimodule { algebra: String, s: String, t: String },
    Pair { algebra: String, dual: String },
    OOperator { lie: String, rep: String, map: String },
}

impl ObjectValue {
    pub fn type_name(&self) -> &'static str {
        match self {
            ObjectValue::Algebra(_) => "algebra",
            ObjectValue::Tensor2(_) => "tensor2",
            ObjectValue::Form(_) => "form",
            ObjectValue::Rep { .. } => "rep",
            ObjectValue::Bimodule { .. } => "bimodule",
            ObjectValue::Pair { .. } => "pair",
            ObjectValue::OOperator { .. } => "ooperator",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedObject {
    pub name: String,
    pub value: ObjectValue,
}

/// A parsed, fully validated document.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Document {
    pub objects: Vec<NamedObject>,
}

impl Document {
    pub fn find(&self, name: &str) -> Option<&ObjectValue> {
        self.objects
            .iter()
            .find(|o| o.name == name)
            .map(|o| &o.value)
    }

    fn lookup<'a, T>(
        &'a self,
        name: &str,
        what: &str,
        extract: impl Fn(&'a ObjectValue) -> Option<T>,
    ) -> DocResult<T> {
        match self.find(name) {
            None => Err(DocError::at(
                format!("reference `{name}`"),
                "no object with this name",
            )),
            Some(v) => extract(v).ok_or_else(|| {
                DocError::at(
                    format!("reference `{name}`"),
                    format!("expected a {what}, found a {}", v.type_name()),
                )
            }),
        }
    }

    pub fn algebra(&self, name: &str) -> DocResult<&Algebra> {
        self.lookup(name, "algebra", |v| match v {
            ObjectValue::Algebra(a) => Some(a),
            _ => None,
        })
    }

    pub fn tensor2(&self, name: &str) -> DocResult<&Tensor2> {
        self.lookup(name, "tensor2", |v| match v {
            ObjectValue::Tensor2(t) => Some(t),
            _ => None,
        })
    }

    /// A tensor2 read as a linear map (its coefficient matrix).
    pub fn map_matrix(&self, name: &str) -> DocResult<Matrix> {
        Ok(self.tensor2(name)?.as_map())
    }

    pub fn form(&self, name: &str) -> DocResult<&BilinearForm> {
        self.lookup(name, "form", |v| match v {
            ObjectValue::Form(f) => Some(f),
            _ => None,
        })
    }

    pub fn rep(&self, name: &str) -> DocResult<&Representation> {
        self.lookup(name, "rep", |v| match v {
            ObjectValue::Rep { rep, .. } => Some(rep),
            _ => None,
        })
    }

    pub fn pair(&self, name: &str) -> DocResult<BialgebraPair> {
        let (algebra, dual) = self.lookup(name, "pair", |v| match v {
            ObjectValue::Pair { algebra, dual } => Some((algebra.clone(), dual.clone())),
            _ => None,
        })?;
        let a = self.algebra(&algebra)?.clone();
        let d = self.algebra(&dual)?.clone();
        BialgebraPair::new(a, d)
            .map_err(|e| DocError::at(format!("pair `{name}`"), e.to_string()))
    }

    pub fn bimodule(&self, name: &str) -> DocResult<(&Algebra, &Representation, &Representation)> {
        let (algebra, s, t) = self.lookup(name, "bimodule", |v| match v {
            ObjectValue::Bimodule { algebra, s, t } => {
                Some((algebra.clone(), s.clone(), t.clone()))
            }
            _ => None,
        })?;
        Ok((self.algebra(&algebra)?, self.rep(&s)?, self.rep(&t)?))
    }

    pub fn ooperator(&self, name: &str) -> DocResult<OOperatorData> {
        let (lie, rep, map) = self.lookup(name, "ooperator", |v| match v {
            ObjectValue::OOperator { lie, rep, map } => {
                Some((lie.clone(), rep.clone(), map.clone()))
            }
            _ => None,
        })?;
        OOperatorData::new(
            self.algebra(&lie)?.clone(),
            self.rep(&rep)?.clone(),
            self.map_matrix(&map)?,
        )
        .map_err(|e| DocError::at(format!("ooperator `{name}`"), e.to_string()))
    }

    pub fn push(&mut self, name: impl Into<String>, value: ObjectValue) {
        self.objects.push(NamedObject {
            name: name.into(),
            value,
        });
    }
}

fn as_object<'v>(v: &'v Value, path: &str) -> DocResult<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| DocError::at(path, "expected a JSON object"))
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str, path: &str) -> DocResult<&'v Value> {
    obj.get(key)
        .ok_or_else(|| DocError::at(path, format!("missing field `{key}`")))
}

fn as_usize(v: &Value, path: &str) -> DocResult<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| DocError::at(path, "expected a non-negative integer"))
}

fn index_in(v: &Value, bound: usize, path: &str) -> DocResult<usize> {
    let n = as_usize(v, path)?;
    if n >= bound {
        return Err(DocError::at(
            path,
            format!("index {n} out of range (dimension {bound})"),
        ));
    }
    Ok(n)
}

fn as_str<'v>(v: &'v Value, path: &str) -> DocResult<&'v str> {
    v.as_str()
        .ok_or_else(|| DocError::at(path, "expected a string"))
}

fn scalar(v: &Value, lenient: bool, path: &str) -> DocResult<Scalar> {
    let s = as_str(v, path)?;
    let parsed = if lenient {
        Scalar::parse_lenient(s)
    } else {
        Scalar::parse_strict(s)
    };
    parsed.map_err(|e| DocError::at(path, e.to_string()))
}

fn known_fields(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> DocResult<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(DocError::at(path, format!("unknown field `{key}`")));
        }
    }
    Ok(())
}

/// Parses and validates a document. `lenient` normalizes unreduced
/// rationals instead of rejecting them.
pub fn parse_document(text: &str, lenient: bool) -> DocResult<Document> {
    let root: Value = serde_json::from_str(text)?;
    let root = as_object(&root, "document")?;
    known_fields(root, &["version", "objects"], "document")?;
    let version = as_usize(field(root, "version", "document")?, "document.version")?;
    if version != 1 {
        return Err(DocError::at(
            "document.version",
            format!("unsupported version {version}, expected 1"),
        ));
    }
    let objects = field(root, "objects", "document")?
        .as_array()
        .ok_or_else(|| DocError::at("document.objects", "expected an array"))?;
    let mut doc = Document::default();
    for (idx, obj) in objects.iter().enumerate() {
        let path = format!("objects[{idx}]");
        let obj = as_object(obj, &path)?;
        let name = as_str(field(obj, "name", &path)?, &format!("{path}.name"))?.to_owned();
        if name.is_empty() {
            return Err(DocError::at(format!("{path}.name"), "name must be non-empty"));
        }
        if doc.find(&name).is_some() {
            return Err(DocError::at(
                format!("{path}.name"),
                format!("duplicate object name `{name}`"),
            ));
        }
        let ty = as_str(field(obj, "type", &path)?, &format!("{path}.type"))?;
        let value = match ty {
            "algebra" => parse_algebra(obj, &name, lenient, &path)?,
            "tensor2" => parse_tensor2(obj, lenient, &path)?,
            "form" => parse_form(obj, lenient, &path)?,
            "rep" => parse_rep(obj, &doc, lenient, &path)?,
            "bimodule" => parse_bimodule(obj, &doc, &path)?,
            "pair" => parse_pair(obj, &doc, &path)?,
            "ooperator" => parse_ooperator(obj, &doc, &path)?,
            other => {
                return Err(DocError::at(
                    format!("{path}.type"),
                    format!("unknown kind tag `{other}`"),
                ))
            }
        };
        doc.push(name, value);
    }
    Ok(doc)
}

fn parse_algebra(
    obj: &Map<String, Value>,
    name: &str,
    lenient: bool,
    path: &str,
) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "kind", "dim", "entries"], path)?;
    let kind_str = as_str(field(obj, "kind", path)?, &format!("{path}.kind"))?;
    let kind = AlgebraKind::parse(kind_str).ok_or_else(|| {
        DocError::at(
            format!("{path}.kind"),
            format!("unknown algebra kind `{kind_str}`"),
        )
    })?;
    let dim = as_usize(field(obj, "dim", path)?, &format!("{path}.dim"))?;
    let mut entries = Vec::new();
    for (eidx, e) in entry_list(obj, path)?.iter().enumerate() {
        let epath = format!("{path}.entries[{eidx}]");
        let e = as_object(e, &epath)?;
        known_fields(e, &["i", "j", "k", "c"], &epath)?;
        entries.push((
            index_in(field(e, "i", &epath)?, dim, &format!("{epath}.i"))?,
            index_in(field(e, "j", &epath)?, dim, &format!("{epath}.j"))?,
            index_in(field(e, "k", &epath)?, dim, &format!("{epath}.k"))?,
            scalar(field(e, "c", &epath)?, lenient, &format!("{epath}.c"))?,
        ));
    }
    let algebra = Algebra::from_entries(name, kind, dim, &entries)
        .map_err(|e| DocError::at(path, e.to_string()))?;
    Ok(ObjectValue::Algebra(algebra))
}

fn entry_list<'v>(obj: &'v Map<String, Value>, path: &str) -> DocResult<&'v Vec<Value>> {
    match obj.get("entries") {
        None => Err(DocError::at(path, "missing field `entries`")),
        Some(v) => v
            .as_array()
            .ok_or_else(|| DocError::at(format!("{path}.entries"), "expected an array")),
    }
}

fn parse_tensor2(obj: &Map<String, Value>, lenient: bool, path: &str) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "dims", "entries"], path)?;
    let dims = field(obj, "dims", path)?
        .as_array()
        .ok_or_else(|| DocError::at(format!("{path}.dims"), "expected an array [dimA, dimB]"))?;
    if dims.len() != 2 {
        return Err(DocError::at(
            format!("{path}.dims"),
            "expected exactly two dimensions",
        ));
    }
    let da = as_usize(&dims[0], &format!("{path}.dims[0]"))?;
    let db = as_usize(&dims[1], &format!("{path}.dims[1]"))?;
    let mut t = Tensor2::zeros(da, db);
    for (eidx, e) in entry_list(obj, path)?.iter().enumerate() {
        let epath = format!("{path}.entries[{eidx}]");
        let e = as_object(e, &epath)?;
        known_fields(e, &["i", "j", "c"], &epath)?;
        let i = index_in(field(e, "i", &epath)?, da, &format!("{epath}.i"))?;
        let j = index_in(field(e, "j", &epath)?, db, &format!("{epath}.j"))?;
        let c = scalar(field(e, "c", &epath)?, lenient, &format!("{epath}.c"))?;
        t.add_to(i, j, &c);
    }
    Ok(ObjectValue::Tensor2(t))
}

fn parse_form(obj: &Map<String, Value>, lenient: bool, path: &str) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "dim", "entries"], path)?;
    let dim = as_usize(field(obj, "dim", path)?, &format!("{path}.dim"))?;
    let mut f = BilinearForm::zeros(dim);
    for (eidx, e) in entry_list(obj, path)?.iter().enumerate() {
        let epath = format!("{path}.entries[{eidx}]");
        let e = as_object(e, &epath)?;
        known_fields(e, &["i", "j", "c"], &epath)?;
        let i = index_in(field(e, "i", &epath)?, dim, &format!("{epath}.i"))?;
        let j = index_in(field(e, "j", &epath)?, dim, &format!("{epath}.j"))?;
        let c = scalar(field(e, "c", &epath)?, lenient, &format!("{epath}.c"))?;
        f.set(i, j, c);
    }
    Ok(ObjectValue::Form(f))
}

fn parse_rep(
    obj: &Map<String, Value>,
    doc: &Document,
    lenient: bool,
    path: &str,
) -> DocResult<ObjectValue> {
    known_fields(
        obj,
        &["type", "name", "algebra", "module_dim", "entries"],
        path,
    )?;
    let alg_name = as_str(field(obj, "algebra", path)?, &format!("{path}.algebra"))?.to_owned();
    let alg_dim = doc
        .algebra(&alg_name)
        .map_err(|e| DocError::at(format!("{path}.algebra"), e.to_string()))?
        .dim();
    let module_dim = as_usize(field(obj, "module_dim", path)?, &format!("{path}.module_dim"))?;
    let mut mats = vec![Matrix::zeros(module_dim, module_dim); alg_dim];
    for (eidx, e) in entry_list(obj, path)?.iter().enumerate() {
        let epath = format!("{path}.entries[{eidx}]");
        let e = as_object(e, &epath)?;
        known_fields(e, &["i", "j", "k", "c"], &epath)?;
        let i = index_in(field(e, "i", &epath)?, alg_dim, &format!("{epath}.i"))?;
        let j = index_in(field(e, "j", &epath)?, module_dim, &format!("{epath}.j"))?;
        let k = index_in(field(e, "k", &epath)?, module_dim, &format!("{epath}.k"))?;
        let c = scalar(field(e, "c", &epath)?, lenient, &format!("{epath}.c"))?;
        mats[i].set(j, k, c);
    }
    let rep = Representation::new(alg_dim, module_dim, mats)
        .map_err(|e| DocError::at(path, e.to_string()))?;
    Ok(ObjectValue::Rep {
        algebra: alg_name,
        rep,
    })
}

fn parse_bimodule(obj: &Map<String, Value>, doc: &Document, path: &str) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "algebra", "s", "t"], path)?;
    let algebra = as_str(field(obj, "algebra", path)?, &format!("{path}.algebra"))?.to_owned();
    let s = as_str(field(obj, "s", path)?, &format!("{path}.s"))?.to_owned();
    let t = as_str(field(obj, "t", path)?, &format!("{path}.t"))?.to_owned();
    let a = doc
        .algebra(&algebra)
        .map_err(|e| DocError::at(format!("{path}.algebra"), e.to_string()))?;
    for (label, rep_name) in [("s", &s), ("t", &t)] {
        let rep = doc
            .rep(rep_name)
            .map_err(|e| DocError::at(format!("{path}.{label}"), e.to_string()))?;
        if rep.alg_dim() != a.dim() {
            return Err(DocError::at(
                format!("{path}.{label}"),
                "representation is over an algebra of a different dimension",
            ));
        }
    }
    if doc.rep(&s)?.module_dim() != doc.rep(&t)?.module_dim() {
        return Err(DocError::at(path, "actions have different module dimensions"));
    }
    Ok(ObjectValue::Bimodule { algebra, s, t })
}

fn parse_pair(obj: &Map<String, Value>, doc: &Document, path: &str) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "algebra", "dual"], path)?;
    let algebra = as_str(field(obj, "algebra", path)?, &format!("{path}.algebra"))?.to_owned();
    let dual = as_str(field(obj, "dual", path)?, &format!("{path}.dual"))?.to_owned();
    let a = doc
        .algebra(&algebra)
        .map_err(|e| DocError::at(format!("{path}.algebra"), e.to_string()))?;
    let d = doc
        .algebra(&dual)
        .map_err(|e| DocError::at(format!("{path}.dual"), e.to_string()))?;
    if a.dim() != d.dim() {
        return Err(DocError::at(path, "pair members have different dimensions"));
    }
    Ok(ObjectValue::Pair { algebra, dual })
}

fn parse_ooperator(obj: &Map<String, Value>, doc: &Document, path: &str) -> DocResult<ObjectValue> {
    known_fields(obj, &["type", "name", "lie", "rep", "map"], path)?;
    let lie = as_str(field(obj, "lie", path)?, &format!("{path}.lie"))?.to_owned();
    let rep = as_str(field(obj, "rep", path)?, &format!("{path}.rep"))?.to_owned();
    let map = as_str(field(obj, "map", path)?, &format!("{path}.map"))?.to_owned();
    let g = doc
        .algebra(&lie)
        .map_err(|e| DocError::at(format!("{path}.lie"), e.to_string()))?;
    let r = doc
        .rep(&rep)
        .map_err(|e| DocError::at(format!("{path}.rep"), e.to_string()))?;
    let m = doc
        .tensor2(&map)
        .map_err(|e| DocError::at(format!("{path}.map"), e.to_string()))?;
    if r.alg_dim() != g.dim() || m.dim_a() != g.dim() || m.dim_b() != r.module_dim() {
        return Err(DocError::at(path, "O-operator data has inconsistent shapes"));
    }
    Ok(ObjectValue::OOperator { lie, rep, map })
}

/// Serializes a document; `parse(emit(d)) == d` and the output is
/// byte-stable (sorted keys, entries sorted by index).
pub fn emit_document(doc: &Document) -> String {
    let objects: Vec<Value> = doc.objects.iter().map(emit_object).collect();
    let root = json!({ "version": 1, "objects": objects });
    serde_json::to_string_pretty(&root).expect("document serialization never fails")
}

fn sorted_entries3(entries: Vec<(usize, usize, usize, String)>) -> Vec<Value> {
    let mut entries = entries;
    entries.sort();
    entries
        .into_iter()
        .map(|(i, j, k, c)| json!({ "i": i, "j": j, "k": k, "c": c }))
        .collect()
}

fn sorted_entries2(entries: Vec<(usize, usize, String)>) -> Vec<Value> {
    let mut entries = entries;
    entries.sort();
    entries
        .into_iter()
        .map(|(i, j, c)| json!({ "i": i, "j": j, "c": c }))
        .collect()
}

fn emit_object(obj: &NamedObject) -> Value {
    let name = &obj.name;
    match &obj.value {
        ObjectValue::Algebra(a) => {
            let entries = a
                .entries()
                .filter(|(_, _, _, v)| !v.is_zero())
                .map(|(i, j, k, v)| (i, j, k, v.to_string()))
                .collect();
            json!({
                "type": "algebra",
                "name": name,
                "kind": a.kind().as_str(),
                "dim": a.dim(),
                "entries": sorted_entries3(entries),
            })
        }
        ObjectValue::Tensor2(t) => {
            let mut entries = Vec::new();
            for i in 0..t.dim_a() {
                for j in 0..t.dim_b() {
                    if !t.get(i, j).is_zero() {
                        entries.push((i, j, t.get(i, j).to_string()));
                    }
                }
            }
            json!({
                "type": "tensor2",
                "name": name,
                "dims": [t.dim_a(), t.dim_b()],
                "entries": sorted_entries2(entries),
            })
        }
        ObjectValue::Form(f) => {
            let mut entries = Vec::new();
            for i in 0..f.dim() {
                for j in 0..f.dim() {
                    if !f.get(i, j).is_zero() {
                        entries.push((i, j, f.get(i, j).to_string()));
                    }
                }
            }
            json!({
                "type": "form",
                "name": name,
                "dim": f.dim(),
                "entries": sorted_entries2(entries),
            })
        }
        ObjectValue::Rep { algebra, rep } => {
            let mut entries = Vec::new();
            for i in 0..rep.alg_dim() {
                for j in 0..rep.module_dim() {
                    for k in 0..rep.module_dim() {
                        let v = rep.act(i).get(j, k);
                        if !v.is_zero() {
                            entries.push((i, j, k, v.to_string()));
                        }
                    }
                }
            }
            json!({
                "type": "rep",
                "name": name,
                "algebra": algebra,
                "module_dim": rep.module_dim(),
                "entries": sorted_entries3(entries),
            })
        }
        ObjectValue::Bimodule { algebra, s, t } => json!({
            "type": "bimodule", "name": name, "algebra": algebra, "s": s, "t": t,
        }),
        ObjectValue::Pair { algebra, dual } => json!({
            "type": "pair", "name": name, "algebra": algebra, "dual": dual,
        }),
        ObjectValue::OOperator { lie, rep, map } => json!({
            "type": "ooperator", "name": name, "lie": lie, "rep": rep, "map": map,
        }),
    }
}

/// Keeps emitted documents deterministic regardless of insertion order of
/// auxiliary maps (serde_json's default map is ordered, this is a guard).
pub fn _assert_btree_map(_: &BTreeMap<String, Value>) {}
