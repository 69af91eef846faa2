//! PSS-JSON: a plain JSON encoding of finite pointed simplicial sets.
//!
//! ```json
//! {
//!   "basepoint": ["*", "*"],
//!   "degeneracies": {"0:0": {"*": "*", "v": "s0v"}},
//!   "dim_bound": 1,
//!   "faces": {"1:0": {"*": "*", "s0v": "v"}, "1:1": {"*": "*", "s0v": "v"}},
//!   "levels": [["*", "v"], ["*", "s0v"]]
//! }
//! ```
//!
//! Keys are written in sorted order, so a read followed by a write reproduces
//! any canonically ordered input byte for byte.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::sset::{PointedSimplicialSet, Simplex};

fn bad(msg: impl Into<String>) -> Error {
    Error::Structure(format!("PSS-JSON: {}", msg.into()))
}

fn ids(x: &PointedSimplicialSet) -> Vec<Vec<String>> {
    (0..=x.dim_bound())
        .map(|m| {
            let labels: Vec<String> = (0..x.level_size(m) as Simplex).map(|s| x.label(m, s)).collect();
            let unique = labels.iter().collect::<HashSet<_>>().len() == labels.len();
            if unique {
                labels
            } else {
                (0..labels.len()).map(|s| format!("s{m}_{s}")).collect()
            }
        })
        .collect()
}

/// Encodes `x` as a JSON value (keys sorted).
pub fn to_value(x: &PointedSimplicialSet) -> Value {
    let ids = ids(x);
    let table = |m_from: usize, m_to: usize, f: &dyn Fn(Simplex) -> Simplex| -> Value {
        let mut t = Map::new();
        for s in 0..x.level_size(m_from) as Simplex {
            t.insert(ids[m_from][s as usize].clone(), Value::String(ids[m_to][f(s) as usize].clone()));
        }
        Value::Object(t)
    };
    let mut faces = Map::new();
    let mut degeneracies = Map::new();
    for m in 0..=x.dim_bound() {
        for i in 0..=m {
            if m > 0 {
                faces.insert(format!("{m}:{i}"), table(m, m - 1, &|s| x.face(m, i, s)));
            }
            if m < x.dim_bound() {
                degeneracies.insert(format!("{m}:{i}"), table(m, m + 1, &|s| x.degeneracy(m, i, s)));
            }
        }
    }
    let mut top = Map::new();
    top.insert(
        "basepoint".into(),
        Value::Array((0..=x.dim_bound()).map(|m| Value::String(ids[m][x.basepoint(m) as usize].clone())).collect()),
    );
    top.insert("degeneracies".into(), Value::Object(degeneracies));
    top.insert("dim_bound".into(), Value::from(x.dim_bound()));
    top.insert("faces".into(), Value::Object(faces));
    if let Some(d) = x.geometric_dim() {
        top.insert("geometric_dim".into(), Value::from(d));
    }
    top.insert(
        "levels".into(),
        Value::Array(
            ids.into_iter()
                .map(|l| Value::Array(l.into_iter().map(Value::String).collect()))
                .collect(),
        ),
    );
    Value::Object(top)
}

/// Pretty-printed PSS-JSON with sorted keys and a trailing newline.
pub fn write_string(x: &PointedSimplicialSet) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(x)).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// The canonical rendering of any JSON text (sorted keys, pretty, trailing newline).
pub fn canonicalize(text: &str) -> Result<String> {
    let v: Value = serde_json::from_str(text)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|u| u as usize).ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(format!("{what} must be a string")))
}

/// Decodes and validates a PSS-JSON value.
pub fn from_value(v: &Value) -> Result<PointedSimplicialSet> {
    let top = v.as_object().ok_or_else(|| bad("top level must be an object"))?;
    let get = |k: &str| top.get(k).ok_or_else(|| bad(format!("missing \"{k}\"")));
    let dim_bound = as_usize(get("dim_bound")?, "dim_bound")?;
    let levels_v = get("levels")?.as_array().ok_or_else(|| bad("\"levels\" must be an array"))?;
    if levels_v.len() != dim_bound + 1 {
        return Err(bad(format!("expected {} levels, found {}", dim_bound + 1, levels_v.len())));
    }
    let mut levels: Vec<Vec<String>> = Vec::new();
    let mut index: Vec<HashMap<String, Simplex>> = Vec::new();
    for (m, l) in levels_v.iter().enumerate() {
        let arr = l.as_array().ok_or_else(|| bad(format!("level {m} must be an array")))?;
        let names: Vec<String> = arr
            .iter()
            .map(|s| as_str(s, "simplex id").map(str::to_string))
            .collect::<Result<_>>()?;
        let map: HashMap<String, Simplex> = names.iter().enumerate().map(|(k, s)| (s.clone(), k as Simplex)).collect();
        if map.len() != names.len() {
            return Err(bad(format!("duplicate ids in level {m}")));
        }
        levels.push(names);
        index.push(map);
    }
    let lookup = |m: usize, id: &str| -> Result<Simplex> {
        index[m].get(id).copied().ok_or_else(|| bad(format!("unknown id \"{id}\" in level {m}")))
    };
    let bp = get("basepoint")?.as_array().ok_or_else(|| bad("\"basepoint\" must be an array"))?;
    if bp.len() != dim_bound + 1 {
        return Err(bad("one basepoint per level is required"));
    }
    let basepoint = bp
        .iter()
        .enumerate()
        .map(|(m, s)| lookup(m, as_str(s, "basepoint")?))
        .collect::<Result<Vec<_>>>()?;
    let read_tables = |key: &str, range: &dyn Fn(usize) -> bool, shift: i64| -> Result<Vec<Vec<Vec<Simplex>>>> {
        let obj = get(key)?.as_object().ok_or_else(|| bad(format!("\"{key}\" must be an object")))?;
        let mut parsed: BTreeMap<(usize, usize), &Map<String, Value>> = BTreeMap::new();
        for (k, t) in obj {
            let (m, i) = k
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| bad(format!("bad key \"{k}\" in \"{key}\"")))?;
            if !range(m) || i > m {
                return Err(bad(format!("unexpected key \"{k}\" in \"{key}\"")));
            }
            parsed.insert((m, i), t.as_object().ok_or_else(|| bad(format!("\"{key}\".\"{k}\" must be an object")))?);
        }
        let mut out = Vec::new();
        for m in (0..=dim_bound).filter(|&m| range(m)) {
            let target = (m as i64 + shift) as usize;
            let mut lvl = Vec::new();
            for i in 0..=m {
                let t = parsed.get(&(m, i)).ok_or_else(|| bad(format!("missing \"{key}\".\"{m}:{i}\"")))?;
                if t.len() != levels[m].len() {
                    return Err(bad(format!("\"{key}\".\"{m}:{i}\" must list every simplex of level {m}")));
                }
                let mut row = vec![0; levels[m].len()];
                for (src, dst) in t.iter() {
                    row[lookup(m, src)? as usize] = lookup(target, as_str(dst, "table entry")?)?;
                }
                lvl.push(row);
            }
            out.push(lvl);
        }
        Ok(out)
    };
    let mut faces = vec![Vec::new()];
    faces.extend(read_tables("faces", &|m| m > 0, -1)?);
    let degeneracies = read_tables("degeneracies", &|m| m < dim_bound, 1)?;
    let geometric_dim = match top.get("geometric_dim") {
        None | Some(Value::Null) => None,
        Some(v) => Some(as_usize(v, "geometric_dim")?),
    };
    for k in top.keys() {
        if !["basepoint", "degeneracies", "dim_bound", "faces", "geometric_dim", "levels"].contains(&k.as_str()) {
            return Err(bad(format!("unknown field \"{k}\"")));
        }
    }
    let sizes = levels.iter().map(Vec::len).collect();
    PointedSimplicialSet::from_tables(dim_bound, sizes, basepoint, faces, degeneracies, geometric_dim, Some(levels))
}

pub fn read_str(text: &str) -> Result<PointedSimplicialSet> {
    from_value(&serde_json::from_str(text)?)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<PointedSimplicialSet> {
    read_str(&std::fs::read_to_string(path)?)
}

pub fn write_file(x: &PointedSimplicialSet, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_string(x))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::reduced_homology;
    use crate::sset::{cone, sphere, sym_power, wedge};

    #[test]
    fn round_trips() {
        let s1 = sphere(1, 3).unwrap();
        let samples = vec![
            sphere(2, 3).unwrap(),
            wedge(&s1, &s1),
            sym_power(2, &s1),
            cone(&s1).0,
            crate::sset::point(2),
        ];
        for x in samples {
            let text = write_string(&x);
            let y = read_str(&text).unwrap();
            assert_eq!(write_string(&y), text);
            assert_eq!(y.geometric_dim(), x.geometric_dim());
            assert_eq!(reduced_homology(&y).unwrap(), reduced_homology(&x).unwrap());
        }
    }

    #[test]
    fn doc_example_reads_and_canonicalizes() {
        let text = r#"{"levels": [["*", "v"], ["*", "s0v"]], "dim_bound": 1, "basepoint": ["*", "*"],
            "faces": {"1:0": {"*": "*", "s0v": "v"}, "1:1": {"*": "*", "s0v": "v"}},
            "degeneracies": {"0:0": {"*": "*", "v": "s0v"}}}"#;
        let x = read_str(text).unwrap();
        assert_eq!(x.reduced_size(0), 1);
        assert_eq!(write_string(&x), canonicalize(text).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let good = write_string(&sphere(1, 2).unwrap());
        let mut v: Value = serde_json::from_str(&good).unwrap();
        v["faces"]["1:0"]["01"] = Value::String("nope".into());
        assert!(read_str(&v.to_string()).is_err());
        let mut v: Value = serde_json::from_str(&good).unwrap();
        v["dim_bound"] = Value::from(5);
        assert!(read_str(&v.to_string()).is_err());
        assert!(read_str("[1, 2]").is_err());
    }
}
