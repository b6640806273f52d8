//! JSON group files.
//!
//! Two forms are accepted:
//!
//! * generator form: `{"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}`,
//!   each generator a 0-based one-line permutation;
//! * cayley form: `{"order": 2, "table": [[0, 1], [1, 0]], "names": ["e", "t"]}`,
//!   with `names` optional.
//!
//! Errors name the offending field with a JSON path such as `$.table[3]`.

use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Limits, Result};
use crate::group::{build_from_generators, GroupTable, TableDefect};

fn bad(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidGroupFile {
        path: path.into(),
        message: message.into(),
    }
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(path, "expected a non-negative integer"))
}

fn index_rows(v: &Value, path: &str) -> Result<Vec<Vec<usize>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| bad(path, "expected an array of arrays"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let rp = format!("{path}[{i}]");
            row.as_array()
                .ok_or_else(|| bad(&rp, "expected an array"))?
                .iter()
                .enumerate()
                .map(|(j, x)| as_index(x, &format!("{rp}[{j}]")))
                .collect()
        })
        .collect()
}

pub fn load_group_file(path: &Path, limits: &Limits) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".to_string());
    parse_group_json(&text, limits).map(|g| g.with_name(name))
}

pub fn parse_group_json(text: &str, limits: &Limits) -> Result<GroupTable> {
    let doc: Value = serde_json::from_str(text).map_err(|e| bad("$", e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| bad("$", "expected an object"))?;
    if obj.contains_key("generators") {
        let degree = as_index(
            obj.get("degree")
                .ok_or_else(|| bad("$.degree", "missing"))?,
            "$.degree",
        )?;
        if degree == 0 {
            return Err(bad("$.degree", "must be at least 1"));
        }
        let gens = index_rows(&obj["generators"], "$.generators")?;
        if gens.is_empty() {
            return Err(bad("$.generators", "must not be empty"));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(bad(
                    format!("$.generators[{i}]"),
                    format!("has {} entries, expected degree {degree}", g.len()),
                ));
            }
        }
        return build_from_generators(degree, &gens, limits).map_err(|e| match e {
            Error::NotAPermutation {
                generator, reason, ..
            } => bad(
                format!("$.generators[{generator}]"),
                format!("not a permutation: {reason}"),
            ),
            other => other,
        });
    }
    if obj.contains_key("table") {
        let table = index_rows(&obj["table"], "$.table")?;
        if let Some(order) = obj.get("order") {
            let order = as_index(order, "$.order")?;
            if order != table.len() {
                return Err(bad(
                    "$.order",
                    format!("order {order} does not match {} table rows", table.len()),
                ));
            }
        }
        if table.len() > limits.order_cap {
            return Err(Error::ClosureTooLarge {
                cap: limits.order_cap,
            });
        }
        let names = match obj.get("names") {
            None | Some(Value::Null) => None,
            Some(v) => Some(
                v.as_array()
                    .ok_or_else(|| bad("$.names", "expected an array of strings"))?
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        s.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| bad(format!("$.names[{i}]"), "expected a string"))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        return GroupTable::from_cayley("file", &table, names).map_err(|d| {
            let path = match d {
                TableDefect::RowLength { row, .. } | TableDefect::RowNotPermutation { row } => {
                    format!("$.table[{row}]")
                }
                TableDefect::EntryOutOfRange { row, col, .. } => format!("$.table[{row}][{col}]"),
                TableDefect::NamesLength { .. } => "$.names".to_string(),
                _ => "$.table".to_string(),
            };
            bad(path, d.to_string())
        });
    }
    Err(bad("$", "expected a `generators` or a `table` field"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> Limits {
        Limits::default()
    }

    fn err_path(e: Error) -> String {
        match e {
            Error::InvalidGroupFile { path, .. } => path,
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn generator_form() {
        let g =
            parse_group_json(r#"{"degree": 3, "generators": [[1,2,0],[1,0,2]]}"#, &l()).unwrap();
        assert_eq!(g.order(), 6);
        let e = parse_group_json(r#"{"degree": 3, "generators": [[1,2,0],[1,1,2]]}"#, &l())
            .unwrap_err();
        assert_eq!(err_path(e), "$.generators[1]");
        let e = parse_group_json(r#"{"degree": 3, "generators": [[1,2]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.generators[0]");
        let e = parse_group_json(r#"{"generators": [[0]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.degree");
        let e = parse_group_json(r#"{"degree": 0, "generators": [[]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.degree");
        let e = parse_group_json(r#"{"degree": 2, "generators": []}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.generators");
        let g = parse_group_json(r#"{"degree": 1, "generators": [[0]]}"#, &l()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cayley_form() {
        let g = parse_group_json(
            r#"{"order": 2, "table": [[0,1],[1,0]], "names": ["e","t"]}"#,
            &l(),
        )
        .unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_name(1), "t");

        let e = parse_group_json(r#"{"order": 2, "table": [[0,1],[1,1]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.table[1]");
        let e = parse_group_json(r#"{"order": 3, "table": [[0,1],[1,0]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.order");
        let e = parse_group_json(r#"{"order": 2, "table": [[0,1],[1,"x"]]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.table[1][1]");
        let e = parse_group_json(r#"{"table": [[0,1],[1,0]], "names": ["e"]}"#, &l()).unwrap_err();
        assert_eq!(err_path(e), "$.names");
    }

    #[test]
    fn associativity_failure_names_triple() {
        let loop5 = r#"{"order": 5, "table": [
            [0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#;
        match parse_group_json(loop5, &l()).unwrap_err() {
            Error::InvalidGroupFile { path, message } => {
                assert_eq!(path, "$.table");
                assert!(message.starts_with("associativity fails at ("), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loads_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("s3.json");
        std::fs::write(&p, r#"{"degree": 3, "generators": [[1,2,0],[1,0,2]]}"#).unwrap();
        let g = load_group_file(&p, &l()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(), "s3");
        assert!(matches!(
            load_group_file(&dir.path().join("missing.json"), &l()),
            Err(Error::Io { .. })
        ));
    }
}
