//! JSON schemas of the reports printed with `--json`.

use serde_json::{json, Value};

fn object(required: &[(&str, Value)]) -> Value {
    let properties: serde_json::Map<String, Value> = required.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    json!({
        "type": "object",
        "required": required.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
        "properties": properties,
    })
}

fn array(items: Value) -> Value {
    json!({"type": "array", "items": items})
}

fn t(name: &str) -> Value {
    json!({"type": name})
}

fn dims() -> Value {
    array(t("integer"))
}

fn nullable(name: &str) -> Value {
    json!({"type": [name, "null"]})
}

fn mismatch() -> Value {
    json!({"type": ["object", "null"], "required": ["kind", "degree"]})
}

fn homology_report() -> Value {
    object(&[
        ("group", t("string")),
        ("module", t("string")),
        ("field", t("string")),
        ("method", json!({"enum": ["bar", "ordinary", "stabilizer-sum"]})),
        ("kind", json!({"enum": ["homology", "cohomology"]})),
        ("dims", dims()),
        (
            "checks",
            object(&[("d2_zero", t("boolean")), ("homotopy_id", nullable("boolean")), ("h0_tensor", nullable("boolean"))]),
        ),
    ])
}

/// Schema of every command's JSON output, keyed by command path.
pub fn schemas() -> Value {
    let component = object(&[
        ("index", t("integer")),
        ("n", t("integer")),
        ("base", t("string")),
        ("isotropy_order", t("integer")),
        ("isotropy", array(t("string"))),
        ("vertices", array(t("string"))),
    ]);
    let mut all = serde_json::Map::new();
    let mut put = |k: &str, v: Value| {
        all.insert(k.to_string(), v);
    };
    put("groups list", array(object(&[("name", t("string")), ("order", t("integer")), ("abelian", t("boolean"))])));
    put(
        "groups show",
        object(&[
            ("name", t("string")),
            ("order", t("integer")),
            ("abelian", t("boolean")),
            ("elements", array(t("string"))),
            ("table", array(dims())),
        ]),
    );
    put(
        "kpar dim",
        object(&[
            ("group", t("string")),
            ("dim", t("integer")),
            ("formula", t("integer")),
            ("groupoid_sum", t("integer")),
            ("equal", t("boolean")),
        ]),
    );
    put("kpar basis", object(&[("group", t("string")), ("dim", t("integer")), ("basis", array(t("string")))]));
    put(
        "groupoid components",
        object(&[("group", t("string")), ("components", array(component)), ("dimension_sum", t("integer"))]),
    );
    put("homology partial", homology_report());
    put("homology cohomology", homology_report());
    put("homology ordinary", homology_report());
    put(
        "verify theorem-a",
        array(object(&[
            ("group", t("string")),
            ("component", t("integer")),
            ("isotropy_order", t("integer")),
            ("representation", t("string")),
            ("field", t("string")),
            ("homology_partial", dims()),
            ("homology_ordinary", dims()),
            ("cohomology_partial", dims()),
            ("cohomology_ordinary", dims()),
            ("equal", t("boolean")),
            ("first_mismatch", mismatch()),
        ])),
    );
    put(
        "verify corollary-b",
        object(&[
            ("dims_bar", dims()),
            ("dims_sum", dims()),
            ("equal", t("boolean")),
            ("cohomology_bar", dims()),
            ("cohomology_sum", dims()),
            ("group", t("string")),
            ("field", t("string")),
            ("components", t("integer")),
            ("isotropy_orders", dims()),
            ("first_mismatch", mismatch()),
        ]),
    );
    put(
        "verify section5",
        array(object(&[
            ("component", t("integer")),
            ("n", t("integer")),
            ("stabilizer_order", t("integer")),
            ("dimension", t("integer")),
            ("w_dimension", t("integer")),
            ("h_action_trivial", t("boolean")),
            ("lambda_pi_identity", t("boolean")),
            ("phi_well_defined", t("boolean")),
            ("phi_psi_identity", t("boolean")),
            ("psi_phi_identity", t("boolean")),
        ])),
    );
    put(
        "verify section6",
        array(object(&[
            ("component", t("integer")),
            ("arrows", t("integer")),
            ("section", t("boolean")),
            ("multiplicative", t("boolean")),
            ("module_map", t("boolean")),
        ])),
    );
    put(
        "verify kpar-coeff-vanishing",
        object(&[("group", t("string")), ("field", t("string")), ("dims", dims()), ("vanishing", t("boolean"))]),
    );
    put(
        "z relations",
        object(&[
            ("bound", t("integer")),
            ("checked", t("integer")),
            ("failures", array(object(&[("i", t("integer")), ("j", t("integer")), ("relation", t("string"))]))),
            ("passed", t("boolean")),
        ]),
    );
    put(
        "z quotient",
        object(&[
            ("k", t("integer")),
            ("N", t("integer")),
            ("s2_in_s1", t("boolean")),
            ("s1_in_s2", t("boolean")),
            ("violations", array(object(&[("set", dims()), ("containment", t("string"))]))),
            ("field", t("string")),
            ("blocks", t("integer")),
            ("window_dim", t("integer")),
            ("dim_s1", t("integer")),
            ("dim_s2", t("integer")),
        ]),
    );
    put(
        "z cancellation",
        object(&[
            ("group", t("string")),
            ("field", t("string")),
            ("k", t("integer")),
            ("seed", t("integer")),
            ("instances", t("integer")),
            ("passed", t("integer")),
            ("example", json!({"type": ["object", "null"], "required": ["es", "rs", "m", "b"]})),
        ]),
    );
    put(
        "z ig-decompose",
        json!({"oneOf": [
            object(&[("element", t("string")), ("coefficients", array(array(t("string"))))]),
            object(&[
                ("N", t("integer")),
                ("seed", t("integer")),
                ("count", t("integer")),
                ("round_trips", t("integer")),
                ("ibn", object(&[("N", t("integer")), ("columns", t("integer")), ("nonzero_entries", t("integer")), ("zero", t("boolean"))])),
            ]),
        ]}),
    );
    Value::Object(all)
}

/// Minimal validator for the subset of JSON Schema used above.
pub fn conforms(value: &Value, schema: &Value) -> bool {
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        return options.iter().filter(|s| conforms(value, s)).count() == 1;
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        return allowed.contains(value);
    }
    let types: Vec<&str> = match schema.get("type") {
        Some(Value::String(s)) => vec![s.as_str()],
        Some(Value::Array(a)) => a.iter().filter_map(Value::as_str).collect(),
        _ => return true,
    };
    let type_ok = types.iter().any(|ty| match *ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_u64() || value.is_i64(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    });
    if !type_ok {
        return false;
    }
    if let (Some(obj), Some(required)) = (value.as_object(), schema.get("required").and_then(Value::as_array)) {
        if !required.iter().filter_map(Value::as_str).all(|k| obj.contains_key(k)) {
            return false;
        }
        if let Some(props) = schema.get("properties").and_then(Value::as_object) {
            return props.iter().all(|(k, s)| obj.get(k).is_none_or(|v| conforms(v, s)));
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        return arr.iter().all(|v| conforms(v, items));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validator_basics() {
        let s = object(&[("a", t("integer")), ("b", array(t("string")))]);
        assert!(conforms(&json!({"a": 1, "b": ["x"]}), &s));
        assert!(!conforms(&json!({"a": 1}), &s));
        assert!(!conforms(&json!({"a": "1", "b": []}), &s));
        assert!(conforms(&Value::Null, &nullable("boolean")));
    }

    #[test]
    fn every_command_has_a_schema() {
        let s = schemas();
        assert_eq!(s.as_object().unwrap().len(), 17);
    }
}
