//! Named lists of algebra specs used for batch verification.

use crate::algebra::{AlgebraSpec, SpecError};

pub const REGISTRY_NAMES: [&str; 6] = ["groups16", "cyclic60", "semigroups", "pgroups", "extra", "default"];

/// Groups of order at most 16 that the spec language can express.
const GROUPS_16: &[&str] = &[
    "klein",
    "sym:3",
    "quaternion",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "dihedral:7",
    "dihedral:8",
    "elemab:2:3",
    "elemab:3:2",
    "elemab:2:4",
    "product:(cyclic:2),(cyclic:4)",
    "product:(cyclic:2),(cyclic:6)",
    "product:(cyclic:2),(cyclic:8)",
    "product:(cyclic:4),(cyclic:4)",
    "product:(cyclic:4),(klein)",
    "product:(dihedral:4),(cyclic:2)",
    "product:(quaternion),(cyclic:2)",
];

const P_GROUPS: &[&str] = &[
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "klein",
    "cyclic:8",
    "product:(cyclic:4),(cyclic:2)",
    "elemab:2:3",
    "dihedral:4",
    "quaternion",
    "cyclic:9",
    "elemab:3:2",
    "cyclic:16",
    "product:(cyclic:8),(cyclic:2)",
    "product:(cyclic:4),(cyclic:4)",
    "product:(cyclic:4),(klein)",
    "elemab:2:4",
    "dihedral:8",
    "product:(dihedral:4),(cyclic:2)",
    "product:(quaternion),(cyclic:2)",
    "cyclic:27",
    "product:(cyclic:9),(cyclic:3)",
    "elemab:3:3",
    "cyclic:32",
    "product:(cyclic:16),(cyclic:2)",
    "product:(cyclic:8),(cyclic:4)",
    "product:(cyclic:8),(klein)",
    "product:(cyclic:4),(product:(cyclic:4),(cyclic:2))",
    "dihedral:16",
    "product:(dihedral:4),(cyclic:4)",
    "product:(quaternion),(cyclic:4)",
];

const EXTRA: &[&str] = &["sym:4", "dihedral:4", "dihedral:5", "dihedral:6", "product:(cyclic:6),(cyclic:6)"];

fn owned(specs: &[&str]) -> Vec<String> {
    specs.iter().map(|s| s.to_string()).collect()
}

fn dedup_in_order(specs: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    specs.into_iter().filter(|s| seen.insert(s.clone())).collect()
}

pub fn registry(name: &str) -> Option<Vec<String>> {
    let specs = match name {
        "groups16" => (1..=16).map(|n| format!("cyclic:{n}")).chain(owned(GROUPS_16)).collect(),
        "cyclic60" => (1..=60).map(|n| format!("cyclic:{n}")).collect(),
        "semigroups" => (1..=30)
            .map(|n| format!("multmod:{n}"))
            .chain(owned(&["fulltrans:2", "fulltrans:3"]))
            .collect(),
        "pgroups" => owned(P_GROUPS),
        "extra" => owned(EXTRA),
        "default" => ["groups16", "cyclic60", "extra", "semigroups"]
            .iter()
            .flat_map(|n| registry(n).expect("known registry"))
            .collect(),
        _ => return None,
    };
    Some(dedup_in_order(specs))
}

/// Splits on commas outside parentheses, except the `),(` inside a
/// product spec: no list item starts with `(`.
fn split_top_level(arg: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in arg.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 && !arg[i + 1..].trim_start().starts_with('(') => {
                parts.push(&arg[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&arg[start..]);
    parts.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Expands a `--registry` argument: a comma list of registry names and
/// raw algebra specs. Specs are returned in canonical form.
pub fn resolve_registry(arg: &str) -> Result<Vec<String>, SpecError> {
    let mut out = Vec::new();
    for token in split_top_level(arg) {
        match registry(token) {
            Some(specs) => out.extend(specs),
            None => out.push(token.parse::<AlgebraSpec>()?.to_string()),
        }
    }
    Ok(dedup_in_order(out))
}
