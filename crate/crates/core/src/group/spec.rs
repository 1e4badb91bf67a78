//! Plain-text group spec files and builtin group names.
//!
//! ```text
//! group <name> <order>
//! <row 0: order space-separated entries>
//! ...
//! ```
//!
//! Builtin names skip the file: `zn:<n>`, `s3`, `d4`, `q8`, `heis:<d>:<n>`,
//! `gl2:<q>`.

use std::sync::Arc;

use super::{
    cyclic_group, dihedral4, gl2, heisenberg, make_group, quaternion8, symmetric3, FiniteGroup,
    GroupError, GroupHom, SplitGroup, SplitPair, MAX_ORDER,
};

/// A group plus the split it was constructed with, when it has one.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub group: Arc<FiniteGroup>,
    pub split: Option<SplitGroup>,
}

impl From<SplitGroup> for NamedGroup {
    fn from(split: SplitGroup) -> Self {
        NamedGroup { group: split.group.clone(), split: Some(split) }
    }
}

fn parse_usize(field: &str, what: &str) -> Result<usize, GroupError> {
    field
        .parse()
        .map_err(|_| GroupError::Parse(format!("{what}: expected a non-negative integer, got {field:?}")))
}

/// Resolve a builtin group name; `Ok(None)` if `name` is not builtin syntax.
pub fn builtin_group(name: &str) -> Result<Option<NamedGroup>, GroupError> {
    let parts: Vec<&str> = name.split(':').collect();
    let named = match parts.as_slice() {
        ["zn", n] => {
            let n = parse_usize(n, "zn order")?;
            if n == 0 || n > MAX_ORDER {
                return Err(GroupError::OrderCapExceeded { order: n as u64, cap: MAX_ORDER });
            }
            let zn = Arc::new(cyclic_group(n));
            let split = SplitGroup {
                group: zn.clone(),
                n,
                split: SplitPair { phi: GroupHom::identity(zn.clone()), psi: GroupHom::identity(zn) },
            };
            split.into()
        }
        ["s3"] => symmetric3().into(),
        ["d4"] => dihedral4().into(),
        ["q8"] => NamedGroup { group: Arc::new(quaternion8()), split: None },
        ["heis", d, n] => heisenberg(parse_usize(d, "heis d")?, parse_usize(n, "heis n")?)?.into(),
        ["gl2", q] => gl2(parse_usize(q, "gl2 q")?)?.into(),
        _ => return Ok(None),
    };
    Ok(Some(named))
}

/// Parse the text format into a validated group.
pub fn parse_group_spec(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| GroupError::Parse("empty group spec".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (name, order) = match fields.as_slice() {
        ["group", name, order] => (*name, parse_usize(order, "order")?),
        _ => return Err(GroupError::Parse(format!("bad header {header:?}"))),
    };
    if order > MAX_ORDER {
        return Err(GroupError::OrderCapExceeded { order: order as u64, cap: MAX_ORDER });
    }
    let mut rows = Vec::with_capacity(order);
    for line in lines {
        let row = line
            .split_whitespace()
            .map(|x| parse_usize(x, "table entry"))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(GroupError::Parse(format!("expected {order} rows, found {}", rows.len())));
    }
    make_group(name, order, &rows)
}

pub fn render_group_spec(group: &FiniteGroup) -> String {
    let mut out = format!("group {} {}\n", group.name(), group.order());
    for a in group.elements() {
        let row: Vec<String> = group.row(a).map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        assert_eq!(builtin_group("zn:5").unwrap().unwrap().group.order(), 5);
        assert_eq!(builtin_group("s3").unwrap().unwrap().group.order(), 6);
        assert_eq!(builtin_group("d4").unwrap().unwrap().group.order(), 8);
        let q8 = builtin_group("q8").unwrap().unwrap();
        assert!(q8.split.is_none());
        assert_eq!(builtin_group("heis:3:3").unwrap().unwrap().group.order(), 27);
        let gl = builtin_group("gl2:3").unwrap().unwrap();
        assert_eq!(gl.split.unwrap().n, 2);
        assert!(builtin_group("groups/foo.txt").unwrap().is_none());
        assert!(builtin_group("zn:x").is_err());
        assert!(matches!(builtin_group("gl2:7"), Err(GroupError::OrderCapExceeded { .. })));
    }

    #[test]
    fn spec_round_trip() {
        let q8 = quaternion8();
        let text = render_group_spec(&q8);
        assert!(text.starts_with("group q8 8\n"));
        let parsed = parse_group_spec(&text).unwrap();
        assert_eq!(parsed, q8);
        assert_eq!(parsed.name(), "q8");
    }

    #[test]
    fn spec_errors() {
        assert!(matches!(parse_group_spec(""), Err(GroupError::Parse(_))));
        assert!(matches!(parse_group_spec("grp a 1\n0\n"), Err(GroupError::Parse(_))));
        assert!(matches!(parse_group_spec("group a 2\n0 1\n"), Err(GroupError::Parse(_))));
        assert!(matches!(parse_group_spec("group a 2\n0 1\n1 1\n"), Err(GroupError::NotAGroup(_))));
        assert!(matches!(parse_group_spec("group a 1000\n"), Err(GroupError::OrderCapExceeded { .. })));
    }
}
