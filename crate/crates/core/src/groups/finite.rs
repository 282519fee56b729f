use std::sync::atomic::{AtomicU64, Ordering};

use super::{BitSet, ElemSet, Group, GroupElement, GroupError};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity tag distinguishing group instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

/// Finite group of order at most 64 with identity at index 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    id: GroupId,
    name: String,
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table; the first failing axiom is reported.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        let bad = |m: String| GroupError::InvalidCayleyTable(m);
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if n > 64 {
            return Err(GroupError::TooLarge(n));
        }
        for row in &table {
            if row.len() != n {
                return Err(bad("table is not square".into()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(bad(format!("entry {x} out of range")));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[table[i][j]] = true;
                col_seen[table[j][i]] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(bad("not a Latin square".into()));
            }
        }
        if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
            return Err(bad("element 0 is not the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).expect("Latin square row")).collect();
        let names = match names {
            Some(v) => {
                if v.len() != n {
                    return Err(bad("wrong number of element names".into()));
                }
                v
            }
            None => (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("x{i}") }).collect(),
        };
        Ok(FiniteGroup {
            id: GroupId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
            name: name.to_string(),
            n,
            table: table.into_iter().flatten().collect(),
            inverse,
            names,
        })
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The whole group as a bit set.
    pub fn all(&self) -> BitSet {
        BitSet(if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 })
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index >= self.n {
            return Err(GroupError::BadElement(index));
        }
        Ok(GroupElement::Finite { group: self.id, index })
    }

    fn index_of(&self, e: GroupElement) -> Result<usize, GroupError> {
        match e {
            GroupElement::Finite { group, index } if group == self.id => Ok(index),
            _ => Err(GroupError::GroupMismatch),
        }
    }

    pub fn checked_op(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement, GroupError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        self.element(self.mul(a, b))
    }

    pub fn checked_inv(&self, a: GroupElement) -> Result<GroupElement, GroupError> {
        self.element(self.inv(self.index_of(a)?))
    }

    /// Subgroup generated by `gens` (as indices).
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set = BitSet::from_elements(elems.iter().copied());
        set.contains(0) && elems.iter().all(|&a| elems.iter().all(|&b| set.contains(self.mul(a, self.inv(b)))))
    }
}

impl Group for FiniteGroup {
    type Elem = usize;
    type Set = BitSet;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn elem_name(&self, a: usize) -> String {
        self.names[a].clone()
    }

    fn parse_elem(&self, s: &str) -> Option<usize> {
        let s = s.trim();
        self.names.iter().position(|n| n == s).or_else(|| s.parse().ok().filter(|&i| i < self.n))
    }

    fn translate(&self, g: usize, set: &BitSet) -> BitSet {
        let row = &self.table[g * self.n..(g + 1) * self.n];
        let mut m = set.0;
        let mut out = 0u64;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            out |= 1 << row[x];
            m &= m - 1;
        }
        BitSet(out)
    }
}

/// Subgroup of a finite group, as sorted element indices of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: GroupId,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Wraps a set of indices after checking closure in `parent`.
    pub fn new(parent: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&e) = elements.iter().find(|&&e| e >= parent.order()) {
            return Err(GroupError::BadElement(e));
        }
        if !parent.is_subgroup(&elements) {
            return Err(GroupError::InvalidCayleyTable("elements do not form a subgroup".into()));
        }
        Ok(Subgroup { group: parent.id(), elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn parent_id(&self) -> GroupId {
        self.group
    }

    /// The subgroup as a group in its own right; `map[i]` is the parent index of element `i`.
    pub fn to_group(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if parent.id() != self.group {
            return Err(GroupError::GroupMismatch);
        }
        let map = self.elements.clone();
        let pos = |g: usize| map.binary_search(&g).expect("closed subgroup");
        let table = map.iter().map(|&a| map.iter().map(|&b| pos(parent.mul(a, b))).collect()).collect();
        let names = map.iter().map(|&a| parent.elem_name(a)).collect();
        let g = FiniteGroup::from_table(&format!("subgroup of {}", parent.name()), table, Some(names))?;
        Ok((g, map))
    }
}

/// Subgroup generated by the given elements.
pub fn subgroup_generated(group: &FiniteGroup, gens: &[GroupElement]) -> Result<Subgroup, GroupError> {
    let idx = gens.iter().map(|&g| group.index_of(g)).collect::<Result<Vec<_>, _>>()?;
    Ok(Subgroup { group: group.id(), elements: group.closure(&idx) })
}

/// Names accepted by [`build_named_group`] besides the generic `C<n>`.
pub fn named_groups() -> &'static [&'static str] {
    &["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "D4", "Q8"]
}

pub fn build_named_group(name: &str) -> Result<FiniteGroup, GroupError> {
    match name {
        "C2xC2" | "V4" | "K4" => {
            let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            FiniteGroup::from_table("C2xC2", table, Some(names(&["1", "a", "b", "ab"])))
        }
        "S3" | "D3" => dihedral("S3", 3),
        "D4" => dihedral("D4", 4),
        "Q8" => quaternion(),
        _ => match name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=64).contains(&n) => cyclic(n),
            _ => Err(GroupError::UnknownGroup(name.to_string())),
        },
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let names = (0..n)
        .map(|i| match (i, n) {
            (0, _) => "1".to_string(),
            (1, 2) => "a".to_string(),
            (1, _) => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    FiniteGroup::from_table(&format!("C{n}"), table, Some(names))
}

/// Dihedral group of order `2m`; element `j*m + i` is `r^i s^j`.
fn dihedral(label: &str, m: usize) -> Result<FiniteGroup, GroupError> {
    let n = 2 * m;
    let mul = |a: usize, b: usize| {
        let (i1, j1, i2, j2) = (a % m, a / m, b % m, b / m);
        let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
        ((j1 + j2) % 2) * m + i
    };
    let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    let names = (0..n)
        .map(|e| {
            let (i, j) = (e % m, e / m);
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r{i}"),
            };
            let s = if j == 1 { "s" } else { "" };
            let w = format!("{r}{s}");
            if w.is_empty() {
                "1".to_string()
            } else {
                w
            }
        })
        .collect();
    FiniteGroup::from_table(label, table, Some(names))
}

/// Quaternion group; element `2u + s` is `(-1)^s` times unit `u` of `1, i, j, k`.
fn quaternion() -> Result<FiniteGroup, GroupError> {
    // unit products as (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |a: usize, b: usize| {
        let (s, u) = UNIT[a / 2][b / 2];
        2 * u + (s + a % 2 + b % 2) % 2
    };
    let table = (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table("Q8", table, Some(names(&["1", "-1", "i", "-i", "j", "-j", "k", "-k"])))
}

/// A named group, or else a path to a Cayley table file.
pub fn load_group(source: &str) -> Result<FiniteGroup, GroupError> {
    match build_named_group(source) {
        Err(GroupError::UnknownGroup(_)) if std::path::Path::new(source).is_file() => {
            let text = std::fs::read_to_string(source).map_err(|e| GroupError::Io(e.to_string()))?;
            let name = std::path::Path::new(source).file_stem().and_then(|s| s.to_str()).unwrap_or(source);
            parse_cayley(name, &text)
        }
        other => other,
    }
}

/// Parses the plain-text Cayley format: the order `n`, then `n` rows of
/// element indices, then optional `index name` lines. `#` starts a comment.
pub fn parse_cayley(name: &str, text: &str) -> Result<FiniteGroup, GroupError> {
    let bad = |m: &str| GroupError::InvalidCayleyTable(m.to_string());
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| bad("missing order"))?
        .parse()
        .map_err(|_| bad("order is not an integer"))?;
    if n > 64 {
        return Err(GroupError::TooLarge(n));
    }
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let row = lines
            .next()
            .ok_or_else(|| bad("too few rows"))?
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad("non-integer entry")))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let mut labels: Vec<Option<String>> = vec![None; n];
    for line in lines {
        let (i, label) = line.split_once(char::is_whitespace).ok_or_else(|| bad("malformed name line"))?;
        let i: usize = i.parse().map_err(|_| bad("malformed name line"))?;
        if i >= n {
            return Err(bad("name for out-of-range element"));
        }
        labels[i] = Some(label.trim().to_string());
    }
    let names = labels.iter().any(Option::is_some).then(|| {
        labels
            .iter()
            .enumerate()
            .map(|(i, l)| l.clone().unwrap_or_else(|| if i == 0 { "1".into() } else { format!("x{i}") }))
            .collect()
    });
    FiniteGroup::from_table(name, table, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_orders() {
        for (name, order, abelian) in [
            ("C1", 1, true),
            ("C2", 2, true),
            ("C3", 3, true),
            ("C4", 4, true),
            ("C2xC2", 4, true),
            ("C5", 5, true),
            ("C6", 6, true),
            ("S3", 6, false),
            ("D4", 8, false),
            ("Q8", 8, false),
        ] {
            let g = build_named_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.is_abelian(), abelian, "{name}");
        }
        assert!(matches!(build_named_group("A5"), Err(GroupError::UnknownGroup(_))));
    }

    #[test]
    fn quaternion_relations() {
        let q = build_named_group("Q8").unwrap();
        let (i, j, k, m1) = (q.parse_elem("i").unwrap(), q.parse_elem("j").unwrap(), q.parse_elem("k").unwrap(), 1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.parse_elem("-k").unwrap());
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(q.mul(i, j), k), m1);
    }

    #[test]
    fn cayley_rejections() {
        let not_latin = "2\n0 1\n1 1\n";
        assert_eq!(
            parse_cayley("t", not_latin).unwrap_err(),
            GroupError::InvalidCayleyTable("not a Latin square".into())
        );
        // Latin square with identity at 0 that is not associative.
        let loop5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = parse_cayley("t", loop5).unwrap_err();
        assert!(matches!(err, GroupError::InvalidCayleyTable(m) if m.starts_with("not associative")));
        let ok = parse_cayley("c2", "2\n0 1\n1 0\n1 a\n").unwrap();
        assert_eq!(ok.elem_name(1), "a");
    }

    #[test]
    fn load_from_file() {
        let path = std::env::temp_dir().join(format!("cayley-{}.txt", std::process::id()));
        std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = load_group(path.to_str().unwrap()).unwrap();
        std::fs::remove_file(&path).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(load_group("S3").unwrap().order(), 6);
        assert!(matches!(load_group("no-such-group"), Err(GroupError::UnknownGroup(_))));
    }

    #[test]
    fn subgroups() {
        let s3 = build_named_group("S3").unwrap();
        let s = s3.element(s3.parse_elem("s").unwrap()).unwrap();
        let h = subgroup_generated(&s3, &[s]).unwrap();
        assert_eq!(h.order(), 2);
        let r = s3.element(1).unwrap();
        assert_eq!(subgroup_generated(&s3, &[r, s]).unwrap().order(), 6);
        let c2 = build_named_group("C2").unwrap();
        assert_eq!(s3.checked_op(s, c2.element(1).unwrap()), Err(GroupError::GroupMismatch));
        let (hg, map) = h.to_group(&s3).unwrap();
        assert_eq!(hg.order(), 2);
        assert_eq!(map[0], 0);
    }
}
