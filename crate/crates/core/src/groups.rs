//! Finite groups as validated multiplication tables.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group whose associativity is checked exhaustively at
/// construction, and the default closure cap for permutation generators.
pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("empty table")]
    Empty,
    #[error("entry table[{g}][{h}] = {value} out of range")]
    OutOfRange { g: usize, h: usize, value: usize },
    #[error("identity law fails at element {0}")]
    IdentityLaw(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not a Latin square: value repeated in row or column {0}")]
    NotLatin(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("closure exceeds the order cap {0}")]
    CapExceeded(usize),
    #[error("invalid permutation generator {0}")]
    BadPermutation(usize),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("element {0} is not in the group")]
    NoSuchElement(usize),
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GroupJson", try_from = "GroupJson")]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

/// Wire form: `{"name", "order", "table", "identity", "labels"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl From<FiniteGroup> for GroupJson {
    fn from(g: FiniteGroup) -> Self {
        GroupJson {
            table: (0..g.order)
                .map(|a| g.table[a * g.order..(a + 1) * g.order].to_vec())
                .collect(),
            name: g.name,
            order: g.order,
            identity: g.identity,
            labels: g.labels,
        }
    }
}

impl TryFrom<GroupJson> for FiniteGroup {
    type Error = GroupError;
    fn try_from(j: GroupJson) -> Result<Self, GroupError> {
        if j.table.len() != j.order {
            return Err(GroupError::NotSquare {
                rows: j.table.len(),
                row: 0,
                len: j.order,
            });
        }
        let mut g = FiniteGroup::from_table(&j.table, j.identity)?;
        g.name = j.name;
        if j.labels.len() == g.order {
            g.labels = j.labels;
        }
        Ok(g)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table. Associativity is checked for orders up to
    /// [`DEFAULT_ORDER_CAP`].
    pub fn from_table(table: &[Vec<usize>], identity: usize) -> Result<Self, GroupError> {
        Self::from_table_with_cap(table, identity, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(
        table: &[Vec<usize>],
        identity: usize,
        assoc_cap: usize,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
            for (h, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::OutOfRange { g: row, h, value: v });
                }
            }
        }
        if identity >= n {
            return Err(GroupError::NoSuchElement(identity));
        }
        for g in 0..n {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(GroupError::IdentityLaw(g));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[table[i][j]], true)
                    || std::mem::replace(&mut seen_col[table[j][i]], true)
                {
                    return Err(GroupError::NotLatin(i));
                }
            }
        }
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or(GroupError::NoInverse(g))?;
        }
        if n <= assoc_cap {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(GroupError::NonAssociative(a, b, c));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: format!("G{n}"),
            order: n,
            table: table.iter().flatten().copied().collect(),
            identity,
            inverse,
            labels: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    fn with_name(mut self, name: impl Into<String>, labels: Vec<String>) -> Self {
        self.name = name.into();
        if labels.len() == self.order {
            self.labels = labels;
        }
        self
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        Self::from_table(&table, 0)
            .expect("cyclic table")
            .with_name(format!("Z{n}"), labels)
    }

    /// Dihedral group of order `2n`; element `f*n + k` is `s^f r^k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let idx = |f: usize, k: usize| f * n + k;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for f in 0..2 {
            for a in 0..n {
                for g in 0..2 {
                    for b in 0..n {
                        // s^f r^a s^g r^b = s^(f+g) r^(a*(-1)^g + b)
                        let k = if g == 0 { (a + b) % n } else { (n - a + b) % n };
                        table[idx(f, a)][idx(g, b)] = idx((f + g) % 2, k);
                    }
                }
            }
        }
        let labels = (0..2 * n)
            .map(|i| {
                let (f, k) = (i / n, i % n);
                match (f, k) {
                    (0, 0) => "e".to_string(),
                    (0, k) => format!("r{k}"),
                    (_, 0) => "s".to_string(),
                    (_, k) => format!("sr{k}"),
                }
            })
            .collect();
        Self::from_table(&table, 0)
            .expect("dihedral table")
            .with_name(format!("D{n}"), labels)
    }

    /// Quaternion group with elements `1, -1, i, -i, j, -j, k, -k` in that order.
    pub fn quaternion8() -> Self {
        // Unit products on {1, i, j, k} as (sign, unit).
        const UNIT: [[(i8, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let decode = |x: usize| (if x % 2 == 0 { 1i8 } else { -1 }, x / 2);
        let mut table = vec![vec![0; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let (sa, ua) = decode(a);
                let (sb, ub) = decode(b);
                let (s, u) = UNIT[ua][ub];
                let sign = sa * sb * s;
                table[a][b] = 2 * u + usize::from(sign < 0);
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_table(&table, 0)
            .expect("Q8 table")
            .with_name("Q8", labels)
    }

    /// `S_n` for `n <= 5`, generated by `(0 1)` and `(0 1 ... n-1)`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > 5 {
            return Err(GroupError::UnknownName(format!("S{n}")));
        }
        if n == 1 {
            return Ok(Self::trivial().with_name("S1", vec!["()".into()]));
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let gens = if n == 2 { vec![swap] } else { vec![swap, cycle] };
        let (g, _) = Self::from_permutation_generators_with_cap(&gens, 120)?;
        Ok(g.with_name(format!("S{n}"), Vec::new()))
    }

    /// Direct product; the element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order, b.order);
        let table: Vec<Vec<usize>> = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", a.labels[x / m], b.labels[x % m]))
            .collect();
        Self::from_table_with_cap(&table, a.identity * m + b.identity, DEFAULT_ORDER_CAP)
            .expect("product of groups")
            .with_name(format!("{}x{}", a.name, b.name), labels)
    }

    /// Closure of permutations of `{0..d-1}` under composition. Elements are
    /// numbered in breadth-first discovery order: identity, then the
    /// generators in the given order, and so on. Returns the group together
    /// with the permutation of each element.
    pub fn from_permutation_generators(
        generators: &[Vec<usize>],
    ) -> Result<(Self, Vec<Vec<usize>>), GroupError> {
        Self::from_permutation_generators_with_cap(generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutation_generators_with_cap(
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<(Self, Vec<Vec<usize>>), GroupError> {
        let degree = generators.first().map_or(0, |g| g.len());
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree || !is_permutation(g) {
                return Err(GroupError::BadPermutation(i));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = compose(&elems[x], s);
                if !index.contains_key(&y) {
                    if elems.len() == cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&compose(&elems[a], &elems[b])]).collect())
            .collect();
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        let g = Self::from_table_with_cap(&table, 0, DEFAULT_ORDER_CAP)?
            .with_name(format!("Perm{n}"), labels);
        Ok((g, elems))
    }

    /// Builds a group from a short name: `Z4`, `C3`, `D4` (order 8), `Q8`,
    /// `S3`, `trivial`, and `x`-separated products such as `Z2xZ2`.
    pub fn by_name(name: &str) -> Result<Self, GroupError> {
        let parts: Vec<&str> = name.split('x').collect();
        if parts.len() > 1 {
            let mut g = Self::by_name(parts[0])?;
            for p in &parts[1..] {
                g = Self::direct_product(&g, &Self::by_name(p)?);
            }
            return Ok(g);
        }
        let bad = || GroupError::UnknownName(name.to_string());
        if name == "trivial" || name == "1" {
            return Ok(Self::trivial());
        }
        if name == "Q8" {
            return Ok(Self::quaternion8());
        }
        let (head, num) = name.split_at(1.min(name.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match head {
            "Z" | "C" => Ok(Self::cyclic(n)),
            "D" => Ok(Self::dihedral(n)),
            "S" => Self::symmetric(n),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `s g s^-1`.
    pub fn conjugate(&self, s: usize, g: usize) -> usize {
        self.mul(self.mul(s, g), self.inv(s))
    }

    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| self.elements().all(|h| self.commute(g, h)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, num_integer::lcm)
    }

    /// The opposite group: same elements, `g * h` is `h g` of the original.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|h| self.mul(h, g)).collect()).collect();
        Self::from_table_with_cap(&table, self.identity, DEFAULT_ORDER_CAP)
            .expect("opposite of a group")
            .with_name(format!("{}^op", self.name), self.labels.clone())
    }

    pub fn conjugacy(&self) -> ConjugacyData {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        // Scanning in index order makes the first member of each class its
        // minimal index, so classes come out sorted by representative.
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = self.elements().map(|s| self.conjugate(s, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                class_of[x] = classes.len();
            }
            classes.push(members);
        }
        let centralizers = (0..n)
            .map(|g| self.elements().filter(|&h| self.commute(g, h)).collect())
            .collect();
        ConjugacyData {
            classes,
            class_of,
            centralizers,
        }
    }

    /// All ordered commuting pairs, lexicographically.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for g in self.elements() {
            for h in self.elements() {
                if self.commute(g, h) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// The subgroup generated by `gens`, with its own table. Subgroup
    /// elements are listed in increasing order of their index in `self`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup, GroupError> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= self.order) {
            return Err(GroupError::NoSuchElement(bad));
        }
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        let elements: Vec<usize> = self.elements().filter(|&g| inside[g]).collect();
        let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        let labels = elements.iter().map(|&g| self.labels[g].clone()).collect();
        let group = Self::from_table(&table, pos[&self.identity])?
            .with_name(format!("<{}>", gens.iter().map(|&g| self.labels[g].as_str()).collect::<Vec<_>>().join(",")), labels);
        Ok(Subgroup { elements, group })
    }

    /// Left cosets `gH`, each sorted, ordered by their minimal element.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = h.elements.iter().map(|&x| self.mul(g, x)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Permutation of the left cosets induced by left multiplication.
    pub fn coset_action(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let cosets = self.left_cosets(h);
        let mut which = vec![0; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                which[x] = i;
            }
        }
        self.elements()
            .map(|g| cosets.iter().map(|c| which[self.mul(g, c[0])]).collect())
            .collect()
    }

    /// Whether `perms[g]` is a homomorphism `G -> Sym(m)`.
    pub fn is_action(&self, perms: &[Vec<usize>]) -> bool {
        if perms.len() != self.order {
            return false;
        }
        let m = perms[0].len();
        perms.iter().all(|p| p.len() == m && is_permutation(p))
            && perms[self.identity].iter().enumerate().all(|(i, &x)| i == x)
            && self.elements().all(|g| {
                self.elements()
                    .all(|h| compose(&perms[g], &perms[h]) == perms[self.mul(g, h)])
            })
    }
}

/// A subgroup together with its own multiplication table.
#[derive(Debug, Clone)]
pub struct Subgroup {
    /// Indices in the ambient group, increasing.
    pub elements: Vec<usize>,
    pub group: FiniteGroup,
}

/// Conjugacy classes and centralizers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyData {
    /// Classes sorted by representative; each class sorted ascending.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub centralizers: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Minimal element index of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

/// `(p q)(i) = p(q(i))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

pub fn invert_permutation(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn identity_law_violation() {
        let err = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]], 0).unwrap_err();
        assert_eq!(err, GroupError::IdentityLaw(0));
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(FiniteGroup::from_table(&[], 0).unwrap_err(), GroupError::Empty);
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]], 0),
            Err(GroupError::NotSquare { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]], 0),
            Err(GroupError::OutOfRange { .. })
        ));
        // Identity row/column fine, but 1*1 = 1 repeats in row 1.
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]], 0),
            Err(GroupError::NotLatin(_))
        ));
    }

    #[test]
    fn non_associative_latin_square() {
        // A loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&t, 0),
            Err(GroupError::NonAssociative(..))
        ));
    }

    #[test]
    fn builders() {
        assert_eq!(FiniteGroup::cyclic(4).conjugacy().num_classes(), 4);
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.conjugacy().num_classes(), 5);
        assert!(!q8.is_abelian());
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert!(FiniteGroup::symmetric(6).is_err());
    }

    #[test]
    fn s3_from_generators() {
        let (g, perms) =
            FiniteGroup::from_permutation_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert_eq!(perms[1], vec![1, 0, 2]);
        assert_eq!(perms[2], vec![1, 2, 0]);
        assert_eq!(g.label(1), "(0 1)");
    }

    #[test]
    fn closure_cap() {
        let gens = vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        assert_eq!(
            FiniteGroup::from_permutation_generators(&gens).unwrap_err(),
            GroupError::CapExceeded(64)
        );
    }

    #[test]
    fn names() {
        assert_eq!(FiniteGroup::by_name("Z2xZ2").unwrap().order(), 4);
        assert_eq!(FiniteGroup::by_name("D4").unwrap().order(), 8);
        assert_eq!(FiniteGroup::by_name("S3").unwrap().order(), 6);
        assert!(FiniteGroup::by_name("Y3").is_err());
        assert!(FiniteGroup::by_name("Z0").is_err());
    }

    #[test]
    fn commuting_pairs_small() {
        assert_eq!(FiniteGroup::trivial().commuting_pairs(), vec![(0, 0)]);
        assert_eq!(FiniteGroup::by_name("Z2xZ2").unwrap().commuting_pairs().len(), 16);
    }

    #[test]
    fn cosets_of_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let h = s3.subgroup_generated(&[1]).unwrap();
        assert_eq!(h.elements.len(), 2);
        let act = s3.coset_action(&h);
        assert!(s3.is_action(&act));
        assert_eq!(act[0], vec![0, 1, 2]);
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteGroup::quaternion8();
        let s = serde_json::to_string(&g).unwrap();
        let back: FiniteGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"name":"x","order":2,"table":[[1,0],[0,1]],"identity":0}"#;
        assert!(serde_json::from_str::<FiniteGroup>(bad).is_err());
    }
}
