//! Finite groups by Cayley table, and a brute-force group-theoretic oracle.
//!
//! Nothing here touches Hopf machinery; subsets of a group of order at most
//! 32 are bitmasks.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A set of group elements as a bitmask over element indices.
pub type Subset = u32;

pub const MAX_ORDER: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    /// `table[a][b]` is the index of `ab`.
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = perm[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

impl FiniteGroup {
    /// Validates a Cayley table: closure, associativity, identity at index 0, inverses.
    pub fn from_table(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let bad = |m: &str| Error::Schema(format!("group {name}: {m}"));
        if n == 0 || n > MAX_ORDER {
            return Err(bad("order out of range"));
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(bad("table is not n×n over the elements"));
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(bad("element 0 is not the identity"));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == 0)
                .ok_or_else(|| bad("missing inverse"))?;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            labels,
            table,
            inverse,
        })
    }

    /// Closure of permutation generators (0-based images); elements sorted
    /// by image vector, so the identity comes first.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::from([id]);
        let mut frontier: Vec<Vec<usize>> = elems.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q: Vec<usize> = (0..degree).map(|x| g[p[x]]).collect();
                if elems.insert(q.clone()) {
                    if elems.len() > MAX_ORDER {
                        return Err(Error::Schema(format!("group {name} exceeds the order cap")));
                    }
                    frontier.push(q);
                }
            }
        }
        let elems: Vec<Vec<usize>> = elems.into_iter().collect();
        let index: BTreeMap<&Vec<usize>, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        // (ab)(x) = a(b(x))
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index[&(0..degree).map(|x| a[b[x]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        let labels = elems.iter().map(|p| cycle_label(p)).collect();
        Self::from_table(name, labels, table)
    }

    /// Parses 1-based cycle notation such as `"(12)(34)"` on `degree` points;
    /// points above 9 need commas, as in `"(1,10)"`.
    pub fn perm(degree: usize, cycles: &str) -> Vec<usize> {
        let mut p: Vec<usize> = (0..degree).collect();
        for cyc in cycles.split(')') {
            let body = cyc.trim().trim_start_matches('(');
            if body.is_empty() {
                continue;
            }
            let pts: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|t| t.trim().parse::<usize>().expect("cycle point") - 1)
                    .collect()
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).expect("cycle point") as usize - 1)
                    .collect()
            };
            for w in 0..pts.len() {
                p[pts[w]] = pts[(w + 1) % pts.len()];
            }
        }
        p
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn full(&self) -> Subset {
        if self.order() == 32 {
            u32::MAX
        } else {
            (1u32 << self.order()) - 1
        }
    }

    pub fn trivial(&self) -> Subset {
        1
    }

    pub fn elements_of(&self, s: Subset) -> Vec<usize> {
        (0..self.order()).filter(|&i| s >> i & 1 == 1).collect()
    }

    pub fn subset_of(&self, elems: impl IntoIterator<Item = usize>) -> Subset {
        elems.into_iter().fold(0, |m, i| m | 1 << i)
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Subgroup generated by a subset.
    pub fn generate(&self, s: Subset) -> Subset {
        let mut h = s | 1;
        loop {
            let mut next = h;
            for a in self.elements_of(h) {
                for b in self.elements_of(h) {
                    next |= 1 << self.mul(a, b);
                }
            }
            if next == h {
                return h;
            }
            h = next;
        }
    }

    pub fn is_subgroup(&self, s: Subset) -> bool {
        s & 1 == 1 && self.generate(s) == s
    }

    pub fn join(&self, h: Subset, k: Subset) -> Subset {
        self.generate(h | k)
    }

    pub fn meet(&self, h: Subset, k: Subset) -> Subset {
        h & k
    }

    /// All subgroups, by closing the cyclic subgroups under joins; sorted by
    /// order, then bitmask.
    pub fn subgroups(&self) -> Vec<Subset> {
        let mut all: BTreeSet<Subset> = (0..self.order()).map(|g| self.generate(1 << g)).collect();
        loop {
            let current: Vec<Subset> = all.iter().copied().collect();
            let mut grew = false;
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    if all.insert(self.join(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut v: Vec<Subset> = all.into_iter().collect();
        v.sort_by_key(|&s| (s.count_ones(), s));
        v
    }

    /// `n ⊴ h` (both subgroups, `n ⊆ h`).
    pub fn is_normal_in(&self, n: Subset, h: Subset) -> bool {
        n & !h == 0
            && self.elements_of(h).iter().all(|&g| {
                self.elements_of(n)
                    .iter()
                    .all(|&x| n >> self.conjugate(g, x) & 1 == 1)
            })
    }

    pub fn normal_subgroups(&self) -> Vec<Subset> {
        self.subgroups()
            .into_iter()
            .filter(|&n| self.is_normal_in(n, self.full()))
            .collect()
    }

    /// Normal subgroups of `h` contained in `h`.
    pub fn normal_subgroups_of(&self, h: Subset) -> Vec<Subset> {
        self.subgroups()
            .into_iter()
            .filter(|&n| n & !h == 0 && self.is_normal_in(n, h))
            .collect()
    }

    /// Whether `l` normalizes `m`: `l m l⁻¹ = m`.
    pub fn normalizes(&self, l: Subset, m: Subset) -> bool {
        self.elements_of(l).iter().all(|&g| {
            self.elements_of(m)
                .iter()
                .all(|&x| m >> self.conjugate(g, x) & 1 == 1)
        })
    }

    pub fn commutator_subgroup_of(&self, h: Subset) -> Subset {
        let mut s = 1;
        for a in self.elements_of(h) {
            for b in self.elements_of(h) {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                s |= 1 << c;
            }
        }
        self.generate(s)
    }

    pub fn commutator_subgroup(&self) -> Subset {
        self.commutator_subgroup_of(self.full())
    }

    pub fn conjugacy_classes(&self) -> Vec<Subset> {
        let mut seen: Subset = 0;
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen >> x & 1 == 1 {
                continue;
            }
            let class = self.subset_of((0..self.order()).map(|g| self.conjugate(g, x)));
            seen |= class;
            out.push(class);
        }
        out
    }

    /// Maximal proper normal subgroups of `h`.
    pub fn maximal_normal_subgroups_of(&self, h: Subset) -> Vec<Subset> {
        let normals: Vec<Subset> = self
            .normal_subgroups_of(h)
            .into_iter()
            .filter(|&n| n != h)
            .collect();
        normals
            .iter()
            .copied()
            .filter(|&n| !normals.iter().any(|&m| m != n && n & !m == 0))
            .collect()
    }

    /// Every subnormal series `G = G_0 > G_1 > ... > G_k = 1` with strict steps.
    pub fn subnormal_series(&self) -> Vec<Vec<Subset>> {
        let mut out = Vec::new();
        let mut chain = vec![self.full()];
        self.extend_series(&mut chain, &mut out, false);
        out
    }

    /// Every composition series.
    pub fn composition_series(&self) -> Vec<Vec<Subset>> {
        let mut out = Vec::new();
        let mut chain = vec![self.full()];
        self.extend_series(&mut chain, &mut out, true);
        out
    }

    fn extend_series(
        &self,
        chain: &mut Vec<Subset>,
        out: &mut Vec<Vec<Subset>>,
        maximal_only: bool,
    ) {
        let top = *chain.last().unwrap();
        if top == 1 {
            out.push(chain.clone());
            return;
        }
        let next = if maximal_only {
            self.maximal_normal_subgroups_of(top)
        } else {
            self.normal_subgroups_of(top)
                .into_iter()
                .filter(|&n| n != top)
                .collect()
        };
        for n in next {
            chain.push(n);
            self.extend_series(chain, out, maximal_only);
            chain.pop();
        }
    }

    /// Orders of the composition factors, sorted.
    pub fn composition_factor_orders(&self) -> Vec<usize> {
        let series = self.composition_series();
        let mut f: Vec<usize> = series
            .first()
            .map(|s| {
                s.windows(2)
                    .map(|w| (w[0].count_ones() / w[1].count_ones()) as usize)
                    .collect()
            })
            .unwrap_or_default();
        f.sort();
        f
    }

    /// Composition factors by isomorphism-type name (`C_p` for prime order).
    pub fn composition_factors(&self) -> Vec<String> {
        self.composition_factor_orders()
            .into_iter()
            .map(|o| {
                if is_prime(o) {
                    format!("C{o}")
                } else {
                    format!("simple({o})")
                }
            })
            .collect()
    }

    /// Order of the Zassenhaus subquotient `A'(A∩B) / A'(A∩B')`.
    pub fn zassenhaus_order(&self, a: Subset, a1: Subset, b: Subset, b1: Subset) -> usize {
        let top = self.join(a1, a & b);
        let bottom = self.join(a1, a & b1);
        (top.count_ones() / bottom.count_ones()) as usize
    }

    /// `|H|` for a subset that is a subgroup.
    pub fn order_of(&self, s: Subset) -> usize {
        s.count_ones() as usize
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            "S4",
            4,
            &[FiniteGroup::perm(4, "(12)"), FiniteGroup::perm(4, "(1234)")],
        )
        .unwrap()
    }

    #[test]
    fn s4_lattice_counts() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.subgroups().len(), 30);
        assert_eq!(g.normal_subgroups().len(), 4);
        assert_eq!(g.order_of(g.commutator_subgroup()), 12);
        assert_eq!(g.composition_factor_orders(), vec![2, 2, 2, 3]);
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn cycle_labels() {
        assert_eq!(cycle_label(&FiniteGroup::perm(4, "(12)(34)")), "(12)(34)");
        assert_eq!(cycle_label(&FiniteGroup::perm(3, "(132)")), "(132)");
        assert_eq!(cycle_label(&[0, 1]), "e");
    }

    #[test]
    fn trivial_group_answers() {
        let g = FiniteGroup::from_table("C1", vec!["e".into()], vec![vec![0]]).unwrap();
        assert_eq!(g.subgroups(), vec![1]);
        assert!(g.composition_factor_orders().is_empty());
        assert_eq!(g.composition_series(), vec![vec![1]]);
    }

    #[test]
    fn rejects_non_group_tables() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", vec!["e".into(), "a".into()], t).is_err());
    }
}
