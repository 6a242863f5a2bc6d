//! Index sets of maximal minors, the cyclic reduction `j ↦ j~`, consecutive
//! minors, and the quantum grassmannian `O_q(G(m,n))` as a subalgebra of
//! `O_q(M_{m,n})`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::minors::{quantum_minor, IndexPair};
use crate::qmatrix::{Ambient, NCPoly};

/// The unique element of `{1..n}` congruent to `j` modulo `n`.
pub fn tilde(j: i64, n: usize) -> usize {
    assert!(n >= 1, "tilde needs n >= 1");
    let n = n as i64;
    ((j - 1).rem_euclid(n) + 1) as usize
}

/// `1` if `i < j`, `0` if equal, `-1` if `i > j`.
pub fn sign(i: usize, j: usize) -> i32 {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => -1,
    }
}

/// A set of column indices naming a maximal minor, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// An `m`-subset of `{1..n}`; input order is irrelevant, duplicates are not.
    pub fn new(mut elems: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadShape(format!("repeated index in {elems:?}")));
        }
        if elems.len() != m {
            return Err(Error::BadShape(format!(
                "index set {elems:?} has size {} but m = {m}",
                elems.len()
            )));
        }
        if elems.iter().any(|&e| e == 0 || e > n) {
            return Err(Error::Ambient(format!(
                "index set {elems:?} outside 1..={n}"
            )));
        }
        Ok(IndexSet(elems))
    }

    /// Any finite set of positive indices, without an ambient check.
    pub fn from_set<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut v: Vec<usize> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::from_set(self.0.iter().chain(&other.0).copied())
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| !other.contains(x))
                .collect(),
        )
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(
            self.0
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for IndexSet {
    /// `[134]` when every index is a single digit, `[1,3,10]` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        if self.0.iter().all(|&e| e < 10) {
            write!(f, "[{}]", parts.concat())
        } else {
            write!(f, "[{}]", parts.join(","))
        }
    }
}

/// All `m`-subsets of `{1..n}` in lexicographic order.
pub fn all_index_sets(m: usize, n: usize) -> Vec<IndexSet> {
    subsets(&(1..=n).collect::<Vec<_>>(), m)
        .into_iter()
        .map(IndexSet)
        .collect()
}

/// All `k`-subsets of `items` (kept in the order of `items`), lexicographic.
pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        go(items, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// The consecutive minor `[a~, (a+1)~, ..., (a+m-1)~]` of `O_q(G(m,n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConsecutiveMinor {
    pub a: usize,
    pub m: usize,
    pub n: usize,
}

impl ConsecutiveMinor {
    pub fn new(a: usize, m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::Ambient(format!("need 1 <= m <= n, got ({m},{n})")));
        }
        if !(1..=n).contains(&a) {
            return Err(Error::Ambient(format!("a = {a} outside 1..={n}")));
        }
        Ok(ConsecutiveMinor { a, m, n })
    }

    pub fn index_set(&self) -> IndexSet {
        IndexSet::from_set((0..self.m).map(|k| tilde((self.a + k) as i64, self.n)))
    }
}

/// The `n` consecutive minors of `O_q(G(m,n))`, for `a = 1..n`.
pub fn consecutive_minors(m: usize, n: usize) -> Result<Vec<ConsecutiveMinor>> {
    (1..=n).map(|a| ConsecutiveMinor::new(a, m, n)).collect()
}

/// `Q(I,J)`: the index set of the maximal minor matched with the
/// `O_q(M_{m,n-m})` minor `[I|J]` at the consecutive minor `a`.
///
/// With `I = J = ∅` this is the consecutive minor itself.
pub fn q_index_set(
    rows: &[usize],
    cols: &[usize],
    a: usize,
    m: usize,
    n: usize,
) -> Result<IndexSet> {
    if rows.len() != cols.len() || rows.len() > m {
        return Err(Error::BadShape(format!(
            "|I| = {}, |J| = {}, m = {m}",
            rows.len(),
            cols.len()
        )));
    }
    if m >= n || !(1..=n).contains(&a) {
        return Err(Error::Ambient(format!("invalid (a,m,n) = ({a},{m},{n})")));
    }
    if rows.iter().any(|&i| i == 0 || i > m) || cols.iter().any(|&j| j == 0 || j > n - m) {
        return Err(Error::BadShape(format!(
            "index pair ({rows:?},{cols:?}) outside M({m},{})",
            n - m
        )));
    }
    let (a, m_i) = (a as i64, m as i64);
    let shifted: Vec<usize> = cols
        .iter()
        .map(|&j| tilde(j as i64 + a + m_i - 1, n))
        .collect();
    let removed: Vec<usize> = rows.iter().map(|&i| tilde(a + m_i - i as i64, n)).collect();
    let kept = (0..m_i)
        .map(|k| tilde(a + k, n))
        .filter(|x| !removed.contains(x));
    let out = IndexSet::from_set(shifted.iter().copied().chain(kept));
    if out.len() != m {
        return Err(Error::Collision(format!(
            "Q({rows:?},{cols:?}) at a = {a} has {} elements, expected {m}",
            out.len()
        )));
    }
    Ok(out)
}

/// `O_q(G(m,n))` inside `O_q(M_{m,n})`, with memoized minors and products.
pub struct Grassmannian {
    m: usize,
    n: usize,
    amb: Ambient,
    minors: Mutex<HashMap<IndexSet, NCPoly>>,
    products: Mutex<HashMap<Vec<IndexSet>, NCPoly>>,
}

impl fmt::Debug for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.m, self.n)
    }
}

impl Grassmannian {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::Ambient(format!("need 1 <= m <= n, got ({m},{n})")));
        }
        Ok(Grassmannian {
            m,
            n,
            amb: Ambient::new(m, n)?,
            minors: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn index_sets(&self) -> Vec<IndexSet> {
        all_index_sets(self.m, self.n)
    }

    pub fn index_set(&self, elems: &[usize]) -> Result<IndexSet> {
        IndexSet::new(elems.to_vec(), self.m, self.n)
    }

    fn check(&self, j: &IndexSet) -> Result<()> {
        IndexSet::new(j.0.clone(), self.m, self.n).map(|_| ())
    }

    /// The maximal minor `[J]` with row set `{1..m}`.
    pub fn minor(&self, j: &IndexSet) -> Result<NCPoly> {
        self.check(j)?;
        if let Some(p) = self.minors.lock().expect("cache lock").get(j) {
            return Ok(p.clone());
        }
        let pair = IndexPair::new((1..=self.m).collect(), j.0.clone(), self.amb)?;
        let p = quantum_minor(self.amb, &pair)?;
        self.minors
            .lock()
            .expect("cache lock")
            .insert(j.clone(), p.clone());
        Ok(p)
    }

    /// The product `[J_1][J_2]...[J_d]` in normal form.
    pub fn product(&self, word: &[IndexSet]) -> Result<NCPoly> {
        match word {
            [] => return Ok(NCPoly::one(self.amb)),
            [j] => return self.minor(j),
            _ => {}
        }
        if let Some(p) = self.products.lock().expect("cache lock").get(word) {
            return Ok(p.clone());
        }
        let (last, prefix) = word.split_last().expect("nonempty");
        let p = self.product(prefix)?.nc_mul(&self.minor(last)?)?;
        self.products
            .lock()
            .expect("cache lock")
            .insert(word.to_vec(), p.clone());
        Ok(p)
    }

    /// The integer `c` with `[A][B] = q^c [B][A]`, or `None` when the two
    /// minors do not quasi-commute.
    ///
    /// `c` is read off by exact division of the coefficients of the leading
    /// word of `[B][A]`, then confirmed on the whole product.
    pub fn quasi_commute_exponent(&self, a: &IndexSet, b: &IndexSet) -> Result<Option<i32>> {
        let ab = self.product(&[a.clone(), b.clone()])?;
        let ba = self.product(&[b.clone(), a.clone()])?;
        let Some(w) = ba.leading_word() else {
            return Ok(None);
        };
        let Some(ratio) = ab.coeff(w).div_exact(&ba.coeff(w)) else {
            return Ok(None);
        };
        let Some(c) = ratio.as_q_power() else {
            return Ok(None);
        };
        Ok((ab == ba.scale(&LaurentPoly::q_pow(c))).then_some(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_set(v.iter().copied())
    }

    #[test]
    fn tilde_values() {
        assert_eq!(tilde(5, 4), 1);
        assert_eq!(tilde(4, 4), 4);
        assert_eq!(tilde(8, 4), 4);
        assert_eq!(tilde(0, 4), 4);
        assert_eq!(tilde(-1, 4), 3);
        for j in -20..20 {
            assert_eq!(tilde(j + 5, 5), tilde(j, 5));
        }
    }

    #[test]
    fn sign_values() {
        assert_eq!(sign(1, 3), 1);
        assert_eq!(sign(3, 3), 0);
        assert_eq!(sign(4, 2), -1);
    }

    #[test]
    fn consecutive_minors_of_g24() {
        let sets: Vec<IndexSet> = consecutive_minors(2, 4)
            .unwrap()
            .iter()
            .map(|c| c.index_set())
            .collect();
        assert_eq!(
            sets,
            vec![set(&[1, 2]), set(&[2, 3]), set(&[3, 4]), set(&[1, 4])]
        );
        let singles: Vec<IndexSet> = consecutive_minors(1, 3)
            .unwrap()
            .iter()
            .map(|c| c.index_set())
            .collect();
        assert_eq!(singles, vec![set(&[1]), set(&[2]), set(&[3])]);
        let g36 = consecutive_minors(3, 6).unwrap();
        assert_eq!(g36.len(), 6);
        assert!(g36.iter().all(|c| c.index_set().len() == 3));
        assert_eq!(g36[4].index_set(), set(&[1, 5, 6]));
    }

    #[test]
    fn q_index_set_examples() {
        assert_eq!(q_index_set(&[1], &[1], 4, 2, 4).unwrap(), set(&[2, 4]));
        assert_eq!(
            q_index_set(&[1, 2], &[1, 2], 4, 2, 4).unwrap(),
            set(&[2, 3])
        );
        assert_eq!(q_index_set(&[2], &[2], 4, 2, 4).unwrap(), set(&[1, 3]));
        assert_eq!(q_index_set(&[], &[], 4, 2, 4).unwrap(), set(&[1, 4]));
        assert!(matches!(
            q_index_set(&[1], &[3], 4, 2, 4),
            Err(Error::BadShape(_))
        ));
        assert!(matches!(
            q_index_set(&[1, 2], &[1], 4, 2, 4),
            Err(Error::BadShape(_))
        ));
    }

    #[test]
    fn q_index_set_injective() {
        for (m, n) in [(2, 4), (2, 5), (3, 6)] {
            for a in 1..=n {
                let mut seen = std::collections::HashSet::new();
                for t in 0..=m.min(n - m) {
                    for rows in subsets(&(1..=m).collect::<Vec<_>>(), t) {
                        for cols in subsets(&(1..=n - m).collect::<Vec<_>>(), t) {
                            let q = q_index_set(&rows, &cols, a, m, n).unwrap();
                            assert!(seen.insert(q), "collision at ({m},{n}) a={a}");
                        }
                    }
                }
                // every index set arises exactly once, Q(∅,∅) being [M]
                assert_eq!(seen.len(), all_index_sets(m, n).len());
            }
        }
    }

    #[test]
    fn g24_quasi_commutation() {
        let g = Grassmannian::new(2, 4).unwrap();
        assert_eq!(
            g.quasi_commute_exponent(&set(&[1, 2]), &set(&[1, 3]))
                .unwrap(),
            Some(1)
        );
        assert_eq!(
            g.quasi_commute_exponent(&set(&[1, 4]), &set(&[2, 3]))
                .unwrap(),
            Some(0)
        );
        assert_eq!(
            g.quasi_commute_exponent(&set(&[1, 3]), &set(&[2, 4]))
                .unwrap(),
            None
        );
        assert_eq!(
            g.quasi_commute_exponent(&set(&[1, 2]), &set(&[3, 4]))
                .unwrap(),
            Some(2)
        );
    }

    #[test]
    fn index_set_validation_and_display() {
        assert!(IndexSet::new(vec![1, 1], 2, 4).is_err());
        assert!(IndexSet::new(vec![1, 5], 2, 4).is_err());
        assert!(IndexSet::new(vec![1], 2, 4).is_err());
        assert_eq!(
            IndexSet::new(vec![4, 1, 3], 3, 4).unwrap().to_string(),
            "[134]"
        );
        assert_eq!(set(&[2, 11]).to_string(), "[2,11]");
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            subsets(&[1, 2, 3], 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(subsets(&[1, 2], 3), Vec::<Vec<usize>>::new());
        assert_eq!(subsets(&[1, 2], 0), vec![Vec::<usize>::new()]);
    }
}
