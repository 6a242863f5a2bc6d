//! Partial orders on index sets and index pairs, standard monomials, and the
//! comparison between the order on minors of `O_q(M_{m,n-m})` and the cyclic
//! orders on `Π_{m,n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{all_index_sets, q_index_set, tilde, ConsecutiveMinor, IndexSet};
use crate::minors::IndexPair;
use crate::qmatrix::Ambient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosetKind {
    /// componentwise on `Π_{m,n}`
    StdPi,
    /// componentwise after reordering by `s <_s s+1 <_s ... <_s s-1`
    CyclicPi(usize),
    /// the order on index pairs of `O_q(M_{m,n})`
    StdDelta,
}

/// A partial order together with its ambient.
///
/// For the Π-kinds `(m, n)` is the grassmannian `G(m,n)`; for `StdDelta` it
/// is the matrix algebra `M_{m,n}` whose minors are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PosetOrder {
    pub kind: PosetKind,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosetElement {
    Set(IndexSet),
    Pair(IndexPair),
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetElement::Set(s) => s.fmt(f),
            PosetElement::Pair(p) => p.fmt(f),
        }
    }
}

impl PosetOrder {
    pub fn std_pi(m: usize, n: usize) -> Result<Self> {
        Self::checked(PosetKind::StdPi, m, n)
    }

    pub fn cyclic(s: usize, m: usize, n: usize) -> Result<Self> {
        Self::checked(PosetKind::CyclicPi(s), m, n)
    }

    pub fn std_delta(m: usize, n: usize) -> Result<Self> {
        Self::checked(PosetKind::StdDelta, m, n)
    }

    fn checked(kind: PosetKind, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Ambient(format!("empty ambient ({m},{n})")));
        }
        match kind {
            PosetKind::StdPi | PosetKind::CyclicPi(_) if m > n => {
                return Err(Error::Ambient(format!("need m <= n, got ({m},{n})")))
            }
            PosetKind::CyclicPi(s) if s == 0 || s > n => {
                return Err(Error::Config(format!(
                    "cyclic order needs 1 <= s <= {n}, got {s}"
                )))
            }
            _ => {}
        }
        Ok(PosetOrder { kind, m, n })
    }

    /// Parse `std`, `cyclic:S` or `delta`.
    pub fn parse(spec: &str, m: usize, n: usize) -> Result<Self> {
        match spec.trim() {
            "std" => Self::std_pi(m, n),
            "delta" => Self::std_delta(m, n),
            other => {
                let s = other
                    .strip_prefix("cyclic:")
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Config(format!("unknown order '{other}'")))?;
                Self::cyclic(s, m, n)
            }
        }
    }

    pub fn is_pi(&self) -> bool {
        !matches!(self.kind, PosetKind::StdDelta)
    }

    /// Position of column `x` in the base order of `{1..n}`, from 0.
    fn position(&self, x: usize) -> usize {
        match self.kind {
            PosetKind::CyclicPi(s) => (x + self.n - s) % self.n,
            _ => x - 1,
        }
    }

    /// The positions of the elements of `set`, ascending.
    pub fn sorted_positions(&self, set: &IndexSet) -> Vec<usize> {
        let mut v: Vec<usize> = set.elems().iter().map(|&x| self.position(x)).collect();
        v.sort_unstable();
        v
    }

    fn check_set(&self, a: &IndexSet) -> Result<()> {
        if !self.is_pi() {
            return Err(Error::AmbientMismatch(format!("{a} is not an index pair")));
        }
        IndexSet::new(a.elems().to_vec(), self.m, self.n)
            .map(|_| ())
            .map_err(|e| Error::AmbientMismatch(format!("{a} in G({},{}): {e}", self.m, self.n)))
    }

    fn check_pair(&self, p: &IndexPair) -> Result<()> {
        if self.is_pi() {
            return Err(Error::AmbientMismatch(format!("{p} is not an index set")));
        }
        if p.rows().iter().any(|&i| i > self.m) || p.cols().iter().any(|&j| j > self.n) {
            return Err(Error::AmbientMismatch(format!(
                "{p} outside M({},{})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    fn set_leq(&self, a: &IndexSet, b: &IndexSet) -> bool {
        self.sorted_positions(a)
            .iter()
            .zip(self.sorted_positions(b))
            .all(|(x, y)| *x <= y)
    }

    fn pair_leq(a: &IndexPair, b: &IndexPair) -> bool {
        let v = b.size();
        a.size() >= v && (0..v).all(|k| a.rows()[k] <= b.rows()[k] && a.cols()[k] <= b.cols()[k])
    }

    /// Compare two index sets under a Π-kind order.
    pub fn compare_sets(&self, a: &IndexSet, b: &IndexSet) -> Result<Comparison> {
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(combine(self.set_leq(a, b), self.set_leq(b, a)))
    }

    /// Compare two index pairs under `StdDelta`.
    pub fn compare_pairs(&self, a: &IndexPair, b: &IndexPair) -> Result<Comparison> {
        self.check_pair(a)?;
        self.check_pair(b)?;
        Ok(combine(Self::pair_leq(a, b), Self::pair_leq(b, a)))
    }

    pub fn compare(&self, a: &PosetElement, b: &PosetElement) -> Result<Comparison> {
        match (a, b) {
            (PosetElement::Set(x), PosetElement::Set(y)) => self.compare_sets(x, y),
            (PosetElement::Pair(x), PosetElement::Pair(y)) => self.compare_pairs(x, y),
            _ => Err(Error::AmbientMismatch(format!(
                "cannot compare {a} with {b}"
            ))),
        }
    }

    /// `a ≤ b`, for index sets already known to be valid.
    pub fn leq(&self, a: &IndexSet, b: &IndexSet) -> bool {
        self.set_leq(a, b)
    }

    /// `a < b`
    pub fn lt(&self, a: &IndexSet, b: &IndexSet) -> bool {
        a != b && self.set_leq(a, b)
    }

    /// Every element of the poset in lexicographic order.
    pub fn elements(&self) -> Vec<PosetElement> {
        if self.is_pi() {
            all_index_sets(self.m, self.n)
                .into_iter()
                .map(PosetElement::Set)
                .collect()
        } else {
            let amb = Ambient::new(self.m, self.n).expect("checked on construction");
            let mut v: Vec<_> = IndexPair::all(amb)
                .into_iter()
                .map(PosetElement::Pair)
                .collect();
            v.sort();
            v
        }
    }
}

fn combine(le: bool, ge: bool) -> Comparison {
    match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::LessEq,
        (false, true) => Comparison::GreaterEq,
        (false, false) => Comparison::Incomparable,
    }
}

impl fmt::Display for PosetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PosetKind::StdPi => write!(f, "std"),
            PosetKind::CyclicPi(s) => write!(f, "cyclic:{s}"),
            PosetKind::StdDelta => write!(f, "delta"),
        }
    }
}

/// A weakly increasing product of index sets; the empty product is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardMonomial {
    pub factors: Vec<IndexSet>,
}

impl StandardMonomial {
    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for s in &self.factors {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// All standard monomials of the given degree, in lexicographic order of
/// their factor lists.
pub fn enumerate_standard(ord: &PosetOrder, degree: usize) -> Result<Vec<StandardMonomial>> {
    if !ord.is_pi() {
        return Err(Error::BadShape(
            "standard monomials are enumerated on Π only".into(),
        ));
    }
    let elems = all_index_sets(ord.m, ord.n);
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(degree);
    fn go(
        ord: &PosetOrder,
        elems: &[IndexSet],
        degree: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<StandardMonomial>,
    ) {
        if cur.len() == degree {
            out.push(StandardMonomial {
                factors: cur.iter().map(|&i| elems[i].clone()).collect(),
            });
            return;
        }
        for i in 0..elems.len() {
            if let Some(&prev) = cur.last() {
                if !ord.leq(&elems[prev], &elems[i]) {
                    continue;
                }
            }
            cur.push(i);
            go(ord, elems, degree, cur, out);
            cur.pop();
        }
    }
    go(ord, &elems, degree, &mut cur, &mut out);
    Ok(out)
}

/// The `a` paired with the cyclic order `<_s` on `Π_{m,n}`: `(s - m)~`.
pub fn shift_for(s: usize, m: usize, n: usize) -> usize {
    tilde(s as i64 - m as i64, n)
}

/// The consecutive minor at `(s - m)~`, checked to dominate all of `Π_s`.
pub fn maximal_element(s: usize, m: usize, n: usize) -> Result<IndexSet> {
    let ord = PosetOrder::cyclic(s, m, n)?;
    let top = ConsecutiveMinor::new(shift_for(s, m, n), m, n)?.index_set();
    for x in all_index_sets(m, n) {
        if !ord.leq(&x, &top) {
            return Err(Error::BadShape(format!("{top} is not above {x} in {ord}")));
        }
    }
    Ok(top)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderIsoMismatch {
    pub left: String,
    pub right: String,
    pub delta: Comparison,
    pub cyclic: Comparison,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderIsoReport {
    pub s: usize,
    pub a: usize,
    pub m: usize,
    pub n: usize,
    pub pairs_checked: usize,
    /// `Q` is a bijection onto `Π_{m,n}` minus the consecutive minor at `a`
    pub bijective: bool,
    pub mismatches: Vec<OrderIsoMismatch>,
}

impl OrderIsoReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.mismatches.is_empty()
    }
}

/// Compare `StdDelta` on `O_q(M_{m,n-m})` with `<_s` on the images under `Q`
/// with shift `a = (s - m)~`, over every pair of index pairs.
pub fn check_order_iso(s: usize, m: usize, n: usize) -> Result<OrderIsoReport> {
    check_order_iso_at(s, shift_for(s, m, n), m, n)
}

/// As [`check_order_iso`] with an explicit shift `a`.
pub fn check_order_iso_at(s: usize, a: usize, m: usize, n: usize) -> Result<OrderIsoReport> {
    if m >= n {
        return Err(Error::Config(format!(
            "need m < n for M(m, n-m), got ({m},{n})"
        )));
    }
    let cyc = PosetOrder::cyclic(s, m, n)?;
    let delta = PosetOrder::std_delta(m, n - m)?;
    let amb = Ambient::new(m, n - m)?;
    let pairs = IndexPair::all(amb);
    let images: Vec<IndexSet> = pairs
        .iter()
        .map(|p| q_index_set(p.rows(), p.cols(), a, m, n))
        .collect::<Result<_>>()?;

    let top = ConsecutiveMinor::new(a, m, n)?.index_set();
    let mut seen: Vec<IndexSet> = images.clone();
    seen.sort();
    seen.dedup();
    let expected: Vec<IndexSet> = all_index_sets(m, n)
        .into_iter()
        .filter(|x| *x != top)
        .collect();
    let bijective = seen.len() == images.len() && seen == expected;

    let mut mismatches = Vec::new();
    for (p1, q1) in pairs.iter().zip(&images) {
        for (p2, q2) in pairs.iter().zip(&images) {
            let d = delta.compare_pairs(p1, p2)?;
            let c = cyc.compare_sets(q1, q2)?;
            if d != c {
                mismatches.push(OrderIsoMismatch {
                    left: format!("{p1} -> {q1}"),
                    right: format!("{p2} -> {q2}"),
                    delta: d,
                    cyclic: c,
                });
            }
        }
    }
    Ok(OrderIsoReport {
        s,
        a,
        m,
        n,
        pairs_checked: pairs.len() * pairs.len(),
        bijective,
        mismatches,
    })
}

/// Hasse diagram as node labels and covering edges `[lower, upper]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub order: String,
    pub m: usize,
    pub n: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

pub fn hasse_diagram(ord: &PosetOrder) -> Result<HasseDiagram> {
    let elems = ord.elements();
    let k = elems.len();
    let mut lt = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            lt[i][j] = ord.compare(&elems[i], &elems[j])? == Comparison::LessEq;
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if lt[i][j] && !(0..k).any(|c| lt[i][c] && lt[c][j]) {
                edges.push([elems[i].to_string(), elems[j].to_string()]);
            }
        }
    }
    Ok(HasseDiagram {
        order: ord.to_string(),
        m: ord.m,
        n: ord.n,
        nodes: elems.iter().map(|e| e.to_string()).collect(),
        edges,
    })
}
