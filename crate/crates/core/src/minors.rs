//! Quantum minors, final-row Laplace expansion, generalized quantum Plücker
//! relations and the quantum Muir law.

use std::fmt;

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::grassmann::{subsets, Grassmannian, IndexSet};
use crate::qmatrix::{normal_form, Ambient, Generator, NCPoly, Word};

/// `ℓ(I;J) = |{(i,j) ∈ I×J : i > j}|`.
pub fn ell(i: &[usize], j: &[usize]) -> usize {
    i.iter()
        .map(|&a| j.iter().filter(|&&b| a > b).count())
        .sum()
}

/// Row and column sets `(I, J)` of a `t × t` minor, both strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl IndexPair {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, amb: Ambient) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::BadShape(format!(
                "index pair needs |I| = |J| >= 1, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::BadShape(format!(
                "unsorted index pair ({rows:?},{cols:?})"
            )));
        }
        if rows.iter().any(|&i| i == 0 || i > amb.m) || cols.iter().any(|&j| j == 0 || j > amb.n) {
            return Err(Error::Ambient(format!(
                "index pair ({rows:?},{cols:?}) outside {amb}"
            )));
        }
        Ok(IndexPair { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Every index pair of `O_q(M_{m,n})`, ordered by size, then rows, then columns.
    pub fn all(amb: Ambient) -> Vec<IndexPair> {
        let rows: Vec<usize> = (1..=amb.m).collect();
        let cols: Vec<usize> = (1..=amb.n).collect();
        let mut out = Vec::new();
        for t in 1..=amb.m.min(amb.n) {
            for r in subsets(&rows, t) {
                for c in subsets(&cols, t) {
                    out.push(IndexPair {
                        rows: r.clone(),
                        cols: c,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

/// Permutations of `0..t` in lexicographic order.
fn permutations(t: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..t).collect(), &mut Vec::new(), &mut out);
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum()
}

/// `Σ_σ (-q)^{ℓ(σ)} x_{i_σ(1) j_1} ⋯ x_{i_σ(t) j_t}` for arbitrary column
/// lists, repeated columns included.
pub fn formal_minor(amb: Ambient, rows: &[usize], cols: &[usize]) -> Result<NCPoly> {
    if rows.len() != cols.len() {
        return Err(Error::BadShape(
            "row and column lists differ in length".into(),
        ));
    }
    let mut raw = Vec::new();
    for sigma in permutations(rows.len()) {
        let gens: Vec<Generator> = sigma
            .iter()
            .zip(cols)
            .map(|(&s, &j)| Generator::new(rows[s], j))
            .collect();
        raw.push((
            Word::from_generators(amb, &gens)?,
            LaurentPoly::neg_q_pow(inversions(&sigma) as i32),
        ));
    }
    Ok(normal_form(amb, raw))
}

/// The quantum minor `[I|J]` by the permutation-sum definition.
pub fn quantum_minor(amb: Ambient, p: &IndexPair) -> Result<NCPoly> {
    formal_minor(amb, &p.rows, &p.cols)
}

/// `[I|J]` expanded along its final row, recursively down to single
/// generators: `Σ_k (-q)^{t-k} [I∖{i_t} | J∖{j_k}] x_{i_t j_k}`.
pub fn laplace_last_row(amb: Ambient, p: &IndexPair) -> Result<NCPoly> {
    let t = p.size();
    if t < 2 {
        return Err(Error::TooSmall(t));
    }
    laplace_rec(amb, &p.rows, &p.cols)
}

fn laplace_rec(amb: Ambient, rows: &[usize], cols: &[usize]) -> Result<NCPoly> {
    let t = rows.len();
    if t == 1 {
        return NCPoly::generator(amb, Generator::new(rows[0], cols[0]));
    }
    let last = rows[t - 1];
    let mut out = NCPoly::zero(amb);
    for k in 0..t {
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &c)| c)
            .collect();
        let sub = laplace_rec(amb, &rows[..t - 1], &sub_cols)?;
        let x = NCPoly::generator(amb, Generator::new(last, cols[k]))?;
        out.add_scaled(
            &LaurentPoly::neg_q_pow((t - 1 - k) as i32),
            &sub.nc_mul(&x)?,
        );
    }
    Ok(out)
}

/// Data `(J_1, J_2, K)` of a generalized quantum Plücker relation in
/// `O_q(G(m,n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerInstance {
    pub m: usize,
    pub n: usize,
    pub j1: IndexSet,
    pub j2: IndexSet,
    pub k: IndexSet,
}

impl PluckerInstance {
    pub fn new(m: usize, n: usize, j1: IndexSet, j2: IndexSet, k: IndexSet) -> Result<Self> {
        let inside = |s: &IndexSet| s.elems().iter().all(|&x| (1..=n).contains(&x));
        if !(inside(&j1) && inside(&j2) && inside(&k)) {
            return Err(Error::BadShape(format!("indices outside 1..={n}")));
        }
        if j1.len() > m || j2.len() > m {
            return Err(Error::BadShape(format!("|J1|, |J2| must be <= m = {m}")));
        }
        if k.len() + j1.len() + j2.len() != 2 * m || k.len() <= m {
            return Err(Error::BadShape(format!(
                "need |K| = 2m - |J1| - |J2| > m, got |K| = {}, |J1| = {}, |J2| = {}",
                k.len(),
                j1.len(),
                j2.len()
            )));
        }
        Ok(PluckerInstance { m, n, j1, j2, k })
    }

    /// Every valid instance for the given `(m, n)`.
    pub fn enumerate(m: usize, n: usize) -> Vec<PluckerInstance> {
        let all: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        for s1 in 0..=m {
            for s2 in 0..=m {
                if s1 + s2 > 2 * m {
                    continue;
                }
                let ks = 2 * m - s1 - s2;
                if ks <= m || ks > n {
                    continue;
                }
                for j1 in subsets(&all, s1) {
                    for j2 in subsets(&all, s2) {
                        for k in subsets(&all, ks) {
                            out.push(PluckerInstance {
                                m,
                                n,
                                j1: IndexSet::from_set(j1.iter().copied()),
                                j2: IndexSet::from_set(j2.iter().copied()),
                                k: IndexSet::from_set(k),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// The non-degenerate terms `(coeff, [J_1 ⊔ K'], [K'' ⊔ J_2])`.
    ///
    /// Splittings whose minors would repeat an index vanish and are skipped.
    pub fn terms(&self) -> Vec<(LaurentPoly, IndexSet, IndexSet)> {
        let mut out = Vec::new();
        let need = self.m - self.j1.len();
        for kp in subsets(self.k.elems(), need) {
            let kp = IndexSet::from_set(kp);
            let kpp = self.k.difference(&kp);
            if !self.j1.is_disjoint(&kp) || !kpp.is_disjoint(&self.j2) {
                continue;
            }
            let e = ell(self.j1.elems(), kp.elems())
                + ell(kp.elems(), kpp.elems())
                + ell(kpp.elems(), self.j2.elems());
            out.push((
                LaurentPoly::neg_q_pow(e as i32),
                self.j1.union(&kp),
                kpp.union(&self.j2),
            ));
        }
        out
    }
}

impl fmt::Display for PluckerInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G({},{}) J1={} J2={} K={}",
            self.m, self.n, self.j1, self.j2, self.k
        )
    }
}

/// `Σ c_s [A_s][B_s]` in normal form.
pub fn relation_value(
    g: &Grassmannian,
    rel: &[(LaurentPoly, IndexSet, IndexSet)],
) -> Result<NCPoly> {
    let mut out = NCPoly::zero(g.ambient());
    for (c, a, b) in rel {
        out.add_scaled(c, &g.product(&[a.clone(), b.clone()])?);
    }
    Ok(out)
}

/// The generalized Plücker sum; it should normalize to zero.
pub fn plucker_sum(g: &Grassmannian, inst: &PluckerInstance) -> Result<NCPoly> {
    if g.m() != inst.m || g.n() != inst.n {
        return Err(Error::AmbientMismatch(format!(
            "{g:?} vs instance in G({},{})",
            inst.m, inst.n
        )));
    }
    relation_value(g, &inst.terms())
}

/// Quantum Muir extension: adjoin `P̄ = {1..n} ∖ P` to every minor of a
/// verified relation `Σ c_s [I_s][J_s] = 0` and re-verify in `O_q(G(m', n))`.
pub fn muir_extend(
    relation: &[(LaurentPoly, IndexSet, IndexSet)],
    p: &IndexSet,
    n: usize,
) -> Result<Vec<(LaurentPoly, IndexSet, IndexSet)>> {
    let m = relation
        .first()
        .map(|(_, a, _)| a.len())
        .ok_or_else(|| Error::NotARelation("empty relation".into()))?;
    for (_, a, b) in relation {
        if a.len() != m || b.len() != m {
            return Err(Error::BadShape("minors of different sizes".into()));
        }
        if !a.union(b).difference(p).is_empty() {
            return Err(Error::BadShape(format!("{a}{b} not inside P = {p}")));
        }
    }
    if p.elems().iter().any(|&x| x == 0 || x > n) {
        return Err(Error::BadShape(format!("P = {p} outside 1..={n}")));
    }
    let g = Grassmannian::new(m, n)?;
    let v = relation_value(&g, relation)?;
    if !v.is_zero() {
        return Err(Error::NotARelation(format!("sum normalizes to {v}")));
    }
    let pbar = IndexSet::from_set((1..=n).filter(|&x| !p.contains(x)));
    if pbar.is_empty() {
        return Ok(relation.to_vec());
    }
    let extended: Vec<_> = relation
        .iter()
        .map(|(c, a, b)| (c.clone(), a.union(&pbar), b.union(&pbar)))
        .collect();
    let g2 = Grassmannian::new(m + pbar.len(), n)?;
    let v2 = relation_value(&g2, &extended)?;
    if !v2.is_zero() {
        return Err(Error::ExtensionFailed(format!(
            "extended sum normalizes to {v2}"
        )));
    }
    Ok(extended)
}
