//! Root systems, parabolic subgroups and Weyl orbits in exact arithmetic.
//!
//! Nodes follow Bourbaki numbering, 1-based in labels and 0-based in code:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - ... - (n-1) => n          (α_n short)
//! C_n  1 - ... - (n-1) <= n          (α_n long)
//! D_n  1 - ... - (n-2) - (n-1), with n also attached to n-2
//! E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//! F_4  1 - 2 => 3 - 4                (α1, α2 long)
//! G_2  1 <= 2                        (α1 short)
//! ```
//!
//! Roots are integer vectors in the simple-root basis. Weights are either
//! Dynkin labels (integers) or rational vectors in the simple-root basis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    /// Inner products of simple roots, short roots of squared length 2.
    gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

fn parse_label(label: &str) -> Result<(Family, usize)> {
    let unknown = || Error::UnknownLabel(label.to_string());
    let s: String = label
        .chars()
        .filter(|c| !matches!(c, '_' | ' ' | '{' | '}'))
        .collect();
    let mut chars = s.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        Some('E') => Family::E,
        Some('F') => Family::F,
        Some('G') => Family::G,
        _ => return Err(unknown()),
    };
    let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if ok {
        Ok((family, rank))
    } else {
        Err(unknown())
    }
}

/// Gram matrix of the simple roots for a connected Dynkin type.
fn gram_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let mut bond = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => (0..n - 1).for_each(|i| bond(i, i + 1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| bond(i, i + 1, -2));
            bond(n - 2, n - 1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| bond(i, i + 1, -1));
            bond(n - 2, n - 1, -2);
        }
        Family::D => {
            (0..n - 2).for_each(|i| bond(i, i + 1, -1));
            bond(n - 3, n - 1, -1);
        }
        Family::E => {
            bond(0, 2, -1);
            bond(1, 3, -1);
            (2..n - 1).for_each(|i| bond(i, i + 1, -1));
        }
        Family::F => {
            bond(0, 1, -2);
            bond(1, 2, -2);
            bond(2, 3, -1);
        }
        Family::G => bond(0, 1, -3),
    }
    let long = match family {
        Family::B => (0..n)
            .map(|i| if i < n - 1 { 4 } else { 2 })
            .collect::<Vec<_>>(),
        Family::C => (0..n).map(|i| if i < n - 1 { 2 } else { 4 }).collect(),
        Family::F => vec![4, 4, 2, 2],
        Family::G => vec![2, 6],
        _ => vec![2; n],
    };
    for (i, l) in long.into_iter().enumerate() {
        g[i][i] = l;
    }
    g
}

impl RootDatum {
    pub fn build(label: &str) -> Result<Self> {
        let (family, rank) = parse_label(label)?;
        let gram = gram_matrix(family, rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let mut d = Self {
            family,
            rank,
            gram,
            cartan,
            positive: Vec::new(),
        };
        d.positive = d.compute_positive_roots();
        Ok(d)
    }

    fn compute_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let simple: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut all: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut layer = simple;
        let mut out = Vec::new();
        while !layer.is_empty() {
            layer.sort();
            out.extend(layer.iter().cloned());
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    // α_i-string through β: p = how far down, then up by p − ⟨β, α_i^∨⟩.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if all.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !all.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        out
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty")
    }

    pub fn norm2(&self, v: &[i64]) -> i64 {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| v[i] * self.gram[i][j] * v[j])
                    .sum::<i64>()
            })
            .sum()
    }

    /// `(long, short)` positive-root counts; simply-laced types count as long.
    pub fn long_short_counts(&self) -> (usize, usize) {
        let max = (0..self.rank).map(|i| self.gram[i][i]).max().unwrap_or(2);
        let long = self
            .positive
            .iter()
            .filter(|r| self.norm2(r) == max)
            .count();
        (long, self.positive.len() - long)
    }

    /// Dynkin labels of a vector given in the simple-root basis.
    pub fn to_labels(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| v[i] * self.cartan[i][j]).sum())
            .collect()
    }

    fn inverse_cartan(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        let v = if j < n {
                            self.cartan[i][j]
                        } else {
                            i64::from(j - n == i)
                        };
                        BigRational::from_integer(BigInt::from(v))
                    })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !m[r][c].is_zero())
                .expect("Cartan matrices are invertible");
            m.swap(c, p);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    let row = m[c].clone();
                    for (x, y) in m[r].iter_mut().zip(row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        m.into_iter().map(|r| r[n..].to_vec()).collect()
    }

    /// Converts Dynkin labels to simple-root coordinates.
    pub fn labels_to_roots(&self, labels: &[i64]) -> Vec<BigRational> {
        let inv = self.inverse_cartan();
        (0..self.rank)
            .map(|j| {
                (0..self.rank)
                    .map(|i| BigRational::from_integer(BigInt::from(labels[i])) * &inv[i][j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// `ω_i` (0-based) in simple-root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Vec<BigRational> {
        self.labels_to_roots(&unit(self.rank, i))
    }

    fn reflect_labels(&self, w: &[i64], j: usize) -> Vec<i64> {
        let c = w[j];
        w.iter()
            .zip(&self.cartan[j])
            .map(|(x, a)| x - c * a)
            .collect()
    }

    /// Orbit of a weight (Dynkin labels) under the subgroup generated by the
    /// simple reflections in `nodes`, sorted.
    pub fn orbit_under(&self, w: &[i64], nodes: &[usize]) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::from([w.to_vec()]);
        seen.insert(w.to_vec());
        while let Some(x) = queue.pop_front() {
            for &j in nodes {
                if x[j] != 0 {
                    let y = self.reflect_labels(&x, j);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Full Weyl orbit of a weight given by Dynkin labels.
    pub fn weight_orbit(&self, w: &[i64]) -> Vec<Vec<i64>> {
        self.orbit_under(w, &(0..self.rank).collect::<Vec<_>>())
    }

    /// Number of `W_L`-orbits on `W·w`; each contains exactly one weight
    /// dominant for `L`.
    pub fn levi_orbit_count(&self, w: &[i64], levi: &[usize]) -> usize {
        self.weight_orbit(w)
            .iter()
            .filter(|x| levi.iter().all(|&j| x[j] >= 0))
            .count()
    }

    /// Order of the parabolic subgroup `W_S`, via `|W_S| = |W_S·ω_i|·|W_{S∖i}|`.
    pub fn weyl_order_of(&self, nodes: &[usize]) -> u128 {
        match nodes.split_last() {
            None => 1,
            Some((&i, rest)) => {
                self.orbit_under(&unit(self.rank, i), nodes).len() as u128
                    * self.weyl_order_of(rest)
            }
        }
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order_of(&(0..self.rank).collect::<Vec<_>>())
    }

    fn neighbours(&self, i: usize, nodes: &[usize]) -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut out = Vec::new();
        while let Some(&s) = left.iter().next() {
            let mut comp = vec![s];
            left.remove(&s);
            let mut k = 0;
            while k < comp.len() {
                for j in self.neighbours(comp[k], nodes) {
                    if left.remove(&j) {
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn classify_component(&self, comp: &[usize]) -> String {
        let n = comp.len();
        let bonds: Vec<(usize, usize, i64)> = comp
            .iter()
            .flat_map(|&i| comp.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| i < j && self.cartan[i][j] != 0)
            .map(|(i, j)| (i, j, self.cartan[i][j] * self.cartan[j][i]))
            .collect();
        let degree = |i: usize| self.neighbours(i, comp).len();
        if bonds.iter().any(|b| b.2 == 3) {
            return "G2".into();
        }
        if let Some(&(i, j, _)) = bonds.iter().find(|b| b.2 == 2) {
            if n == 2 {
                return "C2".into();
            }
            let end = if degree(i) == 1 {
                Some(i)
            } else if degree(j) == 1 {
                Some(j)
            } else {
                None
            };
            return match end {
                None => "F4".into(),
                Some(e) => {
                    let other = if e == i { j } else { i };
                    let f = if self.gram[e][e] < self.gram[other][other] {
                        "B"
                    } else {
                        "C"
                    };
                    format!("{f}{n}")
                }
            };
        }
        if let Some(&c) = comp.iter().find(|&&i| degree(i) == 3) {
            let mut arms: Vec<usize> = self
                .neighbours(c, comp)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    loop {
                        let next: Vec<usize> = self
                            .neighbours(cur, comp)
                            .into_iter()
                            .filter(|&x| x != prev)
                            .collect();
                        match next.as_slice() {
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            return match arms.as_slice() {
                [1, 1, k] => format!("D{}", k + 3),
                [1, 2, k] => format!("E{}", k + 4),
                _ => format!("?{n}"),
            };
        }
        format!("A{n}")
    }

    /// Type of the sub-diagram on `nodes`, components joined by `+`
    /// (`"A2+A1"`); the empty diagram is `"T"`.
    pub fn subdiagram_label(&self, nodes: &[usize]) -> String {
        let mut labels: Vec<String> = self
            .components(nodes)
            .iter()
            .map(|c| self.classify_component(c))
            .collect();
        if labels.is_empty() {
            return "T".into();
        }
        labels.sort_by(|a, b| b.len().cmp(&a.len()).then(b.cmp(a)));
        labels.join("+")
    }

    pub fn complement(&self, removed: &[usize]) -> Vec<usize> {
        (0..self.rank).filter(|i| !removed.contains(i)).collect()
    }

    /// Positive roots with a nonzero coefficient on some removed node.
    pub fn nilradical_roots(&self, removed: &[usize]) -> Vec<&Vec<i64>> {
        self.positive
            .iter()
            .filter(|r| removed.iter().any(|&k| r[k] > 0))
            .collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

/// Node values 0 or 2.
pub type Marking = Vec<u8>;

/// 0 at the branch vertex (middle vertex for `A_{2n−1}`), 2 elsewhere.
pub fn subregular_marking(d: &RootDatum) -> Result<Marking> {
    let all: Vec<usize> = (0..d.rank()).collect();
    let centre = match d.family() {
        Family::A if d.rank() % 2 == 1 => Some(d.rank() / 2),
        Family::D | Family::E => all
            .iter()
            .copied()
            .find(|&i| d.neighbours(i, &all).len() == 3),
        _ => None,
    };
    let c = centre.ok_or_else(|| Error::NoBranchVertex(d.label()))?;
    Ok((0..d.rank()).map(|i| if i == c { 0 } else { 2 }).collect())
}

/// Marking of the sub-diagram on `nodes` by the same rule, if it applies.
fn subdiagram_marking(d: &RootDatum, nodes: &[usize]) -> Option<Vec<u8>> {
    let label = d.subdiagram_label(nodes);
    if label.contains('+') {
        return None;
    }
    let n = nodes.len();
    let centre = if label.starts_with('A') {
        if n.is_multiple_of(2) {
            return None;
        }
        // Middle of the chain, walking from an end node.
        let end = nodes
            .iter()
            .copied()
            .find(|&i| d.neighbours(i, nodes).len() <= 1)?;
        let (mut prev, mut cur) = (usize::MAX, end);
        for _ in 0..n / 2 {
            let next = d.neighbours(cur, nodes).into_iter().find(|&x| x != prev)?;
            prev = cur;
            cur = next;
        }
        cur
    } else if label.starts_with('D') || label.starts_with('E') {
        nodes
            .iter()
            .copied()
            .find(|&i| d.neighbours(i, nodes).len() == 3)?
    } else {
        return None;
    };
    Some(
        nodes
            .iter()
            .map(|&i| if i == centre { 0 } else { 2 })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicSpec {
    pub group: String,
    /// 1-based nodes kept in the Levi.
    pub levi_nodes: Vec<usize>,
    /// 1-based nodes removed.
    pub removed: Vec<usize>,
}

impl ParabolicSpec {
    pub fn maximal(d: &RootDatum, removed: usize) -> Self {
        Self {
            group: d.label(),
            levi_nodes: d.complement(&[removed]).iter().map(|i| i + 1).collect(),
            removed: vec![removed + 1],
        }
    }

    fn removed0(&self) -> Vec<usize> {
        self.removed.iter().map(|i| i - 1).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FavorableParabolic {
    pub parabolic: ParabolicSpec,
    pub levi: String,
    pub nilradical_dim: usize,
}

/// Maximal parabolics with abelian nilradical whose Levi inherits the
/// subregular marking.
pub fn favorable_parabolics(d: &RootDatum) -> Result<Vec<FavorableParabolic>> {
    let marking = subregular_marking(d)?;
    let hr = d.highest_root().to_vec();
    let mut out = Vec::new();
    for k in 0..d.rank() {
        if hr[k] != 1 {
            continue;
        }
        let levi = d.complement(&[k]);
        let restricted: Vec<u8> = levi.iter().map(|&i| marking[i]).collect();
        if subdiagram_marking(d, &levi).as_ref() == Some(&restricted) {
            out.push(FavorableParabolic {
                parabolic: ParabolicSpec::maximal(d, k),
                levi: d.subdiagram_label(&levi),
                nilradical_dim: d.nilradical_roots(&[k]).len(),
            });
        }
    }
    Ok(out)
}

/// Distinct `(Levi, dim)` rows of [`favorable_parabolics`].
pub fn favorable_rows(d: &RootDatum) -> Result<Vec<(String, usize)>> {
    let rows: BTreeSet<(String, usize)> = favorable_parabolics(d)?
        .into_iter()
        .map(|f| (f.levi, f.nilradical_dim))
        .collect();
    Ok(rows.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeisenbergGrading {
    pub parabolic: ParabolicSpec,
    pub levi: String,
    /// `dim g(0)`, `dim g(1)`, `dim g(2)`.
    pub dims: [usize; 3],
}

/// Grading by the simple root `α` not orthogonal to the highest root.
pub fn heisenberg_parabolic(d: &RootDatum) -> Result<HeisenbergGrading> {
    let labels = d.to_labels(d.highest_root());
    let nodes: Vec<usize> = (0..d.rank()).filter(|&i| labels[i] != 0).collect();
    let &[k] = nodes.as_slice() else {
        return Err(Error::InvalidArgument(format!(
            "{} has no unique simple root pairing with the highest root",
            d.label()
        )));
    };
    let count = |c: i64| d.positive_roots().iter().filter(|r| r[k] == c).count();
    let levi = d.complement(&[k]);
    Ok(HeisenbergGrading {
        parabolic: ParabolicSpec::maximal(d, k),
        levi: d.subdiagram_label(&levi),
        dims: [d.rank() + 2 * count(0), count(1), count(2)],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoExponents {
    /// Sum of nilradical roots = `full · det`.
    pub full: String,
    /// Half that sum = `half · det`.
    pub half: String,
}

/// Exponents `e` with `Σ nilradical roots = e·det`, for both conventions.
pub fn nilradical_char_exponent(
    d: &RootDatum,
    p: &ParabolicSpec,
    det: &[BigRational],
) -> Result<(BigRational, BigRational)> {
    let removed = p.removed0();
    if det.len() != d.rank() || det.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument(
            "det weight must be a nonzero vector of rank length".into(),
        ));
    }
    let mut sum = vec![0i64; d.rank()];
    for r in d.nilradical_roots(&removed) {
        for (s, c) in sum.iter_mut().zip(r) {
            *s += c;
        }
    }
    let i = det.iter().position(|x| !x.is_zero()).expect("nonzero");
    let ratio = BigRational::from_integer(BigInt::from(sum[i])) / &det[i];
    for (s, w) in sum.iter().zip(det) {
        if BigRational::from_integer(BigInt::from(*s)) != &ratio * w {
            return Err(Error::NotProportional);
        }
    }
    let half = &ratio / BigRational::from_integer(BigInt::from(2));
    Ok((ratio, half))
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a node list `"1,2,4"` (1-based) or a Levi type such as `"A2+A2"`.
/// For a type, the first node whose removal leaves that type is used and
/// the weight is the corresponding fundamental weight.
pub fn resolve_levi(d: &RootDatum, spec: &str) -> Result<(Vec<usize>, Vec<i64>)> {
    if spec
        .chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c == ' ')
    {
        let nodes: Vec<usize> = spec
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| (1..=d.rank()).contains(&n))
                    .map(|n| n - 1)
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument(format!("bad node list {spec:?}")))?;
        let removed = d.complement(&nodes);
        let &[k] = removed.as_slice() else {
            return Err(Error::InvalidArgument(
                "node list must omit exactly one node".into(),
            ));
        };
        return Ok((nodes, unit(d.rank(), k)));
    }
    let want = normalize_label(spec);
    (0..d.rank())
        .find(|&k| normalize_label(&d.subdiagram_label(&d.complement(&[k]))) == want)
        .map(|k| (d.complement(&[k]), unit(d.rank(), k)))
        .ok_or_else(|| {
            Error::InvalidArgument(format!("{} has no maximal Levi of type {spec}", d.label()))
        })
}

fn normalize_label(s: &str) -> String {
    let mut parts: Vec<String> = s
        .split('+')
        .map(|p| {
            p.chars()
                .filter(|c| !matches!(c, '_' | ' ' | '{' | '}'))
                .collect::<String>()
                .to_ascii_uppercase()
        })
        .collect();
    parts.sort();
    parts.join("+")
}

/// `|W_L \ W / W_L|` for the maximal Levi given by `spec`.
pub fn double_coset_count(group: &str, levi: &str) -> Result<usize> {
    let d = RootDatum::build(group)?;
    let (nodes, w) = resolve_levi(&d, levi)?;
    Ok(d.levi_orbit_count(&w, &nodes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicSquareRow {
    pub dim_d: usize,
    pub g: String,
    pub m_stored: String,
    pub m_computed: String,
    pub l_stored: String,
    pub l_computed: String,
    pub h_stored: String,
    pub heisenberg_dim: usize,
    pub discrepancy: Option<String>,
}

pub fn magic_square_row(dim_d: usize) -> Result<MagicSquareRow> {
    let (g, m, l, h) = match dim_d {
        1 => ("F4", "C3", "A2", "SO3"),
        2 => ("E6", "A5", "A2+A2", "SL3"),
        4 => ("E7", "E6", "A5", "Sp6"),
        8 => ("E8", "E7", "E6", "F4"),
        d => return Err(Error::BadCompositionDim(d)),
    };
    let gd = RootDatum::build(g)?;
    let heis = heisenberg_parabolic(&gd)?;
    let md = RootDatum::build(&heis.levi)?;
    let jdim = 3 + 3 * dim_d;
    let hr = md.highest_root().to_vec();
    let l_computed = (0..md.rank())
        .find(|&k| hr[k] == 1 && md.nilradical_roots(&[k]).len() == jdim)
        .map(|k| md.subdiagram_label(&md.complement(&[k])))
        .unwrap_or_else(|| "?".into());
    let mut notes = Vec::new();
    if normalize_label(&heis.levi) != normalize_label(m) {
        notes.push(format!("M_D computed {} but stored {}", heis.levi, m));
    }
    if normalize_label(&l_computed) != normalize_label(l) {
        notes.push(format!("L_D computed {l_computed} but stored {l}"));
    }
    Ok(MagicSquareRow {
        dim_d,
        g: g.into(),
        m_stored: m.into(),
        m_computed: heis.levi.clone(),
        l_stored: l.into(),
        l_computed,
        h_stored: h.into(),
        heisenberg_dim: heis.dims[1],
        discrepancy: (!notes.is_empty()).then(|| notes.join("; ")),
    })
}

/// One stored constant with the value derived from root data, when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub table: String,
    pub row: String,
    pub key: String,
    pub stored: String,
    pub computed: Option<String>,
    pub anchor: String,
    /// Set when the stored value is a known misprint and the computed value is correct.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

impl ConstantEntry {
    pub fn agrees(&self) -> bool {
        self.computed.as_ref().is_none_or(|c| c == &self.stored)
    }

    /// Agrees, or disagrees only through a documented erratum.
    pub fn accepted(&self) -> bool {
        self.agrees() || self.erratum.is_some()
    }
}

fn entry(
    table: &str,
    row: &str,
    key: &str,
    stored: &str,
    computed: Option<String>,
    anchor: &str,
) -> ConstantEntry {
    ConstantEntry {
        table: table.into(),
        row: row.into(),
        key: key.into(),
        stored: stored.into(),
        computed,
        anchor: anchor.into(),
        erratum: None,
    }
}

/// Every stored table constant together with independently derived values.
pub fn paper_constant_tables() -> Result<Vec<ConstantEntry>> {
    let mut out = Vec::new();
    let fav = "s, t, d for the favorable parabolic: V_N = |det|^{t/d} V_M + |det|^{s/d}";
    let fav_d = |label: &str| -> Result<Option<String>> {
        let d = RootDatum::build(label)?;
        Ok(favorable_rows(&d)?.first().map(|r| r.1.to_string()))
    };
    for (row, s, t, d) in [
        ("D_{n+1}", "n-1", "1", "2n"),
        ("E6", "4", "2", "16"),
        ("E7", "6", "3", "27"),
    ] {
        out.push(entry("favorable", row, "s", s, None, fav));
        out.push(entry("favorable", row, "t", t, None, fav));
        let computed = match row {
            "D_{n+1}" => None,
            r => fav_d(r)?,
        };
        out.push(entry("favorable", row, "d", d, computed, fav));
    }
    for n in 4..=7usize {
        let row = format!("D{}", n + 1);
        out.push(entry(
            "favorable",
            &row,
            "s",
            &(n - 1).to_string(),
            None,
            fav,
        ));
        out.push(entry("favorable", &row, "t", "1", None, fav));
        out.push(entry(
            "favorable",
            &row,
            "d",
            &(2 * n).to_string(),
            fav_d(&row)?,
            fav,
        ));
    }
    let heis =
        "s, t for the Heisenberg parabolic: V_N = V_M |det|^{t/d} + |det|^{s/d}, d = dim N_D";
    for (row, s, t, d) in [
        ("E6", "4", "3", "20"),
        ("E7", "6", "4", "32"),
        ("E8", "10", "6", "56"),
    ] {
        let g = heisenberg_parabolic(&RootDatum::build(row)?)?;
        out.push(entry("heisenberg", row, "s", s, None, heis));
        out.push(entry("heisenberg", row, "t", t, None, heis));
        out.push(entry(
            "heisenberg",
            row,
            "d",
            d,
            Some(g.dims[1].to_string()),
            heis,
        ));
    }
    let amber = "s, t on the amber line: V_{N_D} = |det|^t V_M + |det|^s";
    for (row, s, t) in [("E6", "2", "3/2"), ("E7", "3", "2"), ("E8", "5", "3")] {
        out.push(entry("amber", row, "s", s, None, amber));
        out.push(entry("amber", row, "t", t, None, amber));
    }
    let so3 = "Jacquet module eigenvalues |a/b| and |a/b|^{n-1}";
    out.push(entry(
        "so3_jacquet",
        "SO(n+1)",
        "exponents",
        "1, n-1",
        None,
        so3,
    ));
    let g2 = "V_N = V_M |det| + 1 |det|^2, C(AA) and C(BB) twisted by |det|^2";
    out.push(entry(
        "g2_pairs",
        "G2 x GL2",
        "V_N exponents",
        "1, 2",
        None,
        g2,
    ));
    out.push(entry("g2_pairs", "G2 x GL2", "AA twist", "2", None, g2));
    out.push(entry("g2_pairs", "G2 x GL2", "BB twist", "2", None, g2));
    let g3 = "V_N = V_M |det|^2 + 1 |det|^4, C(AA) and C(BB) twisted by |det|^4";
    out.push(entry(
        "g2_triples",
        "G2 x GL3",
        "V_N exponents",
        "2, 4",
        None,
        g3,
    ));
    out.push(entry("g2_triples", "G2 x GL3", "AA twist", "4", None, g3));
    out.push(entry("g2_triples", "G2 x GL3", "BB twist", "4", None, g3));
    let p41 = "GL2 x GL1 acts with |det l_2|^2 / |l_1|^4";
    out.push(entry(
        "g2_pairs_action",
        "GL2 x GL1",
        "exponents",
        "2, -4",
        None,
        p41,
    ));
    let p51 = "torus acts with |a/b|^6, GL3 with |det g|^4";
    out.push(entry(
        "g2_triples_action",
        "PGL2 x GL3",
        "exponents",
        "6, 4",
        None,
        p51,
    ));
    let rho = "modulus characters rho_U = |det|^e";
    for (row, conv, stored, computed) in rho_cases()? {
        out.push(entry("rho", &row, conv, &stored, Some(computed), rho));
    }
    for dim in [1, 2, 4, 8] {
        let r = magic_square_row(dim)?;
        let ms = "Freudenthal magic square G_D, M_D, L_D, H_D";
        let row = format!("dim D = {dim}");
        out.push(entry("magic_square", &row, "G_D", &r.g, None, ms));
        let mut m = entry(
            "magic_square",
            &row,
            "M_D",
            &r.m_stored,
            Some(r.m_computed.clone()),
            ms,
        );
        if dim == 4 && !m.agrees() {
            m.erratum = Some("the Levi of the Heisenberg parabolic of E7 has type D6, and the L_D and H_D entries of this row fit D6".into());
        }
        out.push(m);
        out.push(entry(
            "magic_square",
            &row,
            "L_D",
            &r.l_stored,
            Some(r.l_computed.clone()),
            ms,
        ));
        out.push(entry("magic_square", &row, "H_D", &r.h_stored, None, ms));
    }
    Ok(out)
}

/// The three modulus-character cases: (row, convention, stored, computed).
pub fn rho_cases() -> Result<Vec<(String, &'static str, String, String)>> {
    let c3 = RootDatum::build("C3")?;
    let (_, half) = nilradical_char_exponent(
        &c3,
        &ParabolicSpec::maximal(&c3, 2),
        &c3.fundamental_weight(2),
    )?;
    let g2 = RootDatum::build("G2")?;
    let theta: Vec<BigRational> = g2
        .highest_root()
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect();
    let (full_g2, _) = nilradical_char_exponent(&g2, &ParabolicSpec::maximal(&g2, 1), &theta)?;
    let f4 = RootDatum::build("F4")?;
    let (full_f4, _) = nilradical_char_exponent(
        &f4,
        &ParabolicSpec::maximal(&f4, 2),
        &f4.fundamental_weight(2),
    )?;
    Ok(vec![
        (
            "C3 Siegel, det = omega_3".into(),
            "half-sum",
            "2".into(),
            rational_to_string(&half),
        ),
        (
            "G2 Heisenberg, det = highest root".into(),
            "full-sum",
            "3".into(),
            rational_to_string(&full_g2),
        ),
        (
            "F4 amber parabolic (alpha_3 removed), det = omega_3".into(),
            "full-sum",
            "7".into(),
            rational_to_string(&full_f4),
        ),
    ])
}

/// Positive-root count, Weyl order and highest root for a label.
pub fn classification_summary(label: &str) -> Result<(usize, u128, Vec<i64>)> {
    let d = RootDatum::build(label)?;
    Ok((
        d.positive_roots().len(),
        d.weyl_order(),
        d.highest_root().to_vec(),
    ))
}

/// Multiplicities of a list of weights, keyed by labels.
pub fn weight_multiset(weights: &[Vec<i64>]) -> BTreeMap<Vec<i64>, usize> {
    let mut m = BTreeMap::new();
    for w in weights {
        *m.entry(w.clone()).or_insert(0) += 1;
    }
    m
}
