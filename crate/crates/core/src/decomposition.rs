//! Rim-hook chains `A(λ, m)` and Grothendieck-group decompositions.
//!
//! For `λ ⊢ n` and a residue `m < n`, the chain consists of `λ` together
//! with every partition obtained by removing an `(n - m)`-rim hook from `λ`
//! and adding one back so that the result strictly dominates `λ`. When the
//! chain is totally ordered, `λ^(0) > ... > λ^(d) = λ`, the irreducible
//! class is
//!
//! ```text
//! [D^λ] = [S^λ(d)] - [S^λ(d-1)] + ... + (-1)^d [S^λ(0)]
//! ```
//!
//! which holds in characteristic `p` when `p` is large relative to
//! `n - λ_1` and `n > p` with `n ≡ m (mod p)`. Nothing here depends on
//! `p`; callers pick `m = n mod p`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dimension::{specht_dimension_polynomial, PaddedShape};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{
    addable_rim_hooks, dominance_compare, partitions_of, removable_rim_hooks, Dominance, Partition,
};
use crate::polynomial::RationalPolynomial;

/// `A(λ, m)` in decreasing dominance order; the last element is `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AChain {
    base: Partition,
    m: usize,
    elements: Vec<Partition>,
}

impl AChain {
    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `d`, so that the chain is `λ^(0), ..., λ^(d)`.
    pub fn depth(&self) -> usize {
        self.elements.len() - 1
    }

    /// Sign `(-1)^(d-i)` attached to element `i` in the alternating sum.
    pub fn sign(&self, i: usize) -> i64 {
        if (self.depth() - i).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for AChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " > ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Builds `A(λ, m)`.
pub fn a_set(lambda: &Partition, m: usize) -> Result<AChain> {
    let n = lambda.size();
    if m >= n {
        return Err(Error::SizeError { n, m });
    }
    let h = n - m;
    let mut found: BTreeSet<Partition> = BTreeSet::from([lambda.clone()]);
    for removal in removable_rim_hooks(lambda, h) {
        for nu in addable_rim_hooks(&removal.remainder, h) {
            if dominance_compare(&nu, lambda)? == Dominance::Greater {
                found.insert(nu);
            }
        }
    }
    let mut elements: Vec<Partition> = found.into_iter().collect();
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            if dominance_compare(a, b)? == Dominance::Incomparable {
                return Err(Error::NotTotallyOrdered {
                    partition: lambda.clone(),
                    m,
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
    }
    // Lexicographic order refines dominance, so on a chain it is dominance order.
    elements.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(elements.last(), Some(lambda));
    Ok(AChain {
        base: lambda.clone(),
        m,
        elements,
    })
}

/// Which basis a class belongs to: Specht modules `S^λ` or irreducibles `D^λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    #[serde(rename = "S")]
    Specht,
    #[serde(rename = "D")]
    Irreducible,
}

impl ClassLabel {
    fn symbol(self) -> &'static str {
        match self {
            ClassLabel::Specht => "S",
            ClassLabel::Irreducible => "D",
        }
    }
}

/// A formal integer combination of classes `[S^λ]` and `[D^λ]` of modules
/// for a single symmetric group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrothendieckVector {
    // Key order is ascending lexicographic partition, then S before D.
    terms: BTreeMap<(Partition, ClassLabel), i64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    label: ClassLabel,
    partition: Partition,
    coeff: i64,
}

impl GrothendieckVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: ClassLabel, partition: Partition) -> Self {
        let mut v = Self::new();
        v.terms.insert((partition, label), 1);
        v
    }

    /// Adds `coeff * [label^partition]`.
    pub fn add_term(&mut self, label: ClassLabel, partition: Partition, coeff: i64) -> Result<()> {
        if let Some(((existing, _), _)) = self.terms.iter().next() {
            if existing.size() != partition.size() {
                return Err(Error::SizeMismatch {
                    left: existing.size(),
                    right: partition.size(),
                });
            }
        }
        let key = (partition, label);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// Adds `scale * other`.
    pub fn add_scaled(&mut self, other: &GrothendieckVector, scale: i64) -> Result<()> {
        for ((part, label), c) in &other.terms {
            self.add_term(*label, part.clone(), c * scale)?;
        }
        Ok(())
    }

    pub fn coeff(&self, label: ClassLabel, partition: &Partition) -> i64 {
        self.terms
            .get(&(partition.clone(), label))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(label, partition, coeff)`, smallest partition first.
    pub fn terms(&self) -> impl Iterator<Item = (ClassLabel, &Partition, i64)> {
        self.terms.iter().map(|((p, l), &c)| (*l, p, c))
    }

    /// Replaces every `[D^ν]` by the vector `expand(ν)`.
    pub fn substitute_irreducibles<F>(&self, mut expand: F) -> Result<GrothendieckVector>
    where
        F: FnMut(&Partition) -> Result<GrothendieckVector>,
    {
        let mut out = GrothendieckVector::new();
        for (label, part, c) in self.terms() {
            match label {
                ClassLabel::Specht => out.add_term(label, part.clone(), c)?,
                ClassLabel::Irreducible => out.add_scaled(&expand(part)?, c)?,
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GrothendieckVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (label, part, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            let inner = part.to_string();
            write!(
                f,
                "[{}^({})]",
                label.symbol(),
                &inner[1..inner.len() - 1]
            )?;
        }
        Ok(())
    }
}

impl Serialize for GrothendieckVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms()
            .map(|(label, partition, coeff)| Term {
                label,
                partition: partition.clone(),
                coeff,
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrothendieckVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut v = GrothendieckVector::new();
        for t in terms {
            if t.coeff == 0 {
                return Err(D::Error::custom("zero coefficient"));
            }
            v.add_term(t.label, t.partition, t.coeff)
                .map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

/// `[D^λ]` as the alternating sum of Specht classes along `A(λ, m)`.
pub fn decompose_irreducible(lambda: &Partition, m: usize) -> Result<GrothendieckVector> {
    let chain = a_set(lambda, m)?;
    Ok(chain_to_vector(&chain))
}

fn chain_to_vector(chain: &AChain) -> GrothendieckVector {
    let mut v = GrothendieckVector::new();
    for (i, e) in chain.elements().iter().enumerate() {
        v.add_term(ClassLabel::Specht, e.clone(), chain.sign(i))
            .expect("chain elements share a size");
    }
    v
}

/// All `ν ⊢ n` with `n - ν_1 <= k`.
pub fn low_degree_family(n: usize, k: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|nu| n - nu.first_part() <= k)
        .collect()
}

/// `[S^λ]` in the basis of irreducibles `[D^ν]`, obtained by inverting the
/// unitriangular matrix whose rows are the chain decompositions of the
/// members of `family`.
///
/// Only the rows reachable from `λ` through chains are formed; every chain
/// encountered must stay inside `family`.
pub fn decompose_standard(
    lambda: &Partition,
    m: usize,
    family: &[Partition],
) -> Result<GrothendieckVector> {
    let members: BTreeSet<&Partition> = family.iter().collect();
    if !members.contains(lambda) {
        return Err(Error::FamilyIncomplete {
            missing: lambda.clone(),
            source_partition: lambda.clone(),
        });
    }

    let mut chains: HashMap<Partition, AChain> = HashMap::new();
    let mut pending = vec![lambda.clone()];
    while let Some(nu) = pending.pop() {
        if chains.contains_key(&nu) {
            continue;
        }
        let chain = a_set(&nu, m)?;
        for e in chain.elements() {
            if !members.contains(e) {
                return Err(Error::FamilyIncomplete {
                    missing: e.clone(),
                    source_partition: nu.clone(),
                });
            }
            if !chains.contains_key(e) {
                pending.push(e.clone());
            }
        }
        chains.insert(nu, chain);
    }

    // Back-substitute from the top of the dominance order:
    // [S^ν] = [D^ν] - sum_{i<d} (-1)^(d-i) [S^ν(i)].
    let mut order: Vec<&Partition> = chains.keys().collect();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let mut specht_in_d: HashMap<&Partition, GrothendieckVector> = HashMap::new();
    for nu in order {
        let chain = &chains[nu];
        let mut v = GrothendieckVector::singleton(ClassLabel::Irreducible, nu.clone());
        for (i, higher) in chain.elements()[..chain.depth()].iter().enumerate() {
            let above = &specht_in_d[higher];
            v.add_scaled(above, -chain.sign(i))?;
        }
        specht_in_d.insert(nu, v);
    }
    Ok(specht_in_d.remove(lambda).expect("lambda was processed"))
}

/// Elements `λ^(i)` of `A(λ, m)` whose own chain is not the prefix
/// `λ^(0), ..., λ^(i)`.
pub fn chain_prefix_violations(lambda: &Partition, m: usize) -> Result<Vec<Partition>> {
    let chain = a_set(lambda, m)?;
    let mut bad = Vec::new();
    for (i, e) in chain.elements().iter().enumerate() {
        if a_set(e, m)?.elements() != &chain.elements()[..=i] {
            bad.push(e.clone());
        }
    }
    Ok(bad)
}

/// Sample sizes used to read off a chain shape that is stable in `n`.
pub fn stabilization_samples(shape: &PaddedShape, m: usize) -> (usize, usize) {
    let k = shape.weight();
    let n0 = (4 * k).max(shape.threshold()) + m + 2;
    (n0, n0 + 7)
}

fn chain_tails(shape: &PaddedShape, m: usize, n: usize) -> Result<Vec<Partition>> {
    let lambda = shape.at(n).expect("sample is above the threshold");
    Ok(a_set(&lambda, m)?
        .elements()
        .iter()
        .map(Partition::tail)
        .collect())
}

/// Dimension of `D^(n-|μ|, μ)` as a polynomial in `n`, valid for
/// `n ≡ m (mod p)` in the large-`p`, large-`n` regime.
pub fn irreducible_dimension_formula(shape: &PaddedShape, m: usize) -> Result<RationalPolynomial> {
    let (n0, n1) = stabilization_samples(shape, m);
    let tails = chain_tails(shape, m, n0)?;
    if tails != chain_tails(shape, m, n1)? {
        return Err(Error::NotStabilized {
            tail: shape.tail().clone(),
            m,
            n0,
            n1,
        });
    }
    let d = tails.len() - 1;
    let mut total = RationalPolynomial::zero();
    for (i, tail) in tails.into_iter().enumerate() {
        let poly = specht_dimension_polynomial(&PaddedShape::new(tail));
        total = if (d - i) % 2 == 0 {
            &total + &poly
        } else {
            &total - &poly
        };
    }
    Ok(total)
}

/// Dimension polynomials by residue class of `n` modulo a symbolic prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiecewiseCongruencePolynomial {
    shape: PaddedShape,
    cases: BTreeMap<usize, RationalPolynomial>,
    default: RationalPolynomial,
}

impl PiecewiseCongruencePolynomial {
    pub fn shape(&self) -> &PaddedShape {
        &self.shape
    }

    /// Residues whose polynomial differs from the default.
    pub fn cases(&self) -> &BTreeMap<usize, RationalPolynomial> {
        &self.cases
    }

    pub fn default_case(&self) -> &RationalPolynomial {
        &self.default
    }

    /// The branch that applies to `n` in characteristic `p`.
    pub fn branch(&self, n: usize, p: usize) -> &RationalPolynomial {
        self.cases.get(&(n % p)).unwrap_or(&self.default)
    }
}

impl fmt::Display for PiecewiseCongruencePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim D^{}:", self.shape)?;
        for (m, poly) in self.cases.iter().rev() {
            writeln!(f, "  n ≡ {m} (mod p): {poly}")?;
        }
        writeln!(f, "  otherwise: {}", self.default)
    }
}

/// Default number of residues examined: `2 (|μ| + 1)`.
pub fn default_max_residue(shape: &PaddedShape) -> usize {
    2 * (shape.weight() + 1)
}

/// Runs [`irreducible_dimension_formula`] for `m = 0..=max_residue` and
/// folds residues that agree with the Specht polynomial into the default.
///
/// With `max_residue = None` the range is [`default_max_residue`] and the
/// next residue past it is checked to be generic.
pub fn irreducible_dimension_table(
    shape: &PaddedShape,
    max_residue: Option<usize>,
    exec: Execution,
) -> Result<PiecewiseCongruencePolynomial> {
    let default = specht_dimension_polynomial(shape);
    let top = max_residue.unwrap_or_else(|| default_max_residue(shape));
    let probe = if max_residue.is_none() { top + 1 } else { top };
    let formulas = exec.map_range(probe + 1, |m| irreducible_dimension_formula(shape, m));

    let mut cases = BTreeMap::new();
    for (m, formula) in formulas.into_iter().enumerate() {
        let formula = formula?;
        if formula == default {
            continue;
        }
        if m > top {
            return Err(Error::ResidueNotGeneric {
                tail: shape.tail().clone(),
                m,
            });
        }
        cases.insert(m, formula);
    }
    Ok(PiecewiseCongruencePolynomial {
        shape: shape.clone(),
        cases,
        default,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn specht(terms: &[(&[usize], i64)]) -> GrothendieckVector {
        let mut v = GrothendieckVector::new();
        for (parts, c) in terms {
            v.add_term(ClassLabel::Specht, p(parts), *c).unwrap();
        }
        v
    }

    fn irr(terms: &[(&[usize], i64)]) -> GrothendieckVector {
        let mut v = GrothendieckVector::new();
        for (parts, c) in terms {
            v.add_term(ClassLabel::Irreducible, p(parts), *c).unwrap();
        }
        v
    }

    #[test]
    fn a_set_examples() {
        let l = p(&[5, 2]);
        assert_eq!(a_set(&l, 2).unwrap().elements(), &[p(&[6, 1]), p(&[5, 2])]);
        assert_eq!(a_set(&l, 1).unwrap().elements(), &[p(&[7]), p(&[5, 2])]);
        assert_eq!(a_set(&l, 0).unwrap().elements(), &[p(&[5, 2])]);
        assert_eq!(a_set(&p(&[6, 1]), 2).unwrap().elements(), &[p(&[6, 1])]);
    }

    #[test]
    fn a_set_rejects_large_m() {
        assert_eq!(a_set(&p(&[5, 2]), 7), Err(Error::SizeError { n: 7, m: 7 }));
        assert_eq!(a_set(&Partition::empty(), 0), Err(Error::SizeError { n: 0, m: 0 }));
    }

    #[test]
    fn a_set_reports_incomparable_pairs() {
        // Small n relative to the tail: chains need not be totally ordered.
        let mut seen = false;
        for n in 2..=8 {
            for l in partitions_of(n) {
                for m in 0..n {
                    if let Err(Error::NotTotallyOrdered { left, right, .. }) = a_set(&l, m) {
                        assert_eq!(dominance_compare(&left, &right), Ok(Dominance::Incomparable));
                        seen = true;
                    }
                }
            }
        }
        assert!(seen);
    }

    #[test]
    fn irreducible_examples() {
        let l = p(&[5, 2]);
        assert_eq!(decompose_irreducible(&l, 2).unwrap(), specht(&[(&[5, 2], 1), (&[6, 1], -1)]));
        assert_eq!(decompose_irreducible(&l, 1).unwrap(), specht(&[(&[5, 2], 1), (&[7], -1)]));
        assert_eq!(decompose_irreducible(&l, 0).unwrap(), specht(&[(&[5, 2], 1)]));
        assert_eq!(decompose_irreducible(&l, 2).unwrap().to_string(), "[S^(5,2)] - [S^(6,1)]");
    }

    #[test]
    fn standard_examples() {
        let fam = low_degree_family(7, 2);
        assert_eq!(decompose_standard(&p(&[5, 2]), 2, &fam).unwrap(), irr(&[(&[5, 2], 1), (&[6, 1], 1)]));
        assert_eq!(decompose_standard(&p(&[6, 1]), 2, &fam).unwrap(), irr(&[(&[6, 1], 1)]));
        assert_eq!(decompose_standard(&p(&[5, 2]), 0, &fam).unwrap(), irr(&[(&[5, 2], 1)]));
    }

    #[test]
    fn standard_detects_incomplete_family() {
        let fam = vec![p(&[5, 2])];
        assert_eq!(
            decompose_standard(&p(&[5, 2]), 2, &fam),
            Err(Error::FamilyIncomplete { missing: p(&[6, 1]), source_partition: p(&[5, 2]) })
        );
        assert!(matches!(
            decompose_standard(&p(&[4, 3]), 2, &fam),
            Err(Error::FamilyIncomplete { .. })
        ));
    }

    #[test]
    fn dimension_formula_examples() {
        let shape = PaddedShape::new(p(&[2]));
        let f = |m| irreducible_dimension_formula(&shape, m).unwrap().to_string();
        assert_eq!(f(2), "1/2*n^2 - 5/2*n + 1");
        assert_eq!(f(1), "1/2*n^2 - 3/2*n - 1");
        assert_eq!(f(0), "1/2*n^2 - 3/2*n");
    }

    #[test]
    fn dimension_table_examples() {
        let table = irreducible_dimension_table(&PaddedShape::new(p(&[2])), Some(4), Execution::Sequential).unwrap();
        let cases: Vec<(usize, String)> = table.cases().iter().map(|(m, q)| (*m, q.to_string())).collect();
        assert_eq!(
            cases,
            vec![(1, "1/2*n^2 - 3/2*n - 1".to_string()), (2, "1/2*n^2 - 5/2*n + 1".to_string())]
        );
        assert_eq!(table.default_case().to_string(), "1/2*n^2 - 3/2*n");

        let trivial = irreducible_dimension_table(&PaddedShape::new(Partition::empty()), Some(3), Execution::Sequential).unwrap();
        assert!(trivial.cases().is_empty());
        assert_eq!(trivial.default_case().to_string(), "1");

        let hook = irreducible_dimension_table(&PaddedShape::new(p(&[1])), Some(3), Execution::Sequential).unwrap();
        let cases: Vec<(usize, String)> = hook.cases().iter().map(|(m, q)| (*m, q.to_string())).collect();
        assert_eq!(cases, vec![(0, "n - 2".to_string())]);
        assert_eq!(hook.default_case().to_string(), "n - 1");
    }

    #[test]
    fn default_table_range_is_checked() {
        for k in 0..=3 {
            for tail in partitions_of(k) {
                let shape = PaddedShape::new(tail);
                let seq = irreducible_dimension_table(&shape, None, Execution::Sequential).unwrap();
                let par = irreducible_dimension_table(&shape, None, Execution::Parallel).unwrap();
                assert_eq!(seq, par);
            }
        }
    }

    #[test]
    fn singleton_iff_single_term() {
        for n in 7..=10 {
            for l in low_degree_family(n, 3) {
                for m in 0..=4 {
                    let chain = a_set(&l, m).unwrap();
                    let v = decompose_irreducible(&l, m).unwrap();
                    let single = v == GrothendieckVector::singleton(ClassLabel::Specht, l.clone());
                    assert_eq!(chain.len() == 1, single);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = specht(&[(&[5, 2], 1), (&[6, 1], -1)]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"[{"label":"S","partition":[5,2],"coeff":1},{"label":"S","partition":[6,1],"coeff":-1}]"#
        );
        assert_eq!(serde_json::from_str::<GrothendieckVector>(&json).unwrap(), v);
        assert!(serde_json::from_str::<GrothendieckVector>(r#"[{"label":"S","partition":[2],"coeff":0}]"#).is_err());
        assert!(serde_json::from_str::<GrothendieckVector>(
            r#"[{"label":"S","partition":[2],"coeff":1},{"label":"D","partition":[3],"coeff":1}]"#
        )
        .is_err());
    }
}
