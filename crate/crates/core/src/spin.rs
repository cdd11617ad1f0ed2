//! Dominant weights of Spin(n)/SO(n), the Weyl dimension formula, Fegan's
//! selection rule for the summands of `R^n (x) V_lambda`, and the
//! classification of elliptic generalized gradients.

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Integrality class of a weight: all entries integral or all half-integral.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightClass {
    Integral,
    HalfIntegral,
}

/// A dominant weight of Spin(n) with rank `m = floor(n/2)` entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DominantWeight {
    entries: Vec<Rational>,
    n: usize,
}

impl DominantWeight {
    /// Validates and builds a dominant weight for Spin(n)/SO(n).
    pub fn new(entries: Vec<Rational>, n: usize) -> Result<Self> {
        if !is_dominant(&entries, n) {
            let display = format!(
                "({})",
                entries
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            return Err(Error::NotDominant(display, n));
        }
        Ok(DominantWeight { entries, n })
    }

    pub fn from_i64(entries: &[i64], n: usize) -> Result<Self> {
        Self::new(entries.iter().map(|&x| int(x)).collect(), n)
    }

    /// Entries in halves, e.g. `[3, 1]` for `(3/2, 1/2)`.
    pub fn from_halves(halves: &[i64], n: usize) -> Result<Self> {
        Self::new(halves.iter().map(|&x| rat(x, 2)).collect(), n)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n / 2
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn last(&self) -> &Rational {
        self.entries.last().expect("rank >= 1")
    }

    pub fn class(&self) -> WeightClass {
        if self.entries[0].denom().is_one() {
            WeightClass::Integral
        } else {
            WeightClass::HalfIntegral
        }
    }

    /// The orientation conjugate `(l_1, .., l_{m-1}, -l_m)`.
    pub fn conjugate(&self) -> DominantWeight {
        let mut entries = self.entries.clone();
        if let Some(last) = entries.last_mut() {
            *last = -last.clone();
        }
        DominantWeight {
            entries,
            n: self.n,
        }
    }

    /// `lambda + eps`, when the shift is again dominant.
    pub fn shift(&self, eps: &Eps) -> Option<DominantWeight> {
        let mut entries = self.entries.clone();
        match eps {
            Eps::Zero => {}
            Eps::Plus(i) => entries[*i - 1] += Rational::one(),
            Eps::Minus(i) => entries[*i - 1] -= Rational::one(),
        }
        if is_dominant(&entries, self.n) {
            Some(DominantWeight {
                entries,
                n: self.n,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(crate::rational::format_rational)
            .collect();
        write!(f, "({})", body.join(","))
    }
}

/// A shift direction labelling a summand of `R^n (x) V_lambda`:
/// `+e_i`, `-e_i` (1-based index), or `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Eps {
    Plus(usize),
    Minus(usize),
    Zero,
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eps::Plus(i) => write!(f, "+e{i}"),
            Eps::Minus(i) => write!(f, "-e{i}"),
            Eps::Zero => write!(f, "0"),
        }
    }
}

impl std::str::FromStr for Eps {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Eps::Zero);
        }
        let (sign, rest) = s.split_at(1);
        let idx = rest
            .strip_prefix('e')
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| format!("invalid shift '{s}'"))?;
        match sign {
            "+" => Ok(Eps::Plus(idx)),
            "-" => Ok(Eps::Minus(idx)),
            _ => Err(format!("invalid shift '{s}'")),
        }
    }
}

/// A generalized-gradient selector: a weight together with target shifts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradientSelector {
    pub weight: DominantWeight,
    pub targets: BTreeSet<Eps>,
}

impl GradientSelector {
    pub fn new(weight: DominantWeight, targets: impl IntoIterator<Item = Eps>) -> Self {
        GradientSelector {
            weight,
            targets: targets.into_iter().collect(),
        }
    }

    /// A selector is well-formed when every target labels an actual summand
    /// of `R^n (x) V_lambda`.
    pub fn is_well_formed(&self) -> bool {
        let valid = fegan_targets(&self.weight);
        self.targets.iter().all(|eps| valid.contains(eps))
    }
}

/// Dominance test: the inequality chain for the parity of `n` together with
/// integrality homogeneity (all entries in `Z` or all in `1/2 + Z`).
pub fn is_dominant(entries: &[Rational], n: usize) -> bool {
    let m = n / 2;
    if m == 0 || entries.len() != m {
        return false;
    }
    let two = BigInt::from(2);
    let homogeneous_denoms = entries
        .iter()
        .all(|r| r.denom().is_one() || *r.denom() == two);
    if !homogeneous_denoms {
        return false;
    }
    let all_int = entries.iter().all(|r| r.denom().is_one());
    let all_half = entries.iter().all(|r| *r.denom() == two);
    if !(all_int || all_half) {
        return false;
    }
    if n % 2 == 0 {
        for i in 0..m.saturating_sub(2) {
            if entries[i] < entries[i + 1] {
                return false;
            }
        }
        if m >= 2 && entries[m - 2] < entries[m - 1].abs() {
            return false;
        }
        if m == 1 {
            // Spin(2): any single entry is dominant.
            return true;
        }
        true
    } else {
        for i in 0..m.saturating_sub(1) {
            if entries[i] < entries[i + 1] {
                return false;
            }
        }
        !entries[m - 1].is_negative()
    }
}

/// Weyl dimension formula for Spin(n), from the product over positive roots
/// of the B_m / D_m root systems.
pub fn weyl_dim(lambda: &DominantWeight) -> BigInt {
    let m = lambda.rank();
    let n = lambda.n();
    // rho_i = m - i      (D_m, entries 1-based: m-1, m-2, .., 0)
    // rho_i = m - i + 1/2 (B_m: m-1/2, .., 1/2)
    let rho: Vec<Rational> = if n % 2 == 0 {
        (0..m).map(|i| int((m - i - 1) as i64)).collect()
    } else {
        (0..m).map(|i| int((m - i - 1) as i64) + rat(1, 2)).collect()
    };
    let l: Vec<Rational> = lambda
        .entries()
        .iter()
        .zip(rho.iter())
        .map(|(a, b)| a + b)
        .collect();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            // roots e_i - e_j and e_i + e_j combine into squares
            num *= &l[i] * &l[i] - &l[j] * &l[j];
            den *= &rho[i] * &rho[i] - &rho[j] * &rho[j];
        }
    }
    if n % 2 == 1 {
        // short roots e_i
        for i in 0..m {
            num *= &l[i];
            den *= &rho[i];
        }
    }
    let dim = num / den;
    assert!(
        dim.denom().is_one() && dim.numer().is_positive(),
        "Weyl dimension must be a positive integer, got {dim} for {lambda}"
    );
    dim.numer().clone()
}

/// Fegan's selection rule: the shifts labelling the irreducible summands of
/// `R^n (x) V_lambda`, each occurring with multiplicity one. The zero shift
/// appears exactly when `n` is odd and `lambda_m != 0`.
pub fn fegan_targets(lambda: &DominantWeight) -> BTreeSet<Eps> {
    let m = lambda.rank();
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for eps in [Eps::Plus(i), Eps::Minus(i)] {
            if lambda.shift(&eps).is_some() {
                out.insert(eps);
            }
        }
    }
    if lambda.n() % 2 == 1 && !lambda.last().is_zero() {
        out.insert(Eps::Zero);
    }
    out
}

/// The minimal elliptic target sets for `G_{lambda,I} = D*D`, following the
/// two case lists of the Branson classification, filtered by validity of the
/// individual shifts.
pub fn classify_minimal_elliptic(lambda: &DominantWeight) -> Vec<BTreeSet<Eps>> {
    let m = lambda.rank();
    let n = lambda.n();
    let targets = fegan_targets(lambda);
    let valid = |set: &BTreeSet<Eps>| set.iter().all(|eps| targets.contains(eps));
    let mut out: Vec<BTreeSet<Eps>> = Vec::new();
    let mut push = |set: BTreeSet<Eps>| {
        if valid(&set) {
            out.push(set);
        }
    };
    if n % 2 == 1 {
        // (a) {e_1}
        push([Eps::Plus(1)].into());
        // (b) {0} for half-integral weights
        if lambda.class() == WeightClass::HalfIntegral {
            push([Eps::Zero].into());
        }
        // (c) {-e_i, e_{i+1}} for i = 1..m-1
        for i in 1..m {
            push([Eps::Minus(i), Eps::Plus(i + 1)].into());
        }
        // (d) {-e_m, 0} for integral weights
        if lambda.class() == WeightClass::Integral {
            push([Eps::Minus(m), Eps::Zero].into());
        }
    } else {
        // (a) {e_1}
        push([Eps::Plus(1)].into());
        // (b) {-e_m} if lambda_m > 0
        if lambda.last().is_positive() {
            push([Eps::Minus(m)].into());
        }
        // (c) {e_m} if lambda_m < 0
        if lambda.last().is_negative() {
            push([Eps::Plus(m)].into());
        }
        // (d) {-e_i, e_{i+1}} for i = 1..m-2
        for i in 1..m.saturating_sub(1) {
            push([Eps::Minus(i), Eps::Plus(i + 1)].into());
        }
        // (e) {-e_{m-1}, e_m} if lambda_m >= 0
        if m >= 2 && !lambda.last().is_negative() {
            push([Eps::Minus(m - 1), Eps::Plus(m)].into());
        }
        // (f) {-e_{m-1}, -e_m} if lambda_m <= 0
        if m >= 2 && !lambda.last().is_positive() {
            push([Eps::Minus(m - 1), Eps::Minus(m)].into());
        }
    }
    out
}

/// Membership in the closed list of elliptic generalized gradients:
///
/// * `n = 4`: `D_{(u+1,u),{-e_1,e_2}}` and `D_{(u+1,-u),{-e_1,-e_2}}`, `u >= 0`;
/// * `n` odd: `D_{lambda,{0}}` for half-integral `lambda`;
/// * `n` even: `D_{lambda,{-e_m}}` for `lambda_m = 1/2` and
///   `D_{lambda,{e_m}}` for `lambda_m = -1/2`.
pub fn is_elliptic_gradient(selector: &GradientSelector) -> bool {
    if !selector.is_well_formed() {
        return false;
    }
    let lambda = &selector.weight;
    let n = lambda.n();
    let m = lambda.rank();
    let targets = &selector.targets;
    let half = rat(1, 2);

    if n == 4 && targets.len() == 2 {
        let l1 = lambda.entry(0);
        let l2 = lambda.entry(1);
        let pair_plus: BTreeSet<Eps> = [Eps::Minus(1), Eps::Plus(2)].into();
        let pair_minus: BTreeSet<Eps> = [Eps::Minus(1), Eps::Minus(2)].into();
        if *targets == pair_plus {
            return !l2.is_negative() && l1.clone() == l2 + Rational::one();
        }
        if *targets == pair_minus {
            return !l2.is_positive() && l1.clone() == Rational::one() - l2;
        }
        return false;
    }
    if targets.len() != 1 {
        return false;
    }
    let single = targets.iter().next().unwrap();
    if n % 2 == 1 {
        return *single == Eps::Zero && lambda.class() == WeightClass::HalfIntegral;
    }
    match single {
        Eps::Minus(i) if *i == m => lambda.last().clone() == half,
        Eps::Plus(i) if *i == m => lambda.last().clone() == -half,
        _ => false,
    }
}

/// Branch of the dimension-defect estimate in dimension four.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectBranch {
    /// `I = {-e_1, +e_2}`, requires `l_1 - 1 >= l_2 >= 0`.
    Plus,
    /// `I = {-e_1, -e_2}`, requires `l_1 - 1 >= -l_2 >= 0`.
    Minus,
}

/// `dim V_{l - e_1} + dim V_{l +- e_2} - dim V_l` for Spin(4), computed from
/// the Weyl dimension formula. Nonnegative on its domain, vanishing exactly
/// on `l_1 = l_2 + 1` (resp. `l_1 = 1 - l_2`).
pub fn dim_defect(lambda: &DominantWeight, branch: DefectBranch) -> Result<Rational> {
    if lambda.n() != 4 {
        return Err(Error::Precondition(
            "dimension defect is a Spin(4) statement".into(),
        ));
    }
    let l1 = lambda.entry(0).clone();
    let l2 = lambda.entry(1).clone();
    let ok = match branch {
        DefectBranch::Plus => l1.clone() - Rational::one() >= l2.clone() && !l2.is_negative(),
        DefectBranch::Minus => l1.clone() - Rational::one() >= -l2.clone() && !l2.is_positive(),
    };
    if !ok {
        return Err(Error::Precondition(format!(
            "weight {lambda} violates the case split for {branch:?}"
        )));
    }
    let dim = |w: &DominantWeight| Rational::from_integer(weyl_dim(w));
    let down1 = lambda.shift(&Eps::Minus(1)).ok_or_else(|| {
        Error::Precondition(format!("{lambda} - e1 is not dominant"))
    })?;
    let second = match branch {
        DefectBranch::Plus => Eps::Plus(2),
        DefectBranch::Minus => Eps::Minus(2),
    };
    let shifted = lambda
        .shift(&second)
        .ok_or_else(|| Error::Precondition(format!("{lambda} {second} is not dominant")))?;
    Ok(dim(&down1) + dim(&shifted) - dim(lambda))
}

/// Module type under the orientation-reversing extension: type I iff the last
/// entry vanishes; the conjugate flips its sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleType {
    I,
    II,
}

impl fmt::Display for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleType::I => write!(f, "I"),
            ModuleType::II => write!(f, "II"),
        }
    }
}

pub fn module_type(lambda: &DominantWeight) -> Result<(ModuleType, DominantWeight)> {
    if lambda.n() % 2 != 0 {
        return Err(Error::Precondition(
            "module type is defined for even n".into(),
        ));
    }
    let ty = if lambda.last().is_zero() {
        ModuleType::I
    } else {
        ModuleType::II
    };
    Ok((ty, lambda.conjugate()))
}

/// Enumerates all dominant weights for Spin(n) with `|entries| <= bound`,
/// over both integrality classes.
pub fn dominant_weights_up_to(n: usize, bound: &Rational) -> Vec<DominantWeight> {
    let m = n / 2;
    let mut out = Vec::new();
    for class in [WeightClass::Integral, WeightClass::HalfIntegral] {
        let step = Rational::one();
        let start = match class {
            WeightClass::Integral => Rational::zero(),
            WeightClass::HalfIntegral => rat(1, 2),
        };
        // candidate entry values of this class within [-bound, bound]
        let mut values = Vec::new();
        let mut v = start.clone();
        while &v <= bound {
            values.push(v.clone());
            if !v.is_zero() {
                values.push(-v.clone());
            }
            v += &step;
        }
        values.sort();
        let mut stack: Vec<Vec<Rational>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == m {
                if is_dominant(&prefix, n) {
                    out.push(DominantWeight {
                        entries: prefix,
                        n,
                    });
                }
                continue;
            }
            for v in &values {
                if let Some(last) = prefix.last() {
                    if v > last {
                        continue;
                    }
                }
                if prefix.len() + 1 < m && v.is_negative() {
                    // only the final entry may be negative
                    continue;
                }
                let mut next = prefix.clone();
                next.push(v.clone());
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.entries.partial_cmp(&b.entries).unwrap());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[(i64, i64)], n: usize) -> DominantWeight {
        DominantWeight::new(entries.iter().map(|&(a, b)| rat(a, b)).collect(), n).unwrap()
    }

    #[test]
    fn dominance_cases() {
        assert!(is_dominant(&[rat(3, 2), rat(1, 2)], 4));
        assert!(!is_dominant(&[rat(1, 2), rat(3, 2)], 4));
        assert!(!is_dominant(&[int(1), rat(1, 2)], 4)); // mixed classes
        assert!(is_dominant(&[int(1), int(-1)], 4)); // last entry may be negative
        assert!(!is_dominant(&[int(1), int(-2)], 4));
        assert!(is_dominant(&[rat(1, 2), rat(1, 2)], 5));
        assert!(!is_dominant(&[rat(1, 2), rat(-1, 2)], 5));
    }

    #[test]
    fn weyl_dim_small() {
        assert_eq!(weyl_dim(&w(&[(1, 1), (0, 1)], 4)), BigInt::from(4));
        for mu in 0..=5i64 {
            let lam = w(&[(mu, 1), (mu, 1)], 4);
            assert_eq!(weyl_dim(&lam), BigInt::from(1 + 2 * mu));
        }
        // half spinor of Spin(6) has dimension 2^{m-1} = 4
        assert_eq!(
            weyl_dim(&w(&[(1, 2), (1, 2), (1, 2)], 6)),
            BigInt::from(4)
        );
        // vector representation has dimension n
        for n in [4usize, 5, 6, 7, 8] {
            let mut entries = vec![int(1)];
            entries.resize(n / 2, int(0));
            let tau = DominantWeight::new(entries, n).unwrap();
            assert_eq!(weyl_dim(&tau), BigInt::from(n as i64));
        }
        // full spinor of Spin(5): 2^m = 4; Spin(7): 8
        assert_eq!(weyl_dim(&w(&[(1, 2), (1, 2)], 5)), BigInt::from(4));
        assert_eq!(
            weyl_dim(&w(&[(1, 2), (1, 2), (1, 2)], 7)),
            BigInt::from(8)
        );
    }

    #[test]
    fn fegan_examples() {
        let lam = w(&[(1, 2), (1, 2)], 4);
        let t = fegan_targets(&lam);
        assert_eq!(t, [Eps::Plus(1), Eps::Minus(2)].into());
        let zero = w(&[(0, 1), (0, 1)], 4);
        assert_eq!(fegan_targets(&zero), [Eps::Plus(1)].into());
        let rs = w(&[(3, 2), (1, 2)], 4);
        assert_eq!(
            fegan_targets(&rs),
            [Eps::Plus(1), Eps::Minus(1), Eps::Plus(2), Eps::Minus(2)].into()
        );
        // dimension sum for the Rarita-Schwinger weight: 12 + 2 + 4 + 6 = 4 * 6
        let dims: Vec<BigInt> = fegan_targets(&rs)
            .iter()
            .map(|e| weyl_dim(&rs.shift(e).unwrap()))
            .collect();
        let total: BigInt = dims.iter().sum();
        assert_eq!(total, BigInt::from(24));
    }

    #[test]
    fn classification_examples() {
        let lam = w(&[(1, 2), (1, 2)], 5);
        let sets = classify_minimal_elliptic(&lam);
        assert!(sets.contains(&[Eps::Zero].into()));
        assert!(sets.contains(&[Eps::Plus(1)].into()));

        let lam = w(&[(1, 2), (1, 2)], 4);
        let sets = classify_minimal_elliptic(&lam);
        assert!(sets.contains(&[Eps::Minus(2)].into()));

        let lam = w(&[(1, 2), (-1, 2)], 4);
        let sets = classify_minimal_elliptic(&lam);
        assert!(sets.contains(&[Eps::Plus(2)].into()));
    }

    #[test]
    fn elliptic_gradient_examples() {
        let dirac = GradientSelector::new(w(&[(1, 2), (1, 2)], 4), [Eps::Minus(2)]);
        assert!(is_elliptic_gradient(&dirac));
        for mu in 0..=5i64 {
            let sel = GradientSelector::new(
                w(&[(mu + 1, 1), (mu, 1)], 4),
                [Eps::Minus(1), Eps::Plus(2)],
            );
            assert!(is_elliptic_gradient(&sel), "mu = {mu}");
        }
        let not = GradientSelector::new(w(&[(3, 2), (3, 2)], 4), [Eps::Minus(2)]);
        assert!(!is_elliptic_gradient(&not));
    }

    #[test]
    fn dim_defect_examples() {
        let lam = w(&[(4, 1), (3, 1)], 4); // mu = 3
        assert_eq!(dim_defect(&lam, DefectBranch::Plus).unwrap(), int(0));
        let lam = w(&[(3, 1), (1, 1)], 4);
        assert_eq!(dim_defect(&lam, DefectBranch::Plus).unwrap(), int(5));
        let lam = w(&[(2, 1), (-1, 1)], 4);
        assert_eq!(dim_defect(&lam, DefectBranch::Minus).unwrap(), int(0));
        // precondition violations are rejected
        let bad = w(&[(1, 1), (1, 1)], 4);
        assert!(dim_defect(&bad, DefectBranch::Plus).is_err());
    }

    #[test]
    fn module_types() {
        let (ty, conj) = module_type(&w(&[(1, 1), (0, 1)], 4)).unwrap();
        assert_eq!(ty, ModuleType::I);
        assert_eq!(conj, w(&[(1, 1), (0, 1)], 4));
        let (ty, conj) = module_type(&w(&[(1, 2), (1, 2)], 4)).unwrap();
        assert_eq!(ty, ModuleType::II);
        assert_eq!(conj, w(&[(1, 2), (-1, 2)], 4));
        let (ty, _) = module_type(&w(&[(0, 1), (0, 1)], 4)).unwrap();
        assert_eq!(ty, ModuleType::I);
    }

    #[test]
    fn weight_enumeration_is_dominant_and_complete() {
        let ws = dominant_weights_up_to(4, &int(2));
        assert!(ws.iter().all(|l| is_dominant(l.entries(), 4)));
        // integral: l1 in 0..2, |l2| <= l1  -> 1 + 3 + 5 = 9
        // half-integral: l1 in {1/2, 3/2}, -> 2 + 4 = 6
        assert_eq!(ws.len(), 15);
    }

    #[test]
    fn eps_parsing() {
        assert_eq!("+e1".parse::<Eps>().unwrap(), Eps::Plus(1));
        assert_eq!("-e2".parse::<Eps>().unwrap(), Eps::Minus(2));
        assert_eq!("0".parse::<Eps>().unwrap(), Eps::Zero);
        assert!("e1".parse::<Eps>().is_err());
    }
}
