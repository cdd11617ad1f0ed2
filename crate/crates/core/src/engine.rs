//! Index evaluation, coefficient matching on products of cobordism
//! generators, and the Thom-matrix nonsingularity check.
//!
//! The index density of a cataloged operator twisted by a bundle `xi` has
//! the universal shape `sum_k ch_k(xi) . sum_I b_{k,I} p_I`. Evaluating an
//! index functional on the manifolds `(CP^1)^j x M_I` — products of twisted
//! projective lines with generator products, one per partition — produces an
//! exact linear system per Chern degree whose matrix is a Thom matrix of
//! Pontryagin numbers; nonsingularity pins the coefficients uniquely.

use crate::catalog::OperatorSpec;
use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::linalg;
use crate::manifold::{
    cp1_twisted, pair_with, product, ManifoldDescriptor, TwistData,
};
use crate::partition::{partitions, Partition};
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Coefficients of the universal index density shape for ambient dimension
/// `n`: keys are exactly the pairs `(k, I)` with `4 | (n - 2k)` and `I` a
/// partition of `(n - 2k)/4`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientVector {
    n: usize,
    entries: BTreeMap<(usize, Partition), Rational>,
}

impl CoefficientVector {
    /// The canonical key list: `k` ascending, partitions in canonical order.
    pub fn keys_for(n: usize) -> Vec<(usize, Partition)> {
        let mut keys = Vec::new();
        for k in 0..=n / 2 {
            let rest = n - 2 * k;
            if rest % 4 != 0 {
                continue;
            }
            for i in partitions((rest / 4) as u32) {
                keys.push((k, i));
            }
        }
        keys
    }

    pub fn zero(n: usize) -> Self {
        let entries = Self::keys_for(n)
            .into_iter()
            .map(|key| (key, Rational::zero()))
            .collect();
        CoefficientVector { n, entries }
    }

    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = ((usize, Partition), Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (key, value) in entries {
            if !out.entries.contains_key(&key) {
                return Err(Error::Precondition(format!(
                    "({}, {}) is not a valid coefficient key for n = {n}",
                    key.0, key.1
                )));
            }
            out.entries.insert(key, value);
        }
        Ok(out)
    }

    /// Reads the coefficients off a graded class of the universal shape.
    pub fn from_class(class: &GradedClass) -> Self {
        let n = class.ambient_dim();
        let mut out = Self::zero(n);
        for (key, value) in out.entries.iter_mut() {
            let mono = crate::graded::Monomial::ch(key.0)
                .try_mul(&crate::graded::Monomial::from_partition(&key.1), n)
                .expect("key monomials fit the ambient degree");
            *value = class.coeff(&mono);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, i: &Partition) -> Rational {
        self.entries
            .get(&(k, i.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Partition), &Rational)> {
        let keys = Self::keys_for(self.n);
        keys.into_iter().map(move |key| {
            let value = self.entries.get(&key).expect("complete key set");
            let key_ref = self.entries.get_key_value(&key).expect("complete").0;
            (key_ref, value)
        })
    }

    /// The graded class `sum ch_k b_{k,I} p_I` these coefficients induce.
    pub fn induced_class(&self) -> GradedClass {
        let mut acc = GradedClass::zero(self.n);
        for ((k, i), b) in &self.entries {
            if b.is_zero() {
                continue;
            }
            let mut term = GradedClass::ch(self.n, *k);
            for &part in i.parts() {
                term = term.mul(&GradedClass::p(self.n, part as usize));
            }
            acc = acc.add(&term.scale(b));
        }
        acc
    }

    /// The index functional these coefficients induce.
    pub fn predict(&self, m: &ManifoldDescriptor, twist: &TwistData) -> Result<Rational> {
        pair_with(&self.induced_class(), m, twist)
    }
}

/// Evaluates the index of a cataloged operator on a manifold descriptor with
/// the given twist: the pairing of `ch(twist) . integrand` against the
/// fundamental class.
pub fn evaluate_index(
    spec: &OperatorSpec,
    m: &ManifoldDescriptor,
    twist: &TwistData,
) -> Result<Rational> {
    if spec.n != m.dim {
        return Err(Error::DimensionMismatch {
            class: spec.n,
            manifold: m.dim,
        });
    }
    if spec.requires_spin() && !m.spin {
        return Err(Error::SpinRequired(m.name.clone()));
    }
    let class = GradedClass::ch_total(spec.n).mul(&spec.integrand());
    pair_with(&class, m, twist)
}

/// Untwisted index.
pub fn evaluate_index_untwisted(spec: &OperatorSpec, m: &ManifoldDescriptor) -> Result<Rational> {
    evaluate_index(spec, m, &TwistData::trivial(1))
}

/// One generator manifold per positive weight: `4i`-dimensional `M_i` with
/// `s_i(p)[M_i] != 0`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    by_weight: BTreeMap<u32, ManifoldDescriptor>,
}

impl GeneratorSet {
    /// The default generator chain `{K3, HP^2, HP^3, ...}`.
    pub fn standard(max_weight: u32) -> Self {
        let mut by_weight = BTreeMap::new();
        if max_weight >= 1 {
            by_weight.insert(1, crate::manifold::k3());
        }
        for j in 2..=max_weight {
            by_weight.insert(j, crate::manifold::hp(j));
        }
        GeneratorSet { by_weight }
    }

    pub fn from_descriptors(gens: impl IntoIterator<Item = ManifoldDescriptor>) -> Result<Self> {
        let mut by_weight = BTreeMap::new();
        for g in gens {
            if g.dim % 4 != 0 || g.dim == 0 {
                return Err(Error::Precondition(format!(
                    "generator '{}' must have positive dimension divisible by 4",
                    g.name
                )));
            }
            by_weight.insert((g.dim / 4) as u32, g);
        }
        Ok(GeneratorSet { by_weight })
    }

    pub fn get(&self, weight: u32) -> Result<&ManifoldDescriptor> {
        self.by_weight
            .get(&weight)
            .ok_or(Error::MissingGenerator(4 * weight as usize))
    }

    /// The product of generators matching a partition: one factor per part.
    pub fn product_for(&self, i: &Partition) -> Result<ManifoldDescriptor> {
        let mut acc = crate::manifold::point();
        for &part in i.parts() {
            acc = product(&acc, self.get(part)?);
        }
        Ok(acc)
    }
}

/// The Thom matrix for weight `k`: rows indexed by generator products `M_J`,
/// columns by partitions `I` of `k` (both in canonical order), with entries
/// `p_I[M_J]`.
pub fn thom_matrix(
    k: u32,
    gens: &GeneratorSet,
) -> Result<(Vec<Partition>, Vec<Vec<Rational>>)> {
    let parts = partitions(k);
    let mut rows = Vec::with_capacity(parts.len());
    for j in &parts {
        let m_j = gens.product_for(j)?;
        let row: Vec<Rational> = parts
            .iter()
            .map(|i| m_j.pontryagin_number(i))
            .collect();
        rows.push(row);
    }
    Ok((parts, rows))
}

/// Recovers the coefficient vector of an index functional from its values on
/// the evaluation manifolds `(CP^1)^j x M_I`, twisted by the `j`-fold tensor
/// power of the projective-line bundle with `c1` integral `cp1_c1`.
pub fn coefficient_match<F>(oracle: F, n: usize, cp1_c1: &Rational) -> Result<CoefficientVector>
where
    F: Fn(&ManifoldDescriptor, &TwistData) -> Result<Rational>,
{
    if cp1_c1.is_zero() {
        return Err(Error::Precondition(
            "the projective-line twist must have a nonzero c1 integral".into(),
        ));
    }
    let gens = GeneratorSet::standard((n / 4) as u32);
    let mut out = CoefficientVector::zero(n);
    for k in 0..=n / 2 {
        let rest = n - 2 * k;
        if rest % 4 != 0 {
            continue;
        }
        let weight = (rest / 4) as u32;
        let parts = partitions(weight);
        // Evaluation manifolds: (CP^1)^k x M_J per partition J of the weight.
        let mut matrix = Vec::with_capacity(parts.len());
        let mut rhs = Vec::with_capacity(parts.len());
        let cp1 = cp1_twisted(cp1_c1);
        for j in &parts {
            let mut m = gens.product_for(j)?;
            for _ in 0..k {
                m = product(&cp1, &m);
            }
            let value = oracle(&m, &m.twist_data())?;
            let mut scale = Rational::from_integer(1.into());
            for _ in 0..k {
                scale *= cp1_c1;
            }
            rhs.push(value / scale);
            matrix.push(
                parts
                    .iter()
                    .map(|i| gens.product_for(j).expect("checked").pontryagin_number(i))
                    .collect::<Vec<_>>(),
            );
        }
        let solution = linalg::solve(&matrix, &rhs).map_err(|s| Error::SingularSystem {
            k,
            column: parts[s.column].to_string(),
        })?;
        for (i, b) in parts.iter().zip(solution) {
            out.entries.insert((k, i.clone()), b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{OperatorFamily, OperatorSpec};
    use crate::manifold::{default_cp1_c1, k3, standard_library, torus};
    use crate::rational::{int, rat};

    #[test]
    fn coefficient_keys_for_ambient_dims() {
        let k4 = CoefficientVector::keys_for(4);
        assert_eq!(k4.len(), 2); // (0,{1}) and (2,{})
        assert_eq!(k4[0].0, 0);
        assert_eq!(k4[0].1.to_string(), "1");
        assert_eq!(k4[1].0, 2);
        let k8 = CoefficientVector::keys_for(8);
        assert_eq!(k8.len(), 4); // (0,{2}),(0,{1,1}),(2,{1}),(4,{})
        let k6 = CoefficientVector::keys_for(6);
        assert_eq!(k6.len(), 2); // (1,{1}),(3,{})
    }

    #[test]
    fn dirac_indices() {
        let dirac = OperatorSpec::new(OperatorFamily::Dirac, 4).unwrap();
        assert_eq!(evaluate_index_untwisted(&dirac, &k3()).unwrap(), int(2));
        assert_eq!(
            evaluate_index_untwisted(&dirac, &torus(4)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn rarita_schwinger_on_k3() {
        let rs = OperatorSpec::new(OperatorFamily::RaritaSchwinger, 4).unwrap();
        assert_eq!(evaluate_index_untwisted(&rs, &k3()).unwrap(), int(-38));
    }

    #[test]
    fn higher_signature_on_k3() {
        for mu in 0..=5u32 {
            let p = OperatorSpec::new(OperatorFamily::HigherSignature(mu), 4).unwrap();
            assert_eq!(
                evaluate_index_untwisted(&p, &k3()).unwrap(),
                int(-16 * (1 + mu as i64)),
                "mu = {mu}"
            );
        }
    }

    #[test]
    fn spin_requirement_enforced() {
        let dirac = OperatorSpec::new(OperatorFamily::Dirac, 4).unwrap();
        let cp2 = crate::manifold::cp2();
        assert!(matches!(
            evaluate_index_untwisted(&dirac, &cp2),
            Err(Error::SpinRequired(_))
        ));
        // but the signature family is defined on oriented manifolds
        let p0 = OperatorSpec::new(OperatorFamily::HigherSignature(0), 4).unwrap();
        assert_eq!(evaluate_index_untwisted(&p0, &cp2).unwrap(), int(1));
    }

    #[test]
    fn thom_matrices() {
        let gens = GeneratorSet::standard(3);
        let (_, m1) = thom_matrix(1, &gens).unwrap();
        assert_eq!(m1, vec![vec![int(-48)]]);
        let (parts, m2) = thom_matrix(2, &gens).unwrap();
        assert_eq!(
            parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["2", "1+1"]
        );
        assert_eq!(m2[0], vec![int(7), int(4)]);
        assert_eq!(m2[1], vec![int(2304), int(4608)]);
        assert_eq!(linalg::determinant(&m2), int(23040));
        let (_, m3) = thom_matrix(3, &gens).unwrap();
        assert!(!linalg::determinant(&m3).is_zero());
    }

    #[test]
    fn missing_generator_reported() {
        let gens = GeneratorSet::standard(1);
        assert!(matches!(
            thom_matrix(2, &gens),
            Err(Error::MissingGenerator(8))
        ));
    }

    #[test]
    fn dirac_match_n4() {
        let dirac = OperatorSpec::new(OperatorFamily::Dirac, 4).unwrap();
        let vec = coefficient_match(
            |m, t| evaluate_index(&dirac, m, t),
            4,
            &default_cp1_c1(),
        )
        .unwrap();
        assert_eq!(vec.get(2, &Partition::empty()), int(1));
        assert_eq!(vec.get(0, &"1".parse().unwrap()), rat(-1, 24));
    }

    #[test]
    fn rs_match_n4() {
        let rs = OperatorSpec::new(OperatorFamily::RaritaSchwinger, 4).unwrap();
        let vec =
            coefficient_match(|m, t| evaluate_index(&rs, m, t), 4, &default_cp1_c1()).unwrap();
        assert_eq!(vec.get(2, &Partition::empty()), int(5));
        assert_eq!(vec.get(0, &"1".parse().unwrap()), rat(19, 24));
    }

    #[test]
    fn zero_oracle_gives_zero_vector() {
        let vec = coefficient_match(|_, _| Ok(Rational::zero()), 4, &default_cp1_c1()).unwrap();
        assert_eq!(vec, CoefficientVector::zero(4));
    }

    #[test]
    fn integrality_on_shipped_spin_descriptors() {
        for m in standard_library() {
            if m.dim < 2 || m.dim % 2 != 0 {
                continue;
            }
            let l = m.dim / 2;
            let mut specs = vec![OperatorFamily::Dirac];
            for j in 1..l {
                specs.push(OperatorFamily::HigherDirac(j));
            }
            if m.dim == 4 {
                specs.push(OperatorFamily::HigherSignature(2));
            }
            for family in specs {
                let spec = match OperatorSpec::new(family, m.dim) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if spec.requires_spin() && !m.spin {
                    continue;
                }
                let idx = evaluate_index_untwisted(&spec, &m).unwrap();
                assert!(
                    crate::rational::is_integer(&idx),
                    "{family:?} on {} gave {}",
                    m.name,
                    idx
                );
            }
        }
    }
}
