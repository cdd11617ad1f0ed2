//! Descriptors of cobordism generator manifolds, exact pairing of graded
//! classes against fundamental classes, products, and descriptor files.
//!
//! A descriptor consists of an untwisted core (whose Pontryagin numbers are
//! stored, keyed by partitions of `core_dim / 4`) together with an optional
//! list of 2-dimensional line-bundle factors ("twist cells"), each recorded
//! by the integral of its first Chern class. Products of twisted projective
//! lines with generator manifolds — the evaluation manifolds of the
//! coefficient-matching argument — are products in this sense, as is the
//! flat two-torus carrying a flux line bundle.

use crate::error::{Error, Result};
use crate::graded::{GradedClass, Monomial};
use crate::partition::{partitions, Partition};
use crate::rational::{format_rational, int, is_integer, parse_rational, Rational};
use crate::roots::{a_hat_class, l_class};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Chern-character pairing data of a twist bundle: `ch[k]` is the number the
/// generator `ch_k` pairs to across the twist cells (with the remaining
/// fundamental class left for the Pontryagin part). `ch[0]` is the rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistData {
    ch: Vec<Rational>,
}

impl TwistData {
    /// The trivial bundle of the given rank.
    pub fn trivial(rank: i64) -> Self {
        TwistData {
            ch: vec![int(rank)],
        }
    }

    /// External tensor product of line bundles living on separate 2-cells,
    /// one per entry of `c1_integrals`; `ch_k` pairs to the k-th elementary
    /// symmetric function of the integrals.
    pub fn from_factors(c1_integrals: &[Rational]) -> Self {
        let j = c1_integrals.len();
        let mut elem = vec![Rational::zero(); j + 1];
        elem[0] = Rational::one();
        for v in c1_integrals {
            for k in (1..=j).rev() {
                let add = elem[k - 1].clone() * v;
                elem[k] += add;
            }
        }
        TwistData { ch: elem }
    }

    /// Whitney sum: Chern characters add.
    pub fn whitney_sum(&self, other: &TwistData) -> TwistData {
        let len = self.ch.len().max(other.ch.len());
        let ch = (0..len)
            .map(|k| self.ch_component(k) + other.ch_component(k))
            .collect();
        TwistData { ch }
    }

    /// `N` copies of the bundle.
    pub fn scale(&self, n: i64) -> TwistData {
        TwistData {
            ch: self.ch.iter().map(|c| c * int(n)).collect(),
        }
    }

    pub fn ch_component(&self, k: usize) -> Rational {
        self.ch.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn rank(&self) -> Rational {
        self.ch_component(0)
    }
}

/// The c1-integral of the tangent line bundle over the projective line used
/// by the coefficient-matching twists.
pub fn default_cp1_c1() -> Rational {
    int(-2)
}

/// Twist data of the `j`-fold external tensor power of the projective-line
/// bundle: `ch_k` pairs to `binomial(j,k) * c1^k`.
pub fn cp1_twist_power(j: usize, c1: &Rational) -> TwistData {
    TwistData::from_factors(&vec![c1.clone(); j])
}

/// An orientation sign.
pub type Sign = i8;

/// Descriptor of a closed oriented manifold: exactly the data the exact
/// pairing needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifoldDescriptor {
    pub name: String,
    pub dim: usize,
    pub orientation: Sign,
    /// Pontryagin numbers of the untwisted core, keyed by partitions of
    /// `(dim - 2 * twist_factors.len()) / 4`; empty when that is not an integer.
    pub pontryagin_numbers: BTreeMap<Partition, Rational>,
    pub euler_char: i64,
    /// Defined when `dim = 0 mod 4`.
    pub signature: Option<i64>,
    pub spin: bool,
    /// c1-integrals of line-bundle twist cells (2 dimensions each).
    pub twist_factors: Vec<Rational>,
}

impl ManifoldDescriptor {
    /// Dimension of the untwisted core.
    pub fn core_dim(&self) -> usize {
        self.dim - 2 * self.twist_factors.len()
    }

    /// Weight of the partitions keying the Pontryagin numbers, if defined.
    pub fn core_weight(&self) -> Option<u32> {
        let d = self.core_dim();
        if d % 4 == 0 {
            Some((d / 4) as u32)
        } else {
            None
        }
    }

    pub fn twist_data(&self) -> TwistData {
        if self.twist_factors.is_empty() {
            TwistData::trivial(1)
        } else {
            TwistData::from_factors(&self.twist_factors)
        }
    }

    /// Validates structural invariants and the data self-consistency gates:
    /// the partition keys must be exactly the partitions of the core weight,
    /// the L-genus pairing must reproduce the declared signature, and spin
    /// descriptors must have an integral A-roof pairing.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::InconsistentDescriptor {
            name: self.name.clone(),
            reason,
        });
        if self.dim % 2 != 0 {
            return fail(format!("dimension {} is odd", self.dim));
        }
        if self.orientation != 1 && self.orientation != -1 {
            return fail(format!("orientation must be +-1, got {}", self.orientation));
        }
        if 2 * self.twist_factors.len() > self.dim {
            return fail("more twist cells than the dimension allows".into());
        }
        let expected: Vec<Partition> = match self.core_weight() {
            Some(w) => partitions(w),
            None => Vec::new(),
        };
        let keys: Vec<Partition> = self.pontryagin_numbers.keys().cloned().collect();
        if keys != expected {
            return fail(format!(
                "Pontryagin numbers must be keyed by exactly the partitions of {}, found [{}]",
                match self.core_weight() {
                    Some(w) => w.to_string(),
                    None => "nothing (dimension not divisible by 4)".to_string(),
                },
                keys.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
        if self.dim % 4 == 0 && self.twist_factors.is_empty() && self.dim > 0 {
            match self.signature {
                None => return fail("signature required for dimensions divisible by 4".into()),
                Some(sig) => {
                    let l_pairing = pair(&l_class(self.dim), self)?;
                    if l_pairing != int(sig) {
                        return fail(format!(
                            "L-genus pairing {} does not match declared signature {}",
                            format_rational(&l_pairing),
                            sig
                        ));
                    }
                }
            }
            if self.spin {
                let a_pairing = pair(&a_hat_class(self.dim), self)?;
                if !is_integer(&a_pairing) {
                    return fail(format!(
                        "A-roof pairing {} of a spin manifold must be an integer",
                        format_rational(&a_pairing)
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn pontryagin_number(&self, i: &Partition) -> Rational {
        self.pontryagin_numbers
            .get(i)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Pairs a graded class against the fundamental class of the descriptor,
/// with the Chern-character slots read from the descriptor's own twist data.
pub fn pair(class: &GradedClass, m: &ManifoldDescriptor) -> Result<Rational> {
    pair_with(class, m, &m.twist_data())
}

/// Pairing with explicit twist data. Only monomials of top degree
/// contribute: `e` pairs to the Euler characteristic, a single `ch_k` factor
/// pairs through the twist, and the Pontryagin part against the core numbers.
/// The total is multiplied by the orientation sign.
pub fn pair_with(class: &GradedClass, m: &ManifoldDescriptor, twist: &TwistData) -> Result<Rational> {
    if class.ambient_dim() != m.dim {
        return Err(Error::DimensionMismatch {
            class: class.ambient_dim(),
            manifold: m.dim,
        });
    }
    let mut acc = Rational::zero();
    for (mono, coeff) in class.terms() {
        if mono.degree(m.dim) != m.dim {
            continue;
        }
        acc += coeff * &monomial_value(mono, m, twist)?;
    }
    Ok(acc * int(m.orientation as i64))
}

fn monomial_value(mono: &Monomial, m: &ManifoldDescriptor, twist: &TwistData) -> Result<Rational> {
    if mono.ch_factor_count() > 1 {
        return Err(Error::NonlinearChern(mono.to_string()));
    }
    let twist_part = match mono.single_ch_index() {
        Some(k) => twist.ch_component(k),
        None => Rational::one(),
    };
    if twist_part.is_zero() {
        return Ok(Rational::zero());
    }
    let base_part = if mono.euler_exponent() >= 1 {
        int(m.euler_char)
    } else {
        m.pontryagin_number(&Partition::from_exponents(mono.p_exponents()))
    };
    Ok(twist_part * base_part)
}

/// Product descriptor: dimensions add, Euler characteristics and orientations
/// multiply, spin requires both factors spin, twist cells concatenate, and
/// Pontryagin numbers combine through the Whitney product formula.
pub fn product(a: &ManifoldDescriptor, b: &ManifoldDescriptor) -> ManifoldDescriptor {
    let dim = a.dim + b.dim;
    let signature = if dim % 4 == 0 {
        match (sig_or_zero(a), sig_or_zero(b)) {
            (Some(x), Some(y)) => Some(x * y),
            _ => None,
        }
    } else {
        None
    };
    let mut twist_factors = a.twist_factors.clone();
    twist_factors.extend(b.twist_factors.iter().cloned());
    ManifoldDescriptor {
        name: format!("{}x{}", a.name, b.name),
        dim,
        orientation: a.orientation * b.orientation,
        pontryagin_numbers: convolve_numbers(a, b),
        euler_char: a.euler_char * b.euler_char,
        signature,
        spin: a.spin && b.spin,
        twist_factors,
    }
}

fn sig_or_zero(m: &ManifoldDescriptor) -> Option<i64> {
    if m.dim % 4 == 0 {
        if m.dim == 0 {
            Some(1)
        } else if !m.twist_factors.is_empty() {
            Some(0)
        } else {
            m.signature
        }
    } else {
        Some(0)
    }
}

/// Whitney formula on Pontryagin numbers: for a partition `K` of the product
/// core weight, split every part `k` into `k = i + j` across the two factors
/// and sum the factorwise numbers over all splittings whose weights match.
fn convolve_numbers(
    a: &ManifoldDescriptor,
    b: &ManifoldDescriptor,
) -> BTreeMap<Partition, Rational> {
    let (wa, wb) = match (a.core_weight(), b.core_weight()) {
        (Some(wa), Some(wb)) => (wa, wb),
        _ => return BTreeMap::new(),
    };
    let mut out = BTreeMap::new();
    for k in partitions(wa + wb) {
        let mut total = Rational::zero();
        // distribute the ordered list of parts over the two factors
        let mut splits: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
        for &part in k.parts() {
            let mut next = Vec::new();
            for (ia, ib) in &splits {
                for give_a in 0..=part {
                    let give_b = part - give_a;
                    let mut na = ia.clone();
                    let mut nb = ib.clone();
                    if give_a > 0 {
                        na.push(give_a);
                    }
                    if give_b > 0 {
                        nb.push(give_b);
                    }
                    if na.iter().sum::<u32>() <= wa && nb.iter().sum::<u32>() <= wb {
                        next.push((na, nb));
                    }
                }
            }
            splits = next;
        }
        for (ia, ib) in splits {
            if ia.iter().sum::<u32>() != wa || ib.iter().sum::<u32>() != wb {
                continue;
            }
            let pa = {
                let mut v = ia.clone();
                v.sort_unstable_by(|x, y| y.cmp(x));
                Partition::new(v)
            };
            let pb = {
                let mut v = ib.clone();
                v.sort_unstable_by(|x, y| y.cmp(x));
                Partition::new(v)
            };
            total += a.pontryagin_number(&pa) * b.pontryagin_number(&pb);
        }
        out.insert(k, total);
    }
    out
}

/// Flips the orientation: all pairings negate, the signature flips.
pub fn reverse_orientation(m: &ManifoldDescriptor) -> ManifoldDescriptor {
    let mut out = m.clone();
    out.orientation = -m.orientation;
    out.signature = m.signature.map(|s| -s);
    out.name = if let Some(base) = m.name.strip_prefix("rev:") {
        base.to_string()
    } else {
        format!("rev:{}", m.name)
    };
    out
}

// ---------------------------------------------------------------------------
// The shipped generator library.
// ---------------------------------------------------------------------------

fn numbers(dim_weight: u32, values: &[(&str, i64)]) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    for part in partitions(dim_weight) {
        out.insert(part, Rational::zero());
    }
    for (key, value) in values {
        let p: Partition = key.parse().expect("valid partition literal");
        out.insert(p, int(*value));
    }
    out
}

pub fn point() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "point".into(),
        dim: 0,
        orientation: 1,
        pontryagin_numbers: numbers(0, &[("0", 1)]),
        euler_char: 1,
        signature: Some(1),
        spin: true,
        twist_factors: Vec::new(),
    }
}

pub fn cp1() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "CP1".into(),
        dim: 2,
        orientation: 1,
        pontryagin_numbers: BTreeMap::new(),
        euler_char: 2,
        signature: None,
        spin: true,
        twist_factors: Vec::new(),
    }
}

/// The projective line carrying its tangent line bundle as the twist.
pub fn cp1_twisted(c1: &Rational) -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "CP1[twisted]".into(),
        dim: 2,
        orientation: 1,
        pontryagin_numbers: numbers(0, &[("0", 1)]),
        euler_char: 2,
        signature: None,
        spin: true,
        twist_factors: vec![c1.clone()],
    }
}

pub fn cp2() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "CP2".into(),
        dim: 4,
        orientation: 1,
        pontryagin_numbers: numbers(1, &[("1", 3)]),
        euler_char: 3,
        signature: Some(1),
        spin: false,
        twist_factors: Vec::new(),
    }
}

pub fn k3() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "K3".into(),
        dim: 4,
        orientation: 1,
        pontryagin_numbers: numbers(1, &[("1", -48)]),
        euler_char: 24,
        signature: Some(-16),
        spin: true,
        twist_factors: Vec::new(),
    }
}

/// Quaternionic projective space of quaternionic dimension `j` (real `4j`),
/// with Pontryagin data from the total class `(1+u)^{2j+2} (1+4u)^{-1}` and
/// `u^j` pairing to 1.
pub fn hp(j: u32) -> ManifoldDescriptor {
    assert!(j >= 1);
    let deg = j as usize;
    // coefficients of (1+u)^{2j+2} * (1+4u)^{-1} up to u^j
    let mut binom = vec![Rational::zero(); deg + 1];
    for (k, b) in binom.iter_mut().enumerate() {
        *b = crate::rational::binomial(2 * deg + 2, k);
    }
    let mut inv = vec![Rational::zero(); deg + 1];
    for (k, c) in inv.iter_mut().enumerate() {
        *c = int((-4i64).pow(k as u32));
    }
    let mut total = vec![Rational::zero(); deg + 1];
    for i in 0..=deg {
        for k in 0..=deg - i {
            let c = &binom[i] * &inv[k];
            total[i + k] += c;
        }
    }
    // p_i class is total[i] * u^i; number of p_I = prod total[i] over parts.
    let mut nums = BTreeMap::new();
    for part in partitions(j) {
        let mut v = Rational::one();
        for &p in part.parts() {
            v *= &total[p as usize];
        }
        nums.insert(part, v);
    }
    // Euler characteristic of HP^j is j+1; signature 1 for even j, 0 for odd.
    let signature = if j % 2 == 0 { 1 } else { 0 };
    ManifoldDescriptor {
        name: format!("HP{j}"),
        dim: 4 * deg,
        orientation: 1,
        pontryagin_numbers: nums,
        euler_char: j as i64 + 1,
        signature: Some(signature),
        spin: true,
        twist_factors: Vec::new(),
    }
}

/// Flat torus of the given even dimension.
pub fn torus(dim: usize) -> ManifoldDescriptor {
    assert!(dim % 2 == 0);
    let nums = if dim % 4 == 0 {
        numbers((dim / 4) as u32, &[])
    } else {
        BTreeMap::new()
    };
    ManifoldDescriptor {
        name: format!("T{dim}"),
        dim,
        orientation: 1,
        pontryagin_numbers: nums,
        euler_char: 0,
        signature: if dim % 4 == 0 { Some(0) } else { None },
        spin: true,
        twist_factors: Vec::new(),
    }
}

/// The flat two-torus carrying a uniform-curvature line bundle of degree `c`.
pub fn torus_with_flux(c: i64) -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: format!("T2[flux={c}]"),
        dim: 2,
        orientation: 1,
        pontryagin_numbers: numbers(0, &[("0", 1)]),
        euler_char: 0,
        signature: None,
        spin: true,
        twist_factors: vec![int(c)],
    }
}

/// The shipped generator set.
pub fn standard_library() -> Vec<ManifoldDescriptor> {
    vec![
        point(),
        cp1(),
        cp2(),
        k3(),
        hp(2),
        hp(3),
        torus(2),
        torus(4),
        torus(6),
        torus(8),
    ]
}

/// Case-insensitive lookup in a descriptor list.
pub fn find_descriptor<'a>(
    library: &'a [ManifoldDescriptor],
    name: &str,
) -> Result<&'a ManifoldDescriptor> {
    library
        .iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownManifold(name.to_string()))
}

// ---------------------------------------------------------------------------
// Descriptor files.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorFile {
    name: String,
    dim: usize,
    orientation: i8,
    pontryagin_numbers: BTreeMap<String, serde_json::Value>,
    euler_char: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature: Option<i64>,
    spin: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    twist_factors: Vec<String>,
}

fn rational_from_value(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => n.as_i64().map(int),
        _ => None,
    }
}

/// Loads and fully validates a descriptor from a JSON file.
pub fn load_descriptor(path: &Path) -> Result<ManifoldDescriptor> {
    let text = std::fs::read_to_string(path)?;
    parse_descriptor(&text, Some(path.display().to_string()))
}

/// Parses and fully validates a descriptor from JSON text.
pub fn parse_descriptor(text: &str, origin: Option<String>) -> Result<ManifoldDescriptor> {
    let malformed = |reason: String| Error::MalformedDescriptor {
        path: origin.clone(),
        reason,
    };
    let file: DescriptorFile = serde_json::from_str(text)
        .map_err(|e| malformed(format!("{e}")))?;
    let mut nums = BTreeMap::new();
    for (key, value) in &file.pontryagin_numbers {
        let part: Partition = key
            .parse()
            .map_err(|e| malformed(format!("bad partition key '{key}': {e}")))?;
        let r = rational_from_value(value)
            .ok_or_else(|| malformed(format!("bad rational for partition '{key}'")))?;
        nums.insert(part, r);
    }
    let mut twists = Vec::new();
    for t in &file.twist_factors {
        twists.push(
            parse_rational(t).ok_or_else(|| malformed(format!("bad twist factor '{t}'")))?,
        );
    }
    let descriptor = ManifoldDescriptor {
        name: file.name,
        dim: file.dim,
        orientation: file.orientation,
        pontryagin_numbers: nums,
        euler_char: file.euler_char,
        signature: file.signature,
        spin: file.spin,
        twist_factors: twists,
    };
    descriptor.validate()?;
    Ok(descriptor)
}

/// Serializes a descriptor to the documented JSON schema.
pub fn descriptor_to_json(m: &ManifoldDescriptor) -> String {
    let file = DescriptorFile {
        name: m.name.clone(),
        dim: m.dim,
        orientation: m.orientation,
        pontryagin_numbers: m
            .pontryagin_numbers
            .iter()
            .map(|(p, r)| {
                (
                    p.to_string(),
                    serde_json::Value::String(format_rational(r)),
                )
            })
            .collect(),
        euler_char: m.euler_char,
        signature: m.signature,
        spin: m.spin,
        twist_factors: m.twist_factors.iter().map(format_rational).collect(),
    };
    serde_json::to_string_pretty(&file).expect("descriptor serializes")
}

/// Writes a descriptor; the written file round-trips through [`load_descriptor`].
pub fn save_descriptor(m: &ManifoldDescriptor, path: &Path) -> Result<()> {
    m.validate()?;
    std::fs::write(path, descriptor_to_json(m) + "\n")?;
    Ok(())
}
