//! Resource vectors and their composition algebra.
//!
//! A [`ResourceVector`] carries per-gate-kind counts plus the aggregate
//! metrics tracked throughout the estimate: circuit width (max qubits in
//! use at a time), depth, T-depth (logical steps containing at least one
//! T gate), peak ancilla demand, ancilla generation-use-termination
//! cycles, and measurement count.
//!
//! Three composition operators cover every structure in the call tree:
//! [`ResourceVector::seq`] (run one block after another, ancillas reused),
//! [`ResourceVector::par`] (run blocks side by side on disjoint qubits),
//! and [`ResourceVector::repeat`] (n-fold sequential repetition).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// The elementary gate alphabet. Every explicit circuit and every count in
/// the estimate is expressed over exactly these twelve kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdag,
    T,
    Tdag,
    Cnot,
    Measure,
    AncillaInit,
    AncillaTerm,
}

impl GateKind {
    pub const ALL: [GateKind; 12] = [
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::H,
        GateKind::S,
        GateKind::Sdag,
        GateKind::T,
        GateKind::Tdag,
        GateKind::Cnot,
        GateKind::Measure,
        GateKind::AncillaInit,
        GateKind::AncillaTerm,
    ];

    fn index(self) -> usize {
        Self::ALL.iter().position(|&k| k == self).unwrap()
    }

    /// Number of wires the gate touches.
    pub fn arity(self) -> usize {
        match self {
            GateKind::Cnot => 2,
            _ => 1,
        }
    }

    /// Whether the gate occupies a depth layer. Measurements and ancilla
    /// bookkeeping are free in the depth model, matching the closed-form
    /// tables (a multi-controlled NOT has depth 12(2n-3) with its n-2
    /// terminal measurements contributing nothing).
    pub fn counts_toward_depth(self) -> bool {
        !matches!(
            self,
            GateKind::Measure | GateKind::AncillaInit | GateKind::AncillaTerm
        )
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::Sdag => "S\u{2020}",
            GateKind::T => "T",
            GateKind::Tdag => "T\u{2020}",
            GateKind::Cnot => "CNOT",
            GateKind::Measure => "measure",
            GateKind::AncillaInit => "anc-init",
            GateKind::AncillaTerm => "anc-term",
        };
        f.write_str(s)
    }
}

/// Per-block resource accounting; the value type of the whole estimate.
///
/// Counts are big integers because the full algorithm reaches 10^29 gate
/// operations. `measurements` always equals the `Measure` slot of `counts`;
/// the serialized form carries both names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResourceVector {
    counts: [BigUint; 12],
    pub width: u64,
    pub depth: BigUint,
    pub t_depth: BigUint,
    pub ancilla_max: u64,
    pub ancilla_cycles: BigUint,
}

impl ResourceVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::default()
    }

    /// Vector of a single elementary gate.
    pub fn gate(kind: GateKind) -> Self {
        let mut v = Self::zero();
        v.counts[kind.index()] = BigUint::one();
        v.width = kind.arity() as u64;
        if kind.counts_toward_depth() {
            v.depth = BigUint::one();
            if matches!(kind, GateKind::T | GateKind::Tdag) {
                v.t_depth = BigUint::one();
            }
        }
        match kind {
            GateKind::AncillaInit => v.ancilla_max = 1,
            GateKind::AncillaTerm => v.ancilla_cycles = BigUint::one(),
            _ => {}
        }
        v
    }

    pub fn count(&self, kind: GateKind) -> &BigUint {
        &self.counts[kind.index()]
    }

    pub fn set_count(&mut self, kind: GateKind, value: impl Into<BigUint>) {
        self.counts[kind.index()] = value.into();
    }

    pub fn add_count(&mut self, kind: GateKind, value: impl Into<BigUint>) {
        self.counts[kind.index()] += value.into();
    }

    pub fn measurements(&self) -> &BigUint {
        self.count(GateKind::Measure)
    }

    pub fn set_measurements(&mut self, value: impl Into<BigUint>) {
        self.set_count(GateKind::Measure, value);
    }

    /// S and S-dagger counted together, as the cost model treats them
    /// identically.
    pub fn s_total(&self) -> BigUint {
        self.count(GateKind::S) + self.count(GateKind::Sdag)
    }

    /// T and T-dagger counted together.
    pub fn t_total(&self) -> BigUint {
        self.count(GateKind::T) + self.count(GateKind::Tdag)
    }

    /// Total gate operations (measurements and ancilla bookkeeping excluded).
    pub fn total_gates(&self) -> BigUint {
        let mut sum = BigUint::zero();
        for kind in GateKind::ALL {
            if kind.counts_toward_depth() {
                sum += self.count(kind);
            }
        }
        sum
    }

    /// Sequential composition: counts, depth, T-depth, cycles and
    /// measurements add; width and peak ancilla demand take the max,
    /// modelling full ancilla reuse between the blocks.
    pub fn seq(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..12 {
            out.counts[i] += &other.counts[i];
        }
        out.width = out.width.max(other.width);
        out.depth += &other.depth;
        out.t_depth += &other.t_depth;
        out.ancilla_max = out.ancilla_max.max(other.ancilla_max);
        out.ancilla_cycles += &other.ancilla_cycles;
        out
    }

    /// Parallel composition: the blocks run side by side on disjoint
    /// qubits, so width and peak ancilla demand add while depth and
    /// T-depth take the max.
    pub fn par(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..12 {
            out.counts[i] += &other.counts[i];
        }
        out.width += other.width;
        out.depth = out.depth.clone().max(other.depth.clone());
        out.t_depth = out.t_depth.clone().max(other.t_depth.clone());
        out.ancilla_max += other.ancilla_max;
        out.ancilla_cycles += &other.ancilla_cycles;
        out
    }

    /// n-fold sequential repetition; `repeat(v, 0)` is the zero vector.
    pub fn repeat(&self, n: &BigUint) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for i in 0..12 {
            out.counts[i] = &self.counts[i] * n;
        }
        out.depth = &self.depth * n;
        out.t_depth = &self.t_depth * n;
        out.ancilla_cycles = &self.ancilla_cycles * n;
        out
    }

    pub fn repeat_u(&self, n: u128) -> Self {
        self.repeat(&BigUint::from(n))
    }

    /// Scale every count by the rational `num/den`, rounding half-up.
    /// Width and peak ancilla demand scale the same way.
    pub fn scaled(&self, num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let num = BigUint::from(num);
        let den = BigUint::from(den);
        let half = &den / 2u32;
        let scale = |x: &BigUint| -> BigUint { (x * &num + &half) / &den };
        let scale_u64 = |x: u64| -> u64 {
            let b = scale(&BigUint::from(x));
            u64::try_from(b).unwrap_or(u64::MAX)
        };
        let mut out = Self::zero();
        for i in 0..12 {
            out.counts[i] = scale(&self.counts[i]);
        }
        out.width = scale_u64(self.width);
        out.depth = scale(&self.depth);
        out.t_depth = scale(&self.t_depth);
        out.ancilla_max = scale_u64(self.ancilla_max);
        out.ancilla_cycles = scale(&self.ancilla_cycles);
        out
    }

    /// Structural sanity checks from the cost model: T-depth never exceeds
    /// depth, every T-layer contains at least one T gate, and the ancilla
    /// peak fits inside the width.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.t_depth > self.depth {
            return Err(format!(
                "t_depth {} exceeds depth {}",
                self.t_depth, self.depth
            ));
        }
        if self.t_total() < self.t_depth {
            return Err(format!(
                "T count {} below t_depth {}",
                self.t_total(),
                self.t_depth
            ));
        }
        if self.ancilla_max > self.width {
            return Err(format!(
                "ancilla_max {} exceeds width {}",
                self.ancilla_max, self.width
            ));
        }
        Ok(())
    }

    /// Canonical form with S-dagger folded into S and T-dagger into T;
    /// this is the view the serialized format carries.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        out.counts[GateKind::S.index()] = self.s_total();
        out.counts[GateKind::Sdag.index()] = BigUint::zero();
        out.counts[GateKind::T.index()] = self.t_total();
        out.counts[GateKind::Tdag.index()] = BigUint::zero();
        out
    }

    /// Field-wise `<=` on the canonical form.
    pub fn le(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        for i in 0..12 {
            if a.counts[i] > b.counts[i] {
                return false;
            }
        }
        a.width <= b.width
            && a.depth <= b.depth
            && a.t_depth <= b.t_depth
            && a.ancilla_max <= b.ancilla_max
            && a.ancilla_cycles <= b.ancilla_cycles
    }
}

/// Free-function aliases used by callers that read better in operator form.
pub fn seq(a: &ResourceVector, b: &ResourceVector) -> ResourceVector {
    a.seq(b)
}

pub fn par(a: &ResourceVector, b: &ResourceVector) -> ResourceVector {
    a.par(b)
}

pub fn repeat(a: &ResourceVector, n: &BigUint) -> ResourceVector {
    a.repeat(n)
}

/// Flat serialized form. Big integers are decimal strings so arbitrary
/// magnitudes survive JSON exactly; S/S-dagger are merged into "s" and
/// T/T-dagger into "t".
#[derive(Serialize, Deserialize)]
struct FlatVector {
    x: String,
    y: String,
    z: String,
    h: String,
    s: String,
    t: String,
    cnot: String,
    measure: String,
    width: u64,
    depth: String,
    t_depth: String,
    ancilla_max: u64,
    ancilla_cycles: String,
    measurements: String,
}

impl Serialize for ResourceVector {
    fn serialize<Se: Serializer>(&self, ser: Se) -> Result<Se::Ok, Se::Error> {
        FlatVector {
            x: self.count(GateKind::X).to_string(),
            y: self.count(GateKind::Y).to_string(),
            z: self.count(GateKind::Z).to_string(),
            h: self.count(GateKind::H).to_string(),
            s: self.s_total().to_string(),
            t: self.t_total().to_string(),
            cnot: self.count(GateKind::Cnot).to_string(),
            measure: self.measurements().to_string(),
            width: self.width,
            depth: self.depth.to_string(),
            t_depth: self.t_depth.to_string(),
            ancilla_max: self.ancilla_max,
            ancilla_cycles: self.ancilla_cycles.to_string(),
            measurements: self.measurements().to_string(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ResourceVector {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let flat = FlatVector::deserialize(de)?;
        let big = |s: &str| -> Result<BigUint, D::Error> {
            s.parse::<BigUint>()
                .map_err(|e| D::Error::custom(format!("bad big integer {s:?}: {e}")))
        };
        if flat.measure != flat.measurements {
            return Err(D::Error::custom(
                "\"measure\" and \"measurements\" disagree",
            ));
        }
        let mut v = ResourceVector::zero();
        v.set_count(GateKind::X, big(&flat.x)?);
        v.set_count(GateKind::Y, big(&flat.y)?);
        v.set_count(GateKind::Z, big(&flat.z)?);
        v.set_count(GateKind::H, big(&flat.h)?);
        v.set_count(GateKind::S, big(&flat.s)?);
        v.set_count(GateKind::T, big(&flat.t)?);
        v.set_count(GateKind::Cnot, big(&flat.cnot)?);
        v.set_count(GateKind::Measure, big(&flat.measure)?);
        v.width = flat.width;
        v.depth = big(&flat.depth)?;
        v.t_depth = big(&flat.t_depth)?;
        v.ancilla_max = flat.ancilla_max;
        v.ancilla_cycles = big(&flat.ancilla_cycles)?;
        Ok(v)
    }
}

impl fmt::Display for ResourceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "total gates    {}", self.total_gates())?;
        writeln!(f, "X              {}", self.count(GateKind::X))?;
        writeln!(f, "Y              {}", self.count(GateKind::Y))?;
        writeln!(f, "Z              {}", self.count(GateKind::Z))?;
        writeln!(f, "H              {}", self.count(GateKind::H))?;
        writeln!(f, "S              {}", self.s_total())?;
        writeln!(f, "T              {}", self.t_total())?;
        writeln!(f, "CNOT           {}", self.count(GateKind::Cnot))?;
        writeln!(f, "width          {}", self.width)?;
        writeln!(f, "depth          {}", self.depth)?;
        writeln!(f, "T-depth        {}", self.t_depth)?;
        writeln!(f, "ancilla max    {}", self.ancilla_max)?;
        writeln!(f, "ancilla cycles {}", self.ancilla_cycles)?;
        write!(f, "measurements   {}", self.measurements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_vector() -> impl Strategy<Value = ResourceVector> {
        (
            proptest::collection::vec(0u64..1_000_000, 12),
            0u64..500,
            0u64..1_000_000,
            0u64..100,
        )
            .prop_map(|(counts, width, depth, anc)| {
                let mut v = ResourceVector::zero();
                for (i, c) in counts.iter().enumerate() {
                    v.counts[i] = BigUint::from(*c);
                }
                // keep the structural invariants satisfiable
                v.depth = BigUint::from(depth);
                v.t_depth = BigUint::from(depth.min(counts[6] + counts[7]));
                v.width = width.max(anc);
                v.ancilla_max = anc;
                v.ancilla_cycles = BigUint::from(counts[11]);
                v
            })
    }

    #[test]
    fn seq_identity_and_toffoli_doubling() {
        let z = ResourceVector::zero();
        let tof = crate::templates::toffoli();
        assert_eq!(tof.seq(&z), tof);
        let two = tof.seq(&tof);
        assert_eq!(two.depth, BigUint::from(24u32));
        assert_eq!(two.t_total(), BigUint::from(14u32));
        assert_eq!(two.width, 3);
    }

    #[test]
    fn seq_width_is_max_under_reuse() {
        let mut a = ResourceVector::zero();
        a.width = 4;
        let mut b = ResourceVector::zero();
        b.width = 66;
        assert_eq!(a.seq(&b).width, 66);
    }

    #[test]
    fn par_identity_except_width() {
        let tof = crate::templates::toffoli();
        let z = ResourceVector::zero();
        let p = tof.par(&z);
        assert_eq!(p, tof); // zero has width 0, so even width is unchanged
    }

    #[test]
    fn par_of_four_equal_blocks_scales_width_not_depth() {
        let block = crate::templates::toffoli();
        let four = block.par(&block).par(&block).par(&block);
        assert_eq!(four.width, 4 * block.width);
        assert_eq!(four.depth, block.depth);
        assert_eq!(four.t_total(), BigUint::from(4u32) * block.t_total());
    }

    #[test]
    fn par_doubles_counts() {
        let tof = crate::templates::toffoli();
        let two = tof.par(&tof);
        for kind in GateKind::ALL {
            assert_eq!(*two.count(kind), tof.count(kind) * 2u32);
        }
    }

    #[test]
    fn repeat_edges() {
        let tof = crate::templates::toffoli();
        assert_eq!(tof.repeat_u(1), tof);
        assert_eq!(tof.repeat_u(0), ResourceVector::zero());
        let n = BigUint::from(2_500_000_000_000u64);
        let slice = tof.seq(&tof); // stand-in block
        let r = slice.repeat(&n);
        assert_eq!(r.depth, &n * &slice.depth);
    }

    #[test]
    fn scaled_rounds_half_up() {
        let mut v = ResourceVector::zero();
        v.set_count(GateKind::T, 3u32);
        let half = v.scaled(1, 2);
        assert_eq!(*half.count(GateKind::T), BigUint::from(2u32)); // 1.5 -> 2
        assert_eq!(v.scaled(0, 1), ResourceVector::zero());
        assert_eq!(v.scaled(1, 1), v);
    }

    #[test]
    fn json_field_names_and_round_trip() {
        let tof = crate::templates::toffoli();
        let json = serde_json::to_string(&tof).unwrap();
        for key in [
            "\"x\"",
            "\"y\"",
            "\"z\"",
            "\"h\"",
            "\"s\"",
            "\"t\"",
            "\"cnot\"",
            "\"measure\"",
            "\"width\"",
            "\"depth\"",
            "\"t_depth\"",
            "\"ancilla_max\"",
            "\"ancilla_cycles\"",
            "\"measurements\"",
        ] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
        let back: ResourceVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back.canonical(), tof.canonical());
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn monoid_laws(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            let z = ResourceVector::zero();
            // associativity
            prop_assert_eq!(a.seq(&b).seq(&c), a.seq(&b.seq(&c)));
            prop_assert_eq!(a.par(&b).par(&c), a.par(&b.par(&c)));
            // identity
            prop_assert_eq!(a.seq(&z), a.clone());
            prop_assert_eq!(z.seq(&a), a.clone());
            prop_assert_eq!(z.par(&a), a.clone());
        }

        #[test]
        fn repeat_splits_additively(a in arb_vector(), n in 0u32..50, m in 0u32..50) {
            let whole = a.repeat(&BigUint::from(n + m));
            let split = a.repeat(&BigUint::from(n)).seq(&a.repeat(&BigUint::from(m)));
            // width differs when n or m is zero (repeat(0) collapses to the
            // zero vector); the counted quantities must still agree.
            for kind in GateKind::ALL {
                prop_assert_eq!(whole.count(kind), split.count(kind));
            }
            prop_assert_eq!(&whole.depth, &split.depth);
            prop_assert_eq!(&whole.t_depth, &split.t_depth);
            prop_assert_eq!(&whole.ancilla_cycles, &split.ancilla_cycles);
            if n > 0 && m > 0 {
                prop_assert_eq!(whole, split);
            }
        }

        #[test]
        fn gate_list_fold_is_association_free(
            kinds in proptest::collection::vec(0usize..12, 1..40),
            split in 0usize..40,
        ) {
            let gates: Vec<ResourceVector> = kinds
                .iter()
                .map(|&i| ResourceVector::gate(GateKind::ALL[i]))
                .collect();
            let left = gates.iter().fold(ResourceVector::zero(), |acc, g| acc.seq(g));
            let cut = split.min(gates.len());
            let a = gates[..cut].iter().fold(ResourceVector::zero(), |acc, g| acc.seq(g));
            let b = gates[cut..].iter().fold(ResourceVector::zero(), |acc, g| acc.seq(g));
            let right = a.seq(&b);
            prop_assert_eq!(left.clone(), right);
            // measurements and ancilla cycles in particular survive re-association
            prop_assert_eq!(left.measurements(), b.seq(&a).measurements());
        }
    }
}
