//! Desk-scale ground truth: explicit gate lists, a dense statevector
//! simulator, and the closed-form-versus-expansion cross-check.
//!
//! Expansions carry exact rotations symbolically. The layered census costs
//! a rotation through the active [`RotationPolicy`] so its counts line up
//! with the closed-form tables, while the simulator applies the exact
//! unitary so small circuits can be checked against their defining
//! matrices.

use crate::resources::{GateKind, ResourceVector};
use crate::synthesis::RotationPolicy;
use crate::templates::{self, TemplateError};
use num_complex::Complex64;
use std::collections::BTreeSet;
use std::f64::consts::PI;
use thiserror::Error;

/// Hard cap on explicit-circuit size.
pub const MAX_QUBITS: usize = 24;
/// Hard cap on dense unitary simulation.
pub const MAX_SIM_QUBITS: usize = 12;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("circuit has {0} qubits, over the limit of {1}")]
    TooLarge(usize, usize),
    #[error("template {0} has no explicit expansion")]
    NoExpansion(String),
    #[error("unknown template {0}")]
    UnknownTemplate(String),
    #[error("gate references wire {0} outside a {1}-wire circuit")]
    WireOutOfRange(usize, usize),
    #[error("non-unitary gate {0} in unitary simulation")]
    NonUnitaryGate(String),
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error("closed form and expansion disagree on {field} for {template} ({detail})")]
    Mismatch {
        template: String,
        field: String,
        detail: String,
    },
}

/// An exact rotation retained symbolically in an expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rotation {
    /// diag(1, exp(2 pi i / 2^k)), inverted when `inverse` is set.
    PhaseK { k: u32, inverse: bool },
    /// exp(-i theta Y / 2)
    Ry(f64),
    /// exp(-i theta Z / 2)
    Rz(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CircuitGate {
    /// Elementary gate on explicit wires (one wire, or two for CNOT with
    /// control listed first).
    Std(GateKind, Vec<usize>),
    /// A policy-costed rotation on one wire.
    Rot(Rotation, usize),
    /// Scheduling barrier: the layering may not pull later gates past it.
    Barrier,
}

/// Explicit gate list over indexed wires.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitCircuit {
    pub n_qubits: usize,
    pub gates: Vec<CircuitGate>,
}

impl ExplicitCircuit {
    pub fn new(n_qubits: usize) -> Result<Self, VerifierError> {
        if n_qubits > MAX_QUBITS {
            return Err(VerifierError::TooLarge(n_qubits, MAX_QUBITS));
        }
        Ok(ExplicitCircuit {
            n_qubits,
            gates: Vec::new(),
        })
    }

    pub fn push(&mut self, kind: GateKind, wires: &[usize]) {
        debug_assert_eq!(wires.len(), kind.arity());
        self.gates.push(CircuitGate::Std(kind, wires.to_vec()));
    }

    pub fn rot(&mut self, rotation: Rotation, wire: usize) {
        self.gates.push(CircuitGate::Rot(rotation, wire));
    }

    pub fn barrier(&mut self) {
        self.gates.push(CircuitGate::Barrier);
    }

    /// Emit the exact elementary sequence for R_y(pi/4), read in time
    /// order: S H T S H X Z S.
    pub fn ry_quarter(&mut self, wire: usize) {
        use GateKind::*;
        for k in [S, H, T, S, H, X, Z, S] {
            self.push(k, &[wire]);
        }
    }

    /// Exact elementary sequence for R_y(-pi/4), time order:
    /// S-dag Z X H S-dag T-dag H S-dag.
    pub fn ry_quarter_inv(&mut self, wire: usize) {
        use GateKind::*;
        for k in [Sdag, Z, X, H, Sdag, Tdag, H, Sdag] {
            self.push(k, &[wire]);
        }
    }

    pub fn check_wires(&self) -> Result<(), VerifierError> {
        for g in &self.gates {
            let wires: &[usize] = match g {
                CircuitGate::Std(_, w) => w,
                CircuitGate::Rot(_, w) => std::slice::from_ref(w),
                CircuitGate::Barrier => &[],
            };
            for &w in wires {
                if w >= self.n_qubits {
                    return Err(VerifierError::WireOutOfRange(w, self.n_qubits));
                }
            }
        }
        Ok(())
    }

    /// Count the circuit into a resource vector under `policy`.
    ///
    /// Layering is greedy ASAP on qubit availability: a gate starts one
    /// layer past the latest-finishing wire it touches, barriers
    /// synchronise all wires, and measurements plus ancilla bookkeeping
    /// are depth-free. A symbolic rotation occupies one serial run of
    /// layers on its wire with the T layers at fixed offsets, so two
    /// rotations started in the same layer share their T layers. Ancilla
    /// cycles are counted as measurements, matching the
    /// uncompute-then-measure discipline used throughout.
    pub fn census(&self, policy: &RotationPolicy) -> Result<ResourceVector, TemplateError> {
        let (rot_t, rot_h, rot_s) = policy.mix()?;
        let rot_total = rot_t + rot_h + rot_s;
        let t_offsets = rotation_t_offsets(rot_t, rot_h);

        let mut v = ResourceVector::zero();
        let mut watermark = vec![0u64; self.n_qubits];
        let mut t_layers: BTreeSet<u64> = BTreeSet::new();
        let mut live_ancillas: u64 = 0;
        let mut max_ancillas: u64 = 0;

        for gate in &self.gates {
            match gate {
                CircuitGate::Barrier => {
                    let global = watermark.iter().copied().max().unwrap_or(0);
                    for w in watermark.iter_mut() {
                        *w = global;
                    }
                }
                CircuitGate::Std(kind, wires) => {
                    v.add_count(*kind, 1u32);
                    match kind {
                        GateKind::AncillaInit => {
                            live_ancillas += 1;
                            max_ancillas = max_ancillas.max(live_ancillas);
                        }
                        GateKind::AncillaTerm => {
                            live_ancillas = live_ancillas.saturating_sub(1);
                        }
                        _ => {}
                    }
                    if kind.counts_toward_depth() {
                        let layer = 1 + wires.iter().map(|&w| watermark[w]).max().unwrap();
                        for &w in wires {
                            watermark[w] = layer;
                        }
                        if matches!(kind, GateKind::T | GateKind::Tdag) {
                            t_layers.insert(layer);
                        }
                    }
                }
                CircuitGate::Rot(_, wire) => {
                    v.add_count(GateKind::T, rot_t);
                    v.add_count(GateKind::H, rot_h);
                    v.add_count(GateKind::S, rot_s);
                    let start = watermark[*wire];
                    for &off in &t_offsets {
                        t_layers.insert(start + off);
                    }
                    watermark[*wire] = start + rot_total;
                }
            }
        }
        v.width = self.n_qubits as u64;
        v.depth = watermark.iter().copied().max().unwrap_or(0).into();
        v.t_depth = (t_layers.len() as u64).into();
        v.ancilla_max = max_ancillas;
        v.ancilla_cycles = v.measurements().clone();
        Ok(v)
    }
}

/// Relative layer offsets (1-based) at which a policy rotation places its
/// T gates: the sequence interleaves T and H pairs first, then trailing
/// gates, so T gates land on layers 1, 3, 5, ...
fn rotation_t_offsets(t: u64, h: u64) -> Vec<u64> {
    let pairs = t.min(h);
    let mut offsets: Vec<u64> = (0..pairs).map(|i| 2 * i + 1).collect();
    for i in 0..t.saturating_sub(pairs) {
        offsets.push(2 * pairs + 1 + i);
    }
    offsets
}

/// Expand a named template to its explicit circuit.
///
/// Supported names: `toffoli`, `mcnot` (param n), `qft` (param b),
/// `cphase` and `croty` (params n, f), `cz`, `ch`, `w`.
pub fn expand(
    name: &str,
    n: u64,
    f: bool,
    _policy: &RotationPolicy,
) -> Result<ExplicitCircuit, VerifierError> {
    let circuit = match name {
        "toffoli" => templates::expand_toffoli(),
        "mcnot" => templates::expand_mcnot(n)?,
        "qft" => templates::expand_qft(n)?,
        "cphase" => templates::expand_cphase(n, f)?,
        "croty" => templates::expand_croty(n, f)?,
        "cz" => templates::expand_cz(),
        "ch" => templates::expand_ch(),
        "w" => templates::expand_w(),
        "ccphase" | "crz" | "cry" | "ccrz" => {
            return Err(VerifierError::NoExpansion(name.to_string()))
        }
        other => return Err(VerifierError::UnknownTemplate(other.to_string())),
    };
    if circuit.n_qubits > MAX_QUBITS {
        return Err(VerifierError::TooLarge(circuit.n_qubits, MAX_QUBITS));
    }
    circuit.check_wires()?;
    Ok(circuit)
}

/// Dense unitary, row-major, dimension 2^n. Wire 0 is the most
/// significant bit of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    pub n_qubits: usize,
    pub data: Vec<Complex64>,
}

impl Unitary {
    pub fn identity(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        let mut data = vec![Complex64::ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::ONE;
        }
        Unitary { n_qubits, data }
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let d = self.dim();
        self.data[row * d + col] = value;
    }

    fn wire_mask(&self, wire: usize) -> usize {
        1 << (self.n_qubits - 1 - wire)
    }

    fn apply_1q(&mut self, g: [[Complex64; 2]; 2], wire: usize) {
        let dim = self.dim();
        let mask = self.wire_mask(wire);
        for col in 0..dim {
            for i in 0..dim {
                if i & mask != 0 {
                    continue;
                }
                let j = i | mask;
                let a = self.at(i, col);
                let b = self.at(j, col);
                self.set(i, col, g[0][0] * a + g[0][1] * b);
                self.set(j, col, g[1][0] * a + g[1][1] * b);
            }
        }
    }

    fn apply_cnot(&mut self, control: usize, target: usize) {
        let dim = self.dim();
        let mc = self.wire_mask(control);
        let mt = self.wire_mask(target);
        for col in 0..dim {
            for i in 0..dim {
                if (i & mc != 0) && (i & mt == 0) {
                    let j = i | mt;
                    let a = self.at(i, col);
                    let b = self.at(j, col);
                    self.set(i, col, b);
                    self.set(j, col, a);
                }
            }
        }
    }
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn std_gate_matrix(kind: GateKind) -> Option<[[Complex64; 2]; 2]> {
    let z = Complex64::ZERO;
    let o = Complex64::ONE;
    let h = 1.0 / 2f64.sqrt();
    Some(match kind {
        GateKind::X => [[z, o], [o, z]],
        GateKind::Y => [[z, c64(0.0, -1.0)], [c64(0.0, 1.0), z]],
        GateKind::Z => [[o, z], [z, -o]],
        GateKind::H => [[c64(h, 0.0), c64(h, 0.0)], [c64(h, 0.0), c64(-h, 0.0)]],
        GateKind::S => [[o, z], [z, c64(0.0, 1.0)]],
        GateKind::Sdag => [[o, z], [z, c64(0.0, -1.0)]],
        GateKind::T => [[o, z], [z, Complex64::from_polar(1.0, PI / 4.0)]],
        GateKind::Tdag => [[o, z], [z, Complex64::from_polar(1.0, -PI / 4.0)]],
        _ => return None,
    })
}

fn rotation_matrix(rot: Rotation) -> [[Complex64; 2]; 2] {
    let z = Complex64::ZERO;
    let o = Complex64::ONE;
    match rot {
        Rotation::PhaseK { k, inverse } => {
            let theta = 2.0 * PI / 2f64.powi(k as i32) * if inverse { -1.0 } else { 1.0 };
            [[o, z], [z, Complex64::from_polar(1.0, theta)]]
        }
        Rotation::Ry(theta) => {
            let (s, c) = (theta / 2.0).sin_cos();
            [[c64(c, 0.0), c64(-s, 0.0)], [c64(s, 0.0), c64(c, 0.0)]]
        }
        Rotation::Rz(theta) => [
            [Complex64::from_polar(1.0, -theta / 2.0), z],
            [z, Complex64::from_polar(1.0, theta / 2.0)],
        ],
    }
}

/// Build the circuit's dense unitary by gate-wise application.
pub fn simulate(circuit: &ExplicitCircuit) -> Result<Unitary, VerifierError> {
    if circuit.n_qubits > MAX_SIM_QUBITS {
        return Err(VerifierError::TooLarge(circuit.n_qubits, MAX_SIM_QUBITS));
    }
    circuit.check_wires()?;
    let mut u = Unitary::identity(circuit.n_qubits);
    for gate in &circuit.gates {
        match gate {
            CircuitGate::Barrier => {}
            CircuitGate::Rot(rot, wire) => u.apply_1q(rotation_matrix(*rot), *wire),
            CircuitGate::Std(kind, wires) => match kind {
                GateKind::Cnot => u.apply_cnot(wires[0], wires[1]),
                GateKind::Measure | GateKind::AncillaInit | GateKind::AncillaTerm => {
                    return Err(VerifierError::NonUnitaryGate(kind.to_string()))
                }
                k => u.apply_1q(std_gate_matrix(*k).unwrap(), wires[0]),
            },
        }
    }
    Ok(u)
}

/// Global-phase-insensitive max-norm distance between two unitaries.
pub fn phase_insensitive_distance(a: &Unitary, b: &Unitary) -> f64 {
    assert_eq!(a.n_qubits, b.n_qubits);
    let dim = a.dim();
    // anchor the phase on b's largest entry
    let mut best = (0usize, 0.0f64);
    for (i, v) in b.data.iter().enumerate() {
        if v.norm() > best.1 {
            best = (i, v.norm());
        }
    }
    if best.1 < 1e-14 {
        return a.data.iter().map(|v| v.norm()).fold(0.0, f64::max);
    }
    let phase = a.data[best.0] / b.data[best.0];
    let phase = if phase.norm() < 1e-14 {
        Complex64::ONE
    } else {
        phase / phase.norm()
    };
    (0..dim * dim)
        .map(|i| (a.data[i] - phase * b.data[i]).norm())
        .fold(0.0, f64::max)
}

/// Analytic CCNOT on 3 qubits.
pub fn ccnot_matrix() -> Unitary {
    let mut u = Unitary::identity(3);
    u.set(6, 6, Complex64::ZERO);
    u.set(7, 7, Complex64::ZERO);
    u.set(6, 7, Complex64::ONE);
    u.set(7, 6, Complex64::ONE);
    u
}

/// Analytic DFT matrix on b qubits with bit-reversed row order, the
/// convention produced by the swap-free QFT circuit.
pub fn bit_reversed_dft(b: usize) -> Unitary {
    let dim = 1usize << b;
    let mut u = Unitary::identity(b);
    let norm = 1.0 / (dim as f64).sqrt();
    for j in 0..dim {
        let jr = bit_reverse(j, b);
        for k in 0..dim {
            let angle = 2.0 * PI * (j as f64) * (k as f64) / dim as f64;
            u.set(jr, k, Complex64::from_polar(norm, angle));
        }
    }
    u
}

fn bit_reverse(x: usize, bits: usize) -> usize {
    let mut out = 0;
    for i in 0..bits {
        if x & (1 << i) != 0 {
            out |= 1 << (bits - 1 - i);
        }
    }
    out
}

/// The two-qubit walk gate: identity on |00> and |11>, a Hadamard mix of
/// |01> and |10>.
pub fn w_matrix() -> Unitary {
    let mut u = Unitary::identity(2);
    let h = 1.0 / 2f64.sqrt();
    u.set(1, 1, c64(h, 0.0));
    u.set(1, 2, c64(h, 0.0));
    u.set(2, 1, c64(h, 0.0));
    u.set(2, 2, c64(-h, 0.0));
    u
}

/// Controlled-Hadamard on 2 qubits (control = wire 0).
pub fn ch_matrix() -> Unitary {
    let mut u = Unitary::identity(2);
    let h = 1.0 / 2f64.sqrt();
    u.set(2, 2, c64(h, 0.0));
    u.set(2, 3, c64(h, 0.0));
    u.set(3, 2, c64(h, 0.0));
    u.set(3, 3, c64(-h, 0.0));
    u
}

/// Controlled-Z on 2 qubits.
pub fn cz_matrix() -> Unitary {
    let mut u = Unitary::identity(2);
    u.set(3, 3, -Complex64::ONE);
    u
}

/// Compare a template's closed form against the census of its expansion
/// for one parameter binding. All count fields, layered depth, T-depth
/// and the ancilla census must agree exactly; width is excluded because
/// the closed-form tables count only the named wires while an expansion
/// also materialises its ancilla wires.
pub fn crosscheck_one(
    name: &str,
    n: u64,
    f: bool,
    policy: &RotationPolicy,
) -> Result<(), VerifierError> {
    let closed = templates::closed_form(name, n, f, policy)?;
    let circuit = expand(name, n, f, policy)?;
    let census = circuit.census(policy)?;
    compare_fields(name, &format!("n={n}, f={}", u8::from(f)), &closed, &census)
}

fn compare_fields(
    template: &str,
    detail: &str,
    closed: &ResourceVector,
    census: &ResourceVector,
) -> Result<(), VerifierError> {
    let mismatch = |field: &str, a: &dyn std::fmt::Display, b: &dyn std::fmt::Display| {
        Err(VerifierError::Mismatch {
            template: template.to_string(),
            field: field.to_string(),
            detail: format!("{detail}: closed form {a}, expansion {b}"),
        })
    };
    // Counts are compared with S/S-dagger and T/T-dagger merged, the same
    // view the tables use; an expansion is free to choose which of the pair
    // it emits.
    let closed = closed.canonical();
    let census = census.canonical();
    for kind in GateKind::ALL {
        if closed.count(kind) != census.count(kind) {
            return mismatch(&kind.to_string(), closed.count(kind), census.count(kind));
        }
    }
    if closed.depth != census.depth {
        return mismatch("depth", &closed.depth, &census.depth);
    }
    if closed.t_depth != census.t_depth {
        return mismatch("t_depth", &closed.t_depth, &census.t_depth);
    }
    if closed.ancilla_max != census.ancilla_max {
        return mismatch("ancilla_max", &closed.ancilla_max, &census.ancilla_max);
    }
    if closed.ancilla_cycles != census.ancilla_cycles {
        return mismatch(
            "ancilla_cycles",
            &closed.ancilla_cycles,
            &census.ancilla_cycles,
        );
    }
    Ok(())
}

/// Run the cross-check over a parameter range; returns one result line per
/// parameter value.
pub fn crosscheck_range(
    name: &str,
    params: &[(u64, bool)],
    policy: &RotationPolicy,
) -> Vec<(String, Result<(), VerifierError>)> {
    params
        .iter()
        .map(|&(n, f)| {
            let label = format!("{name} n={n} f={}", u8::from(f));
            (label, crosscheck_one(name, n, f, policy))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    const TOL: f64 = 1e-10;

    #[test]
    fn empty_circuit_is_identity() {
        let c = ExplicitCircuit::new(2).unwrap();
        let u = simulate(&c).unwrap();
        assert_eq!(u, Unitary::identity(2));
    }

    #[test]
    fn toffoli_simulates_to_ccnot() {
        let c = expand("toffoli", 0, false, &RotationPolicy::fixed_budget()).unwrap();
        assert_eq!(c.gates.len(), 16);
        let u = simulate(&c).unwrap();
        assert!(phase_insensitive_distance(&u, &ccnot_matrix()) <= TOL);
    }

    #[test]
    fn toffoli_census_reproduces_closed_form() {
        let policy = RotationPolicy::fixed_budget();
        let c = expand("toffoli", 0, false, &policy).unwrap();
        let v = c.census(&policy).unwrap();
        assert_eq!(v.depth, BigUint::from(12u32));
        assert_eq!(v.t_depth, BigUint::from(6u32));
        assert_eq!(*v.count(GateKind::H), BigUint::from(2u32));
        assert_eq!(*v.count(GateKind::S), BigUint::from(1u32));
        assert_eq!(v.t_total(), BigUint::from(7u32));
        assert_eq!(*v.count(GateKind::Cnot), BigUint::from(6u32));
    }

    #[test]
    fn mcnot_degenerate_expansion() {
        let policy = RotationPolicy::fixed_budget();
        let c = expand("mcnot", 1, false, &policy).unwrap();
        assert_eq!(c.gates.len(), 1);
        let v = c.census(&policy).unwrap();
        assert_eq!(*v.count(GateKind::Cnot), BigUint::from(1u32));
        assert_eq!(v.depth, BigUint::from(1u32));
    }

    #[test]
    fn qft_small_expansions_match_dft() {
        let policy = RotationPolicy::fixed_budget();
        for b in 1..=4u64 {
            let c = expand("qft", b, false, &policy).unwrap();
            let u = simulate(&c).unwrap();
            let d = phase_insensitive_distance(&u, &bit_reversed_dft(b as usize));
            assert!(d <= TOL, "qft b={b} distance {d}");
        }
    }

    #[test]
    fn qft4_expansion_census() {
        let policy = RotationPolicy::fixed_budget();
        let c = expand("qft", 4, false, &policy).unwrap();
        let mut h = 0;
        let mut rot = 0;
        let mut cnot = 0;
        for g in &c.gates {
            match g {
                CircuitGate::Std(GateKind::H, _) => h += 1,
                CircuitGate::Std(GateKind::Cnot, _) => cnot += 1,
                CircuitGate::Rot(..) => rot += 1,
                _ => {}
            }
        }
        assert_eq!((h, rot, cnot), (4, 18, 12));
    }

    #[test]
    fn w_and_ch_match_their_unitaries() {
        let policy = RotationPolicy::fixed_budget();
        let w = simulate(&expand("w", 0, false, &policy).unwrap()).unwrap();
        assert!(phase_insensitive_distance(&w, &w_matrix()) <= TOL);
        let ch = simulate(&expand("ch", 0, false, &policy).unwrap()).unwrap();
        assert!(phase_insensitive_distance(&ch, &ch_matrix()) <= TOL);
        let cz = simulate(&expand("cz", 0, false, &policy).unwrap()).unwrap();
        assert!(phase_insensitive_distance(&cz, &cz_matrix()) <= TOL);
    }

    #[test]
    fn crosschecks_pass_for_tabled_templates() {
        let policy = RotationPolicy::fixed_budget();
        for n in 1..=8 {
            crosscheck_one("mcnot", n, false, &policy).unwrap();
        }
        for b in 1..=6 {
            crosscheck_one("qft", b, false, &policy).unwrap();
        }
        for n in 2..=6 {
            for f in [false, true] {
                crosscheck_one("cphase", n, f, &policy).unwrap();
                crosscheck_one("croty", n, f, &policy).unwrap();
            }
        }
    }

    #[test]
    fn corrupted_closed_form_names_the_field() {
        let policy = RotationPolicy::fixed_budget();
        let circuit = expand("toffoli", 0, false, &policy).unwrap();
        let census = circuit.census(&policy).unwrap();
        let mut corrupted = templates::toffoli();
        corrupted.set_count(GateKind::Cnot, 7u32);
        let err = compare_fields("toffoli", "n/a", &corrupted, &census).unwrap_err();
        match err {
            VerifierError::Mismatch { field, .. } => assert_eq!(field, "CNOT"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn layered_depth_never_exceeds_gate_count() {
        let policy = RotationPolicy::fixed_budget();
        for (name, n) in [("toffoli", 0u64), ("mcnot", 5), ("cz", 0), ("w", 0)] {
            let c = expand(name, n, false, &policy).unwrap();
            let v = c.census(&policy).unwrap();
            assert!(v.depth <= v.total_gates(), "{name}");
        }
    }

    #[test]
    fn oversized_circuits_are_rejected() {
        assert!(ExplicitCircuit::new(25).is_err());
        let big = ExplicitCircuit::new(13).unwrap();
        assert!(matches!(
            simulate(&big),
            Err(VerifierError::TooLarge(13, MAX_SIM_QUBITS))
        ));
    }
}
