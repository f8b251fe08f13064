//! Spectrum transfer from `G` to the n-polygon graph `τ_n(G)`.
//!
//! The spectrum of `τ_n(G)` is assembled from three structural pieces:
//!
//! * `0` once, and `2` once when the output is bipartite (odd `n`,
//!   bipartite `G`);
//! * the roots of three fixed polynomial families whose multiplicities are
//!   `N`, `E - N + 1` and `E - N` (or `E - N + 1` for bipartite `G`);
//! * for every eigenvalue `λ ∉ {0, 2}` of `G`, the roots `μ` of
//!   `1 - a_n(μ) / (1 + a_{n-1}(μ)) = λ`, each inheriting `λ`'s multiplicity.
//!
//! Spectra are carried as `(value, multiplicity)` pairs with exact integer
//! multiplicities, so generations far past anything that could be built
//! explicitly are still cheap to iterate.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::a_series::a_values;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::oracle;
use crate::roots::{roots_of_family, FamilyKind, LambdaSolver, RootFamily};

/// Base eigenvalues closer than this are one eigenvalue with multiplicity.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Values this close to 0 or 2 are snapped onto them.
pub const SNAP_TOL: f64 = 1e-9;
/// Ledger entries closer than this are merged in the exported multiset.
pub const MERGE_TOL: f64 = 1e-9;

/// Where an eigenvalue came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Source {
    Zero,
    Two,
    FamilyZero,
    FamilyPlus,
    FamilyMinus,
    /// Root of the λ-equation for this base eigenvalue.
    Lifted(f64),
    /// Computed directly from a matrix.
    Base,
}

impl Source {
    pub fn label(&self) -> &'static str {
        match self {
            Source::Zero => "zero",
            Source::Two => "two",
            Source::FamilyZero => "family_zero",
            Source::FamilyPlus => "family_plus",
            Source::FamilyMinus => "family_minus",
            Source::Lifted(_) => "lifted",
            Source::Base => "base",
        }
    }

    pub fn from_label(label: &str, lambda: Option<f64>) -> Option<Self> {
        Some(match label {
            "zero" => Source::Zero,
            "two" => Source::Two,
            "family_zero" => Source::FamilyZero,
            "family_plus" => Source::FamilyPlus,
            "family_minus" => Source::FamilyMinus,
            "lifted" => Source::Lifted(lambda?),
            "base" => Source::Base,
            _ => return None,
        })
    }

    fn family(kind: FamilyKind) -> Self {
        match kind {
            FamilyKind::OddZero | FamilyKind::EvenZero => Source::FamilyZero,
            FamilyKind::OddPlus | FamilyKind::EvenPlus => Source::FamilyPlus,
            FamilyKind::OddMinus | FamilyKind::EvenMinus => Source::FamilyMinus,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Lifted(lambda) => write!(f, "lifted({lambda})"),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: BigUint,
    pub source: Source,
}

/// Eigenvalue multiset, sorted ascending by value.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn new(mut entries: Vec<SpectrumEntry>) -> Self {
        entries.retain(|e| !e.multiplicity.is_zero());
        entries.sort_by(|a, b| a.value.total_cmp(&b.value));
        Self { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    /// Total multiplicity of entries whose value is exactly `value`.
    pub fn multiplicity_of(&self, value: f64) -> BigUint {
        self.entries
            .iter()
            .filter(|e| e.value == value)
            .map(|e| &e.multiplicity)
            .sum()
    }

    /// `Σ value · multiplicity`, the trace of the matrix described.
    pub fn trace(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value * e.multiplicity.to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Merges entries within `tol` of each other into one, keeping the
    /// value and source of the entry with the largest multiplicity.
    pub fn merged(&self, tol: f64) -> Spectrum {
        let mut out: Vec<SpectrumEntry> = Vec::with_capacity(self.entries.len());
        let mut group_start = f64::NEG_INFINITY;
        let mut leader = BigUint::zero();
        for e in &self.entries {
            match out.last_mut() {
                Some(last) if e.value - group_start <= tol => {
                    if e.multiplicity > leader {
                        leader = e.multiplicity.clone();
                        last.value = e.value;
                        last.source = e.source;
                    }
                    last.multiplicity += &e.multiplicity;
                }
                _ => {
                    group_start = e.value;
                    leader = e.multiplicity.clone();
                    out.push(e.clone());
                }
            }
        }
        Spectrum { entries: out }
    }

    /// Every eigenvalue listed with repetition, or `None` if the total
    /// multiplicity exceeds `limit`.
    pub fn expanded(&self, limit: usize) -> Option<Vec<f64>> {
        let total = self.total_multiplicity().to_usize()?;
        if total > limit {
            return None;
        }
        let mut out = Vec::with_capacity(total);
        for e in &self.entries {
            let m = e.multiplicity.to_usize()?;
            out.extend(std::iter::repeat_n(e.value, m));
        }
        Some(out)
    }

    /// Checks the structural facts every normalized-Laplacian spectrum of a
    /// connected graph satisfies.
    pub fn validate(&self, ctx: &SpectrumContext) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentSpectrum(msg));
        if self.entries.windows(2).any(|w| w[0].value > w[1].value) {
            return bad("entries are not sorted".into());
        }
        if let Some(e) = self.entries.iter().find(|e| !(0.0..=2.0).contains(&e.value)) {
            return bad(format!("eigenvalue {} outside [0, 2]", e.value));
        }
        if !self.multiplicity_of(0.0).is_one() {
            return bad(format!(
                "eigenvalue 0 has multiplicity {}, expected 1",
                self.multiplicity_of(0.0)
            ));
        }
        let twos = self.multiplicity_of(2.0);
        if ctx.bipartite != !twos.is_zero() || twos > BigUint::one() {
            return bad(format!(
                "eigenvalue 2 has multiplicity {twos} but bipartite = {}",
                ctx.bipartite
            ));
        }
        let total = self.total_multiplicity();
        if total != ctx.vertices {
            return bad(format!(
                "total multiplicity {total} differs from vertex count {}",
                ctx.vertices
            ));
        }
        if ctx.bipartite {
            let merged = self.merged(MERGE_TOL);
            for e in merged.entries() {
                let mirror = 2.0 - e.value;
                let partner = merged
                    .entries()
                    .iter()
                    .find(|o| (o.value - mirror).abs() <= 1e-9);
                match partner {
                    Some(p) if p.multiplicity == e.multiplicity => {}
                    _ => {
                        return bad(format!(
                            "bipartite spectrum lacks mirror of {} (multiplicity {})",
                            e.value, e.multiplicity
                        ))
                    }
                }
            }
        }
        Ok(())
    }
}

/// Size and bipartiteness of the graph a spectrum describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumContext {
    pub vertices: BigUint,
    pub edges: BigUint,
    pub bipartite: bool,
}

impl SpectrumContext {
    pub fn new(vertices: BigUint, edges: BigUint, bipartite: bool) -> Result<Self> {
        if vertices < BigUint::from(2u32) || edges.is_zero() {
            return Err(Error::InconsistentSpectrum(format!(
                "need N >= 2 and E >= 1, got N = {vertices}, E = {edges}"
            )));
        }
        if !bipartite && edges < vertices {
            return Err(Error::InconsistentSpectrum(format!(
                "non-bipartite graph needs E >= N, got N = {vertices}, E = {edges}"
            )));
        }
        Ok(Self {
            vertices,
            edges,
            bipartite,
        })
    }

    pub fn of_graph(graph: &Graph) -> Self {
        Self {
            vertices: graph.vertex_count().into(),
            edges: graph.edge_count().into(),
            bipartite: graph.is_bipartite(),
        }
    }

    /// Context of `τ_n` applied once.
    pub fn transformed(&self, n: u32) -> Self {
        Self {
            vertices: &self.vertices + BigUint::from(n - 1) * &self.edges,
            edges: BigUint::from(n + 1) * &self.edges,
            bipartite: self.bipartite && n % 2 == 1,
        }
    }
}

/// Groups sorted numeric eigenvalues into `(value, multiplicity)` entries,
/// snapping values near 0 and 2.
pub fn cluster_eigenvalues(values: &[f64]) -> Spectrum {
    let mut sorted: Vec<f64> = values
        .iter()
        .map(|&x| {
            if x.abs() <= SNAP_TOL {
                0.0
            } else if (x - 2.0).abs() <= SNAP_TOL {
                2.0
            } else {
                x
            }
        })
        .collect();
    sorted.sort_by(f64::total_cmp);

    let mut entries = Vec::new();
    let mut group: Vec<f64> = Vec::new();
    let mut flush = |group: &mut Vec<f64>| {
        if group.is_empty() {
            return;
        }
        let value = if group.contains(&0.0) {
            0.0
        } else if group.contains(&2.0) {
            2.0
        } else {
            group.iter().sum::<f64>() / group.len() as f64
        };
        entries.push(SpectrumEntry {
            value,
            multiplicity: BigUint::from(group.len()),
            source: Source::Base,
        });
        group.clear();
    };
    for x in sorted {
        if group.last().is_some_and(|&prev| x - prev > CLUSTER_TOL) {
            flush(&mut group);
        }
        group.push(x);
    }
    flush(&mut group);
    Spectrum::new(entries)
}

/// Spectrum of `G` itself, from the oracle's dense eigensolver.
pub fn base_spectrum(graph: &Graph) -> Result<(Spectrum, SpectrumContext)> {
    let eig = oracle::eig_sym(&oracle::normalized_laplacian(graph))?;
    Ok((cluster_eigenvalues(&eig), SpectrumContext::of_graph(graph)))
}

pub fn transform_spectrum(
    spectrum: &Spectrum,
    ctx: &SpectrumContext,
    n: u32,
) -> Result<(Spectrum, SpectrumContext)> {
    transform_spectrum_with(spectrum, ctx, n, Execution::default())
}

/// Spectrum of `τ_n(G)` from the spectrum of `G`. The returned ledger keeps
/// entries from different sources apart even when their values coincide;
/// use [`Spectrum::merged`] for the plain multiset.
pub fn transform_spectrum_with(
    spectrum: &Spectrum,
    ctx: &SpectrumContext,
    n: u32,
    exec: Execution,
) -> Result<(Spectrum, SpectrumContext)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let ctx = SpectrumContext::new(ctx.vertices.clone(), ctx.edges.clone(), ctx.bipartite)?;
    let zeros = spectrum.multiplicity_of(0.0);
    if !zeros.is_one() {
        return Err(Error::InconsistentSpectrum(format!(
            "eigenvalue 0 has multiplicity {zeros}, expected 1"
        )));
    }
    if spectrum.total_multiplicity() != ctx.vertices {
        return Err(Error::InconsistentSpectrum(format!(
            "total multiplicity {} differs from N = {}",
            spectrum.total_multiplicity(),
            ctx.vertices
        )));
    }
    let out_ctx = ctx.transformed(n);

    let mut entries = vec![SpectrumEntry {
        value: 0.0,
        multiplicity: BigUint::one(),
        source: Source::Zero,
    }];
    if out_ctx.bipartite {
        entries.push(SpectrumEntry {
            value: 2.0,
            multiplicity: BigUint::one(),
            source: Source::Two,
        });
    }

    // E - N + 1 >= 0 always holds for a connected graph, E - N >= 0 is
    // guaranteed for non-bipartite contexts by SpectrumContext::new.
    let cycle_rank = &ctx.edges + BigUint::one() - &ctx.vertices;
    let minus_mult = if ctx.bipartite {
        cycle_rank.clone()
    } else {
        &ctx.edges - &ctx.vertices
    };
    let kinds = if n % 2 == 1 { FamilyKind::ODD } else { FamilyKind::EVEN };
    let mults = [ctx.vertices.clone(), cycle_rank, minus_mult];
    for (kind, mult) in kinds.into_iter().zip(mults) {
        if mult.is_zero() {
            continue;
        }
        let set = roots_of_family(RootFamily::new(kind, n)?)?;
        entries.extend(set.roots.into_iter().map(|value| SpectrumEntry {
            value,
            multiplicity: mult.clone(),
            source: Source::family(kind),
        }));
    }

    let solver = LambdaSolver::new(n)?;
    let base = spectrum.merged(MERGE_TOL);
    let liftable: Vec<&SpectrumEntry> = base
        .entries()
        .iter()
        .filter(|e| e.value > 0.0 && e.value < 2.0)
        .collect();
    let lifted = exec.map(&liftable, |e| {
        solver.solve(e.value).map(|set| {
            set.roots
                .into_iter()
                .map(|value| SpectrumEntry {
                    value,
                    multiplicity: e.multiplicity.clone(),
                    source: Source::Lifted(e.value),
                })
                .collect::<Vec<_>>()
        })
    });
    for batch in lifted {
        entries.extend(batch?);
    }

    let out = Spectrum::new(entries);
    let total = out.total_multiplicity();
    if total != out_ctx.vertices {
        return Err(Error::LedgerMismatch {
            total,
            expected: out_ctx.vertices,
        });
    }
    Ok((out, out_ctx))
}

pub fn iterate_spectrum(
    spectrum: &Spectrum,
    ctx: &SpectrumContext,
    n: u32,
    g: u32,
) -> Result<(Spectrum, SpectrumContext)> {
    iterate_spectrum_with(spectrum, ctx, n, g, Execution::default())
}

/// `g` applications of [`transform_spectrum_with`]. Between generations the
/// ledger is merged so coincident values are solved once.
pub fn iterate_spectrum_with(
    spectrum: &Spectrum,
    ctx: &SpectrumContext,
    n: u32,
    g: u32,
    exec: Execution,
) -> Result<(Spectrum, SpectrumContext)> {
    let mut current = (spectrum.clone(), ctx.clone());
    for step in 0..g {
        let input = if step == 0 {
            current.0.clone()
        } else {
            current.0.merged(MERGE_TOL)
        };
        current = transform_spectrum_with(&input, &current.1, n, exec)?;
    }
    Ok(current)
}

/// Lifts an eigenvector `v` of `L_G` for `λ` to an eigenvector of
/// `L_{τ_n(G)}` for a root `μ` of the λ-equation. Original vertices keep
/// their entries; each added path is filled by the three-term recurrence
/// starting from the smaller endpoint of its edge.
pub fn lift_eigenvector(graph: &Graph, n: u32, lambda: f64, v: &[f64], mu: f64) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    if !(lambda > 0.0 && lambda < 2.0) {
        return Err(Error::InvalidParameter(format!(
            "lambda must lie strictly inside (0, 2), got {lambda}"
        )));
    }
    if v.len() != graph.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "vector has {} entries, graph has {} vertices",
            v.len(),
            graph.vertex_count()
        )));
    }
    let norm_v = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let lv = graph.normalized_laplacian_apply(v);
    let eig_residual = lv
        .iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt();
    if eig_residual > 1e-8 * norm_v.max(f64::MIN_POSITIVE) {
        return Err(Error::InvalidParameter(format!(
            "(lambda, v) is not an eigenpair: residual {eig_residual:e}"
        )));
    }

    let a = a_values(n as i64, mu);
    let (a_n2, a_n1, a_n) = (a[n as usize - 1], a[n as usize], a[n as usize + 1]);
    if a_n1.abs() < 1e-12 {
        return Err(Error::DegenerateLift { mu, value: a_n1 });
    }
    let implied = 1.0 - a_n / (1.0 + a_n1);
    if (implied - lambda).abs() > 1e-7 {
        return Err(Error::InvalidParameter(format!(
            "mu = {mu} corresponds to lambda = {implied}, not {lambda}"
        )));
    }

    let base = graph.vertex_count();
    let path_len = n as usize - 1;
    let beta = 2.0 * (1.0 - mu);
    let inv_sqrt: Vec<f64> = graph.degrees().iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    let mut w = Vec::with_capacity(base + path_len * graph.edge_count());
    w.extend_from_slice(v);
    for &(i, j) in graph.edges() {
        let xi = v[i] * inv_sqrt[i];
        let xj = v[j] * inv_sqrt[j];
        let first = (a_n2 * xi + xj) / a_n1;
        w.push(first);
        let mut prev2 = xi;
        let mut prev1 = first;
        for _ in 1..path_len {
            let next = beta * prev1 - prev2;
            w.push(next);
            prev2 = prev1;
            prev1 = next;
        }
    }
    Ok(w)
}

/// `‖L w - μ w‖ / ‖w‖` on an explicitly built graph.
pub fn eigen_residual(graph: &Graph, mu: f64, w: &[f64]) -> f64 {
    let lw = graph.normalized_laplacian_apply(w);
    let num = lw
        .iter()
        .zip(w)
        .map(|(a, b)| (a - mu * b).powi(2))
        .sum::<f64>()
        .sqrt();
    let den = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{polygon_transform, Graph};

    fn k(m: usize) -> Graph {
        Graph::from_edges((0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)))).unwrap()
    }

    fn expanded(s: &Spectrum) -> Vec<f64> {
        s.expanded(1 << 20).unwrap()
    }

    #[test]
    fn base_spectra() {
        let (s, ctx) = base_spectrum(&k(2)).unwrap();
        assert_eq!(expanded(&s), vec![0.0, 2.0]);
        assert!(ctx.bipartite);

        let (s, _) = base_spectrum(&k(3)).unwrap();
        assert_eq!(s.len(), 2);
        assert!((s.entries()[1].value - 1.5).abs() < 1e-12);
        assert_eq!(s.entries()[1].multiplicity, 2u32.into());

        let c4 = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (s, ctx) = base_spectrum(&c4).unwrap();
        let e = expanded(&s);
        for (got, want) in e.iter().zip([0.0, 1.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        s.validate(&ctx).unwrap();
    }

    #[test]
    fn edge_to_triangle() {
        let (s, ctx) = base_spectrum(&k(2)).unwrap();
        let (t, tctx) = transform_spectrum(&s, &ctx, 2).unwrap();
        assert_eq!(tctx, SpectrumContext::new(3u32.into(), 3u32.into(), false).unwrap());
        let e = expanded(&t);
        assert_eq!(e.len(), 3);
        assert_eq!(e[0], 0.0);
        assert!((e[1] - 1.5).abs() < 1e-14 && (e[2] - 1.5).abs() < 1e-14);
        t.validate(&tctx).unwrap();
    }

    #[test]
    fn triangle_to_six_vertices() {
        let (s, ctx) = base_spectrum(&k(3)).unwrap();
        let (t, tctx) = transform_spectrum(&s, &ctx, 2).unwrap();
        assert_eq!(tctx.vertices, 6u32.into());
        let e = expanded(&t);
        let want = [0.0, 0.75, 0.75, 1.5, 1.5, 1.5];
        for (got, want) in e.iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((t.trace() - 6.0).abs() < 1e-12);
        let oracle = oracle::eig_sym(&oracle::normalized_laplacian(&polygon_transform(&k(3), 2).unwrap())).unwrap();
        assert!(oracle::compare_spectra(&e, &oracle, 1e-8).matched);
    }

    #[test]
    fn iterate_zero_is_identity() {
        let (s, ctx) = base_spectrum(&k(3)).unwrap();
        let (t, tctx) = iterate_spectrum(&s, &ctx, 2, 0).unwrap();
        assert_eq!((t, tctx), (s, ctx));
    }

    #[test]
    fn rejects_inconsistent_input() {
        let (s, _) = base_spectrum(&k(3)).unwrap();
        // claims bipartite-free with E < N
        let ctx = SpectrumContext {
            vertices: 3u32.into(),
            edges: 2u32.into(),
            bipartite: false,
        };
        assert!(matches!(
            transform_spectrum(&s, &ctx, 3),
            Err(Error::InconsistentSpectrum(_))
        ));
        let wrong_total = SpectrumContext::new(4u32.into(), 4u32.into(), false).unwrap();
        assert!(transform_spectrum(&s, &wrong_total, 3).is_err());
        let no_zero = Spectrum::new(vec![SpectrumEntry {
            value: 1.5,
            multiplicity: 3u32.into(),
            source: Source::Base,
        }]);
        let ctx = SpectrumContext::of_graph(&k(3));
        assert!(transform_spectrum(&no_zero, &ctx, 2).is_err());
    }

    #[test]
    fn merging_keeps_dominant_source() {
        let s = Spectrum::new(vec![
            SpectrumEntry { value: 1.0, multiplicity: 1u32.into(), source: Source::Lifted(0.5) },
            SpectrumEntry { value: 1.0 + 1e-12, multiplicity: 4u32.into(), source: Source::FamilyMinus },
            SpectrumEntry { value: 1.5, multiplicity: 2u32.into(), source: Source::FamilyPlus },
        ]);
        let m = s.merged(MERGE_TOL);
        assert_eq!(m.len(), 2);
        assert_eq!(m.entries()[0].multiplicity, 5u32.into());
        assert_eq!(m.entries()[0].source, Source::FamilyMinus);
    }

    #[test]
    fn clustering_snaps_and_groups() {
        let s = cluster_eigenvalues(&[2.0 - 1e-12, -1e-13, 0.5, 0.5 + 1e-9, 1.2]);
        let vals: Vec<f64> = s.entries().iter().map(|e| e.value).collect();
        assert_eq!(vals[0], 0.0);
        assert_eq!(*vals.last().unwrap(), 2.0);
        assert_eq!(s.entries()[1].multiplicity, 2u32.into());
    }

    #[test]
    fn validation_catches_broken_symmetry() {
        let ctx = SpectrumContext::new(3u32.into(), 2u32.into(), true).unwrap();
        let s = Spectrum::new(vec![
            SpectrumEntry { value: 0.0, multiplicity: 1u32.into(), source: Source::Zero },
            SpectrumEntry { value: 0.9, multiplicity: 1u32.into(), source: Source::Base },
            SpectrumEntry { value: 2.0, multiplicity: 1u32.into(), source: Source::Two },
        ]);
        assert!(s.validate(&ctx).is_err());
    }

    #[test]
    fn lift_on_triangle() {
        let g = k(3);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [s, -s, 0.0];
        let w = lift_eigenvector(&g, 2, 1.5, &v, 0.75).unwrap();
        let t = polygon_transform(&g, 2).unwrap();
        assert_eq!(w.len(), 6);
        assert!(eigen_residual(&t, 0.75, &w) <= 1e-10);

        let w2 = lift_eigenvector(&g, 2, 1.5, &[3.0 * s, -3.0 * s, 0.0], 0.75).unwrap();
        for (a, b) in w.iter().zip(&w2) {
            assert!((3.0 * a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn lift_rejects_special_roots() {
        // a_1(1) = 0, so μ = 1 cannot be lifted for n = 2
        let g = k(3);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(matches!(
            lift_eigenvector(&g, 2, 1.5, &[s, -s, 0.0], 1.0),
            Err(Error::DegenerateLift { .. })
        ));
        assert!(lift_eigenvector(&g, 2, 1.5, &[1.0, 1.0, 1.0], 0.75).is_err());
        assert!(lift_eigenvector(&g, 2, 1.5, &[s, -s, 0.0], 0.7).is_err());
    }
}
