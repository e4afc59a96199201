//! JSON descriptions of instances and their construction.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use skewlab_core::lab::Instance;
use skewlab_core::module::{
    build_sn_module_over, build_vn_module_over, build_vn_sigma_module_over, poly_quotient_module_over,
};
use skewlab_core::{
    ideal_from_generators, inner_sigma_derivation, lift_entrywise, product_module, quotient_module,
    regular_module, submodule, validate_endomorphism, validate_module, validate_sigma_derivation, Construction,
    Elem, FiniteModule, FiniteRing, Limits, QuasiDerivation, RingEndomorphism, Side, SigmaDerivation,
};

/// An input problem located at a path inside the descriptor (or file).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    pub fn new(path: impl Into<String>, message: impl std::fmt::Display) -> Self {
        InputError { path: path.into(), message: message.to_string() }
    }
}

type Result<T> = std::result::Result<T, InputError>;

/// An element given by index or by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Index(Elem),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDesc {
    Zmod { n: usize },
    Product { args: Vec<RingDesc> },
    Sn { base: Box<RingDesc>, n: usize },
    Vn { base: Box<RingDesc>, n: usize },
    VnSigma { base: Box<RingDesc>, sigma: SigmaDesc, n: usize },
    PolyQuotient { base: Box<RingDesc>, sigma: SigmaDesc, n: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SigmaDesc {
    #[default]
    Identity,
    /// `(a, b) ↦ (b, a)` on a product of two equal rings.
    Swap,
    /// Keeps the constant coordinate of a truncated-polynomial or matrix
    /// ring and zeroes the rest.
    EvalAtZero,
    /// The base ring's endomorphism applied to every matrix entry.
    Entrywise { inner: Box<SigmaDesc> },
    Table { images: Vec<ElemSpec> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DeltaDesc {
    #[default]
    Zero,
    /// `δ(a) = c·a − σ(a)·c`.
    Inner { c: ElemSpec },
    Table { images: Vec<ElemSpec> },
    /// Requires an entrywise σ; the base pair is lifted together.
    Entrywise { inner: Box<DeltaDesc> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleDesc {
    #[default]
    Regular,
    Quotient {
        ideal_gens: Vec<ElemSpec>,
        #[serde(default = "right_side")]
        side: Side,
    },
    Product { args: Vec<ModuleDesc> },
    Submodule {
        gens: Vec<ElemSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        parent: Option<Box<ModuleDesc>>,
    },
    /// `S_n(M)` over the ring `S_n(R)`; `M` defaults to `R_R`.
    Sn {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<ModuleDesc>>,
    },
    Vn {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<ModuleDesc>>,
    },
    VnSigma {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<ModuleDesc>>,
    },
    PolyQuotient {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<Box<ModuleDesc>>,
    },
}

fn right_side() -> Side {
    Side::Right
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDescriptor {
    pub name: String,
    pub ring: RingDesc,
    #[serde(default)]
    pub sigma: SigmaDesc,
    #[serde(default)]
    pub delta: DeltaDesc,
    #[serde(default)]
    pub module: ModuleDesc,
}

/// A list of descriptors, either bare or under `instances`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CorpusFile {
    List(Vec<serde_json::Value>),
    Wrapped { instances: Vec<serde_json::Value> },
}

fn json_error(origin: &str, e: serde_json::Error) -> InputError {
    InputError::new(origin, format!("malformed JSON at line {} column {}: {e}", e.line(), e.column()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| InputError::new(path.display().to_string(), e))
}

impl InstanceDescriptor {
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(origin, e))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_json(&read(path)?, &path.display().to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptors serialize")
    }

    /// Builds and validates the instance.
    pub fn build(&self) -> Result<Instance> {
        let limits = Limits::default();
        let ring = build_ring(&self.ring, "ring", &limits)?;
        let qd = build_qd(&ring, &self.sigma, &self.delta, "sigma", "delta")?;
        let module = build_module(&self.module, &ring, "module", &limits)?;
        let report = validate_module(&module, &limits);
        if let Some(f) = report.failure {
            return Err(InputError::new("module", format!("{} fails at {:?}", f.axiom, f.elements)));
        }
        Instance::new(self.name.clone(), Arc::new(qd), module).map_err(|e| InputError::new("module", e))
    }
}

/// Parses a corpus file; each entry is parsed separately so one bad entry
/// does not hide the others.
pub fn parse_corpus(text: &str, origin: &str) -> Result<Vec<Result<InstanceDescriptor>>> {
    let file: CorpusFile = serde_json::from_str(text).map_err(|e| json_error(origin, e))?;
    let entries = match file {
        CorpusFile::List(v) | CorpusFile::Wrapped { instances: v } => v,
    };
    Ok(entries
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            serde_json::from_value(v).map_err(|e| InputError::new(format!("{origin}: instances[{i}]"), e))
        })
        .collect())
}

pub fn read_corpus(path: &Path) -> Result<Vec<Result<InstanceDescriptor>>> {
    parse_corpus(&read(path)?, &path.display().to_string())
}

fn resolve_ring_elem(ring: &FiniteRing, spec: &ElemSpec, path: &str) -> Result<Elem> {
    match spec {
        ElemSpec::Index(i) if (*i as usize) < ring.size() => Ok(*i),
        ElemSpec::Index(i) => Err(InputError::new(path, format!("element {i} out of range for a ring of size {}", ring.size()))),
        ElemSpec::Label(l) => ring.find_label(l).ok_or_else(|| InputError::new(path, format!("unknown ring element {l:?}"))),
    }
}

fn resolve_module_elem(module: &FiniteModule, spec: &ElemSpec, path: &str) -> Result<Elem> {
    match spec {
        ElemSpec::Index(i) if (*i as usize) < module.size() => Ok(*i),
        ElemSpec::Index(i) => Err(InputError::new(path, format!("element {i} out of range for a module of size {}", module.size()))),
        ElemSpec::Label(l) => module.find_label(l).ok_or_else(|| InputError::new(path, format!("unknown module element {l:?}"))),
    }
}

fn build_ring(desc: &RingDesc, path: &str, limits: &Limits) -> Result<Arc<FiniteRing>> {
    let at = |e: skewlab_core::Error| InputError::new(path, e);
    match desc {
        RingDesc::Zmod { n } => limits.build_zmod(*n).map_err(at),
        RingDesc::Product { args } => {
            let factors = args
                .iter()
                .enumerate()
                .map(|(i, a)| build_ring(a, &format!("{path}.args[{i}]"), limits))
                .collect::<Result<Vec<_>>>()?;
            limits.build_product(&factors).map_err(at)
        }
        RingDesc::Sn { base, n } => limits.build_sn(&build_ring(base, &format!("{path}.base"), limits)?, *n).map_err(at),
        RingDesc::Vn { base, n } => limits.build_vn(&build_ring(base, &format!("{path}.base"), limits)?, *n).map_err(at),
        RingDesc::VnSigma { base, sigma, n } | RingDesc::PolyQuotient { base, sigma, n } => {
            let b = build_ring(base, &format!("{path}.base"), limits)?;
            let s = build_sigma(&b, sigma, &format!("{path}.sigma"))?;
            if matches!(desc, RingDesc::VnSigma { .. }) {
                limits.build_vn_sigma(&b, &s, *n).map_err(at)
            } else {
                limits.build_poly_quotient(&b, &s, *n).map_err(at)
            }
        }
    }
}

fn matrix_base<'a>(ring: &'a Arc<FiniteRing>, path: &str) -> Result<&'a Arc<FiniteRing>> {
    match ring.construction() {
        Construction::Sn { base, .. } | Construction::Vn { base, .. } | Construction::VnSigma { base, .. } => Ok(base),
        other => Err(InputError::new(path, format!("entrywise maps need a matrix ring, got {}", other.describe()))),
    }
}

fn build_sigma(ring: &Arc<FiniteRing>, desc: &SigmaDesc, path: &str) -> Result<RingEndomorphism> {
    let at = |e: skewlab_core::Error| InputError::new(path, e);
    let images: Vec<Elem> = match desc {
        SigmaDesc::Identity => return Ok(RingEndomorphism::identity(ring)),
        SigmaDesc::Swap => match ring.construction() {
            Construction::Product { factors } if factors.len() == 2 && factors[0].same_as(&factors[1]) => ring
                .elements()
                .map(|a| {
                    let d = ring.decode(a);
                    ring.encode(&[d[1], d[0]])
                })
                .collect(),
            _ => return Err(InputError::new(path, "swap needs a product of two equal rings")),
        },
        SigmaDesc::EvalAtZero => {
            if ring.tuple_radix().is_none() || matches!(ring.construction(), Construction::Product { .. }) {
                return Err(InputError::new(path, "eval_at_zero needs a truncated polynomial or matrix ring"));
            }
            ring.elements()
                .map(|a| {
                    let mut d = ring.decode(a);
                    d[1..].iter_mut().for_each(|c| *c = 0);
                    ring.encode(&d)
                })
                .collect()
        }
        SigmaDesc::Entrywise { inner } => {
            let base = matrix_base(ring, path)?;
            let s = build_sigma(base, inner, &format!("{path}.inner"))?;
            let qd = lift_entrywise(&QuasiDerivation::sigma_only(s), ring).map_err(at)?;
            return Ok(qd.sigma().clone());
        }
        SigmaDesc::Table { images } => images
            .iter()
            .enumerate()
            .map(|(i, e)| resolve_ring_elem(ring, e, &format!("{path}.images[{i}]")))
            .collect::<Result<_>>()?,
    };
    validate_endomorphism(ring, &images).map_err(at)
}

fn build_qd(ring: &Arc<FiniteRing>, sigma: &SigmaDesc, delta: &DeltaDesc, spath: &str, dpath: &str) -> Result<QuasiDerivation> {
    if let DeltaDesc::Entrywise { inner } = delta {
        let SigmaDesc::Entrywise { inner: sigma_inner } = sigma else {
            return Err(InputError::new(dpath, "an entrywise delta needs an entrywise sigma"));
        };
        let base = matrix_base(ring, dpath)?;
        let base_qd = build_qd(base, sigma_inner, inner, &format!("{spath}.inner"), &format!("{dpath}.inner"))?;
        return lift_entrywise(&base_qd, ring).map_err(|e| InputError::new(dpath, e));
    }
    let s = build_sigma(ring, sigma, spath)?;
    let at = |e: skewlab_core::Error| InputError::new(dpath, e);
    let d = match delta {
        DeltaDesc::Zero => SigmaDerivation::zero(&s),
        DeltaDesc::Inner { c } => {
            let c = resolve_ring_elem(ring, c, &format!("{dpath}.c"))?;
            inner_sigma_derivation(&s, c).map_err(at)?
        }
        DeltaDesc::Table { images } => {
            let images: Vec<Elem> = images
                .iter()
                .enumerate()
                .map(|(i, e)| resolve_ring_elem(ring, e, &format!("{dpath}.images[{i}]")))
                .collect::<Result<_>>()?;
            validate_sigma_derivation(ring, &s, &images).map_err(at)?
        }
        DeltaDesc::Entrywise { .. } => unreachable!("handled above"),
    };
    QuasiDerivation::new(s, d).map_err(at)
}

fn build_module(desc: &ModuleDesc, ring: &Arc<FiniteRing>, path: &str, limits: &Limits) -> Result<Arc<FiniteModule>> {
    let at = |e: skewlab_core::Error| InputError::new(path, e);
    match desc {
        ModuleDesc::Regular => Ok(regular_module(ring)),
        ModuleDesc::Quotient { ideal_gens, side } => {
            let gens = ideal_gens
                .iter()
                .enumerate()
                .map(|(i, g)| resolve_ring_elem(ring, g, &format!("{path}.ideal_gens[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let ideal = ideal_from_generators(ring, &gens, *side).map_err(at)?;
            quotient_module(&ideal).map_err(at)
        }
        ModuleDesc::Product { args } => {
            let Construction::Product { factors } = ring.construction() else {
                return Err(InputError::new(path, "a product module needs a product ring"));
            };
            if factors.len() != args.len() {
                return Err(InputError::new(path, format!("{} parts for {} ring factors", args.len(), factors.len())));
            }
            let parts = args
                .iter()
                .zip(factors)
                .enumerate()
                .map(|(i, (a, f))| build_module(a, f, &format!("{path}.args[{i}]"), limits))
                .collect::<Result<Vec<_>>>()?;
            product_module(&parts, ring).map_err(at)
        }
        ModuleDesc::Submodule { gens, parent } => {
            let parent = build_module(parent.as_deref().unwrap_or(&ModuleDesc::Regular), ring, &format!("{path}.parent"), limits)?;
            let gens = gens
                .iter()
                .enumerate()
                .map(|(i, g)| resolve_module_elem(&parent, g, &format!("{path}.gens[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            submodule(&parent, &gens).map_err(at)
        }
        ModuleDesc::Sn { n, base }
        | ModuleDesc::Vn { n, base }
        | ModuleDesc::VnSigma { n, base }
        | ModuleDesc::PolyQuotient { n, base } => {
            let (ring_base, ring_n) = match (desc, ring.construction()) {
                (ModuleDesc::Sn { .. }, Construction::Sn { base, n }) => (base, *n),
                (ModuleDesc::Vn { .. }, Construction::Vn { base, n }) => (base, *n),
                (ModuleDesc::VnSigma { .. }, Construction::VnSigma { base, n, .. }) => (base, *n),
                (ModuleDesc::PolyQuotient { .. }, Construction::PolyQuotient { base, n, .. }) => (base, *n),
                (_, other) => {
                    return Err(InputError::new(path, format!("module kind does not match the ring {}", other.describe())))
                }
            };
            if let Some(n) = n.filter(|&n| n != ring_n) {
                return Err(InputError::new(path, format!("n = {n} but the ring has n = {ring_n}")));
            }
            let base_module = build_module(base.as_deref().unwrap_or(&ModuleDesc::Regular), ring_base, &format!("{path}.base"), limits)?;
            let built = match desc {
                ModuleDesc::Sn { .. } => build_sn_module_over(&base_module, ring, limits),
                ModuleDesc::Vn { .. } => build_vn_module_over(&base_module, ring, limits),
                ModuleDesc::VnSigma { .. } => build_vn_sigma_module_over(&base_module, ring, limits),
                _ => poly_quotient_module_over(&base_module, ring, limits),
            };
            built.map_err(at)
        }
    }
}
