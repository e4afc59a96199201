use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::poly::{ModulePolynomial, SkewModule, SkewPolynomial};
use crate::quasi::QuasiDerivation;
use crate::ring::FiniteRing;
use crate::Elem;

use super::report::{ElemRef, PolyRef};

/// A ring with a quasi-derivation and a right module over it.
#[derive(Debug, Clone)]
pub struct Instance {
    name: String,
    qd: Arc<QuasiDerivation>,
    sm: SkewModule,
}

impl Instance {
    pub fn new(name: impl Into<String>, qd: Arc<QuasiDerivation>, module: Arc<FiniteModule>) -> Result<Self> {
        if !module.ring().same_as(qd.ring()) {
            return Err(Error::RingMismatch);
        }
        let sm = SkewModule::new(module, qd.clone())?;
        Ok(Instance { name: name.into(), qd, sm })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.qd.ring()
    }

    pub fn qd(&self) -> &Arc<QuasiDerivation> {
        &self.qd
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        self.sm.module()
    }

    pub fn skew(&self) -> &SkewModule {
        &self.sm
    }

    /// The same ring and module with `(σ, δ) = (id, 0)`.
    pub fn with_identity(&self) -> Instance {
        let qd = Arc::new(QuasiDerivation::identity(self.ring()));
        Instance::new(self.name.clone(), qd, self.module().clone())
            .expect("same ring and module")
    }

    /// The same ring and module with `(σ, 0)`.
    pub fn with_sigma_only(&self) -> Instance {
        let qd = Arc::new(QuasiDerivation::sigma_only(self.qd.sigma().clone()));
        Instance::new(self.name.clone(), qd, self.module().clone())
            .expect("same ring and module")
    }

    pub fn renamed(&self, name: impl Into<String>) -> Instance {
        Instance { name: name.into(), ..self.clone() }
    }

    #[inline]
    pub fn sigma(&self, a: Elem) -> Elem {
        self.qd.sigma().apply(a)
    }

    #[inline]
    pub fn delta(&self, a: Elem) -> Elem {
        self.qd.delta().apply(a)
    }

    #[inline]
    pub fn act(&self, m: Elem, a: Elem) -> Elem {
        self.module().act(m, a)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.ring().mul(a, b)
    }

    pub fn m_ref(&self, m: Elem) -> ElemRef {
        ElemRef { index: m, label: self.module().label(m).to_string() }
    }

    pub fn r_ref(&self, a: Elem) -> ElemRef {
        ElemRef { index: a, label: self.ring().label(a).to_string() }
    }

    pub fn mpoly_ref(&self, m: &ModulePolynomial) -> PolyRef {
        PolyRef {
            coeffs: m.coeffs().to_vec(),
            labels: self.sm.labels(m),
            text: self.sm.render(m),
        }
    }

    pub fn rpoly_ref(&self, f: &SkewPolynomial) -> PolyRef {
        PolyRef {
            coeffs: f.coeffs().to_vec(),
            labels: self.sm.ext().labels(f),
            text: self.sm.ext().render(f),
        }
    }
}
