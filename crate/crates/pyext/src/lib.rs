//! Python bindings: thin wrappers over the `holoent` core types and
//! operations. All errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use holoent::geometry;
use holoent::mera;
use holoent::observables;
use holoent::theta;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sector_from(nu: u8) -> PyResult<theta::Sector> {
    theta::Sector::try_from(nu).map_err(value_err)
}

#[pyclass(name = "BulkGeometry", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBulkGeometry {
    inner: geometry::BulkGeometry,
}

impl PyBulkGeometry {
    fn configured(
        base: geometry::BulkGeometry,
        ads_radius: f64,
        uv_cutoff: f64,
        newton_constant: Option<f64>,
        central_charge: Option<f64>,
    ) -> PyResult<Self> {
        let mut g = base
            .with_ads_radius(ads_radius)
            .and_then(|g| g.with_uv_cutoff(uv_cutoff))
            .map_err(value_err)?;
        if let Some(gn) = newton_constant {
            g = g.with_newton_constant(gn).map_err(value_err)?;
        }
        if let Some(c) = central_charge {
            g = g.with_central_charge(c).map_err(value_err)?;
        }
        Ok(PyBulkGeometry { inner: g })
    }
}

#[pymethods]
impl PyBulkGeometry {
    #[staticmethod]
    #[pyo3(signature = (ads_radius=1.0, uv_cutoff=1e-3, newton_constant=None, central_charge=None))]
    fn pure_ads(
        ads_radius: f64,
        uv_cutoff: f64,
        newton_constant: Option<f64>,
        central_charge: Option<f64>,
    ) -> PyResult<Self> {
        Self::configured(
            geometry::BulkGeometry::pure_ads(),
            ads_radius,
            uv_cutoff,
            newton_constant,
            central_charge,
        )
    }

    #[staticmethod]
    #[pyo3(signature = (r_plus, ads_radius=1.0, uv_cutoff=1e-3, newton_constant=None, central_charge=None))]
    fn non_rotating(
        r_plus: f64,
        ads_radius: f64,
        uv_cutoff: f64,
        newton_constant: Option<f64>,
        central_charge: Option<f64>,
    ) -> PyResult<Self> {
        Self::configured(
            geometry::BulkGeometry::non_rotating(r_plus).map_err(value_err)?,
            ads_radius,
            uv_cutoff,
            newton_constant,
            central_charge,
        )
    }

    #[staticmethod]
    #[pyo3(signature = (r_plus, r_minus, ads_radius=1.0, uv_cutoff=1e-3, newton_constant=None, central_charge=None))]
    fn rotating(
        r_plus: f64,
        r_minus: f64,
        ads_radius: f64,
        uv_cutoff: f64,
        newton_constant: Option<f64>,
        central_charge: Option<f64>,
    ) -> PyResult<Self> {
        Self::configured(
            geometry::BulkGeometry::rotating(r_plus, r_minus).map_err(value_err)?,
            ads_radius,
            uv_cutoff,
            newton_constant,
            central_charge,
        )
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.kind() {
            geometry::GeometryKind::PureAds => "pure-ads",
            geometry::GeometryKind::NonRotatingBtz => "btz",
            geometry::GeometryKind::RotatingBtz => "btz-rot",
        }
    }

    #[getter]
    fn r_plus(&self) -> f64 {
        self.inner.r_plus()
    }

    #[getter]
    fn r_minus(&self) -> f64 {
        self.inner.r_minus()
    }

    #[getter]
    fn ads_radius(&self) -> f64 {
        self.inner.ads_radius()
    }

    #[getter]
    fn uv_cutoff(&self) -> f64 {
        self.inner.uv_cutoff()
    }

    #[getter]
    fn newton_constant(&self) -> f64 {
        self.inner.newton_constant()
    }

    fn central_charge(&self) -> f64 {
        self.inner.central_charge()
    }

    fn thermal_scales(&self) -> PyThermalScales {
        let s = self.inner.thermal_scales();
        PyThermalScales {
            beta: s.beta,
            beta_left: s.beta_left,
            beta_right: s.beta_right,
            z_plus: s.z_plus,
            z_left: s.z_left,
            z_right: s.z_right,
        }
    }

    fn virasoro_charges(&self) -> (f64, f64) {
        self.inner.virasoro_charges()
    }

    fn geodesic_length(&self, x_i: f64, x_j: f64) -> PyResult<f64> {
        self.inner.geodesic_length(x_i, x_j).map_err(value_err)
    }

    fn interval_entropy(&self, a: f64, b: f64) -> PyResult<f64> {
        observables::interval_entropy(&self.inner, a, b).map_err(value_err)
    }

    fn mutual_information(&self, pair: &PyIntervalPair) -> PyResult<PyMiResult> {
        let mi = observables::mutual_information(&self.inner, &pair.inner).map_err(value_err)?;
        Ok(PyMiResult {
            inner: mi,
            newton_constant: self.inner.newton_constant(),
        })
    }

    fn two_point_correlator(&self, delta: f64, x_a: f64, x_b: f64) -> PyResult<f64> {
        observables::two_point_correlator(&self.inner, delta, x_a, x_b).map_err(value_err)
    }

    fn two_point_correlator_log(&self, delta: f64, x_a: f64, x_b: f64) -> PyResult<f64> {
        observables::two_point_correlator_log(&self.inner, delta, x_a, x_b).map_err(value_err)
    }

    fn crossover_separation(&self) -> PyResult<f64> {
        observables::crossover_separation(&self.inner).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "BulkGeometry(kind='{}', r_plus={}, r_minus={}, ads_radius={}, uv_cutoff={}, newton_constant={})",
            self.kind(),
            self.inner.r_plus(),
            self.inner.r_minus(),
            self.inner.ads_radius(),
            self.inner.uv_cutoff(),
            self.inner.newton_constant(),
        )
    }
}

#[pyclass(name = "ThermalScales", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyThermalScales {
    beta: f64,
    beta_left: f64,
    beta_right: f64,
    z_plus: f64,
    z_left: f64,
    z_right: f64,
}

#[pymethods]
impl PyThermalScales {
    fn __repr__(&self) -> String {
        format!(
            "ThermalScales(beta={}, beta_left={}, beta_right={}, z_plus={}, z_left={}, z_right={})",
            self.beta, self.beta_left, self.beta_right, self.z_plus, self.z_left, self.z_right
        )
    }
}

#[pyclass(name = "IntervalPair", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyIntervalPair {
    inner: observables::IntervalPair,
}

#[pymethods]
impl PyIntervalPair {
    #[new]
    fn new(u1: f64, v1: f64, u2: f64, v2: f64) -> PyResult<Self> {
        Ok(PyIntervalPair {
            inner: observables::IntervalPair::new(u1, v1, u2, v2).map_err(value_err)?,
        })
    }

    #[getter]
    fn endpoints(&self) -> (f64, f64, f64, f64) {
        self.inner.endpoints()
    }

    #[getter]
    fn size(&self) -> f64 {
        self.inner.size()
    }

    #[getter]
    fn separation(&self) -> f64 {
        self.inner.separation()
    }

    #[getter]
    fn cross_ratio(&self) -> f64 {
        self.inner.cross_ratio()
    }

    fn translated(&self, shift: f64) -> PyResult<Self> {
        Ok(PyIntervalPair {
            inner: self.inner.translated(shift).map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        let (u1, v1, u2, v2) = self.inner.endpoints();
        format!("IntervalPair({u1}, {v1}, {u2}, {v2})")
    }
}

#[pyclass(name = "MiResult", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMiResult {
    inner: observables::MiResult,
    newton_constant: f64,
}

#[pymethods]
impl PyMiResult {
    #[getter]
    fn value(&self) -> f64 {
        self.inner.value
    }

    #[getter]
    fn phase(&self) -> &'static str {
        match self.inner.phase {
            observables::MiPhase::Connected => "connected",
            observables::MiPhase::Disconnected => "disconnected",
        }
    }

    #[getter]
    fn length_connected(&self) -> f64 {
        self.inner.length_connected
    }

    #[getter]
    fn length_disconnected(&self) -> f64 {
        self.inner.length_disconnected
    }

    /// Unclamped (L_dis - L_con)/4G for the geometry that produced this result.
    #[getter]
    fn unclamped(&self) -> f64 {
        self.inner.unclamped(self.newton_constant)
    }

    fn __repr__(&self) -> String {
        format!(
            "MiResult(value={}, phase='{}')",
            self.inner.value,
            self.phase()
        )
    }
}

#[pyclass(name = "MeraNetwork", frozen)]
struct PyMeraNetwork {
    inner: mera::MeraNetwork,
}

fn site_interval(pair: (usize, usize)) -> PyResult<mera::SiteInterval> {
    mera::SiteInterval::new(pair.0, pair.1).map_err(value_err)
}

#[pymethods]
impl PyMeraNetwork {
    #[new]
    #[pyo3(signature = (n_sites, branch, bond_entropy=1.0))]
    fn new(n_sites: usize, branch: usize, bond_entropy: f64) -> PyResult<Self> {
        Ok(PyMeraNetwork {
            inner: mera::MeraNetwork::new(n_sites, branch)
                .and_then(|n| n.with_bond_entropy(bond_entropy))
                .map_err(value_err)?,
        })
    }

    #[getter]
    fn n_sites(&self) -> usize {
        self.inner.n_sites()
    }

    #[getter]
    fn branch(&self) -> usize {
        self.inner.branch()
    }

    #[getter]
    fn depth(&self) -> u32 {
        self.inner.depth()
    }

    /// Per-level cone intervals [(lo, hi); depth + 1] of a block.
    fn causal_cone(&self, lo: usize, hi: usize) -> PyResult<Vec<(usize, usize)>> {
        let cone = self
            .inner
            .causal_cone(site_interval((lo, hi))?)
            .map_err(value_err)?;
        Ok(cone.per_level.iter().map(|iv| (iv.lo(), iv.hi())).collect())
    }

    /// Smallest level at which two blocks' cones intersect, or None for the
    /// trivial top-of-pyramid merge.
    fn cone_overlap_level(
        &self,
        block_a: (usize, usize),
        block_b: (usize, usize),
    ) -> PyResult<Option<u32>> {
        self.inner
            .cone_overlap_level(site_interval(block_a)?, site_interval(block_b)?)
            .map_err(value_err)
    }

    /// Minimal cut of one or two blocks.
    fn minimal_cut(&self, blocks: Vec<(usize, usize)>) -> PyResult<PyCutResult> {
        let blocks: Vec<mera::SiteInterval> = blocks
            .into_iter()
            .map(site_interval)
            .collect::<PyResult<_>>()?;
        Ok(PyCutResult {
            inner: self.inner.minimal_cut(&blocks).map_err(value_err)?,
        })
    }

    fn connected_cut(
        &self,
        block_a: (usize, usize),
        block_b: (usize, usize),
    ) -> PyResult<PyCutResult> {
        Ok(PyCutResult {
            inner: self
                .inner
                .connected_cut(site_interval(block_a)?, site_interval(block_b)?)
                .map_err(value_err)?,
        })
    }

    fn disconnected_cut(
        &self,
        block_a: (usize, usize),
        block_b: (usize, usize),
    ) -> PyResult<PyCutResult> {
        Ok(PyCutResult {
            inner: self
                .inner
                .disconnected_cut(site_interval(block_a)?, site_interval(block_b)?)
                .map_err(value_err)?,
        })
    }
}

#[pyclass(name = "CutResult", frozen)]
struct PyCutResult {
    inner: mera::CutResult,
}

#[pymethods]
impl PyCutResult {
    #[getter]
    fn bond_count(&self) -> usize {
        self.inner.bond_count
    }

    #[getter]
    fn length(&self) -> f64 {
        self.inner.length
    }

    #[getter]
    fn per_level_bonds(&self) -> Vec<usize> {
        self.inner.per_level_bonds.clone()
    }

    #[getter]
    fn routing(&self) -> Option<&'static str> {
        self.inner.routing.map(|r| match r {
            mera::Regime::Connected => "connected",
            mera::Regime::Disconnected => "disconnected",
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "CutResult(bond_count={}, length={})",
            self.inner.bond_count, self.inner.length
        )
    }
}

#[pyfunction]
#[pyo3(signature = (mass, spin, ads_radius=1.0))]
fn btz_from_mass_spin(mass: f64, spin: f64, ads_radius: f64) -> PyResult<(f64, f64)> {
    geometry::btz_from_mass_spin(mass, spin, ads_radius).map_err(value_err)
}

/// theta_nu(i*y | i*tau_im); for nu = 1 the real cofactor with the overall
/// factor i removed.
#[pyfunction]
#[pyo3(signature = (sector, tau_im, y, tol=theta::DEFAULT_TOL))]
fn theta_imag(sector: u8, tau_im: f64, y: f64, tol: f64) -> PyResult<f64> {
    let ctx = theta::ThetaContext::new(sector_from(sector)?, tau_im)
        .and_then(|c| c.with_tol(tol))
        .map_err(value_err)?;
    theta::theta(&ctx, y).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (tau_im, tol=theta::DEFAULT_TOL))]
fn theta1_prime_at_zero(tau_im: f64, tol: f64) -> PyResult<f64> {
    let ctx = theta::ThetaContext::new(theta::Sector::One, tau_im)
        .and_then(|c| c.with_tol(tol))
        .map_err(value_err)?;
    theta::theta1_prime_at_zero(&ctx).map_err(value_err)
}

#[pyfunction]
fn fermion_correlator_torus(
    u: f64,
    v: f64,
    temperature: f64,
    length: f64,
    sector: u8,
) -> PyResult<f64> {
    theta::fermion_correlator_torus(u, v, temperature, length, sector_from(sector)?)
        .map_err(value_err)
}

#[pyfunction]
fn upsilon(u: f64, v: f64, temperature: f64, length: f64) -> PyResult<f64> {
    theta::upsilon(u, v, temperature, length).map_err(value_err)
}

#[pyfunction]
fn mi_pure_ads(x: f64, c: f64) -> PyResult<f64> {
    observables::mi_pure_ads(x, c).map_err(value_err)
}

#[pyfunction]
fn mi_torus(
    pair: &PyIntervalPair,
    temperature: f64,
    length: f64,
    sector: u8,
    c: f64,
) -> PyResult<f64> {
    observables::mi_torus(&pair.inner, temperature, length, sector_from(sector)?, c)
        .map_err(value_err)
}

#[pyfunction]
fn mi_torus_rotating(
    pair: &PyIntervalPair,
    t_left: f64,
    length: f64,
    sector: u8,
    c: f64,
) -> PyResult<f64> {
    observables::mi_torus_rotating(&pair.inner, t_left, length, sector_from(sector)?, c)
        .map_err(value_err)
}

/// model: "non-rotating" or "rotating".
#[pyfunction]
fn transition_point(
    model: &str,
    tau_abs: f64,
    sector: u8,
    c: f64,
    l_over_l: f64,
) -> PyResult<f64> {
    let model = match model {
        "non-rotating" => observables::TransitionModel::NonRotatingTorus,
        "rotating" => observables::TransitionModel::RotatingTorus,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown model '{other}' (expected 'non-rotating' or 'rotating')"
            )))
        }
    };
    observables::transition_point(model, tau_abs, sector_from(sector)?, c, l_over_l)
        .map_err(value_err)
}

#[pyfunction]
fn wolf_bound_report(
    mi_value: f64,
    connected_correlator: f64,
    op_a_norm: f64,
    op_b_norm: f64,
) -> PyResult<(f64, f64, bool)> {
    let r = observables::wolf_bound_report(mi_value, connected_correlator, op_a_norm, op_b_norm)
        .map_err(value_err)?;
    Ok((r.lhs, r.rhs, r.satisfied))
}

/// "connected" iff log_branch(l) >= log_branch(d).
#[pyfunction]
fn regime_classify(l: usize, d: usize, branch: usize) -> PyResult<&'static str> {
    Ok(match mera::regime_classify(l, d, branch).map_err(value_err)? {
        mera::Regime::Connected => "connected",
        mera::Regime::Disconnected => "disconnected",
    })
}

#[pymodule]
fn holoent_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBulkGeometry>()?;
    m.add_class::<PyThermalScales>()?;
    m.add_class::<PyIntervalPair>()?;
    m.add_class::<PyMiResult>()?;
    m.add_class::<PyMeraNetwork>()?;
    m.add_class::<PyCutResult>()?;
    m.add_function(wrap_pyfunction!(btz_from_mass_spin, m)?)?;
    m.add_function(wrap_pyfunction!(theta_imag, m)?)?;
    m.add_function(wrap_pyfunction!(theta1_prime_at_zero, m)?)?;
    m.add_function(wrap_pyfunction!(fermion_correlator_torus, m)?)?;
    m.add_function(wrap_pyfunction!(upsilon, m)?)?;
    m.add_function(wrap_pyfunction!(mi_pure_ads, m)?)?;
    m.add_function(wrap_pyfunction!(mi_torus, m)?)?;
    m.add_function(wrap_pyfunction!(mi_torus_rotating, m)?)?;
    m.add_function(wrap_pyfunction!(transition_point, m)?)?;
    m.add_function(wrap_pyfunction!(wolf_bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(regime_classify, m)?)?;
    Ok(())
}
