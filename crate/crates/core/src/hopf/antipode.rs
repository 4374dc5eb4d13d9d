use crate::error::Result;
use crate::lincore::{inverse, is_invertible, path, solve_linear, tensor, LinMap, Solution};
use crate::scalar::Scalar;
use crate::wbm::{convolve, delta2, mu2, t_map, AxiomReport, WeakBimonoid};

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

/// The four idempotents `t`, `r`, `s`, `r^op : B -> B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMaps {
    pub t: LinMap,
    pub r: LinMap,
    pub s: LinMap,
    pub rop: LinMap,
}

/// * `t = (B⊗ε)∘(B⊗μ)∘(c⊗B)∘(B⊗δ)∘(B⊗η)`
/// * `r = (ε⊗B)∘(μ⊗B)∘(B⊗c)∘(δ⊗B)∘(η⊗B)`
/// * `s = (B⊗ε)∘(B⊗μ)∘(δ⊗B)∘(η⊗B)`
/// * `r^op = (ε⊗B)∘(μ⊗B)∘(B⊗δ)∘(B⊗η)`
pub fn structure_maps(b: &WeakBimonoid) -> StructureMaps {
    let one = b.id();
    let c = b.braid();
    let (mu, eta, delta, eps) = (b.mu(), b.eta(), b.delta(), b.eps());
    let r = ev(&[
        &tensor(eta, &one),
        &tensor(delta, &one),
        &tensor(&one, &c),
        &tensor(mu, &one),
        &tensor(eps, &one),
    ]);
    let s = ev(&[
        &tensor(eta, &one),
        &tensor(delta, &one),
        &tensor(&one, mu),
        &tensor(&one, eps),
    ]);
    let rop = ev(&[
        &tensor(&one, eta),
        &tensor(&one, delta),
        &tensor(mu, &one),
        &tensor(eps, &one),
    ]);
    StructureMaps {
        t: t_map(b),
        r,
        s,
        rop,
    }
}

/// `B^op = (μ∘c⁻¹, η, δ, ε)` with braid `c⁻¹`.
pub fn opposite(b: &WeakBimonoid) -> WeakBimonoid {
    let mu_op = ev(&[b.braid_inv(), b.mu()]);
    let braid = b.custom_braid().map(|_| b.braid_inv().clone());
    WeakBimonoid::with_braid(
        b.dim(),
        mu_op,
        b.eta().clone(),
        b.delta().clone(),
        b.eps().clone(),
        braid,
    )
    .expect("the inverse of a Yang-Baxter operator is one")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeResult {
    pub nu: Option<LinMap>,
    /// Whether the solution space is a single point.
    pub unique: bool,
    pub equations_report: AxiomReport,
    pub invertible: bool,
    pub nu_inverse: Option<LinMap>,
    /// The antipode of `B^op`, when its system is solvable.
    pub nu_op: Option<LinMap>,
}

/// Solves `ν∗id = t`, `id∗ν = r`, `ν∗r = ν`, `t∗ν = ν` for `ν`.
pub(crate) fn solve_system(b: &WeakBimonoid) -> Result<Solution> {
    let d = b.dim();
    let sm = structure_maps(b);
    let one = b.id();
    // Column k of each operator is the constraint evaluated at the k-th
    // matrix unit (row-major vectorisation).
    let mut cols: [Vec<Vec<(usize, Scalar)>>; 4] = Default::default();
    for k in 0..d * d {
        let unit = LinMap::from_entries(d, d, [(k / d, k % d, Scalar::one())])?;
        let exprs = [
            convolve(&unit, &one, b)?,
            convolve(&one, &unit, b)?,
            convolve(&unit, &sm.r, b)?.sub(&unit)?,
            convolve(&sm.t, &unit, b)?.sub(&unit)?,
        ];
        for (slot, e) in cols.iter_mut().zip(exprs) {
            slot.push(e.vectorize().column(0).to_vec());
        }
    }
    let zero = LinMap::zero(d * d, 1);
    let rhs = [sm.t.vectorize(), sm.r.vectorize(), zero.clone(), zero];
    let mut constraints = Vec::with_capacity(4);
    for (c, r) in cols.into_iter().zip(rhs) {
        constraints.push((LinMap::from_columns(d * d, c)?, r));
    }
    solve_linear(&constraints)
}

/// Records the defining equations and the identities relating `ν` to `s`,
/// `t`, `r`, `r^op`.
fn antipode_report(b: &WeakBimonoid, nu: &LinMap) -> Result<AxiomReport> {
    let sm = structure_maps(b);
    let one = b.id();
    let mut rep = AxiomReport::new();
    rep.check("antipode.nu_id", convolve(nu, &one, b)?, sm.t.clone());
    rep.check("antipode.id_nu", convolve(&one, nu, b)?, sm.r.clone());
    rep.check("antipode.nu_r", convolve(nu, &sm.r, b)?, nu.clone());
    rep.check("antipode.t_nu", convolve(&sm.t, nu, b)?, nu.clone());
    rep.check("antipode.nu_s", ev(&[&sm.s, nu]), sm.r.clone());
    rep.check("antipode.nu_rop", ev(&[&sm.rop, nu]), sm.t.clone());
    rep.check("antipode.s_nu", ev(&[nu, &sm.s]), sm.t.clone());
    rep.check("antipode.rop_nu", ev(&[nu, &sm.rop]), sm.r.clone());
    Ok(rep)
}

/// The three diagrams saying `w` is an antipode of `B^op`:
/// `μ∘c⁻¹∘(w⊗B)∘δ = s`, `μ∘c⁻¹∘(B⊗w)∘δ = r^op` and
/// `μ^op∘(μ^op⊗B)∘(w⊗B⊗w)∘δ² = w`.
pub fn op_antipode_report(b: &WeakBimonoid, w: &LinMap) -> AxiomReport {
    let sm = structure_maps(b);
    let one = b.id();
    let bop = opposite(b);
    let mu_op = bop.mu();
    let mut rep = AxiomReport::new();
    rep.check(
        "op_antipode.left",
        ev(&[b.delta(), &tensor(w, &one), mu_op]),
        sm.s,
    );
    rep.check(
        "op_antipode.right",
        ev(&[b.delta(), &tensor(&one, w), mu_op]),
        sm.rop,
    );
    rep.check(
        "op_antipode.sandwich",
        ev(&[&delta2(b), &tensor(&tensor(w, &one), w), &mu2(&bop)]),
        w.clone(),
    );
    rep
}

/// Finds the antipode, if any, and cross-checks it against `B^op`.
pub fn solve_antipode(b: &WeakBimonoid) -> Result<AntipodeResult> {
    let sol = solve_system(b)?;
    let (nu, unique) = match &sol {
        Solution::Solved { x, nullity } => (
            Some(LinMap::unvectorize(x, b.dim(), b.dim())?),
            *nullity == 0,
        ),
        Solution::NoSolution => (None, false),
    };
    let op_sol = solve_system(&opposite(b))?;
    let nu_op = match op_sol {
        Solution::Solved { x, .. } => Some(LinMap::unvectorize(&x, b.dim(), b.dim())?),
        Solution::NoSolution => None,
    };

    let mut rep = AxiomReport::new();
    let mut invertible = false;
    let mut nu_inverse = None;
    if let Some(nu) = &nu {
        rep.extend(antipode_report(b, nu)?);
        invertible = is_invertible(nu);
        rep.flag("antipode.invertible", invertible);
        if invertible {
            let inv = inverse(nu)?;
            rep.extend(op_antipode_report(b, &inv));
            nu_inverse = Some(inv);
        }
    }
    if let Some(w) = &nu_op {
        let mut op = op_antipode_report(b, w);
        for e in op.entries.iter_mut() {
            e.name = e.name.replacen("op_antipode", "nu_op", 1);
        }
        rep.extend(op);
    }
    Ok(AntipodeResult {
        nu,
        unique,
        equations_report: rep,
        invertible,
        nu_inverse,
        nu_op,
    })
}
