use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lincore::{compose, path, split_idempotent, tensor, LinMap};
use crate::wbm::{AxiomReport, InducedMonad, WeakBimonoid};

use super::{base_monoid, BaseMonoid, RightModule};

/// The truncated tensor product `A□C`: the image of `E_{A,C}` on `A⊗C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTensor {
    pub left: RightModule,
    pub right: RightModule,
    pub e: LinMap,
    /// `p : A⊗C -> A□C`
    pub p: LinMap,
    /// `i : A□C -> A⊗C`
    pub i: LinMap,
    pub product: RightModule,
}

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

fn id(n: usize) -> LinMap {
    LinMap::identity(n)
}

/// Splits `E_{A,C}` and equips the image with `p∘(a⊗c)∘τ_{A,C}∘(i⊗B)`.
pub fn module_tensor(a: &RightModule, c: &RightModule, b: &WeakBimonoid) -> Result<ModuleTensor> {
    b.require_symmetric()?;
    let t = InducedMonad::new(b);
    let e = t.e_modules(a.action(), c.action());
    if compose(&e, &e)? != e {
        return Err(Error::IdempotencyFailed(format!(
            "E on modules of dimension {} and {}",
            a.carrier(),
            c.carrier()
        )));
    }
    let split = split_idempotent(&e)?;
    let (p, i) = (split.retraction, split.section);
    let action = ev(&[
        &t.map(&i),
        &t.tau(a.carrier(), c.carrier()),
        &tensor(a.action(), c.action()),
        &p,
    ]);
    let product = RightModule::unchecked(action);
    product
        .validate(b)
        .map_err(|err| Error::IdempotencyFailed(format!("product module: {err}")))?;
    Ok(ModuleTensor {
        left: a.clone(),
        right: c.clone(),
        e,
        p,
        i,
        product,
    })
}

/// The right and left unit constraints of a module and their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitConstraints {
    /// `ϱ_A : A□R -> A`
    pub rho: LinMap,
    /// `λ_A : R□A -> A`
    pub lambda: LinMap,
    pub rho_inv: LinMap,
    pub lambda_inv: LinMap,
}

pub fn unit_constraints(a: &RightModule, b: &WeakBimonoid) -> Result<UnitConstraints> {
    let base = base_monoid(b)?;
    unit_constraints_with(a, b, &base)
}

fn unit_constraints_with(
    a: &RightModule,
    b: &WeakBimonoid,
    base: &BaseMonoid,
) -> Result<UnitConstraints> {
    let t = InducedMonad::new(b);
    let r = base.module();
    let n = a.carrier();
    let id_a = id(n);
    let ar = module_tensor(a, &r, b)?;
    let ra = module_tensor(&r, a, b)?;

    let rho = ev(&[&ar.i, &tensor(&id_a, &base.i), &tensor(&id_a, b.eps())]);
    let lambda = ev(&[&ra.i, &tensor(&base.i, &id_a), &tensor(b.eps(), &id_a)]);
    let rho_inv = ev(&[&t.u(n), &t.tau(n, 1), &tensor(a.action(), &base.p), &ar.p]);
    let lambda_inv = ev(&[&t.u(n), &t.tau(1, n), &tensor(&base.p, a.action()), &ra.p]);

    let fail =
        |what: &str| Error::ConstraintNotInvertible(format!("{what} on a module of dimension {n}"));
    if !compose(&rho, &rho_inv)?.is_identity() || !compose(&rho_inv, &rho)?.is_identity() {
        return Err(fail("right unit constraint"));
    }
    if !compose(&lambda, &lambda_inv)?.is_identity()
        || !compose(&lambda_inv, &lambda)?.is_identity()
    {
        return Err(fail("left unit constraint"));
    }
    if !ar.product.is_morphism_to(a, &rho, b) {
        return Err(fail("right unit constraint is not a module map;"));
    }
    if !ra.product.is_morphism_to(a, &lambda, b) {
        return Err(fail("left unit constraint is not a module map;"));
    }
    Ok(UnitConstraints {
        rho,
        lambda,
        rho_inv,
        lambda_inv,
    })
}

/// Memoised truncated tensor products of a growing list of modules.
///
/// Modules are referred to by index; `product(i, j)` appends `M_i□M_j` the
/// first time it is requested.
pub(crate) struct TensorTable<'a> {
    b: &'a WeakBimonoid,
    modules: Vec<RightModule>,
    products: HashMap<(usize, usize), (usize, ModuleTensor)>,
}

impl<'a> TensorTable<'a> {
    pub(crate) fn new(b: &'a WeakBimonoid, modules: &[RightModule]) -> Self {
        TensorTable {
            b,
            modules: modules.to_vec(),
            products: HashMap::new(),
        }
    }

    pub(crate) fn push(&mut self, m: RightModule) -> usize {
        self.modules.push(m);
        self.modules.len() - 1
    }

    pub(crate) fn dim(&self, k: usize) -> usize {
        self.modules[k].carrier()
    }

    pub(crate) fn product(&mut self, x: usize, y: usize) -> Result<usize> {
        if let Some((k, _)) = self.products.get(&(x, y)) {
            return Ok(*k);
        }
        let mt = module_tensor(&self.modules[x], &self.modules[y], self.b)?;
        let k = self.push(mt.product.clone());
        self.products.insert((x, y), (k, mt));
        Ok(k)
    }

    pub(crate) fn tensor(&mut self, x: usize, y: usize) -> Result<&ModuleTensor> {
        self.product(x, y)?;
        Ok(&self.products[&(x, y)].1)
    }

    fn p(&mut self, x: usize, y: usize) -> Result<LinMap> {
        Ok(self.tensor(x, y)?.p.clone())
    }

    fn i(&mut self, x: usize, y: usize) -> Result<LinMap> {
        Ok(self.tensor(x, y)?.i.clone())
    }

    /// `f□g = p∘(f⊗g)∘i` for `f : M_x -> M_x'`, `g : M_y -> M_y'`.
    pub(crate) fn box_map(
        &mut self,
        (x, y): (usize, usize),
        (x2, y2): (usize, usize),
        f: &LinMap,
        g: &LinMap,
    ) -> Result<LinMap> {
        let i = self.i(x, y)?;
        let p = self.p(x2, y2)?;
        path(&[&i, &tensor(f, g), &p])
    }

    /// `(A□C)□D -> A□(C□D)`.
    pub(crate) fn assoc(&mut self, a: usize, c: usize, d: usize) -> Result<LinMap> {
        let ac = self.product(a, c)?;
        let cd = self.product(c, d)?;
        let i_ac_d = self.i(ac, d)?;
        let i_ac = self.i(a, c)?;
        let p_cd = self.p(c, d)?;
        let p_a_cd = self.p(a, cd)?;
        path(&[
            &i_ac_d,
            &tensor(&i_ac, &id(self.dim(d))),
            &tensor(&id(self.dim(a)), &p_cd),
            &p_a_cd,
        ])
    }

    /// `A□(C□D) -> (A□C)□D`.
    pub(crate) fn assoc_inv(&mut self, a: usize, c: usize, d: usize) -> Result<LinMap> {
        let ac = self.product(a, c)?;
        let cd = self.product(c, d)?;
        let i_a_cd = self.i(a, cd)?;
        let i_cd = self.i(c, d)?;
        let p_ac = self.p(a, c)?;
        let p_ac_d = self.p(ac, d)?;
        path(&[
            &i_a_cd,
            &tensor(&id(self.dim(a)), &i_cd),
            &tensor(&p_ac, &id(self.dim(d))),
            &p_ac_d,
        ])
    }
}

/// The associativity constraint `(A□C)□D -> A□(C□D)`.
pub fn associator(
    a: &RightModule,
    c: &RightModule,
    d: &RightModule,
    b: &WeakBimonoid,
) -> Result<LinMap> {
    b.require_symmetric()?;
    let mut table = TensorTable::new(b, &[a.clone(), c.clone(), d.clone()]);
    table.assoc(0, 1, 2)
}

/// Checks, over all tuples drawn from `modules`: the splitting of every
/// `E`, both Frobenius squares relating `i`, `p` and the associator,
/// invertibility of the associator and the unit constraints, the pentagon
/// and the triangle.
///
/// Any failure is a hard [`Error::CoherenceFailed`] naming the law and the
/// tuple of module indices; on success the report lists every check made.
pub fn coherence_check(modules: &[RightModule], b: &WeakBimonoid) -> Result<AxiomReport> {
    b.require_symmetric()?;
    for m in modules {
        m.validate(b)?;
    }
    let base = base_monoid(b)?;
    let n = modules.len();
    let mut table = TensorTable::new(b, modules);
    let r = table.push(base.module());
    let mut rep = AxiomReport::new();
    let record = |rep: &mut AxiomReport, name: String, lhs: LinMap, rhs: LinMap| {
        if rep.check(name.clone(), lhs, rhs) {
            Ok(())
        } else {
            Err(Error::CoherenceFailed(name))
        }
    };

    for x in 0..n {
        for y in 0..n {
            let mt = table.tensor(x, y)?.clone();
            let tag = format!("[{x},{y}]");
            record(
                &mut rep,
                format!("split.section_retraction{tag}"),
                compose(&mt.i, &mt.p)?,
                mt.e.clone(),
            )?;
            record(
                &mut rep,
                format!("split.retraction_section{tag}"),
                compose(&mt.p, &mt.i)?,
                id(mt.p.cod()),
            )?;
        }
    }

    let mut constraints = Vec::with_capacity(n);
    for (x, m) in modules.iter().enumerate() {
        let uc = unit_constraints_with(m, b, &base)
            .map_err(|e| Error::CoherenceFailed(format!("unit constraints[{x}]: {e}")))?;
        rep.flag(format!("unit_constraints.invertible[{x}]"), true);
        constraints.push(uc);
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let tag = format!("[{x},{y},{z}]");
                let (dx, dz) = (table.dim(x), table.dim(z));
                let xy = table.product(x, y)?;
                let yz = table.product(y, z)?;
                let alpha = table.assoc(x, y, z)?;
                let alpha_inv = table.assoc_inv(x, y, z)?;
                record(
                    &mut rep,
                    format!("associator.inverse.left{tag}"),
                    compose(&alpha_inv, &alpha)?,
                    id(alpha.dom()),
                )?;
                record(
                    &mut rep,
                    format!("associator.inverse.right{tag}"),
                    compose(&alpha, &alpha_inv)?,
                    id(alpha.cod()),
                )?;

                // X⊗(Y□Z) -> (X□Y)⊗Z
                let p_xy = table.p(x, y)?;
                let i_yz = table.i(y, z)?;
                let lhs = ev(&[&tensor(&id(dx), &i_yz), &tensor(&p_xy, &id(dz))]);
                let p_x_yz = table.p(x, yz)?;
                let i_xy_z = table.i(xy, z)?;
                let rhs = ev(&[&p_x_yz, &alpha_inv, &i_xy_z]);
                record(&mut rep, format!("frobenius_square.left{tag}"), lhs, rhs)?;

                // (X□Y)⊗Z -> X⊗(Y□Z)
                let i_xy = table.i(x, y)?;
                let p_yz = table.p(y, z)?;
                let lhs = ev(&[&tensor(&i_xy, &id(dz)), &tensor(&id(dx), &p_yz)]);
                let p_xy_z = table.p(xy, z)?;
                let i_x_yz = table.i(x, yz)?;
                let rhs = ev(&[&p_xy_z, &alpha, &i_x_yz]);
                record(&mut rep, format!("frobenius_square.right{tag}"), lhs, rhs)?;
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            // (A□R)□C -> A□C
            let tag = format!("[{x},{y}]");
            let ry = table.product(r, y)?;
            let xr = table.product(x, r)?;
            let alpha = table.assoc(x, r, y)?;
            let (dx, dy) = (table.dim(x), table.dim(y));
            let lhs = compose(
                &table.box_map((x, ry), (x, y), &id(dx), &constraints[y].lambda)?,
                &alpha,
            )?;
            let rhs = table.box_map((xr, y), (x, y), &constraints[x].rho, &id(dy))?;
            record(&mut rep, format!("triangle{tag}"), lhs, rhs)?;
        }
    }

    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let tag = format!("[{w},{x},{y},{z}]");
                    let wx = table.product(w, x)?;
                    let xy = table.product(x, y)?;
                    let yz = table.product(y, z)?;
                    let wxy = table.product(wx, y)?;
                    let xy_z = table.product(xy, z)?;
                    let w_xy = table.product(w, xy)?;
                    let x_yz = table.product(x, yz)?;
                    // ((W□X)□Y)□Z -> (W□X)□(Y□Z) -> W□(X□(Y□Z))
                    let lhs = compose(&table.assoc(w, x, yz)?, &table.assoc(wx, y, z)?)?;
                    // ((W□X)□Y)□Z -> (W□(X□Y))□Z -> W□((X□Y)□Z) -> W□(X□(Y□Z))
                    let a_wxy = table.assoc(w, x, y)?;
                    let dz = table.dim(z);
                    let step1 = table.box_map((wxy, z), (w_xy, z), &a_wxy, &id(dz))?;
                    let step2 = table.assoc(w, xy, z)?;
                    let a_xyz = table.assoc(x, y, z)?;
                    let dw = table.dim(w);
                    let step3 = table.box_map((w, xy_z), (w, x_yz), &id(dw), &a_xyz)?;
                    let rhs = path(&[&step1, &step2, &step3])?;
                    record(&mut rep, format!("pentagon{tag}"), lhs, rhs)?;
                }
            }
        }
    }
    Ok(rep)
}
