//! Constructors for the example rings and parameter ideals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{check_parameters, ring_map_kernel, Ideal, PresentedRing};
use crate::kernel::{Field, Poly, PolyRing, Variable};
use crate::module::syzygy;

/// A presented ring with a homogeneous parameter ideal `q = (a_1, …, a_d)`.
#[derive(Clone, Debug)]
pub struct Instance<F: Field> {
    pub ring: Arc<PresentedRing<F>>,
    pub params: Vec<Poly<F>>,
}

impl<F: Field> Instance<F> {
    pub fn new(ring: Arc<PresentedRing<F>>, params: Vec<Poly<F>>) -> Self {
        let params = params.iter().map(|p| ring.ambient().resort(p)).collect();
        Self { ring, params }
    }

    pub fn name(&self) -> &str {
        self.ring.name()
    }

    pub fn q(&self) -> Ideal<F> {
        self.ring.ideal(self.params.clone())
    }

    pub fn dim(&self) -> i64 {
        self.ring.krull_dim()
    }
}

/// Names of the examples built by [`by_name`].
pub const EXAMPLE_NAMES: [&str; 5] = ["hochster_roberts", "two_planes", "idealization_xy", "idealization_x2y3", "regular_base"];

pub fn by_name<F: Field>(name: &str, field: F) -> Result<Instance<F>> {
    match name {
        "hochster_roberts" => hochster_roberts(field),
        "two_planes" => two_planes(field),
        "idealization_xy" => idealization_xy(field),
        "idealization_x2y3" => idealization_x2y3(field),
        "regular_base" => regular_base(field),
        other => Err(Error::InvalidInput(format!("unknown example {other}"))),
    }
}

/// `k[x², y, x³, xy] ⊆ k[x, y]` presented on `a, b, c, d`, with `q = (a, b)`.
pub fn hochster_roberts<F: Field>(field: F) -> Result<Instance<F>> {
    let plane = PresentedRing::polynomial("k[x,y]", PolyRing::with_vars(field, &[("x", 1), ("y", 1)])?);
    let r = plane.ambient();
    let (x, y) = (r.var(0), r.var(1));
    let targets = [r.pow(&x, 2), y.clone(), r.pow(&x, 3), r.mul(&x, &y)];
    let (source, kernel) = ring_map_kernel(&plane, &targets, &["a", "b", "c", "d"])?;
    let params = vec![source.var(0), source.var(1)];
    Ok(Instance::new(PresentedRing::new("hochster_roberts", source, kernel)?, params))
}

/// `k[x, y, u, v]/(xu, xv, yu, yv)` with `q = (x + u, y + v)`.
pub fn two_planes<F: Field>(field: F) -> Result<Instance<F>> {
    let r = PolyRing::with_vars(field, &[("x", 1), ("y", 1), ("u", 1), ("v", 1)])?;
    let v: Vec<Poly<F>> = (0..4).map(|i| r.var(i)).collect();
    let rels = vec![r.mul(&v[0], &v[2]), r.mul(&v[0], &v[3]), r.mul(&v[1], &v[2]), r.mul(&v[1], &v[3])];
    let params = vec![r.add(&v[0], &v[2]), r.add(&v[1], &v[3])];
    Ok(Instance::new(PresentedRing::new("two_planes", r, rels)?, params))
}

/// `k[x, y]` with `q = (x, y)`.
pub fn regular_base<F: Field>(field: F) -> Result<Instance<F>> {
    let r = PolyRing::with_vars(field, &[("x", 1), ("y", 1)])?;
    let params = vec![r.var(0), r.var(1)];
    Ok(Instance::new(PresentedRing::polynomial("regular_base", r), params))
}

/// The idealization `B ⋉ Q` of a parameter ideal `Q` of the polynomial ring
/// `B`: `B[z_1..z_t]/((z_i z_j) + (Σ s_j z_j : s ∈ Syz(Q)))` with `z_j` of the
/// degree of `Q_j`, and `q = Q·A`.
pub fn idealization<F: Field>(name: &str, base: &PolyRing<F>, q: &[Poly<F>], z_names: &[&str]) -> Result<Instance<F>> {
    assert_eq!(q.len(), z_names.len());
    let b = PresentedRing::polynomial("B", base.clone());
    check_parameters(&b, q)?;
    let mut vars: Vec<Variable> = base.vars().to_vec();
    for (g, z) in q.iter().zip(z_names) {
        let d = base.degree(g).unwrap();
        vars.push(Variable { name: z.to_string(), weight: d as u32 });
    }
    let big = PolyRing::new(base.field().clone(), vars)?;
    let nb = base.nvars();
    let z: Vec<Poly<F>> = (0..q.len()).map(|j| big.var(nb + j)).collect();
    let mut rels = Vec::new();
    for i in 0..z.len() {
        for j in i..z.len() {
            rels.push(big.mul(&z[i], &z[j]));
        }
    }
    let free = base.free_module(vec![0], crate::kernel::ModuleOrder::PositionOverTerm);
    let (_, syz) = syzygy(&free, q)?;
    for s in syz {
        let mut rel = big.zero();
        for (j, zj) in z.iter().enumerate() {
            rel = big.add(&rel, &big.mul(&big.embed_prefix(base, &s.component(j as u32)), zj));
        }
        rels.push(rel);
    }
    let params = q.iter().map(|g| big.embed_prefix(base, g)).collect();
    Ok(Instance::new(PresentedRing::new(name, big, rels)?, params))
}

/// `k[x, y] ⋉ (x, y)`.
pub fn idealization_xy<F: Field>(field: F) -> Result<Instance<F>> {
    let b = PolyRing::with_vars(field, &[("x", 1), ("y", 1)])?;
    let q = [b.var(0), b.var(1)];
    idealization("idealization_xy", &b, &q, &["u", "v"])
}

/// `k[x, y] ⋉ (x², y³)`.
pub fn idealization_x2y3<F: Field>(field: F) -> Result<Instance<F>> {
    let b = PolyRing::with_vars(field, &[("x", 1), ("y", 1)])?;
    let q = [b.pow(&b.var(0), 2), b.pow(&b.var(1), 3)];
    idealization("idealization_x2y3", &b, &q, &["u", "v"])
}
