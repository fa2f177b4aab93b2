//! The order-294 group `R = V ⋊ S3`, with `V` the natural 2-dimensional
//! module over the field of 7 elements, showing that two supersoluble
//! F-subnormal subgroups of coprime index need not have a supersoluble product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functors::{is_r_conjugate_permutable, is_r_subnormal};
use crate::group::{build_group, GroupSpec, GroupTable, DEFAULT_CAP};
use crate::perm::Perm;
use crate::radicals::{fitting, is_supersoluble, is_supersoluble_subgroup};

const P: usize = 7;

fn affine_map(f: impl Fn(usize, usize) -> (usize, usize)) -> Perm {
    let images = (0..P * P)
        .map(|i| {
            let (x, y) = f(i / P, i % P);
            P * (x % P) + y % P
        })
        .collect();
    Perm::from_images(images).expect("affine map is a bijection")
}

/// Generators on the 49 points `7x + y` of the affine plane.
pub fn counterexample_spec() -> GroupSpec {
    let gens = vec![
        affine_map(|x, y| (x + 1, y)),
        affine_map(|x, y| (x, y + 1)),
        // order 3, fixed-point-free on nonzero vectors: (x, y) -> (-y, x - y)
        affine_map(|x, y| (P - y, x + P - y)),
        affine_map(|x, y| (y, x)),
    ];
    GroupSpec::new("R294", P * P, gens).expect("degree matches")
}

/// The properties certified for the order-294 group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleCertificate {
    pub order: usize,
    pub fitting_order: usize,
    pub fitting_is_translations: bool,
    pub a_order: usize,
    pub b_order: usize,
    pub a_supersoluble: bool,
    pub b_supersoluble: bool,
    pub a_fitting_subnormal: bool,
    pub b_fitting_subnormal: bool,
    pub a_fitting_conjugate_permutable: bool,
    pub b_fitting_conjugate_permutable: bool,
    pub product_is_group: bool,
    pub group_supersoluble: bool,
}

impl CounterexampleCertificate {
    /// Every recorded property, as `(description, holds)`.
    pub fn properties(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("|R| = 294", self.order == 294),
            (
                "F(R) = V of order 49",
                self.fitting_order == 49 && self.fitting_is_translations,
            ),
            (
                "A = V.Syl3 and B = V.Syl2 are supersoluble",
                self.a_supersoluble && self.b_supersoluble,
            ),
            (
                "A and B are F(R)-subnormal and F(R)-conjugate-permutable",
                self.a_fitting_subnormal
                    && self.b_fitting_subnormal
                    && self.a_fitting_conjugate_permutable
                    && self.b_fitting_conjugate_permutable,
            ),
            (
                "R = AB but R is not supersoluble",
                self.product_is_group && !self.group_supersoluble,
            ),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.properties().iter().all(|(_, ok)| *ok)
    }
}

/// Builds `R` and certifies its properties; any failed property is an error.
pub fn build_counterexample() -> Result<(GroupTable, CounterexampleCertificate)> {
    let spec = counterexample_spec();
    let r = build_group(&spec, DEFAULT_CAP)?;
    let translations = r.closure([0usize, 1].iter().map(|&i| {
        r.element_of(&spec.generators[i])
            .expect("generator is an element")
    }));
    let f = fitting(&r)?;
    let a = r.join(&translations, &r.sylow_subgroup(3));
    let b = r.join(&translations, &r.sylow_subgroup(2));
    let cert = CounterexampleCertificate {
        order: r.order(),
        fitting_order: f.order(),
        fitting_is_translations: f == translations,
        a_order: a.order(),
        b_order: b.order(),
        a_supersoluble: is_supersoluble_subgroup(&r, &a),
        b_supersoluble: is_supersoluble_subgroup(&r, &b),
        a_fitting_subnormal: is_r_subnormal(&r, &a, &f).verdict,
        b_fitting_subnormal: is_r_subnormal(&r, &b, &f).verdict,
        a_fitting_conjugate_permutable: is_r_conjugate_permutable(&r, &a, &f).verdict,
        b_fitting_conjugate_permutable: is_r_conjugate_permutable(&r, &b, &f).verdict,
        product_is_group: r.set_product(&a, &b).is_everything(),
        group_supersoluble: is_supersoluble(&r),
    };
    if let Some((what, _)) = cert.properties().into_iter().find(|(_, ok)| !ok) {
        return Err(Error::ConstructionFailed(format!(
            "order-294 group: property \"{what}\" not certified"
        )));
    }
    Ok((r, cert))
}
