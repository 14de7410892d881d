#![allow(dead_code)]

use dgva::catalog::catalog_presentation;
use dgva::envelope::{EnvelopeContext, VVector};
use dgva::vla::{validate_presentation, GenId, PresentationFile, TermDecl, VlaPresentation};
use dgva::Scalar;

/// Number of partitions of `n` into parts `>= min_part`, by listing them.
///
/// Deliberately naive: it enumerates every nonincreasing sequence rather
/// than using a recurrence, so it shares nothing with the PBW enumerator.
pub fn partitions(n: u32, min_part: u32) -> usize {
    fn list(rest: u32, max: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (min..=max.min(rest)).rev() {
            prefix.push(part);
            list(rest - part, part, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    list(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    assert!(out.iter().all(|p| p.iter().sum::<u32>() == n && p.windows(2).all(|w| w[0] >= w[1])));
    out.len()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn catalog(name: &str) -> VlaPresentation {
    catalog_presentation(name).unwrap_or_else(|| panic!("catalog entry {name}"))
}

pub fn context(name: &str, levels: &[(&str, Scalar)], cap: i64) -> EnvelopeContext {
    EnvelopeContext::with_levels(catalog(name), levels, int(cap)).expect("valid context")
}

pub fn gen(p: &VlaPresentation, id: &str) -> GenId {
    p.gen_id(id).unwrap_or_else(|| panic!("generator {id}"))
}

/// Replaces the result of `left_(n) right` in a presentation file.
pub fn mutate_product(p: &VlaPresentation, left: &str, n: u32, right: &str, result: Vec<TermDecl>) -> VlaPresentation {
    let mut file: PresentationFile = p.to_file();
    let entry = file
        .products
        .iter_mut()
        .find(|d| d.left == left && d.n == n && d.right == right)
        .expect("product entry exists");
    entry.result = result;
    file.name = format!("{}-mutated", file.name);
    validate_presentation(&file).expect("mutation keeps the presentation homogeneous")
}

/// Every PBW basis vector of the context, as vectors.
pub fn basis_vectors(ctx: &EnvelopeContext, limit: i64) -> Vec<VVector> {
    ctx.basis_up_to(&int(limit)).into_iter().map(VVector::basis).collect()
}
