use crate::numerics::quad::kronrod_panel;
use crate::scalar::Primitive;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PolarNode<T> {
    pub x: T,
    pub y: T,
    /// Kronrod tensor weight including the Jacobian r.
    pub w: T,
    /// Embedded Gauss tensor weight.
    pub wg: T,
}

/// Tensor Kronrod nodes on consecutive radial panels; the angular breaks may
/// depend on the radius.
pub(crate) fn polar_nodes<T: Primitive>(r_breaks: &[T], phi_breaks: &dyn Fn(T) -> Vec<T>) -> Vec<PolarNode<T>> {
    let mut out = Vec::new();
    for rb in r_breaks.windows(2) {
        for (r, wr, gr) in kronrod_panel(rb[0], rb[1]) {
            let pb = phi_breaks(r);
            for ab in pb.windows(2) {
                for (phi, wp, gp) in kronrod_panel(ab[0], ab[1]) {
                    out.push(PolarNode { x: r * phi.cos(), y: r * phi.sin(), w: wr * wp * r, wg: gr * gp * r });
                }
            }
        }
    }
    out
}
