use super::{bit, Poset};

/// Per-element invariant used to prune the isomorphism search.
fn signature(p: &Poset, x: usize) -> (u32, u32, usize, usize) {
    let lower_covers = p.covers().iter().filter(|&&(_, b)| b == x).count();
    let upper_covers = p.covers().iter().filter(|&&(a, _)| a == x).count();
    (p.down_mask(x).count_ones(), p.up_mask(x).count_ones(), lower_covers, upper_covers)
}

/// Backtracking isomorphism test; elements of `p` are matched in linear-extension order.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return false;
    }
    let n = p.len();
    let sp: Vec<_> = (0..n).map(|x| signature(p, x)).collect();
    let sq: Vec<_> = (0..n).map(|x| signature(q, x)).collect();
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    let order = p.linear_order().to_vec();
    let mut image = vec![usize::MAX; n];
    let mut used = 0u128;
    extend(p, q, &sp, &sq, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Poset,
    q: &Poset,
    sp: &[(u32, u32, usize, usize)],
    sq: &[(u32, u32, usize, usize)],
    order: &[usize],
    k: usize,
    image: &mut [usize],
    used: &mut u128,
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..q.len() {
        if *used & bit(y) != 0 || sp[x] != sq[y] {
            continue;
        }
        let consistent = order[..k].iter().all(|&z| {
            let w = image[z];
            p.lt(z, x) == q.lt(w, y) && p.lt(x, z) == q.lt(y, w)
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        *used |= bit(y);
        if extend(p, q, sp, sq, order, k + 1, image, used) {
            return true;
        }
        *used &= !bit(y);
        image[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{antichain, chain, zigzag};

    #[test]
    fn basic() {
        assert!(is_isomorphic(&chain(3), &chain(3)));
        assert!(!is_isomorphic(&chain(3), &antichain(3)));
        assert!(is_isomorphic(&zigzag(4), &zigzag(4).dual()));
        assert!(!is_isomorphic(&zigzag(5), &zigzag(5).dual()));
    }
}
