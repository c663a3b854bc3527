use crate::dyck::{DyckPath, Step};
use crate::error::Result;

/// Membership in `B_d`: `b` lies under `d`, has `bpk d` peaks all touching
/// `d`, and each of its valleys is a valley of `d` or sits on the axis.
pub fn is_in_b_set(b: &DyckPath, d: &DyckPath) -> Result<bool> {
    if !b.is_under(d)? {
        return Ok(false);
    }
    let peaks = b.peaks();
    if peaks.len() != d.bpk() {
        return Ok(false);
    }
    if peaks.iter().any(|&i| b.height_at(i + 1) != d.height_at(i + 1)) {
        return Ok(false);
    }
    Ok(b.valleys().into_iter().all(|i| {
        let x = i + 1;
        b.height_at(x) == 0 || (d.is_valley_point(x) && d.height_at(x) == b.height_at(x))
    }))
}

/// `B_d`, in path order (`U < D`).
///
/// Candidates are built peak by peak: each peak is a point of `d`, and
/// consecutive peaks are joined by a straight descent and ascent whose
/// bottom is on the axis or on a valley of `d`. Every candidate is then
/// checked against [`is_in_b_set`].
pub fn b_set(d: &DyckPath) -> Vec<DyckPath> {
    let k = d.bpk();
    let total = d.len();
    let h = d.heights();
    let mut out = Vec::new();
    let mut peaks: Vec<usize> = Vec::with_capacity(k);

    fn segment_fits(h: &[u32], d: &DyckPath, from: usize, to: usize) -> Option<u32> {
        let (hp, hq) = (h[from] as i64, h[to] as i64);
        let width = (to - from) as i64;
        let twice_bottom = hp + hq - width;
        if twice_bottom < 0 || twice_bottom % 2 != 0 {
            return None;
        }
        let bottom = twice_bottom / 2;
        if bottom >= hp || bottom >= hq {
            return None;
        }
        let valley_x = from + (hp - bottom) as usize;
        if bottom > 0 && !(d.is_valley_point(valley_x) && h[valley_x] as i64 == bottom) {
            return None;
        }
        let under = (from..=to).all(|x| {
            let line = if x <= valley_x { hp - (x - from) as i64 } else { bottom + (x - valley_x) as i64 };
            line <= h[x] as i64
        });
        under.then_some(bottom as u32)
    }

    fn rec(d: &DyckPath, h: &[u32], k: usize, total: usize, peaks: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        let last = *peaks.last().expect("rec starts with one peak");
        if peaks.len() == k {
            if total - last == h[last] as usize {
                let mut steps = Vec::with_capacity(total);
                let mut x = 0;
                let mut y = 0i64;
                for &p in peaks.iter() {
                    let hp = h[p] as i64;
                    // descend then ascend from (x, y) to (p, hp)
                    let bottom = (y + hp - (p - x) as i64) / 2;
                    steps.extend(std::iter::repeat_n(Step::Down, (y - bottom) as usize));
                    steps.extend(std::iter::repeat_n(Step::Up, (hp - bottom) as usize));
                    x = p;
                    y = hp;
                }
                steps.extend(std::iter::repeat_n(Step::Down, y as usize));
                let b = DyckPath::new(steps).expect("peaks joined by valid segments");
                if is_in_b_set(&b, d).expect("same semilength") {
                    out.push(b);
                }
            }
            return;
        }
        for next in last + 1..total {
            if h[next] == 0 {
                continue;
            }
            if segment_fits(h, d, last, next).is_some() {
                peaks.push(next);
                rec(d, h, k, total, peaks, out);
                peaks.pop();
            }
        }
    }

    // The first peak is reached straight from the origin, so d climbs
    // diagonally up to it.
    for first in 1..total {
        if h[first] as usize != first {
            break;
        }
        peaks.push(first);
        rec(d, h, k, total, &mut peaks, &mut out);
        peaks.pop();
    }
    out.sort();
    out
}
