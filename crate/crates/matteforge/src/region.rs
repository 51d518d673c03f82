//! 4-neighborhoods, region boundaries and morphological dilation on masks.

use crate::error::{Error, Result};
use crate::raster::PixelMask;

/// In-grid 4-neighbors of `pos`, enumerated up, down, left, right.
/// Off-grid neighbors are dropped: 2 at corners, 3 at edges, 4 inside.
pub fn neighbors4(pos: (usize, usize), dims: (usize, usize)) -> Result<Vec<(usize, usize)>> {
    let (r, c) = pos;
    let (h, w) = dims;
    if r >= h || c >= w {
        return Err(Error::OutOfBounds {
            row: r,
            col: c,
            height: h,
            width: w,
        });
    }
    let mut out = Vec::with_capacity(4);
    if r > 0 {
        out.push((r - 1, c));
    }
    if r + 1 < h {
        out.push((r + 1, c));
    }
    if c > 0 {
        out.push((r, c - 1));
    }
    if c + 1 < w {
        out.push((r, c + 1));
    }
    Ok(out)
}

/// Two-sided boundary of the true set R: pixel i belongs to the boundary
/// iff its closed neighborhood {i} ∪ ∂{i} meets both R and the complement.
/// Symmetric in R and its complement by construction.
pub fn region_boundary(mask: &PixelMask) -> PixelMask {
    let (h, w) = mask.dims();
    let mut out = PixelMask::new(h, w, false).expect("mask dims already validated");
    for r in 0..h {
        for c in 0..w {
            let mut touches_in = mask.get(r, c);
            let mut touches_out = !mask.get(r, c);
            for (nr, nc) in neighbors4((r, c), (h, w)).expect("in-grid position") {
                if mask.get(nr, nc) {
                    touches_in = true;
                } else {
                    touches_out = true;
                }
            }
            if touches_in && touches_out {
                out.set(r, c, true);
            }
        }
    }
    out
}

/// Euclidean disk dilation: true where some true source pixel lies within
/// center distance `radius`. Radius 1 therefore adds exactly the
/// 4-neighborhood. Computed through an exact squared distance transform.
pub fn dilate_disk(mask: &PixelMask, radius: usize) -> PixelMask {
    let (h, w) = mask.dims();
    if !mask.any() {
        return PixelMask::new(h, w, false).expect("mask dims already validated");
    }
    let dist2 = squared_distance_transform(mask);
    let r2 = (radius * radius) as f64;
    let mut out = PixelMask::new(h, w, false).expect("mask dims already validated");
    for r in 0..h {
        for c in 0..w {
            if dist2[r * w + c] <= r2 {
                out.set(r, c, true);
            }
        }
    }
    out
}

/// Exact squared Euclidean distance to the nearest true pixel, by the
/// two-pass lower-envelope-of-parabolas transform (columns then rows).
/// True pixels get 0; if the mask is empty every entry is +inf.
pub fn squared_distance_transform(mask: &PixelMask) -> Vec<f64> {
    let (h, w) = mask.dims();
    let mut grid: Vec<f64> = mask
        .bits()
        .iter()
        .map(|&b| if b { 0.0 } else { f64::INFINITY })
        .collect();

    // Columns.
    let mut scratch = vec![0.0f64; h.max(w)];
    for c in 0..w {
        for r in 0..h {
            scratch[r] = grid[r * w + c];
        }
        let out = dt_1d(&scratch[..h]);
        for r in 0..h {
            grid[r * w + c] = out[r];
        }
    }
    // Rows.
    for r in 0..h {
        let row = grid[r * w..(r + 1) * w].to_vec();
        let out = dt_1d(&row);
        grid[r * w..(r + 1) * w].copy_from_slice(&out);
    }
    grid
}

/// 1-D squared distance transform of sampled function f.
fn dt_1d(f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let mut d = vec![0.0f64; n];
    let mut v = vec![0usize; n]; // locations of parabolas in the envelope
    let mut z = vec![0.0f64; n + 1]; // boundaries between parabolas
    let mut k = 0usize;
    v[0] = 0;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    for q in 1..n {
        if f[q] == f64::INFINITY {
            continue;
        }
        loop {
            let p = v[k];
            let s = if f[p] == f64::INFINITY {
                // A parabola with infinite height is dominated everywhere.
                f64::NEG_INFINITY
            } else {
                ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q - p) as f64)
            };
            if s <= z[k] {
                if k == 0 {
                    v[0] = q;
                    z[0] = f64::NEG_INFINITY;
                    z[1] = f64::INFINITY;
                    break;
                }
                k -= 1;
            } else {
                k += 1;
                v[k] = q;
                z[k] = s;
                z[k + 1] = f64::INFINITY;
                break;
            }
        }
    }
    let mut k = 0usize;
    for q in 0..n {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let p = v[k];
        d[q] = if f[p] == f64::INFINITY {
            f64::INFINITY
        } else {
            let dq = q as f64 - p as f64;
            dq * dq + f[p]
        };
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::PixelMask;

    #[test]
    fn neighbors_interior_edge_corner() {
        let n = neighbors4((5, 5), (10, 10)).unwrap();
        assert_eq!(n, vec![(4, 5), (6, 5), (5, 4), (5, 6)]);
        let n = neighbors4((0, 0), (10, 10)).unwrap();
        assert_eq!(n, vec![(1, 0), (0, 1)]);
        let n = neighbors4((0, 3), (10, 10)).unwrap();
        assert_eq!(n.len(), 3);
        let n = neighbors4((0, 0), (1, 1)).unwrap();
        assert!(n.is_empty());
    }

    #[test]
    fn neighbors_out_of_bounds_rejected() {
        assert!(neighbors4((10, 0), (10, 10)).is_err());
        assert!(neighbors4((0, 10), (10, 10)).is_err());
    }

    #[test]
    fn boundary_of_trivial_masks_is_empty() {
        let all = PixelMask::new(4, 4, true).unwrap();
        assert_eq!(region_boundary(&all).count(), 0);
        let none = PixelMask::new(4, 4, false).unwrap();
        assert_eq!(region_boundary(&none).count(), 0);
    }

    /// Direct set-enumeration of the boundary definition on a 5x5 grid with
    /// a single interior true pixel.
    #[test]
    fn boundary_single_pixel_matches_enumeration() {
        let mut mask = PixelMask::new(5, 5, false).unwrap();
        mask.set(2, 2, true);
        let got = region_boundary(&mask);

        let mut expected = PixelMask::new(5, 5, false).unwrap();
        for r in 0..5 {
            for c in 0..5 {
                let mut closed = vec![(r, c)];
                closed.extend(neighbors4((r, c), (5, 5)).unwrap());
                let hits_r = closed.iter().any(|&p| p == (2, 2));
                let hits_comp = closed.iter().any(|&p| p != (2, 2));
                if hits_r && hits_comp {
                    expected.set(r, c, true);
                }
            }
        }
        assert_eq!(got, expected);
        // {p} ∪ neighbors4(p) are all boundary pixels.
        assert!(got.get(2, 2));
        for (nr, nc) in neighbors4((2, 2), (5, 5)).unwrap() {
            assert!(got.get(nr, nc));
        }
        // The diagonal ring does not touch p through a 4-neighborhood.
        assert!(!got.get(1, 1));
    }

    fn brute_force_dilate(mask: &PixelMask, radius: usize) -> PixelMask {
        let (h, w) = mask.dims();
        let mut out = PixelMask::new(h, w, false).unwrap();
        let r2 = (radius * radius) as i64;
        for r in 0..h as i64 {
            for c in 0..w as i64 {
                'search: for sr in 0..h as i64 {
                    for sc in 0..w as i64 {
                        if mask.get(sr as usize, sc as usize)
                            && (r - sr) * (r - sr) + (c - sc) * (c - sc) <= r2
                        {
                            out.set(r as usize, c as usize, true);
                            break 'search;
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn dilation_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let h = rng.gen_range(1..14);
            let w = rng.gen_range(1..14);
            let mask = PixelMask::from_fn(h, w, |_, _| rng.gen_bool(0.2)).unwrap();
            for radius in [1usize, 2, 3, 5] {
                assert_eq!(
                    dilate_disk(&mask, radius),
                    brute_force_dilate(&mask, radius),
                    "h={h} w={w} radius={radius}"
                );
            }
        }
    }

    #[test]
    fn dilation_of_empty_mask_is_empty() {
        let mask = PixelMask::new(6, 6, false).unwrap();
        assert_eq!(dilate_disk(&mask, 3).count(), 0);
    }

    #[test]
    fn radius_one_dilation_adds_four_neighborhood() {
        let mut mask = PixelMask::new(5, 5, false).unwrap();
        mask.set(2, 2, true);
        let d = dilate_disk(&mask, 1);
        assert_eq!(d.count(), 5);
        assert!(d.get(2, 2) && d.get(1, 2) && d.get(3, 2) && d.get(2, 1) && d.get(2, 3));
    }
}
