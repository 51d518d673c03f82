//! The compositing equation: I = αF + (1−α)B per channel.

use crate::error::Result;
use crate::raster::{ColorImage, RasterPlane};

/// Composites foreground over background with per-pixel opacity `alpha`.
/// All inputs must share dimensions; alpha must lie in [0, 1].
pub fn composite(fg: &ColorImage, bg: &ColorImage, alpha: &RasterPlane) -> Result<ColorImage> {
    fg.same_dims_image(bg)?;
    fg.same_dims_plane(alpha)?;
    let a = alpha.data();
    let mut channels = Vec::with_capacity(3);
    for c in 0..3 {
        let f = fg.channel(c).data();
        let b = bg.channel(c).data();
        let data: Vec<f64> = (0..a.len())
            .map(|i| a[i] * f[i] + (1.0 - a[i]) * b[i])
            .collect();
        channels.push(RasterPlane::from_vec(alpha.height(), alpha.width(), data)?);
    }
    let [c0, c1, c2]: [RasterPlane; 3] = channels.try_into().expect("exactly three channels");
    ColorImage::new([c0, c1, c2])
}
