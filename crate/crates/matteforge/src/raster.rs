//! Pixel grid containers: scalar planes, 3-channel images, trimaps and masks.
//!
//! All numeric data is `f64` in `[0, 1]`, row-major. Loading code maps 8-bit
//! samples to `[0, 1]` by `/255` and 16-bit by `/65535`.

use crate::error::{Error, Result};

/// H×W grid of real values, row-major. The universal single-channel
/// container: alpha mattes, individual color channels, parameter planes.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterPlane {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl RasterPlane {
    pub fn new(height: usize, width: usize, fill: f64) -> Result<Self> {
        check_dims(height, width)?;
        Ok(Self {
            height,
            width,
            data: vec![fill; height * width],
        })
    }

    pub fn zeros(height: usize, width: usize) -> Result<Self> {
        Self::new(height, width, 0.0)
    }

    pub fn from_vec(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        check_dims(height, width)?;
        if data.len() != height * width {
            return Err(Error::InvalidParameter(format!(
                "data length {} does not match {}x{}",
                data.len(),
                height,
                width
            )));
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    /// Builds a plane by evaluating `f(row, col)` at every pixel.
    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        check_dims(height, width)?;
        let mut data = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                data.push(f(r, c));
            }
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn idx(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.height && col < self.width);
        row * self.width + col
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[self.idx(row, col)]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        let i = self.idx(row, col);
        self.data[i] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            height: self.height,
            width: self.width,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// True when every value lies in `[0, 1]` (required of alpha mattes).
    pub fn in_unit_range(&self) -> bool {
        self.data.iter().all(|&v| (0.0..=1.0).contains(&v))
    }

    pub fn same_dims(&self, other: &RasterPlane) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::shape(self.dims(), other.dims()));
        }
        Ok(())
    }
}

/// Three equally sized planes: one per color channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorImage {
    channels: [RasterPlane; 3],
}

impl ColorImage {
    pub fn new(channels: [RasterPlane; 3]) -> Result<Self> {
        let dims = channels[0].dims();
        for ch in &channels[1..] {
            if ch.dims() != dims {
                return Err(Error::shape(dims, ch.dims()));
            }
        }
        Ok(Self { channels })
    }

    pub fn filled(height: usize, width: usize, rgb: [f64; 3]) -> Result<Self> {
        Ok(Self {
            channels: [
                RasterPlane::new(height, width, rgb[0])?,
                RasterPlane::new(height, width, rgb[1])?,
                RasterPlane::new(height, width, rgb[2])?,
            ],
        })
    }

    pub fn from_fn(
        height: usize,
        width: usize,
        mut f: impl FnMut(usize, usize) -> [f64; 3],
    ) -> Result<Self> {
        let mut planes = [
            RasterPlane::zeros(height, width)?,
            RasterPlane::zeros(height, width)?,
            RasterPlane::zeros(height, width)?,
        ];
        for r in 0..height {
            for c in 0..width {
                let px = f(r, c);
                for (ch, &v) in planes.iter_mut().zip(px.iter()) {
                    ch.set(r, c, v);
                }
            }
        }
        Ok(Self { channels: planes })
    }

    pub fn height(&self) -> usize {
        self.channels[0].height()
    }

    pub fn width(&self) -> usize {
        self.channels[0].width()
    }

    pub fn dims(&self) -> (usize, usize) {
        self.channels[0].dims()
    }

    pub fn channel(&self, c: usize) -> &RasterPlane {
        &self.channels[c]
    }

    pub fn channel_mut(&mut self, c: usize) -> &mut RasterPlane {
        &mut self.channels[c]
    }

    pub fn channels(&self) -> &[RasterPlane; 3] {
        &self.channels
    }

    pub fn into_channels(self) -> [RasterPlane; 3] {
        self.channels
    }

    pub fn pixel(&self, row: usize, col: usize) -> [f64; 3] {
        [
            self.channels[0].get(row, col),
            self.channels[1].get(row, col),
            self.channels[2].get(row, col),
        ]
    }

    pub fn map(&self, f: impl Fn(f64) -> f64 + Copy) -> Self {
        Self {
            channels: [
                self.channels[0].map(f),
                self.channels[1].map(f),
                self.channels[2].map(f),
            ],
        }
    }

    pub fn in_unit_range(&self) -> bool {
        self.channels.iter().all(RasterPlane::in_unit_range)
    }

    pub fn same_dims_image(&self, other: &ColorImage) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::shape(self.dims(), other.dims()));
        }
        Ok(())
    }

    pub fn same_dims_plane(&self, plane: &RasterPlane) -> Result<()> {
        if self.dims() != plane.dims() {
            return Err(Error::shape(self.dims(), plane.dims()));
        }
        Ok(())
    }
}

/// Three-way trimap label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrimapLabel {
    Background,
    Unknown,
    Foreground,
}

impl TrimapLabel {
    /// The conventional numeric encoding: 0, 0.5, 1.
    pub fn value(self) -> f64 {
        match self {
            TrimapLabel::Background => 0.0,
            TrimapLabel::Unknown => 0.5,
            TrimapLabel::Foreground => 1.0,
        }
    }
}

/// H×W grid of trimap labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Trimap {
    height: usize,
    width: usize,
    labels: Vec<TrimapLabel>,
}

impl Trimap {
    pub fn new(height: usize, width: usize, fill: TrimapLabel) -> Result<Self> {
        check_dims(height, width)?;
        Ok(Self {
            height,
            width,
            labels: vec![fill; height * width],
        })
    }

    pub fn from_labels(height: usize, width: usize, labels: Vec<TrimapLabel>) -> Result<Self> {
        check_dims(height, width)?;
        if labels.len() != height * width {
            return Err(Error::InvalidParameter(format!(
                "label count {} does not match {}x{}",
                labels.len(),
                height,
                width
            )));
        }
        Ok(Self {
            height,
            width,
            labels,
        })
    }

    /// Classifies normalized values: `< 64/255` background, `> 191/255`
    /// foreground, otherwise unknown. Tolerates antialiased trimaps.
    pub fn from_plane(plane: &RasterPlane) -> Self {
        let labels = plane
            .data()
            .iter()
            .map(|&v| {
                if v < 64.0 / 255.0 {
                    TrimapLabel::Background
                } else if v > 191.0 / 255.0 {
                    TrimapLabel::Foreground
                } else {
                    TrimapLabel::Unknown
                }
            })
            .collect();
        Self {
            height: plane.height(),
            width: plane.width(),
            labels,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> TrimapLabel {
        self.labels[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, label: TrimapLabel) {
        self.labels[row * self.width + col] = label;
    }

    pub fn labels(&self) -> &[TrimapLabel] {
        &self.labels
    }

    /// Mask of one label class.
    pub fn mask(&self, label: TrimapLabel) -> PixelMask {
        PixelMask {
            height: self.height,
            width: self.width,
            bits: self.labels.iter().map(|&l| l == label).collect(),
        }
    }

    /// Plane of the numeric encoding {0, 0.5, 1}.
    pub fn to_plane(&self) -> RasterPlane {
        RasterPlane {
            height: self.height,
            width: self.width,
            data: self.labels.iter().map(|l| l.value()).collect(),
        }
    }

    pub fn same_dims_plane(&self, plane: &RasterPlane) -> Result<()> {
        if self.dims() != plane.dims() {
            return Err(Error::shape(self.dims(), plane.dims()));
        }
        Ok(())
    }
}

/// H×W boolean grid: regions, boundaries, unknown-pixel selections.
#[derive(Debug, Clone, PartialEq)]
pub struct PixelMask {
    height: usize,
    width: usize,
    bits: Vec<bool>,
}

impl PixelMask {
    pub fn new(height: usize, width: usize, fill: bool) -> Result<Self> {
        check_dims(height, width)?;
        Ok(Self {
            height,
            width,
            bits: vec![fill; height * width],
        })
    }

    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_dims(height, width)?;
        let mut bits = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                bits.push(f(r, c));
            }
        }
        Ok(Self {
            height,
            width,
            bits,
        })
    }

    /// Mask of pixels where `pred(value)` holds.
    pub fn where_plane(plane: &RasterPlane, pred: impl Fn(f64) -> bool) -> Self {
        Self {
            height: plane.height(),
            width: plane.width(),
            bits: plane.data().iter().map(|&v| pred(v)).collect(),
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        self.bits[row * self.width + col] = bit;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of true pixels.
    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn any(&self) -> bool {
        self.bits.iter().any(|&b| b)
    }

    pub fn complement(&self) -> Self {
        Self {
            height: self.height,
            width: self.width,
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    pub fn union(&self, other: &PixelMask) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            height: self.height,
            width: self.width,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a || b)
                .collect(),
        })
    }

    pub fn intersection(&self, other: &PixelMask) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            height: self.height,
            width: self.width,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a && b)
                .collect(),
        })
    }

    /// Row-major positions of true pixels.
    pub fn true_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.height {
            for c in 0..self.width {
                if self.get(r, c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    fn check_same(&self, other: &PixelMask) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::shape(self.dims(), other.dims()));
        }
        Ok(())
    }
}

fn check_dims(height: usize, width: usize) -> Result<()> {
    if height == 0 || width == 0 {
        return Err(Error::InvalidParameter(format!(
            "dimensions must be positive, got {}x{}",
            height, width
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dimensions_rejected() {
        assert!(RasterPlane::zeros(0, 5).is_err());
        assert!(RasterPlane::zeros(5, 0).is_err());
        assert!(Trimap::new(0, 1, TrimapLabel::Unknown).is_err());
        assert!(PixelMask::new(1, 0, false).is_err());
    }

    #[test]
    fn from_vec_length_checked() {
        assert!(RasterPlane::from_vec(2, 2, vec![0.0; 3]).is_err());
        assert!(RasterPlane::from_vec(2, 2, vec![0.0; 4]).is_ok());
    }

    #[test]
    fn color_image_requires_equal_channels() {
        let a = RasterPlane::zeros(2, 2).unwrap();
        let b = RasterPlane::zeros(2, 3).unwrap();
        assert!(ColorImage::new([a.clone(), a.clone(), b]).is_err());
        assert!(ColorImage::new([a.clone(), a.clone(), a]).is_ok());
    }

    #[test]
    fn trimap_from_plane_thresholds() {
        let plane =
            RasterPlane::from_vec(1, 5, vec![0.0, 63.0 / 255.0, 0.5, 192.0 / 255.0, 1.0]).unwrap();
        let t = Trimap::from_plane(&plane);
        assert_eq!(t.get(0, 0), TrimapLabel::Background);
        assert_eq!(t.get(0, 1), TrimapLabel::Background);
        assert_eq!(t.get(0, 2), TrimapLabel::Unknown);
        assert_eq!(t.get(0, 3), TrimapLabel::Foreground);
        assert_eq!(t.get(0, 4), TrimapLabel::Foreground);
    }

    #[test]
    fn mask_counts_and_set_ops() {
        let m = PixelMask::from_fn(2, 3, |r, c| (r + c) % 2 == 0).unwrap();
        assert_eq!(m.count(), 3);
        assert_eq!(m.complement().count(), 3);
        assert_eq!(m.union(&m.complement()).unwrap().count(), 6);
        assert_eq!(m.intersection(&m.complement()).unwrap().count(), 0);
    }

    #[test]
    fn unit_range_check() {
        let p = RasterPlane::from_vec(1, 3, vec![0.0, 0.5, 1.0]).unwrap();
        assert!(p.in_unit_range());
        let q = RasterPlane::from_vec(1, 3, vec![0.0, 1.5, 1.0]).unwrap();
        assert!(!q.in_unit_range());
    }
}
