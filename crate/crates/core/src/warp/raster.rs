use std::f64::consts::PI;
use std::io::Cursor;
use std::path::Path;

use image::{ImageFormat, RgbaImage};

use crate::error::{Error, Result};

pub type Rgba = [u8; 4];

/// Row-major 8-bit RGBA raster. Alpha 0 marks pixels outside the mapped
/// region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<Rgba>,
}

impl RasterImage {
    /// A fully transparent image.
    pub fn new(width: u32, height: u32) -> Result<Self> {
        check_dims(width, height)?;
        Ok(RasterImage {
            width,
            height,
            pixels: vec![[0; 4]; width as usize * height as usize],
        })
    }

    pub fn from_pixels(width: u32, height: u32, pixels: Vec<Rgba>) -> Result<Self> {
        check_dims(width, height)?;
        if pixels.len() != width as usize * height as usize {
            return Err(Error::Param(format!(
                "{} pixels given for a {width}x{height} image",
                pixels.len()
            )));
        }
        Ok(RasterImage { width, height, pixels })
    }

    pub fn from_fn(width: u32, height: u32, f: impl Fn(u32, u32) -> Rgba) -> Result<Self> {
        check_dims(width, height)?;
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Ok(RasterImage { width, height, pixels })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[Rgba] {
        &self.pixels
    }

    pub(crate) fn pixels_mut(&mut self) -> &mut [Rgba] {
        &mut self.pixels
    }

    pub fn pixel(&self, x: u32, y: u32) -> Rgba {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    pub fn put_pixel(&mut self, x: u32, y: u32, value: Rgba) {
        let w = self.width as usize;
        self.pixels[y as usize * w + x as usize] = value;
    }

    pub fn read_png(path: impl AsRef<Path>) -> Result<Self> {
        let bytes = std::fs::read(path)?;
        RasterImage::decode_png(&bytes)
    }

    pub fn decode_png(bytes: &[u8]) -> Result<Self> {
        let img = image::load_from_memory_with_format(bytes, ImageFormat::Png)?.to_rgba8();
        Ok(RasterImage::from(img))
    }

    pub fn write_png(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.encode_png()?)?;
        Ok(())
    }

    pub fn encode_png(&self) -> Result<Vec<u8>> {
        let mut out = Cursor::new(Vec::new());
        self.to_rgba_image().write_to(&mut out, ImageFormat::Png)?;
        Ok(out.into_inner())
    }

    pub fn to_rgba_image(&self) -> RgbaImage {
        let raw = self.pixels.iter().flatten().copied().collect();
        RgbaImage::from_raw(self.width, self.height, raw).expect("buffer length matches dimensions")
    }
}

impl From<RgbaImage> for RasterImage {
    fn from(img: RgbaImage) -> Self {
        let (width, height) = img.dimensions();
        let pixels = img.pixels().map(|p| p.0).collect();
        RasterImage { width, height, pixels }
    }
}

fn check_dims(width: u32, height: u32) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::Param(format!(
            "image dimensions must be at least 1x1, got {width}x{height}"
        )));
    }
    Ok(())
}

/// Sine period, in pixels, of the default test chart.
pub const CHART_CELL: f64 = 32.0;

/// Smooth opaque test chart: red is a product of sines with period
/// `2·cell` pixels, green and blue are horizontal and vertical ramps.
pub fn test_chart(width: u32, height: u32, cell: f64) -> Result<RasterImage> {
    let (w, h) = (width as f64, height as f64);
    RasterImage::from_fn(width, height, |i, j| {
        let (x, y) = (i as f64 + 0.5, j as f64 + 0.5);
        let r = 0.5 + 0.5 * (PI * x / cell).sin() * (PI * y / cell).sin();
        let q = |v: f64| (255.0 * v).round().clamp(0.0, 255.0) as u8;
        [q(r), q(x / w), q(y / h), 255]
    })
}

/// Peak signal-to-noise ratio over the RGB channels of the pixels whose
/// centres lie inside `fraction` of the inscribed ellipse. Infinite when
/// the region is identical.
pub fn psnr_interior(a: &RasterImage, b: &RasterImage, fraction: f64) -> Result<f64> {
    if a.width != b.width || a.height != b.height {
        return Err(Error::Param("PSNR needs images of equal size".into()));
    }
    let (w, h) = (a.width as f64, a.height as f64);
    let mut sum = 0.0;
    let mut count = 0usize;
    for j in 0..a.height {
        for i in 0..a.width {
            let s = (2.0 * (i as f64 + 0.5) - w) / w;
            let t = (2.0 * (j as f64 + 0.5) - h) / h;
            if s * s + t * t >= fraction * fraction {
                continue;
            }
            let (p, q) = (a.pixel(i, j), b.pixel(i, j));
            for c in 0..3 {
                let d = p[c] as f64 - q[c] as f64;
                sum += d * d;
            }
            count += 3;
        }
    }
    if count == 0 {
        return Err(Error::Param("PSNR region is empty".into()));
    }
    let mse = sum / count as f64;
    Ok(if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (255.0 * 255.0 / mse).log10()
    })
}
