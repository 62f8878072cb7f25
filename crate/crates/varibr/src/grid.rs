//! Row-major scalar and RGB image buffers in linear light, intensity `[0, 1]`.

/// Single-channel f64 image, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f64>,
}

impl Image {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), width * height);
        Self {
            width,
            height,
            data,
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            data,
        }
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.width && y < self.height);
        y * self.width + x
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> f64 {
        self.data[self.idx(x, y)]
    }

    #[inline]
    pub fn at_mut(&mut self, x: usize, y: usize) -> &mut f64 {
        let i = self.idx(x, y);
        &mut self.data[i]
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// Three-channel linear RGB image; channels stored planar.
#[derive(Clone, Debug, PartialEq)]
pub struct RgbImage {
    pub width: usize,
    pub height: usize,
    pub channels: [Vec<f64>; 3],
}

/// Rec. 709 luma coefficients, used wherever a single guide channel is needed.
pub const LUMA: [f64; 3] = [0.2126, 0.7152, 0.0722];

impl RgbImage {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            channels: std::array::from_fn(|_| vec![0.0; width * height]),
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> [f64; 3]) -> Self {
        let mut img = Self::zeros(width, height);
        for y in 0..height {
            for x in 0..width {
                let v = f(x, y);
                for c in 0..3 {
                    img.channels[c][y * width + x] = v[c];
                }
            }
        }
        img
    }

    #[inline]
    pub fn pixel(&self, x: usize, y: usize) -> [f64; 3] {
        let i = y * self.width + x;
        [self.channels[0][i], self.channels[1][i], self.channels[2][i]]
    }

    pub fn luma(&self) -> Image {
        let n = self.width * self.height;
        let mut data = vec![0.0; n];
        for i in 0..n {
            data[i] = LUMA[0] * self.channels[0][i]
                + LUMA[1] * self.channels[1][i]
                + LUMA[2] * self.channels[2][i];
        }
        Image::from_vec(self.width, self.height, data)
    }
}
