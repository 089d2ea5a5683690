"""Independent reference resampler for the image round-trip PSNR floor.

Re-implements the chart, the pixel frame, the alpha-aware bilinear sampler
and the mappings (in their textbook radical forms) with numpy, then reports
the interior PSNR of elliptify followed by rectify.

    python3 tools/psnr_reference.py
"""
import numpy as np

W, H, CELL = 512, 768, 32.0


def chart():
    x = np.arange(W) + 0.5
    y = np.arange(H) + 0.5
    X, Y = np.meshgrid(x, y)
    r = 0.5 + 0.5 * np.sin(np.pi * X / CELL) * np.sin(np.pi * Y / CELL)
    q = lambda v: np.clip(np.round(255.0 * v), 0, 255)
    img = np.stack([q(r), q(X / W), q(Y / H), np.full_like(r, 255.0)], axis=-1)
    return img.astype(np.uint8)


def frame():
    a = W / H
    ix, iy = np.meshgrid(np.arange(W), np.arange(H))
    x = -a + (ix + 0.5) * 2 * a / W
    y = 1.0 - (iy + 0.5) * 2.0 / H
    return a, x, y


def to_pixel(x, y, a):
    return (x + a) * W / (2 * a) - 0.5, (1.0 - y) * H / 2.0 - 0.5


def bilinear(img, fx, fy):
    src = img.astype(np.float64)
    fx = np.clip(fx, 0, W - 1)
    fy = np.clip(fy, 0, H - 1)
    x0 = np.floor(fx).astype(int)
    y0 = np.floor(fy).astype(int)
    x1 = np.minimum(x0 + 1, W - 1)
    y1 = np.minimum(y0 + 1, H - 1)
    tx = fx - x0
    ty = fy - y0
    acc_w = np.zeros(fx.shape)
    acc_a = np.zeros(fx.shape)
    acc_c = np.zeros(fx.shape + (3,))
    for xs, ys, wt in [(x0, y0, (1 - tx) * (1 - ty)), (x1, y0, tx * (1 - ty)),
                       (x0, y1, (1 - tx) * ty), (x1, y1, tx * ty)]:
        p = src[ys, xs]
        alpha = p[..., 3]
        use = (alpha > 0) & (wt > 0)
        w = np.where(use, wt, 0.0)
        acc_w += w
        acc_a += w * alpha
        acc_c += (w * alpha)[..., None] * p[..., :3]
    near = src[np.round(fy).astype(int), np.round(fx).astype(int)]
    ok = acc_a > 0
    out = np.empty(fx.shape + (4,))
    out[..., :3] = np.where(ok[..., None], acc_c / np.where(ok, acc_a, 1)[..., None], near[..., :3])
    out[..., 3] = np.where(ok, acc_a / np.where(ok, acc_w, 1), near[..., 3])
    return np.clip(np.round(out), 0, 255).astype(np.uint8)


def sgn(v):
    return np.sign(v)


# Each entry: (square -> disc, disc -> square), written in the plain radical
# forms with the axis cases handled by np.where.
def fg_fwd(x, y):
    r2 = x * x + y * y
    g = np.sqrt(np.where(r2 > 0, (r2 - x * x * y * y) / np.where(r2 > 0, r2, 1), 1))
    return x * g, y * g


def fg_inv(u, v):
    r2 = u * u + v * v
    inner = np.sqrt(np.maximum(r2 - np.sqrt(np.maximum(r2 * (r2 - 4 * u * u * v * v), 0)), 0))
    axis = (u == 0) | (v == 0)
    su = np.where(axis, 1, v)
    sv = np.where(axis, 1, u)
    x = np.where(axis, u, sgn(u * v) / (su * np.sqrt(2)) * inner)
    y = np.where(axis, v, sgn(u * v) / (sv * np.sqrt(2)) * inner)
    return x, y


def eg_fwd(x, y):
    return x * np.sqrt(1 - y * y / 2), y * np.sqrt(1 - x * x / 2)


def eg_inv(u, v):
    t = 2 * np.sqrt(2)
    a = 2 + u * u - v * v
    b = 2 - u * u + v * v
    x = 0.5 * np.sqrt(np.maximum(a + t * u, 0)) - 0.5 * np.sqrt(np.maximum(a - t * u, 0))
    y = 0.5 * np.sqrt(np.maximum(b + t * v, 0)) - 0.5 * np.sqrt(np.maximum(b - t * v, 0))
    return x, y


def sg_fwd(x, y):
    d = 1 - x * x * y * y
    return x * np.sqrt((1 - y * y) / d), y * np.sqrt((1 - x * x) / d)


def sg_inv(u, v):
    return u / np.sqrt(1 - v * v), v / np.sqrt(1 - u * u)


def t2_fwd(x, y):
    r2 = x * x + y * y
    p = x * x * y * y
    t2 = np.where(p < 1, (r2 - 2 * p) / np.where(p < 1, 1 - p, 1), 1)
    g = np.sqrt(np.where(r2 > 0, t2 / np.where(r2 > 0, r2, 1), 1))
    return x * g, y * g


def t2_inv(u, v):
    r2 = u * u + v * v
    q = u * u * v * v
    safe = np.where(r2 > 0, r2, 1)
    disc = np.maximum(1 + 4 * q * (r2 - 2) / safe, 0)
    h = np.sqrt(2) / np.sqrt(1 + np.sqrt(disc))
    return np.where(r2 > 0, u * h, u), np.where(r2 > 0, v * h, v)


KINDS = {
    "fg-squircular": (fg_fwd, fg_inv),
    "elliptical-grid": (eg_fwd, eg_inv),
    "squelched-grid": (sg_fwd, sg_inv),
    "tapered2": (t2_fwd, t2_inv),
}


def round_trip(src, fwd, inv):
    a, x, y = frame()
    inside = (x / a) ** 2 + y * y < 1
    with np.errstate(all="ignore"):
        sx, sy = inv(np.where(inside, x / a, 0), np.where(inside, y, 0))
    fx, fy = to_pixel(a * sx, sy, a)
    ell = bilinear(src, fx, fy)
    ell[~inside] = 0
    with np.errstate(all="ignore"):
        u, v = fwd(x / a, y)
    fx, fy = to_pixel(a * u, v, a)
    return bilinear(ell, fx, fy)


def psnr(a, b, fraction=0.9):
    ix, iy = np.meshgrid(np.arange(W), np.arange(H))
    s = (2 * (ix + 0.5) - W) / W
    t = (2 * (iy + 0.5) - H) / H
    mask = s * s + t * t < fraction * fraction
    d = a[..., :3].astype(np.float64) - b[..., :3].astype(np.float64)
    mse = np.mean(d[mask] ** 2)
    return 10 * np.log10(255.0 ** 2 / mse)


if __name__ == "__main__":
    src = chart()
    for name, (fwd, inv) in KINDS.items():
        print(f"{name}: {psnr(src, round_trip(src, fwd, inv)):.4f} dB")
