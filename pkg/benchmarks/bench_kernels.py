"""Time the compiled kernels against the numpy fallback on detector-sized inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
Prints one line per kernel with the median time of each backend and the speedup.
"""
import argparse
import timeit

import numpy as np

from elixirnet import kernels


def cases(rng):
    x = rng.standard_normal((8, 32, 18, 18))
    cols = rng.standard_normal((8, 32, 3, 3, 16, 16))
    feat = rng.standard_normal((8, 128, 16, 16))
    xy = rng.uniform(0, 50, (256, 2))
    wh = rng.uniform(4, 14, (256, 2))
    rois = np.concatenate([rng.integers(0, 8, (256, 1)), xy, xy + wh], axis=1).astype(float)
    grad = rng.standard_normal((256, 128, 7, 7))
    boxes = np.concatenate([xy, xy + wh], axis=1)
    scores = rng.uniform(size=256)
    return {
        "im2col 8x32x18x18 k3": lambda impl: kernels.im2col(x, 3, 3, 1, 1, 16, 16, impl=impl),
        "col2im 8x32x16x16 k3": lambda impl: kernels.col2im(cols, 18, 18, 1, 1, impl=impl),
        "roi_align fwd 256 rois": lambda impl: kernels.roi_align_forward(
            feat, rois, 7, 7, 0.25, 2, impl=impl),
        "roi_align bwd 256 rois": lambda impl: kernels.roi_align_backward(
            grad, rois, feat.shape, 0.25, 2, impl=impl),
        "box_iou 256x256": lambda impl: kernels.box_iou(boxes, boxes, impl=impl),
        "nms 256 boxes": lambda impl: kernels.nms(boxes, scores, 0.5, impl=impl),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the numpy fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'kernel':26s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, fn in cases(rng).items():
        times = {}
        for b, impl in backends.items():
            t = timeit.Timer(lambda: fn(impl))
            n, _ = t.autorange()
            times[b] = float(np.median(t.repeat(args.repeat, n))) / n
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{name:26s} " + " ".join(f"{times[b] * 1e3:8.3f}ms" for b in backends)
              + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
