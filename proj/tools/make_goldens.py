#!/usr/bin/env python3
"""Regenerates the golden PPM fixtures under tests/data/.

Kept deliberately separate from the C++ code: everything here is computed
from the filter definitions directly, so the byte-compare tests check two
implementations against each other rather than one against itself.
"""

import os

W, H = 9, 7


def base_pixels():
    pix = []
    for y in range(H):
        row = []
        for x in range(W):
            row.append(((x * 37 + y * 11) % 256, (x * 3 + y * 59) % 256, (x * 83 + y * 29) % 256))
        pix.append(row)
    return pix


def encode(pix):
    h = len(pix)
    w = len(pix[0])
    header = f"P6\n{w} {h}\n255\n".encode("ascii")
    body = bytearray()
    for row in pix:
        for (r, g, b) in row:
            body += bytes((r, g, b))
    return header + bytes(body)


def gray(pix):
    return [[((r + g + b) // 3,) * 3 for (r, g, b) in row] for row in pix]


def blur(pix):
    w = len(pix[0])
    if w < 3:
        return [row[:] for row in pix]
    out = [row[:] for row in pix]
    for y in range(len(pix)):
        for x in range(1, w - 1):
            n = 3
            sums = [0, 0, 0]
            for dx in (-1, 0, 1):
                for c in range(3):
                    sums[c] += pix[y][x + dx][c]
            out[y][x] = tuple(s // n for s in sums)
    return out


def bright(pix, delta):
    return [[tuple(min(255, max(0, c + delta)) for c in p) for p in row] for row in pix]


def fill(pix, color):
    return [[color for _ in row] for row in pix]


def main():
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "data")
    os.makedirs(root, exist_ok=True)
    pix = base_pixels()
    outputs = {
        "sample.ppm": pix,
        "sample_gray.ppm": gray(pix),
        "sample_blur.ppm": blur(pix),
        "sample_brightup40.ppm": bright(pix, 40),
        "sample_brightdown40.ppm": bright(pix, -40),
        "sample_fill_204080.ppm": fill(pix, (0x20, 0x40, 0x80)),
    }
    for name, data in outputs.items():
        with open(os.path.join(root, name), "wb") as f:
            f.write(encode(data))
        print("wrote", name)


if __name__ == "__main__":
    main()
