"""Counter-style seed derivation: every random stream is named by (seed, path)."""

import random


def make_rng(seed, *path):
    key = "/".join([str(seed)] + [str(p) for p in path])
    return random.Random(key)
