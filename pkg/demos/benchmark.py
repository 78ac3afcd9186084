"""
Triangle construction timings
=============================
"""
from degenstir.stirling import benchmark

for n_max in (10, 15, 20, 25):
    times = benchmark(n_max, repeat=3)
    print(n_max, "  ".join(f"{k}={v * 1000:.1f}ms" for k, v in times.items()))
