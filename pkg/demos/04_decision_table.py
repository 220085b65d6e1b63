"""Approximating a decision class from an attribute-value table.

Run:  python demos/04_decision_table.py
CLI equivalent:
    vprs regions --table demos/weather.csv --attrs outlook,temperature --decision play=yes --beta 1/3
"""
from pathlib import Path

import vprs

table = vprs.parse_table((Path(__file__).parent / "weather.csv").read_text(), decision="play")
target = vprs.target_from_decision(table, "play", "yes")
print("play=yes:", target.labels())

# Coarser knowledge (fewer attributes) gives bigger blocks and a rougher picture.
for attrs in (["outlook"], ["outlook", "temperature"], ["outlook", "temperature", "humidity"]):
    partition = vprs.indiscernibility(table, attrs)
    print(f"\nattributes {attrs}: {len(partition)} blocks")
    for beta, approx in vprs.sweep(partition, target):
        print(f"  beta={str(beta):>4}  lower={len(approx.lower):>2}  upper={len(approx.upper):>2}"
              f"  accuracy={approx.accuracy}")
