"""The command-line front end, driven from Python.

Each call is equivalent to running ``cyclic-infra <args>`` in a shell.
"""

import json

from cyclic_infra.cli import run

T = json.dumps({"R": 10, "distances": [0, 2, 3, 7]})
CURVE = json.dumps({"p": 5, "D": [1, 1, 0, 0, 1]})

calls = [
    ["validate", "--backend", CURVE],
    ["enumerate", "--backend", T],
    ["solve", "--backend", T, "--target", '{"point": 7, "f": 0}', "--factorization", "[[2, 2], [5, 1]]"],
    ["solve", "--backend", CURVE, "--target", '{"point": {"u": [0, 1], "v": [1]}, "f": 0}'],
    ["smooth", "--backend", CURVE, "--B", "3", "--hasse-weil"],
    ["bench", "--backend", T, "--ops", "200"],
    ["solve", "--backend", T, "--target", '{"point": 3, "f": 0}', "--gen", '{"point": 2, "f": 0}',
     "--factorization", "[[5, 1]]"],
]
for argv in calls:
    code, payload = run(argv)
    shown = " ".join(a if " " not in a else f"'{a}'" for a in argv)
    print(f"$ cyclic-infra {shown}\n  exit {code}: {json.dumps(payload, sort_keys=True)}\n")
