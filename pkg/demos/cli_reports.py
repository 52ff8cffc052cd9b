"""
Reports from the command line
=============================

The lensplumb command reads a JSON spec and writes a sorted, reproducible
JSON report.  Here it is driven in-process on the bundled golden specs.
"""

import json
from pathlib import Path

from lensplumb.cli import main

golden = Path(__file__).resolve().parent.parent / "golden"

for name in ("syz", "double_k2", "pagoda_k3"):
    out = golden / f"{name}.demo.json"
    code = main(["report", "--spec", str(golden / f"{name}.spec.json"), "--out", str(out)])
    report = json.loads(out.read_text())
    out.unlink()
    res = report["results"]
    print(name, "exit", code)
    print("  cores", res["geometry"]["core_types"])
    print("  H^0 dims", res["contraction"]["dim_vector"])
    print("  torsion", res["torsion"]["z1"], res["torsion"]["z2"], "collapsed", res["torsion"]["collapsed"])

# a single check with overrides
main(["verify-psi", "--spec", str(golden / "syz.spec.json"), "--winding", "1", "--truncation", "3"])
