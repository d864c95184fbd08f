"""
Driving the command line tool from Python
=========================================

Runs the self-check, writes a JSON tomogram and reads it back.
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

qtomo = [sys.executable, "-m", "qtomo"]

check = subprocess.run(qtomo + ["--mode", "check", "--q", "0.5", "--truncation", "64"],
                       capture_output=True, text=True)
print(check.stdout.splitlines()[-1])
print("check exit status:", check.returncode)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "tomo.json"
    subprocess.run(qtomo + ["--mode", "tomogram-coherent", "--q", "0.8", "--alpha-re", "0.6",
                            "--truncation", "48", "--theta-steps", "5", "--format", "json",
                            "--output", str(out)], check=True)
    doc = json.loads(out.read_text())
    p = np.array(doc["data"]["p"]).reshape(5, 48)
    print("meta:", doc["meta"])
    print("per-phase total probability:", p.sum(axis=1))

bad = subprocess.run(qtomo + ["--mode", "tomogram-coherent", "--q", "0.5", "--alpha-re", "1.2"],
                     capture_output=True, text=True)
print("alpha outside the disk ->", bad.returncode, bad.stderr.strip())
