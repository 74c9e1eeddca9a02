#!/usr/bin/env python3
"""Write the built-in presets as editable scenario files.

$ python scripts/export_presets.py scenarios/
"""

import json
import sys
from pathlib import Path

from su3hom.landscape import PRESETS, preset, scenario_to_dict

out = Path(sys.argv[1] if len(sys.argv) > 1 else "scenarios")
out.mkdir(parents=True, exist_ok=True)
for name in PRESETS:
    path = out / f"{name}.json"
    path.write_text(json.dumps(scenario_to_dict(preset(name)), indent=2) + "\n")
    print(f"wrote {path}")
