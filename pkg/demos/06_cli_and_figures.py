# %%
# Driving the command line from Python and writing figures.
#
# Every figure id becomes an SVG file; CSV tables come from the same
# commands with --format csv.

import pathlib
import tempfile

from superspec.cli import FIGURES, main

out = pathlib.Path(tempfile.mkdtemp(prefix="superspec-demo-"))
for fig in FIGURES:
    main(["figure", "--id", fig, "--output", str(out / f"{fig}.svg")])
print("wrote", sorted(p.name for p in out.iterdir()))

# %%
# A convergence sweep for the pole at 2, with the bound column.
main(["bounds", "--function", "pole2", "--order", "1", "--n-range", "4:24:4"])

# %%
# The built-in checks, as run by `superspec verify`.
main(["verify"])
