"""Write the radius-r ball of the tree as Graphviz DOT and the hex figure as SVG."""
import argparse
import io

from padic_discs import cli

ap = argparse.ArgumentParser()
ap.add_argument("-p", type=int, default=3)
ap.add_argument("--radius", type=int, default=2)
ap.add_argument("--dot", default="tree.dot")
ap.add_argument("--svg", default="hexmap.svg")
args = ap.parse_args()

for argv in (["tree", "export-dot", "-p", str(args.p), "--radius", str(args.radius), "--out", args.dot],
             ["triangle", "hexmap", "-p", str(args.p), "--radius", "2", "--out", args.svg]):
    out = io.StringIO()
    code = cli.run(argv, out)
    print(out.getvalue().strip(), f"(exit {code})")
