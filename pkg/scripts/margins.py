"""Print how far each C1 inequality is from its bound, as an exact ratio lhs/rhs and a float."""
import argparse

from partsums.identities import verify

IDS = ("C1.1", "C1.2", "C1.3", "C1.4")

parser = argparse.ArgumentParser()
parser.add_argument("--n-max", type=int, default=25)
args = parser.parse_args()

print("n    " + "  ".join(f"{i:>14s}" for i in IDS))
for n in range(2, args.n_max + 1):
    ratios = [verify(i, n).lhs / verify(i, n).rhs for i in IDS]
    print(f"{n:<4d} " + "  ".join(f"{float(r):14.6f}" for r in ratios))
