import sys
from pathlib import Path

# Add repo root to sys.path to import maxchord
repo_dir = Path(__file__).resolve().parent.parent
sys.path.append(str(repo_dir))

from maxchord.counting import d_circle, d_parallel, d_star
from maxchord.reference import compare_with_reference


def check_table(max_genus: int = 12):
    checked, diffs = compare_with_reference(max_genus)
    print(f"Reference cells checked: {checked}")
    for diff in diffs:
        print(f"ERROR: g={diff.g} {diff.column} expected {diff.expected}, computed {diff.computed}")
    if not diffs:
        print("SUCCESS: every reference cell matches.")

    # Exact divisions far past the table.
    for g in (50, 100, 200):
        d_star(g)
        d_parallel(g)
        print(f"g={g}: d_all has {len(str(d_circle(g)))} digits")
    return not diffs


if __name__ == "__main__":
    sys.exit(0 if check_table() else 1)
