"""Print computed mismatches next to the embedded published table and write a CSV.

Usage: python3 scripts/reproduce_table.py [out.csv]
"""

import sys

from ngbs import report as rpt


def main(out=None):
    rows = rpt.table_rows(range(3, 11))
    for r in rows:
        flag = "" if r["within_tolerance"] else "  <-- differs"
        print(f"N={r['N']:2d} n={r['n']:2d}  {r['delta_computed']:.4e}  {r['delta_published']:.4e}{flag}")
    bad = sum(not r["within_tolerance"] for r in rows)
    print(f"{len(rows) - bad}/{len(rows)} cells within tolerance")
    if out:
        rpt.write_output(rpt.to_csv(rows, rpt.TABLE_COLUMNS), out)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
