"""Search small generated models for a counterexample to a law given on the command line or by id."""
from __future__ import annotations

import argparse
import sys

from relcat import cli, modelio
from relcat.lattice import parse_lattice
from relcat.lawlang import check_law, get_law, law_str, parse_law


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--law", help="catalog law id")
    g.add_argument("--text", help="law source, e.g. 'law t ; var Q : A -> A ; conclude Q ; Q <= Q'")
    p.add_argument("--lattices", default=cli.DEFAULT_LATTICES)
    p.add_argument("--max-carrier", type=int, default=2)
    args = p.parse_args(argv)
    law = get_law(args.law) if args.law else parse_law(args.text)
    print(law_str(law))
    for spec in cli.split_list(args.lattices):
        for alg, sizes in cli.search_configs(law, [spec], args.max_carrier):
            model = modelio.generated_model(alg, sizes)
            r = check_law(law, model, max_violations=1)
            if r.violation_count:
                v = r.violations[0]
                print(f"counterexample in {model.name}:")
                for name, rel in v.rels.items():
                    print(f"  {name} = {cli.one_line(rel)}")
                return 1
            print(f"{model.name}: {r.status}")
    print("no counterexample found")
    return 0


if __name__ == "__main__":
    sys.exit(main())
