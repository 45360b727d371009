#!/usr/bin/env python3
"""Build a reference operator, check its algebraic identities, and recover it."""

import argparse

from abelfft import (
    Automorphism,
    Group,
    build_reference_operator,
    check_hypotheses,
    random_automorphism,
    recover,
    verify_recovery,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", nargs="+", type=int, default=[4, 2])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--form", choices=["T", "U"], default="T")
    parser.add_argument("--conjugate", action="store_true")
    parser.add_argument("--psi", choices=["identity", "random"], default="random")
    parser.add_argument("--tol", type=float, default=1e-9)
    args = parser.parse_args()

    group = Group(tuple(args.orders))
    if args.psi == "identity":
        psi = Automorphism.identity(group)
    else:
        psi = random_automorphism(group, args.seed)
    op = build_reference_operator(group, psi, args.conjugate, args.form)

    print(f"group orders:    {group.orders} (size {group.size})")
    print(f"hidden psi:      {psi.perm}")
    print(f"hidden flag:     {args.conjugate}")
    print(f"form:            {args.form}")

    hypothesis = check_hypotheses(op, trials=8, seed=args.seed, tol=args.tol)
    print(f"hypothesis errs: a={hypothesis.max_err_a:.2e} "
          f"b={hypothesis.max_err_b:.2e} c={hypothesis.max_err_c:.2e} "
          f"passed={hypothesis.passed}")

    report = recover(op, tol=args.tol)
    print(f"recovered psi:   {report.psi.perm}")
    print(f"recovered flag:  {report.conjugation}")
    print(f"residual:        {report.residual:.2e}")
    print(f"exact match:     {report.psi.perm == psi.perm and report.conjugation == args.conjugate}")
    print(f"fresh residual:  {verify_recovery(op, report, trials=16):.2e}")
    print("m samples:       " + ", ".join(f"m({a:g})={m:g}" for a, m in report.m_samples))


if __name__ == "__main__":
    main()
