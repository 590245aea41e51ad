#!/usr/bin/env python3
"""Regenerate tests/data/eval_golden.jsonl: 200 random expressions with their
canonical results, built bottom-up so every subexpression stays finite and
in-domain.  Run from the repository root."""

import json
import random
from pathlib import Path

from softnum import core
from softnum.textform import format_soft_number

LIMIT = 1e6  # keep intermediate components small


def literal(rng):
    coeff = round(rng.uniform(-9, 9), rng.choice([0, 1, 2]))
    if rng.random() < 0.4:
        return f"{coeff}z0", core.SoftNumber(coeff, 0.0)
    return f"{coeff}", core.SoftNumber(0.0, coeff)


def build(rng, depth):
    if depth == 0:
        return literal(rng)
    kind = rng.choice(["add", "sub", "mul", "div", "pow", "neg", "call", "lit", "lit"])
    if kind == "lit":
        return literal(rng)
    if kind == "neg":
        text, value = build(rng, depth - 1)
        return f"-({text})", -value
    if kind == "call":
        name = rng.choice(["exp", "ln", "sin", "cos", "tan", "sqrt"])
        for _ in range(40):
            text, value = build(rng, depth - 1)
            try:
                result = core.ANALYTIC_FUNCTIONS[name](value)
            except (core.DomainError, OverflowError):
                continue
            if abs(value.real) > 20:  # keep exp/tan tame
                continue
            if name == "tan" and abs(result.soft) > 1e3:
                continue
            return f"{name}({text})", result
        return literal(rng)
    if kind == "pow":
        text, value = build(rng, depth - 1)
        n = rng.randint(0, 4)
        try:
            return f"({text})^{n}", core.pow_nat(value, n)
        except OverflowError:
            return literal(rng)
    op = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[kind]
    for _ in range(40):
        lt, lv = build(rng, depth - 1)
        rt, rv = build(rng, depth - 1)
        try:
            result = {
                "add": lambda: lv + rv,
                "sub": lambda: lv - rv,
                "mul": lambda: lv * rv,
                "div": lambda: lv / rv,
            }[kind]()
        except (ZeroDivisionError, OverflowError):
            continue
        if kind == "div" and abs(rv.real) < 0.1:
            continue
        if max(abs(result.soft), abs(result.real)) > LIMIT:
            continue
        return f"({lt} {op} {rt})", result
    return literal(rng)


def main():
    rng = random.Random(20260810)
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "eval_golden.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as handle:
        for _ in range(200):
            text, value = build(rng, rng.randint(1, 4))
            if text.startswith("-"):  # keep argparse from eating it as a flag
                text = f"({text})"
            handle.write(
                json.dumps(
                    {
                        "expr": text,
                        "soft": value.soft,
                        "real": value.real,
                        "canonical": format_soft_number(value),
                    }
                )
                + "\n"
            )
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
