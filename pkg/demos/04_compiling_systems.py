#!/usr/bin/env python3
"""From sentence DSL to quantum model: parse, classify, compile.

The compiler accepts any single-cycle pointer system.  An odd number of
denials around the cycle produces one paradoxical orbit (every sentence
visited with both verdicts); an even number splits into two consistent
orbits.  Paradoxical systems get the full cyclic dynamics in dimension
4^n.
"""

from liarsim import classify, compile_system, model_summary, parse_system, reading_step
from liarsim.dsl import PointedAssignment

SOURCES = {
    "single liar": "(1) sentence (1) is false",
    "truth teller": "(1) sentence (1) is true",
    "double liar": "(1) sentence (2) is false\n(2) sentence (1) is true",
    "three-cycle of denials": "\n".join(
        [
            "(1) sentence (2) is false",
            "(2) sentence (3) is false",
            "(3) sentence (1) is false",
        ]
    ),
}

for name, source in SOURCES.items():
    system = parse_system(source, name=name)
    print(f"== {name} ({system.n} sentence{'s' if system.n > 1 else ''})")
    for orbit in classify(system):
        chain = " -> ".join(f"({s.focus},{'T' if s.value else 'F'})" for s in orbit.states)
        print(f"  orbit [{orbit.kind}]: {chain}")
    summary = model_summary(compile_system(system))
    print(f"  compiled: dim={summary['dim']}, kind={summary['kind']}, "
          f"cycle={summary['cycle_states'] or 'none'}")
    print()

# The reading map itself, step by step on the double liar.
system = parse_system(SOURCES["double liar"])
p = PointedAssignment(1, True)
steps = [p]
for _ in range(4):
    p = reading_step(system, p)
    steps.append(p)
print("double-liar reading walk:",
      " -> ".join(f"({s.focus},{'T' if s.value else 'F'})" for s in steps))
