"""Nondeterministic answers: a fresh random integer for every request."""
import random
import sys

for line in sys.stdin:
    print(random.randint(-5, 5), flush=True)
