"""Prints 0 at the index given on the command line and 1 elsewhere."""
import sys

target = int(sys.argv[1])
for line in sys.stdin:
    print(0 if int(line) == target else 1, flush=True)
