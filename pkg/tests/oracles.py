"""Independent brute-force oracles, kept away from the library code paths.

Everything here is written against plain integer tuples and mod-p arithmetic
so a bug in the library's field tables or echelon code cannot leak in.
"""

from itertools import combinations, product


def mod_inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def count_rref_matrices(rows: int, cols: int, p: int) -> int:
    """Count rank-`rows` matrices in reduced row-echelon form over GF(p).

    Enumerates pivot column choices and free entries directly; each RREF
    matrix corresponds to one subspace, so this counts `rows`-dimensional
    subspaces of GF(p)^cols independently of any Gaussian coefficient code.
    """
    total = 0
    for pivots in combinations(range(cols), rows):
        free = 0
        for i, pc in enumerate(pivots):
            for j in range(pc + 1, cols):
                if j not in pivots[i + 1:]:
                    free += 1
        total += p**free
    return total


def normalized_vectors(length: int, p: int) -> list[tuple[int, ...]]:
    """All projective representatives over the prime field GF(p)."""
    out = []
    for vec in product(range(p), repeat=length):
        nz = next((x for x in vec if x), None)
        if nz is None:
            continue
        inv = mod_inverse(nz, p)
        if tuple((x * inv) % p for x in vec) == vec:
            out.append(vec)
    return out


def naive_complete(num_points: int, point_to_lines, assignment, k: int) -> bool:
    """O(k^2 L^2)-flavored reference for completeness: pairwise line loop."""
    covered = set()
    lines_of = point_to_lines
    for p in range(num_points):
        for l1, l2 in combinations(lines_of[p], 2):
            c1, c2 = assignment[l1], assignment[l2]
            covered.add((min(c1, c2), max(c1, c2)))
    for c1 in range(1, k + 1):
        for c2 in range(c1 + 1, k + 1):
            if (c1, c2) not in covered:
                return False
    return True


def naive_lines_meeting(line_to_points, line_id: int) -> set[int]:
    pts = set(line_to_points[line_id])
    return {
        l
        for l, other in enumerate(line_to_points)
        if l != line_id and pts & set(other)
    }


def naive_regulus(line_to_points, trio) -> set[int]:
    """Transversal double sweep with plain set logic."""
    pt_sets = [set(p) for p in line_to_points]

    def meets_all(l, group):
        return all(pt_sets[l] & pt_sets[g] for g in group)

    transversals = [l for l in range(len(line_to_points)) if meets_all(l, trio)]
    return {l for l in range(len(line_to_points)) if meets_all(l, transversals)}


def pairwise_meeting_5subsets(line_to_points) -> list[tuple[int, ...]]:
    """Every 5-subset of lines in which all pairs share a point."""
    pt_sets = [set(p) for p in line_to_points]
    n = len(pt_sets)
    meets = [[bool(pt_sets[a] & pt_sets[b]) for b in range(n)] for a in range(n)]
    out = []
    for subset in combinations(range(n), 5):
        if all(meets[a][b] for a, b in combinations(subset, 2)):
            out.append(subset)
    return out
