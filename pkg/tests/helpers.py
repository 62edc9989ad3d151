"""Table invariants shared by several test modules."""

import itertools

from clcs import DpTable, ProblemInstance, cell_order, is_subsequence, is_substring_at


def words(alphabet: bytes, max_len: int):
    for length in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=length):
            yield bytes(t)


def table_violations(inst: ProblemInstance, t: DpTable) -> list[str]:
    """Every broken table invariant, as readable strings."""
    out = []
    x, y, p = inst.x, inst.y, inst.p
    for i in range(inst.m + 1):
        for j in range(inst.n + 1):
            if t[i, j, 0] is None:
                out.append(f"k=0 NONE at {i},{j}")
            for k in range(inst.r + 1):
                v = t[i, j, k]
                if (i < k or j < k) and v is not None:
                    out.append(f"frontier {i},{j},{k}")
                if i >= 1 and cell_order(v, t[i - 1, j, k]) < 0:
                    out.append(f"monotone-i {i},{j},{k}")
                if k >= 1 and cell_order(v, t[i, j, k - 1]) > 0:
                    out.append(f"antitone-k {i},{j},{k}")
                if v is None and min(i, j, k) >= 1:
                    xi, yj, pk = x[i - 1], y[j - 1], p[k - 1]
                    if xi == yj == pk and t[i - 1, j - 1, k - 1] is not None:
                        out.append(f"propagation case 1 at {i},{j},{k}")
                    elif xi == yj != pk and t[i - 1, j - 1, k] is not None:
                        out.append(f"propagation case 2 at {i},{j},{k}")
                    elif xi != yj and t[i - 1, j, k] is not None:
                        out.append(f"propagation case 3 at {i},{j},{k}")
    return out


def result_violations(inst: ProblemInstance, res) -> list[str]:
    if not res.found:
        return []
    out = []
    if res.end - res.start != res.length or len(res.match) != res.length:
        out.append("span")
    if not is_substring_at(res.match, inst.y, res.start):
        out.append("substring")
    if not is_subsequence(res.match, inst.x):
        out.append("subsequence of x")
    if not is_subsequence(inst.p, res.match):
        out.append("contains p")
    return out
