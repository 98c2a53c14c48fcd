def merge_intervals(spans):
    """Merge overlapping [start, end] pairs; input need not be sorted."""
    if len(spans) == 0:
        return []
    ordered = sorted(spans)
    merged=[]
    for span in ordered:
        if merged and span[0] <= merged[-1][1]:
            last = merged[-1]
            merged[-1] = [last[0], max(last[1], span[1])]
        else:
            merged.append(list(span))
    result = merged
    return result

if __name__ == "__main__":
    assert merge_intervals([[1, 3], [2, 6], [8, 10]]) == [[1, 6], [8, 10]]
    assert merge_intervals([[5, 6], [1, 2]]) == [[1, 2], [5, 6]]
