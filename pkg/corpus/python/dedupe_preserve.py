def dedupe_preserve(values, cap):
    seen=set()
    kept = []
    for item in values:
        if item not in seen:
            seen.add(item)
            kept.append(item)
    if len(kept) > cap:
        kept = kept[:cap]
    return kept

if __name__ == "__main__":
    assert dedupe_preserve([3, 1, 3, 2, 1], 10) == [3, 1, 2]
    assert dedupe_preserve([1, 1, 2, 2, 3], 2) == [1, 2]
